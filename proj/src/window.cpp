#include "ksv/window.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ksv {

std::vector<Exps> gamma_monomials(const ExteriorAlgebra& alg, int D) {
    std::vector<Exps> out;
    Exps cur(size_t(alg.c), 0);
    std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i == alg.c) {
            out.push_back(cur);
            return;
        }
        int w = alg.gen_deg[i] + 1;
        for (int e = 0; e * w <= budget; ++e) {
            cur[i] = e;
            rec(i + 1, budget - e * w);
        }
        cur[i] = 0;
    };
    rec(0, D);
    return out;
}

namespace {

int gamma_degree(const ExteriorAlgebra& alg, const Exps& beta) {
    int d = 0;
    for (int i = 0; i < alg.c; ++i) d += beta[i] * (alg.gen_deg[i] + 1);
    return d;
}

} // namespace

UniversalWindow universal_window(const DgLambdaModule& m, int D) {
    require_valid(m, "universal_window");
    const ExteriorAlgebra& alg = m.alg;
    const Field& f = alg.field;
    std::vector<Exps> gammas = gamma_monomials(alg, D);
    std::map<Exps, size_t> gamma_idx;
    for (size_t g = 0; g < gammas.size(); ++g) gamma_idx[gammas[g]] = g;

    UniversalWindow w;
    w.D = D;
    size_t L = alg.dim();
    size_t dimM = m.dim();
    auto index = [&](unsigned mask, size_t g, size_t j) {
        return (mask * gammas.size() + g) * dimM + j;
    };
    size_t N = L * gammas.size() * dimM;

    DgLambdaModule& out = w.module;
    out.alg = alg;
    out.names.resize(N);
    out.deg.resize(N);
    w.basis.resize(N);
    for (unsigned mask = 0; mask < L; ++mask)
        for (size_t g = 0; g < gammas.size(); ++g)
            for (size_t j = 0; j < dimM; ++j) {
                size_t k = index(mask, g, j);
                w.basis[k] = {mask, gammas[g], j};
                out.deg[k] =
                    alg.mask_degree(mask) + gamma_degree(alg, gammas[g]) + m.deg[j];
                out.names[k] = "u" + std::to_string(k);
            }

    // differential: (-1)^{|mask|} [ l (x) g (x) dm + sum_i l (x) chi_i g (x) e_i m ]
    //               - sum_i (e_i l) (x) chi_i g (x) m
    out.d = Matrix(N, N, f);
    for (unsigned mask = 0; mask < L; ++mask) {
        int mask_par = alg.mask_degree(mask) % 2;
        FieldElement sgn = FieldElement::make(f, mask_par == 0 ? 1 : -1);
        for (size_t g = 0; g < gammas.size(); ++g)
            for (size_t j = 0; j < dimM; ++j) {
                size_t col = index(mask, g, j);
                for (size_t i = 0; i < dimM; ++i)
                    if (!m.d.at(i, j).is_zero())
                        out.d.at(index(mask, g, i), col) += sgn * m.d.at(i, j);
                for (int t = 0; t < alg.c; ++t) {
                    if (gammas[g][t] == 0) continue;
                    Exps down = gammas[g];
                    down[t] -= 1;
                    size_t gd = gamma_idx.at(down);
                    for (size_t i = 0; i < dimM; ++i)
                        if (!m.act[t].at(i, j).is_zero())
                            out.d.at(index(mask, gd, i), col) += sgn * m.act[t].at(i, j);
                    if (!(mask & (1u << t))) {
                        FieldElement ms = FieldElement::make(f, alg.mult_sign(t, mask));
                        out.d.at(index(mask | (1u << t), gd, j), col) -= ms;
                    }
                }
            }
    }
    // action: left multiplication on the Lambda factor
    for (int t = 0; t < alg.c; ++t) {
        Matrix a(N, N, f);
        for (unsigned mask = 0; mask < L; ++mask) {
            if (mask & (1u << t)) continue;
            FieldElement ms = FieldElement::make(f, alg.mult_sign(t, mask));
            for (size_t g = 0; g < gammas.size(); ++g)
                for (size_t j = 0; j < dimM; ++j)
                    a.at(index(mask | (1u << t), g, j), index(mask, g, j)) = ms;
        }
        out.act.push_back(std::move(a));
    }
    return w;
}

int derived_tensor_required_window(const DgLambdaModule& m, const DgLambdaModule& n, int u) {
    return u + 1 - m.min_degree() - n.min_degree();
}

namespace {

// the window complex Gamma_{<=D} (x) M (x) N with its Lambda-action through N
DgLambdaModule tensor_window_complex(const DgLambdaModule& m, const DgLambdaModule& n, int D) {
    const ExteriorAlgebra& alg = m.alg;
    const Field& f = alg.field;
    std::vector<Exps> gammas = gamma_monomials(alg, D);
    std::map<Exps, size_t> gamma_idx;
    for (size_t g = 0; g < gammas.size(); ++g) gamma_idx[gammas[g]] = g;
    size_t dm = m.dim(), dn = n.dim();
    size_t N = gammas.size() * dm * dn;
    auto index = [&](size_t g, size_t a, size_t b) { return (g * dm + a) * dn + b; };

    DgLambdaModule out;
    out.alg = alg;
    out.names.resize(N);
    out.deg.resize(N);
    for (size_t g = 0; g < gammas.size(); ++g)
        for (size_t a = 0; a < dm; ++a)
            for (size_t b = 0; b < dn; ++b) {
                size_t k = index(g, a, b);
                out.deg[k] = gamma_degree(alg, gammas[g]) + m.deg[a] + n.deg[b];
                out.names[k] = "w" + std::to_string(k);
            }

    out.d = Matrix(N, N, f);
    for (size_t g = 0; g < gammas.size(); ++g)
        for (size_t a = 0; a < dm; ++a) {
            FieldElement sa = FieldElement::make(f, m.deg[a] % 2 == 0 ? 1 : -1);
            for (size_t b = 0; b < dn; ++b) {
                size_t col = index(g, a, b);
                for (size_t a2 = 0; a2 < dm; ++a2)
                    if (!m.d.at(a2, a).is_zero())
                        out.d.at(index(g, a2, b), col) += m.d.at(a2, a);
                for (size_t b2 = 0; b2 < dn; ++b2)
                    if (!n.d.at(b2, b).is_zero())
                        out.d.at(index(g, a, b2), col) += sa * n.d.at(b2, b);
                for (int t = 0; t < alg.c; ++t) {
                    if (gammas[g][t] == 0) continue;
                    Exps down = gammas[g];
                    down[t] -= 1;
                    size_t gd = gamma_idx.at(down);
                    for (size_t a2 = 0; a2 < dm; ++a2)
                        if (!m.act[t].at(a2, a).is_zero())
                            out.d.at(index(gd, a2, b), col) += m.act[t].at(a2, a);
                    for (size_t b2 = 0; b2 < dn; ++b2)
                        if (!n.act[t].at(b2, b).is_zero())
                            out.d.at(index(gd, a, b2), col) -= sa * n.act[t].at(b2, b);
                }
            }
        }
    for (int t = 0; t < alg.c; ++t) {
        Matrix A(N, N, f);
        for (size_t g = 0; g < gammas.size(); ++g)
            for (size_t a = 0; a < dm; ++a) {
                FieldElement sa = FieldElement::make(f, m.deg[a] % 2 == 0 ? 1 : -1);
                for (size_t b = 0; b < dn; ++b)
                    for (size_t b2 = 0; b2 < dn; ++b2)
                        if (!n.act[t].at(b2, b).is_zero())
                            A.at(index(g, a, b2), index(g, a, b)) += sa * n.act[t].at(b2, b);
            }
        out.act.push_back(std::move(A));
    }
    return out;
}

} // namespace

DerivedTensorWindow derived_tensor_window(const DgLambdaModule& m, const DgLambdaModule& n,
                                          int D, int u) {
    if (u < 0) throw Error("derived tensor window: u must be nonnegative");
    if (!(m.alg == n.alg)) throw Error("derived tensor window: different algebras");
    require_valid(m, "derived_tensor_window");
    require_valid(n, "derived_tensor_window");
    int need = derived_tensor_required_window(m, n, u);
    if (D < need)
        throw Error("derived tensor window too small: need D >= " + std::to_string(need) +
                    ", got " + std::to_string(D));
    DgLambdaModule X = tensor_window_complex(m, n, D);
    DerivedTensorWindow out;
    out.D = D;
    out.u = u;
    auto hd = homology_dims(X);
    for (int i = 0; i <= u; ++i) {
        auto it = hd.find(i);
        out.tor_dims[i] = it == hd.end() ? 0 : it->second;
    }
    out.truncated = soft_truncate(X, u);
    return out;
}

DerivedTensorWindow derived_tensor_window(const DgLambdaModule& m, const DgLambdaModule& n,
                                          int u) {
    return derived_tensor_window(m, n, derived_tensor_required_window(m, n, u), u);
}

DgLambdaModule soft_truncate(const DgLambdaModule& x, int u) {
    const Field& f = x.alg.field;
    size_t n = x.dim();
    std::vector<size_t> low;   // degree < u, kept as-is
    std::vector<size_t> at_u;  // degree == u
    std::vector<size_t> above; // degree == u+1 (boundary sources)
    for (size_t i = 0; i < n; ++i) {
        if (x.deg[i] < u) low.push_back(i);
        else if (x.deg[i] == u) at_u.push_back(i);
        else if (x.deg[i] == u + 1) above.push_back(i);
    }
    // boundaries into degree u
    std::vector<std::vector<FieldElement>> bnd;
    for (size_t j : above) {
        std::vector<FieldElement> col(at_u.size(), FieldElement::make(f, 0));
        bool nz = false;
        for (size_t k = 0; k < at_u.size(); ++k) {
            col[k] = x.d.at(at_u[k], j);
            nz = nz || !col[k].is_zero();
        }
        if (nz) bnd.push_back(std::move(col));
    }
    // representatives: standard basis vectors independent modulo boundaries
    Matrix probe(at_u.size(), bnd.size() + at_u.size(), f);
    for (size_t j = 0; j < bnd.size(); ++j)
        for (size_t i = 0; i < at_u.size(); ++i) probe.at(i, j) = bnd[j][i];
    for (size_t j = 0; j < at_u.size(); ++j)
        probe.at(j, bnd.size() + j) = FieldElement::make(f, 1);
    std::vector<size_t> reps; // indices into at_u
    for (size_t p : probe.pivot_columns())
        if (p >= bnd.size()) reps.push_back(p - bnd.size());

    // projection of a degree-u slice vector onto representative coordinates
    Matrix proj_mat(at_u.size(), bnd.size() + reps.size(), f);
    for (size_t j = 0; j < bnd.size(); ++j)
        for (size_t i = 0; i < at_u.size(); ++i) proj_mat.at(i, j) = bnd[j][i];
    for (size_t j = 0; j < reps.size(); ++j)
        proj_mat.at(reps[j], bnd.size() + j) = FieldElement::make(f, 1);

    size_t outdim = low.size() + reps.size();
    std::vector<size_t> src_of; // original index per output basis vector
    DgLambdaModule out;
    out.alg = x.alg;
    for (size_t i : low) {
        src_of.push_back(i);
        out.names.push_back(x.names[i]);
        out.deg.push_back(x.deg[i]);
    }
    for (size_t r : reps) {
        src_of.push_back(at_u[r]);
        out.names.push_back(x.names[at_u[r]] + "~");
        out.deg.push_back(u);
    }
    std::map<size_t, size_t> low_pos;
    for (size_t k = 0; k < low.size(); ++k) low_pos[low[k]] = k;

    auto project_image = [&](const std::vector<FieldElement>& img) {
        // img is in full coordinates; return output coordinates
        std::vector<FieldElement> res(outdim, FieldElement::make(f, 0));
        for (size_t i = 0; i < n; ++i) {
            if (img[i].is_zero()) continue;
            if (x.deg[i] < u) res[low_pos.at(i)] = img[i];
            // degree > u components are killed by the truncation
        }
        // degree-u components: reduce modulo boundaries
        bool any_u = false;
        Matrix b(at_u.size(), 1, f);
        for (size_t k = 0; k < at_u.size(); ++k) {
            b.at(k, 0) = img[at_u[k]];
            any_u = any_u || !b.at(k, 0).is_zero();
        }
        if (any_u) {
            auto sol = proj_mat.solve(b);
            if (!sol) throw Error("soft truncation: projection failed");
            for (size_t j = 0; j < reps.size(); ++j)
                res[low.size() + j] = sol->at(bnd.size() + j, 0);
        }
        return res;
    };

    auto build = [&](const Matrix& a) {
        Matrix r(outdim, outdim, f);
        for (size_t col = 0; col < outdim; ++col) {
            std::vector<FieldElement> v(n, FieldElement::make(f, 0));
            v[src_of[col]] = FieldElement::make(f, 1);
            std::vector<FieldElement> img = a.apply(v);
            std::vector<FieldElement> res = project_image(img);
            for (size_t row = 0; row < outdim; ++row) r.at(row, col) = res[row];
        }
        return r;
    };
    out.d = build(x.d);
    for (int t = 0; t < x.alg.c; ++t) out.act.push_back(build(x.act[t]));
    return out;
}

std::map<int, long long> ext_hilbert_linalg(const DgLambdaModule& m, int jmin, int jmax) {
    require_valid(m, "ext_hilbert_linalg");
    const ExteriorAlgebra& alg = m.alg;
    const Field& f = alg.field;
    int D = jmax + 2 - m.min_degree();
    std::vector<Exps> gammas = gamma_monomials(alg, D);
    std::map<Exps, size_t> gamma_idx;
    for (size_t g = 0; g < gammas.size(); ++g) gamma_idx[gammas[g]] = g;
    size_t dm = m.dim();
    auto index = [&](size_t g, size_t j) { return g * dm + j; };

    // reduced complex C = Gamma_{<=D} (x) M, d(g,m) = (g, dm) + sum (chi_i g, e_i m);
    // dim Ext^j = dim H_j(C)
    std::map<int, std::vector<size_t>> by_deg;
    for (size_t g = 0; g < gammas.size(); ++g)
        for (size_t j = 0; j < dm; ++j)
            by_deg[gamma_degree(alg, gammas[g]) + m.deg[j]].push_back(index(g, j));

    size_t N = gammas.size() * dm;
    Matrix d(N, N, f);
    for (size_t g = 0; g < gammas.size(); ++g)
        for (size_t j = 0; j < dm; ++j) {
            size_t col = index(g, j);
            for (size_t i = 0; i < dm; ++i)
                if (!m.d.at(i, j).is_zero()) d.at(index(g, i), col) += m.d.at(i, j);
            for (int t = 0; t < alg.c; ++t) {
                if (gammas[g][t] == 0) continue;
                Exps down = gammas[g];
                down[t] -= 1;
                size_t gd = gamma_idx.at(down);
                for (size_t i = 0; i < dm; ++i)
                    if (!m.act[t].at(i, j).is_zero())
                        d.at(index(gd, i), col) += m.act[t].at(i, j);
            }
        }

    std::map<int, long long> out;
    static const std::vector<size_t> none;
    for (int j = jmin; j <= jmax; ++j) {
        auto here = by_deg.find(j);
        if (here == by_deg.end()) {
            out[j] = 0;
            continue;
        }
        auto lower = by_deg.find(j - 1);
        auto upper = by_deg.find(j + 1);
        auto restr = [&](const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
            Matrix r(rows.size(), cols.size(), f);
            for (size_t a = 0; a < rows.size(); ++a)
                for (size_t b = 0; b < cols.size(); ++b) r.at(a, b) = d.at(rows[a], cols[b]);
            return r;
        };
        Matrix dout = restr(lower == by_deg.end() ? none : lower->second, here->second);
        Matrix din = restr(here->second, upper == by_deg.end() ? none : upper->second);
        out[j] = (long long)here->second.size() - (long long)dout.rank() - (long long)din.rank();
    }
    return out;
}

} // namespace ksv
