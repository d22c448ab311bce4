#include "ksv/extalg.hpp"

#include <algorithm>
#include <bit>

namespace ksv {

int ExteriorAlgebra::mask_degree(unsigned mask) const {
    int d = 0;
    for (int i = 0; i < c; ++i)
        if (mask & (1u << i)) d += gen_deg[i];
    return d;
}

int ExteriorAlgebra::mult_sign(int i, unsigned mask) const {
    int below = std::popcount(mask & ((1u << i) - 1));
    return below % 2 == 0 ? 1 : -1;
}

int ExteriorAlgebra::top_degree() const {
    int d = 0;
    for (int x : gen_deg) d += x;
    return d;
}

ExteriorAlgebra make_exterior(int c, Field field, std::vector<int> gen_deg) {
    if (c < 1 || c > 16) throw Error("exterior algebra: need 1 <= c <= 16 generators");
    if (gen_deg.empty()) gen_deg.assign(size_t(c), 1);
    if (gen_deg.size() != size_t(c)) throw Error("exterior algebra: one degree per generator");
    for (int d : gen_deg)
        if (d <= 0 || d % 2 == 0) throw Error("exterior algebra: generator degrees must be positive odd");
    return ExteriorAlgebra{c, std::move(gen_deg), field};
}

int DgLambdaModule::min_degree() const {
    int m = 0;
    for (size_t i = 0; i < deg.size(); ++i) m = i == 0 ? deg[i] : std::min(m, deg[i]);
    return m;
}

int DgLambdaModule::max_degree() const {
    int m = 0;
    for (size_t i = 0; i < deg.size(); ++i) m = i == 0 ? deg[i] : std::max(m, deg[i]);
    return m;
}

DgLambdaModule trivial_module(const ExteriorAlgebra& alg) {
    DgLambdaModule m;
    m.alg = alg;
    m.names = {"v"};
    m.deg = {0};
    m.d = Matrix(1, 1, alg.field);
    m.act.assign(size_t(alg.c), Matrix(1, 1, alg.field));
    return m;
}

DgLambdaModule lambda_as_module(const ExteriorAlgebra& alg) {
    DgLambdaModule m;
    m.alg = alg;
    size_t n = alg.dim();
    for (unsigned mask = 0; mask < n; ++mask) {
        std::string name = "e";
        if (mask == 0) name = "one";
        for (int i = 0; i < alg.c; ++i)
            if (mask & (1u << i)) name += std::to_string(i + 1);
        m.names.push_back(name);
        m.deg.push_back(alg.mask_degree(mask));
    }
    m.d = Matrix(n, n, alg.field);
    for (int t = 0; t < alg.c; ++t) {
        Matrix a(n, n, alg.field);
        for (unsigned mask = 0; mask < n; ++mask) {
            if (mask & (1u << t)) continue;
            a.at(mask | (1u << t), mask) = FieldElement::make(alg.field, alg.mult_sign(t, mask));
        }
        m.act.push_back(std::move(a));
    }
    return m;
}

DgLambdaModule cyclic_quotient(const ExteriorAlgebra& alg, int i) {
    if (i < 0 || i >= alg.c) throw Error("cyclic quotient: generator index out of range");
    DgLambdaModule m;
    m.alg = alg;
    std::vector<unsigned> basis;
    for (unsigned mask = 0; mask < alg.dim(); ++mask)
        if (!(mask & (1u << i))) basis.push_back(mask);
    std::map<unsigned, size_t> index;
    for (size_t k = 0; k < basis.size(); ++k) {
        index[basis[k]] = k;
        std::string name = basis[k] == 0 ? "one" : "e";
        for (int j = 0; j < alg.c; ++j)
            if (basis[k] & (1u << j)) name += std::to_string(j + 1);
        m.names.push_back(name);
        m.deg.push_back(alg.mask_degree(basis[k]));
    }
    size_t n = basis.size();
    m.d = Matrix(n, n, alg.field);
    for (int t = 0; t < alg.c; ++t) {
        Matrix a(n, n, alg.field);
        if (t != i) {
            for (size_t k = 0; k < n; ++k) {
                unsigned mask = basis[k];
                if (mask & (1u << t)) continue;
                a.at(index.at(mask | (1u << t)), k) =
                    FieldElement::make(alg.field, alg.mult_sign(t, mask));
            }
        }
        m.act.push_back(std::move(a));
    }
    return m;
}

namespace {

bool degree_ok(const std::vector<int>& deg, const Matrix& m, int shift) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && deg[i] != deg[j] + shift) return false;
    return true;
}

} // namespace

std::optional<Violation> validate(const DgLambdaModule& m) {
    size_t n = m.dim();
    if (m.names.size() != n) return Violation{"shape", "names/degrees length mismatch"};
    if (m.d.rows() != n || m.d.cols() != n) return Violation{"shape", "differential is not n x n"};
    if (m.act.size() != size_t(m.alg.c))
        return Violation{"shape", "need one action matrix per generator"};
    for (const Matrix& a : m.act)
        if (a.rows() != n || a.cols() != n) return Violation{"shape", "action matrix is not n x n"};

    if (!degree_ok(m.deg, m.d, -1))
        return Violation{"grading", "differential is not of degree -1"};
    for (int t = 0; t < m.alg.c; ++t)
        if (!degree_ok(m.deg, m.act[t], m.alg.gen_deg[t]))
            return Violation{"grading",
                             "action of e_" + std::to_string(t + 1) + " is not of degree " +
                                 std::to_string(m.alg.gen_deg[t])};

    if (!(m.d * m.d).is_zero()) return Violation{"d^2 = 0", "differential does not square to zero"};
    for (int t = 0; t < m.alg.c; ++t) {
        if (!(m.d * m.act[t] + m.act[t] * m.d).is_zero())
            return Violation{"Leibniz", "d e_" + std::to_string(t + 1) + " + e_" +
                                            std::to_string(t + 1) + " d != 0"};
        if (!(m.act[t] * m.act[t]).is_zero())
            return Violation{"e_i^2 = 0", "e_" + std::to_string(t + 1) + "^2 != 0"};
        for (int s = t + 1; s < m.alg.c; ++s)
            if (!(m.act[t] * m.act[s] + m.act[s] * m.act[t]).is_zero())
                return Violation{"anticommutation", "e_" + std::to_string(t + 1) + " e_" +
                                                        std::to_string(s + 1) + " + e_" +
                                                        std::to_string(s + 1) + " e_" +
                                                        std::to_string(t + 1) + " != 0"};
    }
    return std::nullopt;
}

void require_valid(const DgLambdaModule& m, const std::string& who) {
    if (auto v = validate(m))
        throw Error(who + ": invalid dg module (" + v->identity + ": " + v->detail + ")");
}

DgLambdaModule dual(const DgLambdaModule& m) {
    size_t n = m.dim();
    const Field& f = m.alg.field;
    DgLambdaModule out;
    out.alg = m.alg;
    for (size_t j = 0; j < n; ++j) {
        out.names.push_back(m.names[j] + "'");
        out.deg.push_back(-m.deg[j]);
    }
    auto sgn = [&](long k) { return FieldElement::make(f, k % 2 == 0 ? 1 : -1); };
    // (d' phi_j)(b_m) = -(-1)^{|phi_j|} phi_j(d b_m)
    out.d = Matrix(n, n, f);
    for (size_t j = 0; j < n; ++j)
        for (size_t mm = 0; mm < n; ++mm)
            if (!m.d.at(j, mm).is_zero())
                out.d.at(mm, j) = -(sgn(m.deg[j]) * m.d.at(j, mm));
    for (int t = 0; t < m.alg.c; ++t) {
        Matrix a(n, n, f);
        for (size_t j = 0; j < n; ++j)
            for (size_t mm = 0; mm < n; ++mm)
                if (!m.act[t].at(j, mm).is_zero())
                    a.at(mm, j) = -(sgn(long(m.alg.gen_deg[t]) * m.deg[j]) * m.act[t].at(j, mm));
        out.act.push_back(std::move(a));
    }
    return out;
}

DgLambdaModule tensor_k(const DgLambdaModule& m, const DgLambdaModule& n) {
    if (!(m.alg == n.alg)) throw Error("tensor: modules over different algebras");
    const Field& f = m.alg.field;
    size_t dm = m.dim(), dn = n.dim();
    DgLambdaModule out;
    out.alg = m.alg;
    for (size_t a = 0; a < dm; ++a)
        for (size_t b = 0; b < dn; ++b) {
            out.names.push_back(m.names[a] + "(x)" + n.names[b]);
            out.deg.push_back(m.deg[a] + n.deg[b]);
        }
    auto idx = [&](size_t a, size_t b) { return a * dn + b; };
    auto sgn = [&](long k) { return FieldElement::make(f, k % 2 == 0 ? 1 : -1); };
    out.d = Matrix(dm * dn, dm * dn, f);
    for (size_t a = 0; a < dm; ++a)
        for (size_t b = 0; b < dn; ++b) {
            for (size_t a2 = 0; a2 < dm; ++a2)
                if (!m.d.at(a2, a).is_zero()) out.d.at(idx(a2, b), idx(a, b)) += m.d.at(a2, a);
            for (size_t b2 = 0; b2 < dn; ++b2)
                if (!n.d.at(b2, b).is_zero())
                    out.d.at(idx(a, b2), idx(a, b)) += sgn(m.deg[a]) * n.d.at(b2, b);
        }
    for (int t = 0; t < m.alg.c; ++t) {
        Matrix A(dm * dn, dm * dn, f);
        for (size_t a = 0; a < dm; ++a)
            for (size_t b = 0; b < dn; ++b) {
                for (size_t a2 = 0; a2 < dm; ++a2)
                    if (!m.act[t].at(a2, a).is_zero())
                        A.at(idx(a2, b), idx(a, b)) += m.act[t].at(a2, a);
                for (size_t b2 = 0; b2 < dn; ++b2)
                    if (!n.act[t].at(b2, b).is_zero())
                        A.at(idx(a, b2), idx(a, b)) +=
                            sgn(long(m.alg.gen_deg[t]) * m.deg[a]) * n.act[t].at(b2, b);
            }
        out.act.push_back(std::move(A));
    }
    return out;
}

DgLambdaModule hom_into_lambda(const DgLambdaModule& m) {
    const ExteriorAlgebra& alg = m.alg;
    const Field& f = alg.field;
    size_t n = m.dim();
    size_t L = alg.dim();
    // coordinates of Hom_k(M, Lambda): (j, mask) -> phi(b_j) coefficient at e_mask
    auto coord = [&](size_t j, unsigned mask) { return j * L + mask; };
    size_t N = n * L;

    // solve Lambda-linearity degreewise: phi(e_t b) = (-1)^{|e_t| |phi|} e_t phi(b)
    std::vector<std::vector<FieldElement>> basis; // solution vectors, length N
    std::vector<int> basis_deg;
    int dmin = 0 - m.max_degree();
    int dmax = alg.top_degree() - m.min_degree();
    for (int delta = dmin; delta <= dmax; ++delta) {
        // coordinates alive in this degree
        std::vector<size_t> alive;
        for (size_t j = 0; j < n; ++j)
            for (unsigned mask = 0; mask < L; ++mask)
                if (alg.mask_degree(mask) == m.deg[j] + delta) alive.push_back(coord(j, mask));
        if (alive.empty()) continue;
        std::map<size_t, size_t> alive_idx;
        for (size_t k = 0; k < alive.size(); ++k) alive_idx[alive[k]] = k;

        // constraints: for each t, j, target mask U
        std::vector<std::vector<FieldElement>> rows;
        for (int t = 0; t < alg.c; ++t) {
            FieldElement eps = FieldElement::make(
                f, (long(alg.gen_deg[t]) * delta) % 2 == 0 ? 1 : -1);
            for (size_t j = 0; j < n; ++j) {
                for (unsigned U = 0; U < L; ++U) {
                    if (alg.mask_degree(U) != m.deg[j] + alg.gen_deg[t] + delta) continue;
                    std::vector<FieldElement> row(alive.size(), FieldElement::make(f, 0));
                    bool nonzero = false;
                    // phi(e_t b_j) coefficient at U
                    for (size_t i = 0; i < n; ++i) {
                        if (m.act[t].at(i, j).is_zero()) continue;
                        auto it = alive_idx.find(coord(i, U));
                        if (it != alive_idx.end()) {
                            row[it->second] += m.act[t].at(i, j);
                            nonzero = true;
                        }
                    }
                    // -(eps) e_t phi(b_j) coefficient at U
                    if (U & (1u << t)) {
                        unsigned T = U & ~(1u << t);
                        auto it = alive_idx.find(coord(j, T));
                        if (it != alive_idx.end()) {
                            row[it->second] -=
                                eps * FieldElement::make(f, alg.mult_sign(t, T));
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
        Matrix constraint(rows.size(), alive.size(), f);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t cidx = 0; cidx < alive.size(); ++cidx) constraint.at(r, cidx) = rows[r][cidx];
        for (const auto& sol : constraint.kernel_basis()) {
            std::vector<FieldElement> full(N, FieldElement::make(f, 0));
            for (size_t k = 0; k < alive.size(); ++k) full[alive[k]] = sol[k];
            basis.push_back(std::move(full));
            basis_deg.push_back(delta);
        }
    }

    size_t H = basis.size();
    Matrix basis_mat(N, H, f);
    for (size_t k = 0; k < H; ++k)
        for (size_t i = 0; i < N; ++i) basis_mat.at(i, k) = basis[k][i];
    auto express = [&](const Matrix& images) {
        auto X = basis_mat.solve(images);
        if (!X) throw Error("hom module: image is not Lambda-linear");
        return *X;
    };

    DgLambdaModule out;
    out.alg = alg;
    for (size_t k = 0; k < H; ++k) {
        out.names.push_back("h" + std::to_string(k));
        out.deg.push_back(basis_deg[k]);
    }
    // differential: (d phi)(b) = -(-1)^{|phi|} phi(d b)
    Matrix dimg(N, H, f);
    for (size_t k = 0; k < H; ++k) {
        FieldElement eps = FieldElement::make(f, basis_deg[k] % 2 == 0 ? -1 : 1);
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                if (m.d.at(i, j).is_zero()) continue;
                for (unsigned mask = 0; mask < L; ++mask) {
                    const FieldElement& x = basis[k][coord(i, mask)];
                    if (!x.is_zero()) dimg.at(coord(j, mask), k) += eps * m.d.at(i, j) * x;
                }
            }
    }
    out.d = express(dimg);
    // action: (e_t phi)(b) = e_t phi(b)
    for (int t = 0; t < alg.c; ++t) {
        Matrix img(N, H, f);
        for (size_t k = 0; k < H; ++k)
            for (size_t j = 0; j < n; ++j)
                for (unsigned T = 0; T < L; ++T) {
                    if (T & (1u << t)) continue;
                    const FieldElement& x = basis[k][coord(j, T)];
                    if (x.is_zero()) continue;
                    img.at(coord(j, T | (1u << t)), k) +=
                        FieldElement::make(f, alg.mult_sign(t, T)) * x;
                }
        out.act.push_back(express(img));
    }
    return out;
}

DgLambdaModule direct_sum(const DgLambdaModule& m, const DgLambdaModule& n) {
    if (!(m.alg == n.alg)) throw Error("direct sum: modules over different algebras");
    const Field& f = m.alg.field;
    size_t dm = m.dim(), dn = n.dim();
    DgLambdaModule out;
    out.alg = m.alg;
    out.names = m.names;
    for (const auto& s : n.names) out.names.push_back(s + "#2");
    out.deg = m.deg;
    out.deg.insert(out.deg.end(), n.deg.begin(), n.deg.end());
    auto block = [&](const Matrix& a, const Matrix& b) {
        Matrix r(dm + dn, dm + dn, f);
        for (size_t i = 0; i < dm; ++i)
            for (size_t j = 0; j < dm; ++j) r.at(i, j) = a.at(i, j);
        for (size_t i = 0; i < dn; ++i)
            for (size_t j = 0; j < dn; ++j) r.at(dm + i, dm + j) = b.at(i, j);
        return r;
    };
    out.d = block(m.d, n.d);
    for (int t = 0; t < m.alg.c; ++t) out.act.push_back(block(m.act[t], n.act[t]));
    return out;
}

DgLambdaModule shift(const DgLambdaModule& m, int by) {
    DgLambdaModule out = m;
    for (auto& d : out.deg) d += by;
    if (by % 2 != 0) {
        out.d = -out.d;
        for (auto& a : out.act) a = -a;
    }
    return out;
}

DgLambdaModule add_contractible(const DgLambdaModule& m, int d0) {
    const Field& f = m.alg.field;
    size_t n = m.dim();
    DgLambdaModule out;
    out.alg = m.alg;
    out.names = m.names;
    out.names.push_back("x#c");
    out.names.push_back("y#c");
    out.deg = m.deg;
    out.deg.push_back(d0);
    out.deg.push_back(d0 - 1);
    auto grow = [&](const Matrix& a) {
        Matrix r(n + 2, n + 2, f);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) r.at(i, j) = a.at(i, j);
        return r;
    };
    out.d = grow(m.d);
    out.d.at(n + 1, n) = FieldElement::make(f, 1); // dx = y
    for (const Matrix& a : m.act) out.act.push_back(grow(a));
    return out;
}

std::map<int, long long> graded_dims(const DgLambdaModule& m) {
    std::map<int, long long> out;
    for (int d : m.deg) out[d] += 1;
    return out;
}

long long euler_char(const DgLambdaModule& m) {
    long long chi = 0;
    for (int d : m.deg) chi += (d % 2 == 0) ? 1 : -1;
    return chi;
}

namespace {

std::map<int, std::vector<size_t>> slices(const DgLambdaModule& m) {
    std::map<int, std::vector<size_t>> by_deg;
    for (size_t i = 0; i < m.dim(); ++i) by_deg[m.deg[i]].push_back(i);
    return by_deg;
}

Matrix restrict_matrix(const Matrix& a, const std::vector<size_t>& rows,
                       const std::vector<size_t>& cols, const Field& f) {
    Matrix r(rows.size(), cols.size(), f);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(i, j) = a.at(rows[i], cols[j]);
    return r;
}

} // namespace

std::map<int, long long> homology_dims(const DgLambdaModule& m) {
    auto by_deg = slices(m);
    const Field& f = m.alg.field;
    std::map<int, long long> out;
    static const std::vector<size_t> none;
    for (const auto& [d, idx] : by_deg) {
        auto below = by_deg.find(d - 1);
        auto above = by_deg.find(d + 1);
        Matrix dout = restrict_matrix(m.d, below == by_deg.end() ? none : below->second, idx, f);
        Matrix din = restrict_matrix(m.d, idx, above == by_deg.end() ? none : above->second, f);
        long long h = (long long)idx.size() - (long long)dout.rank() - (long long)din.rank();
        if (h != 0) out[d] = h;
    }
    return out;
}

DgLambdaModule homology_module(const DgLambdaModule& m) {
    const Field& f = m.alg.field;
    auto by_deg = slices(m);
    static const std::vector<size_t> none;

    // per degree: representatives of ker/im in full coordinates
    std::vector<std::vector<FieldElement>> reps;
    std::vector<int> rep_deg;
    // boundary columns per degree, for reduction when expressing
    std::map<int, std::vector<std::vector<FieldElement>>> boundaries;

    for (const auto& [d, idx] : by_deg) {
        auto above = by_deg.find(d + 1);
        const std::vector<size_t>& up = above == by_deg.end() ? none : above->second;
        std::vector<std::vector<FieldElement>> bnd;
        for (size_t j : up) {
            std::vector<FieldElement> col(idx.size(), FieldElement::make(f, 0));
            bool nz = false;
            for (size_t k = 0; k < idx.size(); ++k) {
                col[k] = m.d.at(idx[k], j);
                nz = nz || !col[k].is_zero();
            }
            if (nz) bnd.push_back(std::move(col));
        }
        boundaries[d] = std::move(bnd);
    }

    for (const auto& [d, idx] : by_deg) {
        auto below = by_deg.find(d - 1);
        Matrix dout = restrict_matrix(m.d, below == by_deg.end() ? none : below->second, idx, f);
        auto zbasis = dout.kernel_basis(); // cycles in slice coords
        const auto& bnd = boundaries[d];
        // choose cycle vectors independent modulo boundaries
        Matrix probe(idx.size(), bnd.size() + zbasis.size(), f);
        for (size_t j = 0; j < bnd.size(); ++j)
            for (size_t i = 0; i < idx.size(); ++i) probe.at(i, j) = bnd[j][i];
        for (size_t j = 0; j < zbasis.size(); ++j)
            for (size_t i = 0; i < idx.size(); ++i) probe.at(i, bnd.size() + j) = zbasis[j][i];
        for (size_t p : probe.pivot_columns()) {
            if (p < bnd.size()) continue;
            const auto& z = zbasis[p - bnd.size()];
            std::vector<FieldElement> full(m.dim(), FieldElement::make(f, 0));
            for (size_t k = 0; k < idx.size(); ++k) full[idx[k]] = z[k];
            reps.push_back(std::move(full));
            rep_deg.push_back(d);
        }
    }

    size_t H = reps.size();
    DgLambdaModule out;
    out.alg = m.alg;
    for (size_t k = 0; k < H; ++k) {
        out.names.push_back("H" + std::to_string(k));
        out.deg.push_back(rep_deg[k]);
    }
    out.d = Matrix(H, H, f);

    // express a cycle in the representatives modulo boundaries, degreewise
    auto express = [&](const std::vector<FieldElement>& v, int d) {
        std::vector<FieldElement> coeffs(H, FieldElement::make(f, 0));
        auto it = by_deg.find(d);
        if (it == by_deg.end()) {
            for (const auto& x : v)
                if (!x.is_zero()) throw Error("homology: element in empty degree");
            return coeffs;
        }
        const auto& idx = it->second;
        const auto& bnd = boundaries[d];
        std::vector<size_t> rep_ids;
        for (size_t k = 0; k < H; ++k)
            if (rep_deg[k] == d) rep_ids.push_back(k);
        Matrix A(idx.size(), rep_ids.size() + bnd.size(), f);
        for (size_t j = 0; j < rep_ids.size(); ++j)
            for (size_t i = 0; i < idx.size(); ++i) A.at(i, j) = reps[rep_ids[j]][idx[i]];
        for (size_t j = 0; j < bnd.size(); ++j)
            for (size_t i = 0; i < idx.size(); ++i) A.at(i, rep_ids.size() + j) = bnd[j][i];
        Matrix b(idx.size(), 1, f);
        for (size_t i = 0; i < idx.size(); ++i) b.at(i, 0) = v[idx[i]];
        auto X = A.solve(b);
        if (!X) throw Error("homology: cycle not expressible");
        for (size_t j = 0; j < rep_ids.size(); ++j) coeffs[rep_ids[j]] = X->at(j, 0);
        return coeffs;
    };

    for (int t = 0; t < m.alg.c; ++t) {
        Matrix A(H, H, f);
        for (size_t k = 0; k < H; ++k) {
            std::vector<FieldElement> img = m.act[t].apply(reps[k]);
            auto coeffs = express(img, rep_deg[k] + m.alg.gen_deg[t]);
            for (size_t i = 0; i < H; ++i) A.at(i, k) = coeffs[i];
        }
        out.act.push_back(std::move(A));
    }
    return out;
}

} // namespace ksv
