#include "ksv/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ksv {

ModuleOrder ModuleOrder::pot(MonomialOrder ring_order, size_t rank) {
    ModuleOrder o;
    o.ring_order = std::move(ring_order);
    o.pos_priority.assign(rank, 0);
    return o;
}

ModuleOrder ModuleOrder::pot_elim(MonomialOrder ring_order, size_t lead_rank, size_t rank) {
    ModuleOrder o;
    o.ring_order = std::move(ring_order);
    o.pos_priority.assign(rank, 0);
    for (size_t i = 0; i < lead_rank; ++i) o.pos_priority[i] = 1;
    return o;
}

int ModuleOrder::compare(const MMono& a, const MMono& b) const {
    int pa = pos_priority[a.pos], pb = pos_priority[b.pos];
    if (pa != pb) return pa < pb ? -1 : 1;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1; // lower index is greater
    return ring_order.compare(a.m, b.m);
}

Vec vec_from_column(const std::vector<Polynomial>& col) {
    Vec v;
    for (size_t i = 0; i < col.size(); ++i)
        for (const auto& [e, c] : col[i].terms()) v.push_back(Term{MMono{int(i), e}, c});
    return v;
}

std::vector<Polynomial> vec_to_column(const Vec& v, const RingPtr& ring, size_t rank) {
    std::vector<Polynomial> col(rank, Polynomial::zero(ring));
    for (const Term& t : v) col[t.mono.pos].add_term(t.mono.m, t.coef);
    return col;
}

void vec_sort(Vec& v, const ModuleOrder& ord) {
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
}

bool vec_is_zero(const Vec& v) { return v.empty(); }

// f + c * x^mono * g, both sorted descending; merge keeps the order.
Vec vec_add_scaled(const Vec& f, const Vec& g, const Exps& mono, const FieldElement& c,
                   const ModuleOrder& ord) {
    Vec out;
    out.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        MMono gm{g[j].mono.pos, exps_mul(g[j].mono.m, mono)};
        if (i >= f.size()) {
            FieldElement nc = g[j].coef * c;
            if (!nc.is_zero()) out.push_back(Term{gm, nc});
            ++j;
            continue;
        }
        int cmp = ord.compare(f[i].mono, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            FieldElement nc = g[j].coef * c;
            if (!nc.is_zero()) out.push_back(Term{gm, nc});
            ++j;
        } else {
            FieldElement nc = f[i].coef + g[j].coef * c;
            if (!nc.is_zero()) out.push_back(Term{gm, nc});
            ++i;
            ++j;
        }
    }
    return out;
}

DivisionResult divide(const Vec& f, const std::vector<Vec>& basis, const ModuleOrder& ord,
                      bool want_cofactors) {
    DivisionResult res;
    if (want_cofactors) res.cofactors.resize(basis.size());
    Vec work = f;
    Vec rem;
    while (!work.empty()) {
        const Term& lead = work.front();
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].empty()) continue;
            const Term& bl = basis[k].front();
            if (bl.mono.pos != lead.mono.pos) continue;
            if (!exps_divides(bl.mono.m, lead.mono.m)) continue;
            Exps q = exps_div(lead.mono.m, bl.mono.m);
            FieldElement c = -(lead.coef / bl.coef);
            work = vec_add_scaled(work, basis[k], q, c, ord);
            if (want_cofactors) res.cofactors[k].emplace_back(q, -c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lead);
            work.erase(work.begin());
        }
    }
    res.remainder = std::move(rem);
    return res;
}

namespace {

struct Pair {
    size_t i, j;
    MMono lcm;
    long sugar;
    long lcm_deg;
};

long vec_sugar(const Vec& v) {
    long s = 0;
    for (const Term& t : v) s = std::max(s, exps_total(t.mono.m));
    return s;
}

Vec make_monic(Vec v) {
    if (v.empty()) return v;
    FieldElement inv = v.front().coef.inv();
    for (Term& t : v) t.coef = t.coef * inv;
    return v;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Vec>& gens, const ModuleOrder& ord,
                         const RingPtr& ring, const GroebnerOptions& opts) {
    GroebnerBasis out;
    out.order = ord;
    out.ring = ring;

    std::vector<Vec> basis;
    std::vector<std::vector<Polynomial>> exprs;
    std::vector<long> sugars;

    auto add_elem = [&](Vec v, std::vector<Polynomial> expr) {
        sugars.push_back(vec_sugar(v));
        basis.push_back(std::move(v));
        exprs.push_back(std::move(expr));
    };

    for (size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].empty()) continue;
        std::vector<Polynomial> expr;
        if (opts.track_exprs) {
            expr.assign(gens.size(), Polynomial::zero(ring));
            expr[j] = Polynomial::constant(ring, 1);
        }
        add_elem(gens[j], std::move(expr));
    }

    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> treated;

    auto push_pairs = [&](size_t n) {
        const MMono& ln = basis[n].front().mono;
        for (size_t i = 0; i < n; ++i) {
            const MMono& li = basis[i].front().mono;
            if (li.pos != ln.pos) continue;
            Pair p;
            p.i = i;
            p.j = n;
            p.lcm = MMono{li.pos, exps_lcm(li.m, ln.m)};
            p.lcm_deg = exps_total(p.lcm.m);
            p.sugar = std::max(sugars[i] + p.lcm_deg - exps_total(li.m),
                               sugars[n] + p.lcm_deg - exps_total(ln.m));
            queue.push_back(p);
        }
    };
    for (size_t n = 1; n < basis.size(); ++n) push_pairs(n);

    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        Pair p = *best;
        queue.erase(best);
        treated.insert({p.i, p.j});

        const MMono &li = basis[p.i].front().mono, &lj = basis[p.j].front().mono;

        if (opts.rank_one) {
            // coprime-lead criterion (ideals only)
            Exps prod = exps_mul(li.m, lj.m);
            if (prod == p.lcm.m) continue;
        }
        // chain criterion
        {
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                const MMono& lk = basis[k].front().mono;
                if (lk.pos != p.lcm.pos || !exps_divides(lk.m, p.lcm.m)) continue;
                auto key_ik = std::minmax(p.i, k);
                auto key_jk = std::minmax(p.j, k);
                if (treated.count({key_ik.first, key_ik.second}) &&
                    treated.count({key_jk.first, key_jk.second}))
                    skip = true;
            }
            if (skip) continue;
        }

        // S-vector: (lcm/li) * f_i / lc_i - (lcm/lj) * f_j / lc_j
        Exps qi = exps_div(p.lcm.m, li.m), qj = exps_div(p.lcm.m, lj.m);
        Vec s = vec_add_scaled(Vec{}, basis[p.i], qi, basis[p.i].front().coef.inv(), ord);
        s = vec_add_scaled(s, basis[p.j], qj, -(basis[p.j].front().coef.inv()), ord);

        DivisionResult dr = divide(s, basis, ord, opts.track_exprs);
        if (dr.remainder.empty()) continue;

        std::vector<Polynomial> expr;
        if (opts.track_exprs) {
            expr.assign(gens.size(), Polynomial::zero(ring));
            // remainder = s - sum cof_k basis_k; expand s over inputs
            auto acc = [&](size_t k, const Exps& m, const FieldElement& c) {
                for (size_t t = 0; t < gens.size(); ++t)
                    expr[t] = expr[t] + exprs[k][t].times_monomial(m, c);
            };
            acc(p.i, qi, basis[p.i].front().coef.inv());
            acc(p.j, qj, -(basis[p.j].front().coef.inv()));
            for (size_t k = 0; k < dr.cofactors.size(); ++k)
                for (const auto& [m, c] : dr.cofactors[k]) acc(k, m, -c);
        }
        add_elem(std::move(dr.remainder), std::move(expr));
        push_pairs(basis.size() - 1);
    }

    // inter-reduce: drop elements with redundant leads, tail-reduce the rest
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const MMono &li = basis[i].front().mono, &lj = basis[j].front().mono;
            if (lj.pos == li.pos && exps_divides(lj.m, li.m)) {
                if (!(li.m == lj.m) || j < i) redundant = true;
            }
        }
        if (!redundant) keep.push_back(i);
    }

    std::vector<Vec> reduced;
    std::vector<std::vector<Polynomial>> reduced_exprs;
    for (size_t idx = 0; idx < keep.size(); ++idx) {
        size_t i = keep[idx];
        std::vector<Vec> others;
        std::vector<size_t> other_ids;
        for (size_t j : keep)
            if (j != i) {
                others.push_back(basis[j]);
                other_ids.push_back(j);
            }
        DivisionResult dr = divide(basis[i], others, ord, opts.track_exprs);
        std::vector<Polynomial> expr;
        if (opts.track_exprs) {
            expr = exprs[i];
            for (size_t k = 0; k < dr.cofactors.size(); ++k)
                for (const auto& [m, c] : dr.cofactors[k])
                    for (size_t t = 0; t < gens.size(); ++t)
                        expr[t] = expr[t] - exprs[other_ids[k]][t].times_monomial(m, c);
        }
        FieldElement lc = dr.remainder.front().coef;
        if (opts.track_exprs) {
            FieldElement inv = lc.inv();
            for (auto& e : expr) e = e.scaled(inv);
        }
        reduced.push_back(make_monic(std::move(dr.remainder)));
        reduced_exprs.push_back(std::move(expr));
    }

    // canonical output: ascending leads
    std::vector<size_t> perm(reduced.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        return ord.compare(reduced[a].front().mono, reduced[b].front().mono) < 0;
    });
    for (size_t i : perm) {
        out.elems.push_back(std::move(reduced[i]));
        if (opts.track_exprs) out.exprs.push_back(std::move(reduced_exprs[i]));
    }
    return out;
}

Vec normal_form(const Vec& f, const GroebnerBasis& gb) {
    return divide(f, gb.elems, gb.order, false).remainder;
}

std::optional<std::vector<Polynomial>> express_in(const Vec& v, const GroebnerBasis& gb,
                                                  size_t n_inputs) {
    DivisionResult dr = divide(v, gb.elems, gb.order, true);
    if (!dr.remainder.empty()) return std::nullopt;
    std::vector<Polynomial> cof(n_inputs, Polynomial::zero(gb.ring));
    for (size_t k = 0; k < dr.cofactors.size(); ++k)
        for (const auto& [m, c] : dr.cofactors[k])
            for (size_t t = 0; t < n_inputs; ++t)
                cof[t] = cof[t] + gb.exprs[k][t].times_monomial(m, c);
    return cof;
}

std::vector<std::vector<Polynomial>> kernel_columns(const PolyMatrix& matrix,
                                                    const RingPtr& ring) {
    size_t rows = matrix.size();
    size_t cols = rows == 0 ? 0 : matrix[0].size();
    if (rows == 0) {
        // map into the zero module: everything is in the kernel
        throw Error("kernel of a map into a rank-0 module is the whole source");
    }
    // vectors (phi(e_j), e_j) in S^rows + S^cols; rows block dominates
    ModuleOrder ord =
        ModuleOrder::pot_elim(MonomialOrder::grevlex(ring->nvars()), rows, rows + cols);
    std::vector<Vec> gens;
    for (size_t j = 0; j < cols; ++j) {
        std::vector<Polynomial> col(rows + cols, Polynomial::zero(ring));
        for (size_t i = 0; i < rows; ++i) col[i] = matrix[i][j];
        col[rows + j] = Polynomial::constant(ring, 1);
        Vec v = vec_from_column(col);
        vec_sort(v, ord);
        gens.push_back(std::move(v));
    }
    GroebnerBasis gb = buchberger(gens, ord, ring);
    std::vector<std::vector<Polynomial>> out;
    for (const Vec& v : gb.elems) {
        if (v.empty() || v.front().mono.pos < int(rows)) continue;
        std::vector<Polynomial> full = vec_to_column(v, ring, rows + cols);
        std::vector<Polynomial> tail(full.begin() + rows, full.end());
        out.push_back(std::move(tail));
    }
    return out;
}

} // namespace ksv
