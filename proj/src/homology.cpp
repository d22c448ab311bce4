#include "ksv/homology.hpp"

namespace ksv {

void FreeComplex::check() const {
    for (size_t i = 0; i < d.size(); ++i) {
        if (!(d[i].src.degs == spots[i + 1].degs) || !(d[i].tgt.degs == spots[i].degs))
            throw Error("free complex: differential endpoints mismatch");
        d[i].check_homogeneous();
    }
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (!compose(d[i], d[i + 1]).is_zero()) throw Error("free complex: d.d != 0");
}

namespace {

// nonzero constant entry (a unit); returns (row, col) or nullopt
std::optional<std::pair<size_t, size_t>> find_unit(const PolyMatrix& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            const Polynomial& e = a[i][j];
            if (!e.is_zero() && e.term_count() == 1 && e.has_constant_term())
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

PolyMatrix drop_row(const PolyMatrix& a, size_t r) {
    PolyMatrix out;
    for (size_t i = 0; i < a.size(); ++i)
        if (i != r) out.push_back(a[i]);
    return out;
}

PolyMatrix drop_col(const PolyMatrix& a, size_t c) {
    PolyMatrix out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (j != c) out[i].push_back(a[i][j]);
    return out;
}

std::vector<int> drop_deg(const std::vector<int>& d, size_t k) {
    std::vector<int> out;
    for (size_t i = 0; i < d.size(); ++i)
        if (i != k) out.push_back(d[i]);
    return out;
}

// Schur update after cancelling pivot (r, s): a'[p][q] = a[p][q] - a[p][s] u^{-1} a[r][q]
PolyMatrix schur(const PolyMatrix& a, size_t r, size_t s, const RingPtr& ring) {
    FieldElement u = a[r][s].constant_term();
    FieldElement uinv = u.inv();
    PolyMatrix out;
    for (size_t p = 0; p < a.size(); ++p) {
        if (p == r) continue;
        std::vector<Polynomial> row;
        for (size_t q = 0; q < a[p].size(); ++q) {
            if (q == s) continue;
            Polynomial corr = a[p][s] * a[r][q];
            row.push_back(a[p][q] - corr.scaled(uinv));
        }
        out.push_back(std::move(row));
    }
    if (out.empty()) out.assign(a.size() - 1, std::vector<Polynomial>());
    return out;
}

} // namespace

void minimize_complex(FreeComplex& c) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < c.d.size(); ++i) {
            auto pivot = find_unit(c.d[i].a);
            if (!pivot) continue;
            auto [r, s] = *pivot;
            // A := d[i] gets the Schur complement; B := d[i+1] loses row s;
            // D := d[i-1] loses column r
            c.d[i].a = schur(c.d[i].a, r, s, c.ring);
            c.spots[i + 1].degs = drop_deg(c.spots[i + 1].degs, s);
            c.spots[i].degs = drop_deg(c.spots[i].degs, r);
            c.d[i].src = c.spots[i + 1];
            c.d[i].tgt = c.spots[i];
            if (i + 1 < c.d.size()) {
                c.d[i + 1].a = drop_row(c.d[i + 1].a, s);
                c.d[i + 1].tgt = c.spots[i + 1];
            }
            if (i > 0) {
                c.d[i - 1].a = drop_col(c.d[i - 1].a, r);
                c.d[i - 1].src = c.spots[i];
            }
            changed = true;
        }
    }
}

PresentedModule homology_at(const FreeComplex& c, int n) {
    const RingPtr& ring = c.ring;
    if (!c.has_spot(n))
        return PresentedModule(FreeModule{ring, {}}, PolyMatrix{});
    size_t i = size_t(n - c.base);
    const FreeModule& spot = c.spots[i];
    if (spot.rank() == 0) return PresentedModule(FreeModule{ring, {}}, PolyMatrix{});
    const GradedMap* in = (i < c.d.size() && c.d[i].src.rank() > 0) ? &c.d[i] : nullptr;
    const GradedMap* out = (i > 0 && c.d[i - 1].tgt.rank() > 0) ? &c.d[i - 1] : nullptr;
    return subquotient_homology(in, out, spot);
}

void minimize_endo(FreeModule& f, GradedMap& delta) {
    while (true) {
        auto pivot = find_unit(delta.a);
        if (!pivot) return;
        auto [r, s] = *pivot;
        // r and s index the same module; both leave, the rest gets the Schur
        // complement (the pivot couples adjacent degree layers only)
        FieldElement uinv = delta.a[r][s].constant_term().inv();
        size_t nrank = f.rank();
        std::vector<size_t> keep;
        for (size_t k = 0; k < nrank; ++k)
            if (k != r && k != s) keep.push_back(k);
        PolyMatrix next(keep.size(), std::vector<Polynomial>(keep.size(), Polynomial::zero(f.ring)));
        for (size_t pi = 0; pi < keep.size(); ++pi)
            for (size_t qi = 0; qi < keep.size(); ++qi) {
                size_t p = keep[pi], q = keep[qi];
                Polynomial corr = delta.a[p][s] * delta.a[r][q];
                next[pi][qi] = delta.a[p][q] - corr.scaled(uinv);
            }
        std::vector<int> degs;
        for (size_t k : keep) degs.push_back(f.degs[k]);
        f.degs = std::move(degs);
        delta.src = f;
        delta.tgt = f;
        delta.a = std::move(next);
    }
}

} // namespace ksv
