#include "ksv/ideal.hpp"

namespace ksv {

std::vector<Polynomial> groebner_ideal(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord, const RingPtr& ring) {
    ModuleOrder mord = ModuleOrder::pot(ord, 1);
    std::vector<Vec> vgens;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        Vec v = vec_from_column({g});
        vec_sort(v, mord);
        vgens.push_back(std::move(v));
    }
    GroebnerOptions opts;
    opts.rank_one = true;
    GroebnerBasis gb = buchberger(vgens, mord, ring, opts);
    std::vector<Polynomial> out;
    for (const Vec& v : gb.elems) out.push_back(vec_to_column(v, ring, 1)[0]);
    return out;
}

Polynomial normal_form_poly(const Polynomial& f, const std::vector<Polynomial>& gb,
                            const MonomialOrder& ord, const RingPtr& ring) {
    ModuleOrder mord = ModuleOrder::pot(ord, 1);
    Vec v = vec_from_column({f});
    vec_sort(v, mord);
    std::vector<Vec> basis;
    for (const Polynomial& g : gb) {
        Vec w = vec_from_column({g});
        vec_sort(w, mord);
        basis.push_back(std::move(w));
    }
    Vec r = divide(v, basis, mord, false).remainder;
    return vec_to_column(r, ring, 1)[0];
}

HomogeneousIdeal::HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
    for (const Polynomial& g : gens) {
        check_same_ring(ring_, g.ring());
        if (!g.is_homogeneous())
            throw Error("inhomogeneous generator: " + g.str());
        if (!g.is_zero()) gens_.push_back(g);
    }
}

const std::vector<Polynomial>& HomogeneousIdeal::groebner() const {
    if (!gb_) gb_ = groebner_ideal(gens_, MonomialOrder::grevlex(ring_->nvars()), ring_);
    return *gb_;
}

Polynomial HomogeneousIdeal::normal_form(const Polynomial& f) const {
    return normal_form_poly(f, groebner(), MonomialOrder::grevlex(ring_->nvars()), ring_);
}

bool HomogeneousIdeal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool HomogeneousIdeal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].term_count() == 1 && gb[0].has_constant_term();
}

bool HomogeneousIdeal::is_zero_ideal() const { return groebner().empty(); }

std::vector<std::string> HomogeneousIdeal::printed_gens() const {
    std::vector<std::string> out;
    for (const Polynomial& g : groebner()) out.push_back(g.str());
    return out;
}

HomogeneousIdeal ideal_sum(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return HomogeneousIdeal(a.ring(), std::move(gens));
}

HomogeneousIdeal ideal_product(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.gens())
        for (const Polynomial& g : b.gens()) gens.push_back(f * g);
    if (a.gens().empty() || b.gens().empty()) gens.clear();
    return HomogeneousIdeal(a.ring(), std::move(gens));
}

HomogeneousIdeal ideal_intersect(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    if (a.gens().empty() || b.gens().empty())
        return HomogeneousIdeal(ring, {});
    // f in I cap J iff (f,u,v) with f + sum u_k i_k = 0 = f + sum v_k j_k
    size_t p = a.gens().size(), q = b.gens().size();
    PolyMatrix m(2, std::vector<Polynomial>(1 + p + q, Polynomial::zero(ring)));
    m[0][0] = Polynomial::constant(ring, 1);
    m[1][0] = Polynomial::constant(ring, 1);
    for (size_t k = 0; k < p; ++k) m[0][1 + k] = a.gens()[k];
    for (size_t k = 0; k < q; ++k) m[1][1 + p + k] = b.gens()[k];
    auto ker = kernel_columns(m, ring);
    std::vector<Polynomial> gens;
    for (const auto& col : ker)
        if (!col[0].is_zero()) gens.push_back(col[0]);
    return HomogeneousIdeal(ring, std::move(gens));
}

std::pair<RingPtr, std::vector<Polynomial>> eliminate(const HomogeneousIdeal& I,
                                                      const std::vector<int>& block) {
    const RingPtr& ring = I.ring();
    std::vector<bool> drop(ring->nvars(), false);
    for (int v : block) {
        if (v < 0 || size_t(v) >= ring->nvars())
            throw Error("eliminate: block variable out of range");
        drop[v] = true;
    }
    std::vector<std::string> kept_vars;
    std::vector<int> kept_weights;
    std::vector<int> var_map(ring->nvars(), -1);
    for (size_t i = 0; i < ring->nvars(); ++i) {
        if (drop[i]) continue;
        var_map[i] = int(kept_vars.size());
        kept_vars.push_back(ring->vars[i]);
        kept_weights.push_back(ring->weights[i]);
    }
    RingPtr sub = make_ring(kept_vars, kept_weights, ring->field);

    MonomialOrder ord = MonomialOrder::elimination(block, ring->nvars());
    std::vector<Polynomial> gb = groebner_ideal(I.gens(), ord, ring);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb) {
        bool pure = true;
        for (const auto& [e, c] : g.terms())
            for (int v : block)
                if (e[v] != 0) { pure = false; break; }
        if (!pure) continue;
        out.push_back(g.map_vars(sub, var_map));
    }
    return {sub, out};
}

bool radical_membership(const Polynomial& f, const HomogeneousIdeal& I) {
    const RingPtr& ring = I.ring();
    check_same_ring(ring, f.ring());
    if (f.is_zero()) return true;
    std::vector<std::string> vars = ring->vars;
    std::vector<int> weights = ring->weights;
    std::string tname = "t@rab";
    vars.push_back(tname);
    weights.push_back(1);
    RingPtr ext = make_ring(vars, weights, ring->field);
    std::vector<int> var_map;
    for (size_t i = 0; i < ring->nvars(); ++i) var_map.push_back(int(i));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(g.map_vars(ext, var_map));
    Polynomial tf = f.map_vars(ext, var_map) * Polynomial::variable(ext, int(ext->nvars()) - 1);
    gens.push_back(Polynomial::constant(ext, 1) - tf);
    std::vector<Polynomial> gb = groebner_ideal(gens, MonomialOrder::grevlex(ext->nvars()), ext);
    return gb.size() == 1 && gb[0].term_count() == 1 && gb[0].has_constant_term();
}

bool radical_contains_all(const HomogeneousIdeal& I, const std::vector<Polynomial>& js) {
    for (const Polynomial& g : js)
        if (!radical_membership(g, I)) return false;
    return true;
}

} // namespace ksv
