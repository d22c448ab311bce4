#include "ksv/varieties.hpp"

namespace ksv {

std::string variety_class_name(VarietyClass c) {
    switch (c) {
        case VarietyClass::Unit: return "empty-cone";
        case VarietyClass::ConePoint: return "cone-point";
        case VarietyClass::Positive: return "positive";
    }
    return "?";
}

VarietyHandle VarietyHandle::of(HomogeneousIdeal ideal) {
    const RingPtr& S = ideal.ring();
    VarietyClass cls;
    int dim;
    if (ideal.is_unit()) {
        cls = VarietyClass::Unit;
        dim = HilbertSeries::DIM_ZERO;
    } else {
        bool cone = true;
        for (size_t i = 0; i < S->nvars() && cone; ++i)
            cone = radical_membership(Polynomial::variable(S, int(i)), ideal);
        cls = cone ? VarietyClass::ConePoint : VarietyClass::Positive;
        dim = hilbert_of_quotient(ideal).proj_dim();
    }
    return VarietyHandle(std::move(ideal), cls, dim);
}

RingPtr doubled_ring(const RingPtr& S) {
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (size_t i = 0; i < S->nvars(); ++i) {
        vars.push_back("y" + std::to_string(i + 1));
        weights.push_back(S->weights[i]);
    }
    for (size_t i = 0; i < S->nvars(); ++i) {
        vars.push_back("z" + std::to_string(i + 1));
        weights.push_back(S->weights[i]);
    }
    return make_ring(vars, weights, S->field);
}

namespace {

// ring k[chi..., y..., z...] whose chi-block mirrors S exactly
RingPtr tripled_ring(const RingPtr& S) {
    std::vector<std::string> vars = S->vars;
    std::vector<int> weights = S->weights;
    for (size_t i = 0; i < S->nvars(); ++i) {
        vars.push_back("y" + std::to_string(i + 1));
        weights.push_back(S->weights[i]);
    }
    for (size_t i = 0; i < S->nvars(); ++i) {
        vars.push_back("z" + std::to_string(i + 1));
        weights.push_back(S->weights[i]);
    }
    return make_ring(vars, weights, S->field);
}

HomogeneousIdeal eliminate_yz(const RingPtr& S, const RingPtr& triple,
                              std::vector<Polynomial> gens) {
    size_t c = S->nvars();
    for (size_t i = 0; i < c; ++i) {
        Polynomial link = Polynomial::variable(triple, int(i)) -
                          Polynomial::variable(triple, int(c + i)) -
                          Polynomial::variable(triple, int(2 * c + i));
        gens.push_back(link);
    }
    HomogeneousIdeal big(triple, std::move(gens));
    std::vector<int> block;
    for (size_t i = c; i < 3 * c; ++i) block.push_back(int(i));
    auto [sub, egens] = eliminate(big, block);
    // sub has the chi-block variable names and weights, i.e. it is S
    std::vector<Polynomial> back;
    std::vector<int> idmap;
    for (size_t i = 0; i < c; ++i) idmap.push_back(int(i));
    for (const Polynomial& g : egens) back.push_back(g.map_vars(S, idmap));
    return HomogeneousIdeal(S, std::move(back));
}

} // namespace

VarietyHandle join(const VarietyHandle& u, const VarietyHandle& v) {
    check_same_ring(u.ring(), v.ring());
    const RingPtr& S = u.ring();
    size_t c = S->nvars();
    RingPtr triple = tripled_ring(S);
    std::vector<int> ymap, zmap;
    for (size_t i = 0; i < c; ++i) ymap.push_back(int(c + i));
    for (size_t i = 0; i < c; ++i) zmap.push_back(int(2 * c + i));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : u.ideal().gens()) gens.push_back(g.map_vars(triple, ymap));
    for (const Polynomial& g : v.ideal().gens()) gens.push_back(g.map_vars(triple, zmap));
    return VarietyHandle::of(eliminate_yz(S, triple, std::move(gens)));
}

HomogeneousIdeal delta_preimage(const HomogeneousIdeal& K, const RingPtr& S) {
    size_t c = S->nvars();
    if (K.ring()->nvars() != 2 * c) throw Error("delta_preimage: ideal is not in the doubled ring");
    RingPtr triple = tripled_ring(S);
    std::vector<int> yzmap;
    for (size_t i = 0; i < 2 * c; ++i) yzmap.push_back(int(c + i));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : K.gens()) gens.push_back(g.map_vars(triple, yzmap));
    return eliminate_yz(S, triple, std::move(gens));
}

bool variety_subset(const HomogeneousIdeal& I, const HomogeneousIdeal& J) {
    // V(I) subset V(J) iff J subset sqrt(I)
    return radical_contains_all(I, J.gens());
}

bool same_variety(const HomogeneousIdeal& I, const HomogeneousIdeal& J) {
    return variety_subset(I, J) && variety_subset(J, I);
}

CompareResult compare(const VarietyHandle& u, const VarietyHandle& v) {
    check_same_ring(u.ring(), v.ring());
    CompareResult r;
    r.u_in_v = variety_subset(u.ideal(), v.ideal());
    r.v_in_u = variety_subset(v.ideal(), u.ideal());
    return r;
}

std::string CompareResult::verdict() const {
    if (u_in_v && v_in_u) return "equal";
    if (u_in_v) return "U subset V";
    if (v_in_u) return "V subset U";
    return "incomparable";
}

} // namespace ksv
