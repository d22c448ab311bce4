#include "ksv/bgg.hpp"

#include <functional>

namespace ksv {

RingPtr chi_ring_for(const ExteriorAlgebra& alg) {
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (int i = 1; i <= alg.c; ++i) {
        vars.push_back("chi" + std::to_string(i));
        weights.push_back(alg.gen_deg[i - 1] + 1);
    }
    return make_ring(vars, weights, alg.field);
}

BggComplex bgg_complex(const DgLambdaModule& m) {
    require_valid(m, "bgg_complex");
    RingPtr S = chi_ring_for(m.alg);
    DgLambdaModule mv = dual(m);
    size_t n = m.dim();
    BggComplex out;
    out.free = FreeModule{S, {}};
    for (size_t j = 0; j < n; ++j) out.free.degs.push_back(-mv.deg[j]); // = m.deg[j]
    out.delta.src = out.free;
    out.delta.tgt = out.free;
    out.delta.shift = 1;
    out.delta.a.assign(n, std::vector<Polynomial>(n, Polynomial::zero(S)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Polynomial e(S);
            if (!mv.d.at(i, j).is_zero())
                e = e + Polynomial::constant(S, 1).scaled(mv.d.at(i, j));
            for (int t = 0; t < m.alg.c; ++t)
                if (!mv.act[t].at(i, j).is_zero())
                    e = e + Polynomial::variable(S, t).scaled(mv.act[t].at(i, j));
            out.delta.a[i][j] = std::move(e);
        }
    out.delta.check_homogeneous();
    GradedMap sq = compose(out.delta, out.delta);
    if (!sq.is_zero())
        throw Error("bgg: delta^2 != 0 (sign convention bug)");
    return out;
}

ExtModule ext_module(const DgLambdaModule& m) {
    BggComplex b = bgg_complex(m);
    minimize_endo(b.free, b.delta);
    PresentedModule h = dg_homology(b.free, b.delta);
    ExtModule out{std::move(h), 0};
    out.generator_degree_bound = out.module.generator_degree_bound();
    return out;
}

std::map<int, long long> ext_hilbert_groebner(const DgLambdaModule& m, int jmin, int jmax) {
    ExtModule e = ext_module(m);
    std::map<int, long long> out;
    auto dims = e.module.hilbert().dims(jmin, jmax);
    for (int j = jmin; j <= jmax; ++j) out[j] = dims[size_t(j - jmin)];
    return out;
}

VarietyHandle support(const DgLambdaModule& m, SupportMode mode) {
    if (mode == SupportMode::B) return support(dual(m), SupportMode::D);
    ExtModule e = ext_module(m);
    return VarietyHandle::of(e.module.annihilator());
}

bool point_probe(const DgLambdaModule& m, const std::vector<FieldElement>& a) {
    if (!m.d.is_zero()) throw Error("probe undefined: module has a nonzero differential");
    for (int d : m.alg.gen_deg)
        if (d != 1) throw Error("probe undefined: generators must sit in degree 1");
    if (a.size() != size_t(m.alg.c)) throw Error("probe point has wrong length");
    bool nonzero = false;
    for (const auto& x : a) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw Error("probe point must be nonzero");
    Matrix e(m.dim(), m.dim(), m.alg.field);
    for (int t = 0; t < m.alg.c; ++t)
        if (!a[t].is_zero()) e = e + m.act[t].scaled(a[t]);
    return 2 * e.rank() < m.dim();
}

std::vector<std::vector<FieldElement>> projective_points(const Field& f, int c) {
    if (f.kind != FieldKind::Prime) throw Error("projective points need a finite field");
    std::vector<std::vector<FieldElement>> out;
    std::vector<FieldElement> a(size_t(c), FieldElement::make(f, 0));
    // first nonzero coordinate normalized to 1
    std::function<void(int, bool)> rec = [&](int i, bool seen) {
        if (i == c) {
            if (seen) out.push_back(a);
            return;
        }
        if (!seen) {
            a[i] = FieldElement::make(f, 0);
            rec(i + 1, false);
            a[i] = FieldElement::make(f, 1);
            rec(i + 1, true);
            a[i] = FieldElement::make(f, 0);
        } else {
            for (uint32_t v = 0; v < f.p; ++v) {
                a[i] = FieldElement::make(f, v);
                rec(i + 1, true);
            }
            a[i] = FieldElement::make(f, 0);
        }
    };
    rec(0, false);
    return out;
}

bool support_contains_point(const VarietyHandle& v, const std::vector<FieldElement>& a) {
    for (const Polynomial& g : v.ideal().gens())
        if (!g.evaluate(a).is_zero()) return false;
    return true;
}

} // namespace ksv
