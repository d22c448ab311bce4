// The contravariant BGG construction: S_M = S (x) M^dual with differential
// 1 (x) d + sum chi_i (x) e_i. Its homology is Ext_Lambda(M, k) as a graded
// S-module; supports are cut out by the annihilator.
#pragma once

#include "ksv/extalg.hpp"
#include "ksv/homology.hpp"
#include "ksv/varieties.hpp"
#include "ksv/window.hpp"

namespace ksv {

// S = k[chi_1..chi_c] with deg chi_i = |e_i| + 1.
RingPtr chi_ring_for(const ExteriorAlgebra& alg);

struct BggComplex {
    FreeModule free; // rank = dim M, generator degrees = homological degrees
    GradedMap delta; // square-zero endomorphism of upper degree +1
};

BggComplex bgg_complex(const DgLambdaModule& m);

struct ExtModule {
    PresentedModule module;
    int generator_degree_bound;
};

ExtModule ext_module(const DgLambdaModule& m);

// dim Ext^j in [jmin, jmax] through the Groebner pipeline.
std::map<int, long long> ext_hilbert_groebner(const DgLambdaModule& m, int jmin, int jmax);

enum class SupportMode { D, B };

VarietyHandle support(const DgLambdaModule& m, SupportMode mode);

// Rank-variety probe for a zero-differential module with all |e_i| = 1:
// true iff rank(sum a_i e_i) < dim/2, i.e. [a] lies in the support.
bool point_probe(const DgLambdaModule& m, const std::vector<FieldElement>& a);

// All points of P^{c-1}(F_p) in canonical coordinates (first nonzero = 1).
std::vector<std::vector<FieldElement>> projective_points(const Field& f, int c);

// Membership of [a] in V(ann Ext(M)): every annihilator generator vanishes.
bool support_contains_point(const VarietyHandle& v, const std::vector<FieldElement>& a);

} // namespace ksv
