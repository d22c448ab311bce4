// Graded free modules over a PolyRing, maps between them, and finitely
// presented subquotients: syzygies, annihilators, Hilbert series.
//
// Degree bookkeeping (upper convention): a map of degree-shift s has entry
// (i,j) homogeneous of weighted degree srcdeg[j] + s - tgtdeg[i], or zero.
#pragma once

#include <functional>

#include "ksv/hilbert.hpp"
#include "ksv/matrix.hpp"

namespace ksv {

struct FreeModule {
    RingPtr ring;
    std::vector<int> degs;

    size_t rank() const { return degs.size(); }
};

struct GradedMap {
    FreeModule src;
    FreeModule tgt;
    int shift = 0;
    PolyMatrix a; // tgt.rank() x src.rank()

    void check_shape() const;
    // Throws on an inhomogeneous entry.
    void check_homogeneous() const;
    bool is_zero() const;
    std::vector<Polynomial> column(size_t j) const;
};

GradedMap compose(const GradedMap& f, const GradedMap& g); // f after g

// Columns generating ker(phi), returned as a map into phi's source.
GradedMap kernel(const GradedMap& phi);

class PresentedModule {
  public:
    PresentedModule(FreeModule gens, PolyMatrix relations);

    const FreeModule& gens() const { return gens_; }
    const PolyMatrix& relations() const { return rels_; }
    const RingPtr& ring() const { return gens_.ring; }

    static PresentedModule free_module(const FreeModule& f);
    static PresentedModule quotient_ring(const HomogeneousIdeal& I); // S/I

    const HilbertSeries& hilbert() const;
    bool is_zero() const;
    long long dim_at(int d) const;

    HomogeneousIdeal annihilator() const;

    // Degrees of a degreewise-minimal generating set (dims of M / S^{>0} M).
    std::map<int, long long> minimal_generator_dims() const;
    int generator_degree_bound() const; // max degree carrying a minimal generator

    // M (x)_k N over the doubled ring; chi_i of the left factor goes to
    // y-variables, of the right to z-variables.
    static PresentedModule tensor_over_k(const PresentedModule& a, const PresentedModule& b,
                                         const RingPtr& doubled, const std::vector<int>& ymap,
                                         const std::vector<int>& zmap);

    // Brute-force dim_k of degree-d piece by per-degree linear algebra
    // (independent of the Groebner path; used as an oracle in tests).
    long long dim_at_bruteforce(int d) const;

  private:
    FreeModule gens_;
    PolyMatrix rels_;
    mutable std::optional<HilbertSeries> hilbert_;
    mutable std::optional<GroebnerBasis> rel_gb_;
    const GroebnerBasis& relation_basis() const;
};

// ker(out) / im(in); requires out . in = 0. Pass nullptr for a missing side.
PresentedModule subquotient_homology(const GradedMap* in, const GradedMap* out,
                                     const FreeModule& spot);

// dg module over S: a single free module with a square-zero endomorphism of
// upper degree +1; returns its homology as a presented module.
PresentedModule dg_homology(const FreeModule& f, const GradedMap& delta);

// Free resolution ... -> F_2 -> F_1 -> F_0 -> X -> 0 (maps d_1, d_2, ...).
std::vector<GradedMap> resolve(const PresentedModule& x, int max_steps);

// Graded Tor_i^S(X, Y) for 0 <= i <= maxlen via the tensor bicomplex of two
// finite free resolutions.
std::vector<PresentedModule> tor_modules(const PresentedModule& x, const PresentedModule& y,
                                         int maxlen);

} // namespace ksv
