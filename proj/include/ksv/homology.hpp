// Finite complexes of free modules and their reduction: unit entries of the
// differential are cancelled (Gaussian elimination of a contractible summand)
// before any Groebner work happens; homology is unchanged.
#pragma once

#include "ksv/freemod.hpp"

namespace ksv {

struct FreeComplex {
    RingPtr ring;
    std::vector<FreeModule> spots; // C_b .. C_t, homological index = base + i
    std::vector<GradedMap> d;      // d[i] : spots[i+1] -> spots[i]
    int base = 0;

    void check() const; // shapes, homogeneity, d.d = 0
    FreeModule& spot(int n) { return spots[size_t(n - base)]; }
    const FreeModule& spot(int n) const { return spots[size_t(n - base)]; }
    bool has_spot(int n) const { return n >= base && n < base + int(spots.size()); }
};

// Cancel unit entries across all differentials.
void minimize_complex(FreeComplex& c);

// Homology at homological index n, as a presented module.
PresentedModule homology_at(const FreeComplex& c, int n);

// Minimize a square-zero endomorphism complex (single free module); used for
// the dg S-modules coming out of the BGG construction.
void minimize_endo(FreeModule& f, GradedMap& delta);

} // namespace ksv
