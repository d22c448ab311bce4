// Ideals in a weighted polynomial ring. The public type insists on homogeneous
// generators; the Buchberger plumbing below it does not care, which is what
// the Rabinowitsch radical-membership test needs.
#pragma once

#include "ksv/groebner.hpp"

namespace ksv {

// Reduced Groebner basis of an ideal (monic, tail-irreducible, no lead
// divides another; sorted by ascending lead). Generators need not be
// homogeneous here.
std::vector<Polynomial> groebner_ideal(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord, const RingPtr& ring);

Polynomial normal_form_poly(const Polynomial& f, const std::vector<Polynomial>& gb,
                            const MonomialOrder& ord, const RingPtr& ring);

class HomogeneousIdeal {
  public:
    HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    // Reduced basis for grevlex; computed once, cached.
    const std::vector<Polynomial>& groebner() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool is_unit() const;
    bool is_zero_ideal() const;

    std::vector<std::string> printed_gens() const; // canonical: reduced GB strings

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::optional<std::vector<Polynomial>> gb_;
};

HomogeneousIdeal ideal_sum(const HomogeneousIdeal& a, const HomogeneousIdeal& b);
HomogeneousIdeal ideal_product(const HomogeneousIdeal& a, const HomogeneousIdeal& b);
HomogeneousIdeal ideal_intersect(const HomogeneousIdeal& a, const HomogeneousIdeal& b);

// I cap k[kept variables]: returns the ideal in the smaller ring together
// with that ring. `block` lists the variable indices to eliminate.
std::pair<RingPtr, std::vector<Polynomial>> eliminate(const HomogeneousIdeal& I,
                                                      const std::vector<int>& block);

// f in sqrt(I), decided by 1 in I + (1 - t f) in one extra variable.
bool radical_membership(const Polynomial& f, const HomogeneousIdeal& I);

// Every generator of J lies in sqrt(I), i.e. V(I) contained in V(J).
bool radical_contains_all(const HomogeneousIdeal& I, const std::vector<Polynomial>& js);

} // namespace ksv
