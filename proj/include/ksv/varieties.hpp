// Cone-level geometry in Proj S: joins through the Hopf diagonal, preimages
// along Delta, and radical-level comparison. A handle distinguishes the empty
// cone (unit ideal) from the cone point (irrelevant radical).
#pragma once

#include "ksv/hilbert.hpp"

namespace ksv {

enum class VarietyClass { Unit, ConePoint, Positive };

std::string variety_class_name(VarietyClass c);

class VarietyHandle {
  public:
    static VarietyHandle of(HomogeneousIdeal ideal);

    const RingPtr& ring() const { return ideal_.ring(); }
    const HomogeneousIdeal& ideal() const { return ideal_; }
    VarietyClass cls() const { return cls_; }
    // Proj-dimension: -1 for the cone point, HilbertSeries::DIM_ZERO for unit.
    int proj_dim() const { return dim_; }

    std::vector<std::string> printed_gens() const { return ideal_.printed_gens(); }

  private:
    VarietyHandle(HomogeneousIdeal i, VarietyClass c, int d)
        : ideal_(std::move(i)), cls_(c), dim_(d) {}
    HomogeneousIdeal ideal_;
    VarietyClass cls_;
    int dim_;
};

// The doubled ring S^e = k[y1..yc, z1..zc] matching S = k[chi1..chic].
RingPtr doubled_ring(const RingPtr& S);

// Join(U, V) as the elimination ideal of I(y) + J(z) + (chi - y - z).
VarietyHandle join(const VarietyHandle& u, const VarietyHandle& v);

// Delta^{-1}(K) for K in the doubled ring; result lives in S.
HomogeneousIdeal delta_preimage(const HomogeneousIdeal& K, const RingPtr& S);

struct CompareResult {
    bool u_in_v = false; // U subset V as closed sets
    bool v_in_u = false;
    bool equal() const { return u_in_v && v_in_u; }
    std::string verdict() const;
};

CompareResult compare(const VarietyHandle& u, const VarietyHandle& v);

// V(I) subset V(J) as closed sets, i.e. every generator of J is in sqrt(I)...
// note the inclusion reversal: the SET of I is contained in the set of J.
bool variety_subset(const HomogeneousIdeal& I, const HomogeneousIdeal& J);
bool same_variety(const HomogeneousIdeal& I, const HomogeneousIdeal& J);

} // namespace ksv
