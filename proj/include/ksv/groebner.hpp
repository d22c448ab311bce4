// Buchberger engine over free modules (an ideal is the rank-1 case).
// Position-over-term orders with position priorities give module elimination,
// which is how kernels/syzygies are computed.
#pragma once

#include <optional>

#include "ksv/poly.hpp"

namespace ksv {

struct MMono {
    int pos = 0;
    Exps m;
    bool operator==(const MMono&) const = default;
};

// Position-over-term: positions with higher priority dominate; ties broken by
// lower position index, then by the ring order on the monomial part.
struct ModuleOrder {
    MonomialOrder ring_order;
    std::vector<int> pos_priority;

    static ModuleOrder pot(MonomialOrder ring_order, size_t rank);
    // First `lead_rank` positions dominate the rest (module elimination).
    static ModuleOrder pot_elim(MonomialOrder ring_order, size_t lead_rank, size_t rank);

    int compare(const MMono& a, const MMono& b) const;
};

struct Term {
    MMono mono;
    FieldElement coef;
};

// A module element: terms sorted strictly descending under the active order.
using Vec = std::vector<Term>;

using PolyMatrix = std::vector<std::vector<Polynomial>>; // [row][col]

Vec vec_from_column(const std::vector<Polynomial>& col);
std::vector<Polynomial> vec_to_column(const Vec& v, const RingPtr& ring, size_t rank);
void vec_sort(Vec& v, const ModuleOrder& ord);
Vec vec_add_scaled(const Vec& f, const Vec& g, const Exps& mono, const FieldElement& c,
                   const ModuleOrder& ord);
bool vec_is_zero(const Vec& v);

struct DivisionResult {
    Vec remainder;
    std::vector<std::vector<std::pair<Exps, FieldElement>>> cofactors; // per divisor
};

// Full normal form: every term of the remainder is irreducible.
DivisionResult divide(const Vec& f, const std::vector<Vec>& basis, const ModuleOrder& ord,
                      bool want_cofactors);

struct GroebnerOptions {
    bool rank_one = false;     // enables the coprime-lead (product) criterion
    bool track_exprs = false;  // carry expressions of basis elements over inputs
};

struct GroebnerBasis {
    std::vector<Vec> elems;                          // reduced, monic, lead-ascending
    std::vector<std::vector<Polynomial>> exprs;      // elems[i] = sum_j exprs[i][j] * input[j]
    ModuleOrder order;
    RingPtr ring;
};

GroebnerBasis buchberger(const std::vector<Vec>& gens, const ModuleOrder& ord,
                         const RingPtr& ring, const GroebnerOptions& opts = {});

Vec normal_form(const Vec& f, const GroebnerBasis& gb);

// Cofactors of v over the original generating set behind `gb` (requires
// track_exprs); nullopt if v is not in the module.
std::optional<std::vector<Polynomial>> express_in(const Vec& v, const GroebnerBasis& gb,
                                                  size_t n_inputs);

// Columns spanning ker(matrix), where matrix maps S^{cols} -> S^{rows}.
// Output columns have `cols` entries each.
std::vector<std::vector<Polynomial>> kernel_columns(const PolyMatrix& matrix,
                                                    const RingPtr& ring);

} // namespace ksv
