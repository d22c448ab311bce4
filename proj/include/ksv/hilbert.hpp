// Hilbert series of graded quotients and presented modules: an integer
// Laurent numerator over prod_i (1 - t^{w_i}). Proj-dimension is read off the
// pole order at t = 1.
#pragma once

#include <map>

#include "ksv/ideal.hpp"

namespace ksv {

struct HilbertSeries {
    std::map<int, long long> num; // Laurent numerator, degree -> coefficient
    std::vector<int> weights;     // denominator is prod (1 - t^w)

    bool is_zero() const { return num.empty(); }
    // dim_k of the graded piece in each degree of [lo, hi]
    std::vector<long long> dims(int lo, int hi) const;
    long long dim_at(int d) const;
    int pole_order() const; // order of pole at t = 1 (0 for finite length)

    static constexpr int DIM_ZERO = INT_MIN; // Proj-dimension of the zero module
    int proj_dim() const;                    // pole_order - 1, or DIM_ZERO

    bool finite_length() const { return !is_zero() && pole_order() == 0; }
    // For finite-length modules: the (Laurent-)polynomial series itself.
    std::map<int, long long> polynomial_part() const;
    long long total_dim() const; // finite length only
};

// Numerator of S/(monomial ideal) with the ring's weights.
std::map<int, long long> monomial_quotient_numerator(std::vector<Exps> gens,
                                                     const std::vector<int>& weights);

// Hilbert series of S/I.
HilbertSeries hilbert_of_quotient(const HomogeneousIdeal& I);

// Brute-force oracle: dim_k (S/I)_d by counting standard monomials of
// weighted degree d (monomials outside the lead-term ideal).
long long quotient_dim_bruteforce(const HomogeneousIdeal& I, int d);

} // namespace ksv
