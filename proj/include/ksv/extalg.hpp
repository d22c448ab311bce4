// The exterior algebra Lambda on odd-degree generators and finite-dimensional
// dg Lambda-modules: validation, duals through the antipode, Hopf-diagonal
// tensor products, and Hom into Lambda.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "ksv/matrix.hpp"
#include "ksv/poly.hpp"

namespace ksv {

struct ExteriorAlgebra {
    int c = 0;
    std::vector<int> gen_deg; // |e_i|, positive odd
    Field field;

    bool operator==(const ExteriorAlgebra&) const = default;

    size_t dim() const { return size_t(1) << c; } // basis: subsets of {1..c}
    int mask_degree(unsigned mask) const;
    // e_i * e_mask = sign * e_{mask | 1<<i}, zero if i in mask.
    // sign = (-1)^{number of set bits below i}.
    int mult_sign(int i, unsigned mask) const;
    int top_degree() const;
};

ExteriorAlgebra make_exterior(int c, Field field, std::vector<int> gen_deg = {});

struct DgLambdaModule {
    ExteriorAlgebra alg;
    std::vector<std::string> names;
    std::vector<int> deg;         // homological (lower) degree per basis vector
    Matrix d;                     // differential, degree -1
    std::vector<Matrix> act;      // action of e_i, degree +|e_i|

    size_t dim() const { return deg.size(); }
    int min_degree() const;
    int max_degree() const;
};

DgLambdaModule trivial_module(const ExteriorAlgebra& alg);           // k
DgLambdaModule lambda_as_module(const ExteriorAlgebra& alg);         // Lambda itself
// Lambda / (e_i Lambda) for c = size of algebra; basis = masks avoiding i.
DgLambdaModule cyclic_quotient(const ExteriorAlgebra& alg, int i);

struct Violation {
    std::string identity; // name of the failing identity
    std::string detail;
};

// All dg-module axioms by exact matrix arithmetic; nullopt means valid.
std::optional<Violation> validate(const DgLambdaModule& m);
void require_valid(const DgLambdaModule& m, const std::string& who);

DgLambdaModule dual(const DgLambdaModule& m);
DgLambdaModule tensor_k(const DgLambdaModule& m, const DgLambdaModule& n);
DgLambdaModule hom_into_lambda(const DgLambdaModule& m);
DgLambdaModule direct_sum(const DgLambdaModule& m, const DgLambdaModule& n);
DgLambdaModule shift(const DgLambdaModule& m, int by);
// m plus a contractible two-vector summand x -> y in degrees (d, d-1).
DgLambdaModule add_contractible(const DgLambdaModule& m, int d);

// Graded dimensions and Euler characteristic.
std::map<int, long long> graded_dims(const DgLambdaModule& m);
long long euler_char(const DgLambdaModule& m);
std::map<int, long long> homology_dims(const DgLambdaModule& m);

// Homology as a dg module with zero differential and the induced actions.
DgLambdaModule homology_module(const DgLambdaModule& m);

} // namespace ksv
