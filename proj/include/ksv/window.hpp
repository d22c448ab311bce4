// Truncated universal (semifree) resolutions u_{<=D} M = Lambda (x) Gamma (x) M,
// derived tensor windows over Lambda, and soft truncations. Gamma is the
// divided-power dual of S, materialized only up to degree D.
#pragma once

#include "ksv/extalg.hpp"

namespace ksv {

struct UniversalWindow {
    DgLambdaModule module; // u_{<=D} M, free over Lambda on the (gamma, m) basis
    int D = 0;
    // basis bookkeeping: (lambda mask, gamma exponent vector, index into M)
    std::vector<std::tuple<unsigned, Exps, size_t>> basis;
};

UniversalWindow universal_window(const DgLambdaModule& m, int D);

// Divided-power monomials of weighted degree (sum beta_i (|e_i|+1)) <= D.
std::vector<Exps> gamma_monomials(const ExteriorAlgebra& alg, int D);

struct DerivedTensorWindow {
    DgLambdaModule truncated;            // tau_{<=u} (u_{<=D} M (x)_Lambda N)
    std::map<int, long long> tor_dims;   // dim_k Tor_i for 0 <= i <= u
    int D = 0;
    int u = 0;
};

// Sharp sufficient bound for the window to be exact in degrees <= u.
int derived_tensor_required_window(const DgLambdaModule& m, const DgLambdaModule& n, int u);

DerivedTensorWindow derived_tensor_window(const DgLambdaModule& m, const DgLambdaModule& n,
                                          int D, int u);
// Convenience: picks D automatically.
DerivedTensorWindow derived_tensor_window(const DgLambdaModule& m, const DgLambdaModule& n,
                                          int u);

// Quotient-style soft truncation: identity in degrees < u, X_u / d(X_{u+1})
// in degree u, zero above. H_i is preserved for i <= u.
DgLambdaModule soft_truncate(const DgLambdaModule& x, int u);

// dim_k Ext^j_Lambda(M, k) for j in [jmin, jmax], by degreewise ranks on the
// reduced window complex Gamma_{<=D} (x) M. Shares no code with the Groebner
// pipeline.
std::map<int, long long> ext_hilbert_linalg(const DgLambdaModule& m, int jmin, int jmax);

} // namespace ksv
