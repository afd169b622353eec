#pragma once

#include "kzsolve/varchenko.hpp"

namespace kz {

struct GaussParams {
    Rational alpha, beta, gamma;
};

// (alpha, beta, gamma) = (-rho, -3 rho, 1 - 2 rho).
GaussParams gauss_params(long rho);

// y(1-y) psi'' + [gamma - (alpha+beta+1) y] psi' - alpha beta psi for a
// univariate rational psi; zero iff psi solves the hypergeometric equation.
RatFunc hypergeom_ode_residual(const RatFunc& psi, const GaussParams& p);

struct PhiPair {
    RatFunc phi1, phi2;  // univariate in y
};

// Residuals of the first-order system
//   phi1' = (3 rho / y) phi2,
//   phi2' = rho (2 phi2/y + 2 phi2/(1+y) - phi1/(1+y)).
std::pair<RatFunc, RatFunc> phi_system_residual(const PhiPair& pair, long rho);

// Terminating series F(alpha, beta; gamma; y) truncated at degree deg;
// requires (gamma)_k != 0 for k <= deg (throws Error otherwise).
RatFunc terminating_hypergeom_series(const GaussParams& p, long deg);

// The n = 3 reduction: W1(u1) = u1^(rho*Omega_1), W2(u2) from the constructed
// rational KZ solution transported to u-coordinates, the phi pairs extracted
// through the w1/w2 decomposition, and the symmetric column.
struct N3Solution {
    long rho = 0;
    RFMatrix w1;                           // u-ring (3 variables)
    RFMatrix w2;
    std::vector<PhiPair> phi_pairs;        // all extracted pairs (may include zero pairs)
    std::vector<RatFunc> psi;              // two independent solutions of the Gauss equation
    std::vector<RatFunc> symmetric_column; // Y3(u2) = u2^rho (1+u2)^rho [1,1,1]^t
};
N3Solution build_n3_solution(long rho);

// Produces and certifies two independent rational solutions of the Gauss
// equation with the KZ-derived parameters; reports the terminating-series
// route where applicable and the classical-series skip when gamma is a
// non-positive integer.
Report rationality_certificate(long rho);

} // namespace kz
