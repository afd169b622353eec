#pragma once

#include "kzsolve/hypergeom.hpp"
#include "kzsolve/serialize.hpp"

namespace kz {

enum class Tier { quick, full };

struct CriterionResult {
    int index = 0;
    std::string name;
    Report report;
    double seconds = 0.0;
};

// The acceptance suite: identity- and property-based checks, exact.
Report criterion_rationality(Tier tier);    // construct + verify over (n, rho) grid
Report criterion_consistency(Tier tier);    // flatness and transposition identities
Report criterion_pole_degree(Tier tier);    // pole orders and polynomial degree law
Report criterion_omega(Tier tier);          // Omega matrices, spectra, trace identity
Report criterion_h_matrices(Tier tier);     // H-matrix formulas and cross-validation
Report criterion_asymptotics(Tier tier);    // leading exponents at u -> 0
Report criterion_hypergeom(Tier tier);      // Gauss-equation rationality certificates
Report criterion_taylor_oracle(Tier tier);  // independent series oracle comparison

std::vector<CriterionResult> run_acceptance(Tier tier);

} // namespace kz
