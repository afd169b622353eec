#pragma once

#include "kzsolve/solution_builder.hpp"

namespace kz {

struct BasePointConfig {
    std::vector<Rational> points;

    static BasePointConfig default_for(int n) {
        BasePointConfig b;
        for (int j = 0; j < n; ++j) b.points.emplace_back(j);
        return b;
    }
    void validate(int n) const;  // throws DegenerateBasePointsError
};

// Prop. 2.1 index shift: from a solution of equation j produce a solution of
// equation j+1 as P_{j,j+1} * W with variables z_j, z_{j+1} exchanged.
RFMatrix swap_solution(const RFMatrix& w, int n, int j, const Rational& rho, bool verify = true);

struct AssembledSolution {
    int n = 0;
    long rho = 0;
    BasePointConfig base;
    std::vector<RFMatrix> factors;  // stage i solves equation i+1 (0-based index)
    RFMatrix product;
};

// Theorem 3.1 product of stage solutions, each stage normalized to the
// identity at its base coordinate. Stages are verified while assembling.
AssembledSolution assemble_product(int n, long rho, const BasePointConfig& base,
                                   bool verify_stages = true);

// Symbolic residual of every equation plus a determinant check; a fast
// numeric spot check runs first to fail fast.
Report verify_full_system(const RFMatrix& w, int n, const Rational& rho);

// Formal power-series integration of equation `eq` around an ordinary point,
// initial value identity: returns matrix Taylor coefficients 0..order.
std::vector<RatMatrix> taylor_oracle(int n, const Rational& rho, int eq,
                                     const std::vector<Rational>& center, int order);

} // namespace kz
