#pragma once

#include "kzsolve/matrix.hpp"
#include "kzsolve/report.hpp"

namespace kz {

// Natural representation of S_n: the transposition (i;j) acts on n-vectors
// by exchanging coordinates i and j. Indices are 1-based.
struct TranspositionMatrix {
    int n, i, j;
    RatMatrix matrix;
};

TranspositionMatrix perm_matrix(int n, int i, int j);  // throws InvalidIndexError
RatMatrix perm(int n, int i, int j);                   // bare matrix

// Apply P(1,k) to a vector in place of building the matrix.
template <class F>
std::vector<F> swap_coords(std::vector<F> v, int i, int j) {
    std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(j - 1)]);
    return v;
}

// KZ coefficient A_j(z) = sum_{k != j} P_{j,k} / (z_j - z_k), an n x n matrix
// of rational functions in z_1..z_n.
struct KZCoefficient {
    int n, j;
    RFMatrix matrix;
};

KZCoefficient kz_coefficient(int n, int j);
RFMatrix kz_coefficient_matrix(int n, int j);

// P_{i,j} = P_{j,i}; commutation [P_{i,j}+P_{j,k}, P_{i,k}] = 0 and
// [P_{i,j}, P_{k,l}] = 0 for distinct indices; braid conjugation
// P_{j,j+1} P_{j,i} P_{j,j+1} = P_{j+1,i}; involution P^2 = I.
Report check_transposition_relations(int n);

// Zero-curvature identity rho*(dA_i/dz_j - dA_j/dz_i) + rho^2*[A_i, A_j] = 0
// for every pair i < j, checked symbolically.
Report check_consistency(int n, const Rational& rho);

} // namespace kz
