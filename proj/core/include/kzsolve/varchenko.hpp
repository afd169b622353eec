#pragma once

#include "kzsolve/kz_assembly.hpp"

namespace kz {

// Change of variables u1 = z1 - z2, u_k = (z_k - z_{k+1})/(z_{k-1} - z_k)
// for 2 <= k <= n-1, u_n = z1 + ... + zn, and the matrices S, S^-1, T, C
// that linearize it.
struct CoordinateMaps {
    int n = 0;
    RatMatrix s, s_inv, t, c;
};
CoordinateMaps coordinate_maps(int n);

std::vector<Rational> u_from_z(const std::vector<Rational>& z);  // throws DegeneratePointError
std::vector<Rational> z_from_u(const std::vector<Rational>& u);

// z_k as polynomials in u_1..u_n (the triangular substitution solved).
std::vector<MultiPoly> z_polys_in_u(int n);
// Transport a matrix over the z-ring into the u-ring by substitution.
RFMatrix transport_to_u(const RFMatrix& w, int n);

// Coefficient matrices of the system in u-variables. H_1 = Omega_1/u_1,
// H_n = 0, and for 2 <= k <= n-1 the explicit alpha-formula built from
// v_p = u_2 ... u_p.
struct HMatrix {
    int n = 0, k = 0;
    RFMatrix matrix;  // over the u-ring
};
HMatrix h_matrix(int n, int k);
// Chain-rule route H_j = sum_k dz_k/du_j A_k(z(u)) for cross-validation.
RFMatrix h_matrix_chain_rule(int n, int j);

// Verifies H_1 * u_1 = Omega_1, H_n = 0, and that for 2 <= s <= n-1 the
// difference H_s - Omega_s/u_s - sum_{j>s} P_{j,s-1} is regular at u = 0
// and vanishes there.
Report h_asymptotic_check(int n, int s);

struct OmegaMatrix {
    int n = 0, s = 0;
    RatMatrix matrix;
    Rational scalar_block;  // N_{s-1}
    Rational diagonal;      // N_s
};
OmegaMatrix omega_matrix(int n, int s);  // throws BlockFormMismatchError
RatMatrix p_sum(int n, int r);           // P_r = sum_{j>r} P_{j,r}

struct OmegaEigenpairs {
    int n = 0, s = 0;
    std::vector<std::vector<Rational>> vectors;  // v_1..v_n
    std::vector<Rational> eigenvalues;           // by direct multiplication
};
OmegaEigenpairs omega_eigensystem(int n, int s);  // throws NotEigenvectorError
std::vector<std::vector<Rational>> varchenko_vectors(int n);

// rho * lambda_{k,s} table, row k = 1..n, column s = 1..n-1.
std::vector<std::vector<Rational>> asymptotic_exponents(int n, const Rational& rho);

// Checks that an aligned basis of solution columns scales as
// prod_s u_s^(rho*lambda_{k,s}) (v_k + o(1)) near u = 0. Implemented for
// n = 3 (and trivially for rho = 0); larger n reports a skip.
Report check_leading_asymptotics(const AssembledSolution& w);

// u1^(rho*Omega_1) over the u-ring, exact through the spectral decomposition
// (the eigenvalues are integers).
RFMatrix u1_power_of_omega1(int n, long rho);

} // namespace kz
