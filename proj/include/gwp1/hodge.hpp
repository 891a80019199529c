#pragma once

#include <map>
#include <vector>

#include "gwp1/fock.hpp"

namespace gwp1 {

// A(a, b) with a = z and b = u z, z living in `slot`. No u^{-1} prefactor.
OpPtr hodge_A(int slot, const Prec& prec);
// A(m, u m) for a positive integer m.
OpPtr hodge_A_integer(int m, const Prec& prec);

// Disconnected u^{-n} <A(z_1, u z_1) ... A(z_n, u z_n)> with the z-variables in
// the given slots, left to right. The z-variables are exact in u; the caller's
// prec bounds each z slot and sets the expansion domain |z_1| < |z_2| < ...
Series hodge_vev(const std::vector<int>& slots, const Prec& prec);

// The n-point function in z1..zn (n <= 3), connected or not, restricted to the
// truncation window. Throws if the window cannot be filled.
Series hodge_npoint(int n, bool connected, const Truncation& tr);

// Hodge integral of psi_1^{a_1} ... psi_n^{a_n} lambda_j, with j fixed by the
// dimension constraint; read off the connected n-point function.
Rational hodge_integral(int g, const std::vector<int>& psi_powers);

// Family of n-point functions indexed by bitmask of the variables involved.
using NPointFamily = std::map<unsigned, Series>;
NPointFamily to_disconnected(const NPointFamily& connected, int n);
NPointFamily to_connected(const NPointFamily& disconnected, int n);

// Number of simple branch points for genus g covers with profile mu.
int branch_points(int g, const Partition& mu);
// Hurwitz numbers through the infinite wedge. Negative b gives 0 and sets
// *no_covers when the pointer is given.
Rational hurwitz_character(int g, const Partition& mu, bool* no_covers = nullptr);
// Brute-force count in the symmetric group (|mu| <= 6, b <= 8).
Rational hurwitz_oracle(int g, const Partition& mu);
// H_g(mu_1, ..., mu_l) from the Hurwitz number by inverting ELSV.
Rational elsv_hodge(int g, const Partition& mu);

// u^{-l} <prod A(mu_i, u mu_i)> on the u-window [u_lo, u_hi].
Series hodge_at_integers(const Partition& mu, int u_lo, int u_hi);
// sum_g u^{2g-2} H_g(mu) on the same window, from characters.
Series hodge_at_integers_character(const Partition& mu, int u_lo, int u_hi);

// Connected two-point function from the finite k-sum; z1, z2 in slots Z1, Z2.
Series two_point_closed_form(const Truncation& tr);
// The same function through the two Gauss hypergeometric series.
Series two_point_hypergeometric(const Truncation& tr);

}  // namespace gwp1
