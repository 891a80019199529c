#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwp1/gw.hpp"

namespace gwp1 {

// One checked identity instance. Long series are summarized by term count;
// a failing comparison records the first coefficient that differs.
struct CheckEntry {
  std::string identity;
  std::string location;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::vector<CheckEntry> entries;

  bool ok() const;
  size_t failures() const;
  void add(CheckEntry e) { entries.push_back(std::move(e)); }
  void merge(const Report& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }
  // Exact comparison of a and b on the box `on`; both must be known there.
  void compare(const std::string& identity, const std::string& location, const Series& actual, const Series& expected,
               const Prec& on, const SlotNames& names = kDefaultNames);
};

// Formal descendant variables used by the tau-function checks.
// x_0, x_1 live in Z1, Z2; x*_0, x*_1 in W1, W2; the ray parameter in Z3.
inline constexpr int X0 = Z1, X1 = Z2, XS0 = W1, XS1 = W2, EPS = Z3;
inline constexpr uint8_t kXMask = (1u << X0) | (1u << X1) | (1u << XS0) | (1u << XS1);
extern const SlotNames kTodaNames;

// [A_k, A_l] = (-1)^l delta_{k+l,1} for the coefficients A_k = [z^k] A(z, uz),
// on all basis states of energy <= energy_cap (all charges that fit).
Report check_commutator_A(int k_lo, int k_hi, int energy_cap, int z_order);

// [z_0^1] G_d(z_0, z, w) = (d - 1/24 + t sum z_i) G_d(z, w), with n + 1 <= 3.
Report check_divisor(int d, int n, int m, const Truncation& tr);

// String equation for tau_0(1) insertions: brackets with a copies of tau_0(1)
// (expanded in the fixed-point basis) against coefficient extraction from
// e^{sum z + sum w} G_d. `ins` holds Zero/Infinity descendants only.
Report check_string(int g, int d, const InsertionList& ins);

// tau(x, x*) with x_0, x_1, x*_0, x*_1 formal and total degree <= x_degree.
// charge n evaluates <T^{-n} M T^n> with q^H reduced to q^{|lambda|}, which
// drops the factor q^{n^2/2}/u^{n^2}.
Series tau_formal(int q_max, int x_degree, int charge = 0);
// log tau with the same truncation.
Series free_energy(int q_max, int x_degree);

// 2-Toda equation on F = log tau (x-degree <= budget, q <= q_max, u <= u_hi),
// its tau form and the derivative rule d/dx_0 tau = <(alpha_1 - 1/24) M>,
// the genus-0 small-phase-space specialization and classical part, and the
// degree-1 bracket rebuilt from degree-0 data.
Report check_toda(int q_max, int budget, int u_hi);

// Translation: log <T^{-n} M T^n> (reduced) = e^{n u d} F for n = +-1.
Report check_translation(int q_max, int budget, int u_hi);

// Pluecker identity for M along x = r * eps with rational r = (x0, x1, x*0, x*1),
// exact through eps^eps_order and q^q_max.
Report check_pluecker(const std::vector<std::array<Rational, 4>>& samples, int q_max, int eps_order);

// T^{-n} H T^n = H + nC + n^2/2 and T^{-n} A(z) T^n = e^{n u z} A(z) (same for
// A*), n = +-1, on states of energy <= energy_cap with |charge| <= 2.
Report check_T_conjugation(int energy_cap, int z_order);

// c_{k,l}(u,t) for 0 <= k <= k_max and 1 <= l <= k+1, as u-monomials.
std::map<std::pair<int, int>, Series> dressing_coefficients(int k_max);
Report check_dressing_coefficients(int k_max);

// Finite block of a matrix on the basis e_s, s = i + 1/2 for i in [lo, hi].
// Entries (i, j) are trusted for i <= row_hi and j >= col_lo.
struct HalfInfiniteMatrix {
  int lo = 0, hi = -1;
  int row_hi = -1, col_lo = 0;
  int lower = 0;  // entries vanish unless j - i <= lower
  std::map<std::pair<int, int>, Series> entries;

  Series at(int i, int j) const;
  HalfInfiniteMatrix operator*(const HalfInfiniteMatrix& o) const;
  int trusted_size() const { return std::max(0, row_hi - col_lo + 1); }
};

// gl(infinity) image of A_k = [z^{k+1}] A(z) on indices [-E-1, E-1]
// (half-integers -E-1/2 .. E-1/2), constant term dropped.
HalfInfiniteMatrix bA_matrix(int k, int E);
// A_k = sum_l c_{k,l} A_0^l on the trusted block, for k <= k_max. Throws
// invalid_argument when the window leaves no trusted entries.
Report check_dressing_identity(int k_max, int E);

}  // namespace gwp1
