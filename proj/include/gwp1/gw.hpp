#pragma once

#include <vector>

#include "gwp1/hodge.hpp"

namespace gwp1 {

// Variables: z_i lives in slot Z1 + i, w_j in slot W1 + j. Truncation orders
// are looked up by slot (z_orders[slot - Z1]).
int order_for(const Truncation& tr, int slot);
// Truncation with the same order for all six z/w slots.
Truncation uniform_truncation(int q_max, int u_lo, int u_hi, int order);

// A(z) = u^{-1} A(tz, uz) and A*(w) = u^{-1} A(-tw, uw)^*, exact in u,
// truncated at slot^order.
OpPtr bA(int slot, int order);
OpPtr bA_star(int slot, int order);
// Coefficients of z^{k+1}.
OpPtr bA_coefficient(int k);
OpPtr bA_star_coefficient(int k);

// u^{-d-n} <prod A(t z_i, u z_i) e^{alpha_1} e^{(u/t) F2} prod alpha_{-mu_i}>,
// known at least through u^{u_hi}.
Series j_function(const std::vector<int>& slots, const std::vector<int>& orders, const Partition& mu, int u_hi);
// Same function from t^{-d} u^{-n} prod(mu^mu/mu!) <prod A(tz, uz) prod A(mu_i, (u/t) mu_i)>.
Series j_function_direct(const std::vector<int>& slots, const std::vector<int>& orders, const Partition& mu, int u_hi);

// Disconnected n+m point function of degree d, by the partition sum over
// fixed-point data and by the operator formula. Both cut to the window.
Series g_localization(int n, int m, int d, const Truncation& tr);
Series g_operator(int n, int m, int d, const Truncation& tr);
// All degrees q^0..q^{q_max} at once through (q/u^2)^H.
Series g_all_degrees(int n, int m, const Truncation& tr);
// Connected functions for every subset of the n+m variables (bits 0..n-1 are
// z, bits n..n+m-1 are w), all degrees; bit set 0 holds the 0-point function.
NPointFamily g_connected_family(int n, int m, const Truncation& tr);
// t^{-n} H(tz, u/t): the degree zero function from Hodge integrals.
Series degree_zero_from_hodge(int n, const Truncation& tr);

// Descendant insertions. Zero/Infinity are the fixed-point classes; One and
// Hyperplane the unit and the hyperplane class (Zero = t One + Hyperplane,
// Infinity = Hyperplane).
enum class Cls { Zero, Infinity, One, Hyperplane };
struct Insertion {
  Cls cls;
  int k;
  auto operator<=>(const Insertion&) const = default;
};
using InsertionList = std::vector<Insertion>;

// Multilinear rewrite of a product of insertions in the other basis:
// {One, Hyperplane} -> {Zero, Infinity} and back. Mixed lists are rejected.
std::vector<std::pair<Coef, InsertionList>> change_basis(const InsertionList& ins);

// sum_{g,d} u^{2g-2} q^d <prod tau_k(..)>_{g,d} for d <= q_max, exact in u.
// Disconnected includes the 0-point factor e^{q/u^2}.
Series tau_disconnected(const InsertionList& ins, int q_max);
Series tau_connected(const InsertionList& ins, int q_max);
// Every coefficient is a polynomial in t.
bool is_t_polynomial(const Series& s);

// u -> 1 (needs u exact) and t -> 0 (throws on a pole).
Series at_u_one(const Series& s);
Series at_t_zero(const Series& s);

// Non-equivariant stationary theory at u = 1.
// (1/d!^2) <alpha_1^d prod E_0(z_i) alpha_{-1}^d>
Series stationary_by_degree(int n, int d, int order);
// <e^{alpha_1} q^H prod E_0(z_i) e^{alpha_{-1}}> up to q^{q_max}
Series stationary_all_degrees(int n, int q_max, int order);
// t -> 0, u = 1 limit of the equivariant operator route in degree d.
Series stationary_limit(int n, int d, int order);

}  // namespace gwp1
