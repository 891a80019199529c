#pragma once

#include "gwp1/series.hpp"

namespace gwp1 {

// Univariate Laurent series sum_i c[i] x^(val + i), known through x^top().
struct UniSeries {
  int val = 0;
  std::vector<Rational> c;
  int top() const { return val + static_cast<int>(c.size()) - 1; }
  Rational at(int n) const {
    int i = n - val;
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rational(0);
  }
};

// Tables through x^order. varsigma(x) = e^{x/2} - e^{-x/2}; S(x) = varsigma(x)/x.
UniSeries uni_varsigma(int order);
UniSeries uni_inv_varsigma(int order);  // starts at x^-1
UniSeries uni_S(int order);
UniSeries uni_log_S(int order);
UniSeries uni_exp(int order);

enum class Uni { Varsigma, InvVarsigma, S, LogS, Exp };
UniSeries uni_table(Uni f, int order);

// f(c * mono) as a series known on the box p. mono must be nonnegative with a
// positive exponent in some slot truncated by p, so only finitely many terms
// are retained.
Series substitute(Uni f, const Coef& c, const Key& mono, const Prec& p);

// Single-variable conveniences, truncated at slot^order.
Series varsigma_series(int slot, int order);
Series inv_varsigma_series(int slot, int order);

// S(c * mono)^a = exp(a * log S(c * mono)).
Series s_power(const Series& a, const Coef& c, const Key& mono, const Prec& p);
Series s_power(int slot, const Series& a, int order);

// (a+1)_k for k >= 0 and its reciprocal form for k < 0.
Coef pochhammer(const Coef& a, int k);
// 1/(a+1)_k for a series a; k > 0 needs a+1, ..., a+k invertible.
Series inv_pochhammer(const Series& a, int k);
Series pochhammer(const Series& a, int k);

// sum_k nu(nu-1)...(nu-k+1) / ((mu+1)...(mu+k)) * (-x)^k; x must have zero
// constant term and positive degree in truncated slots.
Series hypergeometric_series(const Series& nu, const Series& mu, const Series& x);

}  // namespace gwp1
