#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gwp1 {

using Rational = mpq_class;

// a/b in lowest terms; mpq_class(a, b) alone does not reduce.
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Dense univariate polynomial in t over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

namespace poly {
void trim(Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Poly shift(const Poly& a, int k);  // multiply by t^k, k >= 0
int valuation(const Poly& a);      // lowest nonzero degree, -1 for zero
int degree(const Poly& a);         // -1 for zero
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
Rational eval(const Poly& a, const Rational& t);
std::string to_string(const Poly& p);  // integer-coefficient rendering expected by caller
}  // namespace poly

// Exact element of Q(t). Stored as num / (t^shift * rest) with rest monic,
// rest(0) != 0 and the fraction fully reduced, so equality is structural.
class Coef {
 public:
  Coef() = default;
  Coef(long v);  // NOLINT(google-explicit-constructor)
  Coef(const Rational& v);  // NOLINT(google-explicit-constructor)
  static Coef from_polys(Poly num, Poly den);
  static Coef t_power(int k);  // t^k for any integer k

  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return shift_ <= 0 && rest_.size() == 1; }
  bool is_laurent() const { return rest_.size() == 1; }
  bool is_constant() const;
  // Constant value; requires is_constant().
  Rational constant() const;

  Poly numerator() const { return num_; }
  Poly denominator() const;
  // Lowest power of t in the Laurent expansion at t = 0 (requires is_laurent).
  int t_valuation() const;

  Coef operator-() const;
  Coef& operator+=(const Coef& o);
  Coef& operator-=(const Coef& o);
  Coef& operator*=(const Coef& o);
  Coef& operator/=(const Coef& o);
  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(Coef a, const Coef& b) { return a *= b; }
  friend Coef operator/(Coef a, const Coef& b) { return a /= b; }
  bool operator==(const Coef& o) const;
  bool operator!=(const Coef& o) const { return !(*this == o); }

  Coef scaled(const Rational& c) const;
  // Substitute t -> -t.
  Coef negate_t() const;
  // Value at t = 0; throws if there is a pole at 0.
  Rational at_zero() const;
  // Value at rational t; throws on a pole.
  Rational eval(const Rational& t) const;

  // Canonical "p(t)/q(t)" with integer coefficients.
  std::string str() const;

 private:
  void normalize_general(Poly num, Poly den);
  void normalize_laurent();

  Poly num_;
  int shift_ = 0;
  Poly rest_ = Poly{Rational(1)};
};

std::string rational_str(const Rational& r);

}  // namespace gwp1
