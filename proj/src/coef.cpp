#include "gwp1/coef.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwp1 {

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

Poly shift(const Poly& a, int k) {
  if (a.empty() || k == 0) return a;
  Poly r(a.size() + k);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

int valuation(const Poly& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) return static_cast<int>(i);
  return -1;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (sgn(r[i]) == 0) continue;
    Rational c = r[i] / lead;
    int off = i - static_cast<int>(b.size()) + 1;
    q[off] = c;
    for (size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
  }
  trim(q);
  trim(r);
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.empty()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return x;
}

Rational eval(const Poly& a, const Rational& t) {
  Rational v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * t + a[i];
  return v;
}

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int i = degree(p); i >= 0; --i) {
    const Rational& c = p[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (sgn(c) < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    bool unit = (a == 1);
    if (!unit || i == 0) s += rational_str(a);
    if (i > 0) {
      if (!unit) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace poly

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Coef::Coef(long v) {
  if (v != 0) num_ = {Rational(v)};
}

Coef::Coef(const Rational& v) {
  if (sgn(v) != 0) {
    num_ = {v};
    num_[0].canonicalize();
  }
}

Coef Coef::t_power(int k) {
  Coef c;
  c.num_ = {Rational(1)};
  c.shift_ = -k;
  return c;
}

Coef Coef::from_polys(Poly num, Poly den) {
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) throw std::domain_error("Coef: zero denominator");
  Coef c;
  c.normalize_general(std::move(num), std::move(den));
  return c;
}

// Reduce num/den to the canonical representation.
void Coef::normalize_general(Poly num, Poly den) {
  if (num.empty()) {
    num_.clear();
    shift_ = 0;
    rest_ = {Rational(1)};
    return;
  }
  int vn = poly::valuation(num), vd = poly::valuation(den);
  num.erase(num.begin(), num.begin() + vn);
  den.erase(den.begin(), den.begin() + vd);
  shift_ = vd - vn;
  if (den.size() > 1) {
    Poly g = poly::gcd(num, den);
    if (g.size() > 1) {
      Poly q, r;
      poly::divmod(num, g, q, r);
      num = std::move(q);
      poly::divmod(den, g, q, r);
      den = std::move(q);
    }
  }
  Rational lead = den.back();
  if (lead != 1) {
    for (auto& c : num) c /= lead;
    for (auto& c : den) c /= lead;
  }
  num_ = std::move(num);
  rest_ = std::move(den);
}

void Coef::normalize_laurent() {
  poly::trim(num_);
  if (num_.empty()) {
    shift_ = 0;
    return;
  }
  int v = poly::valuation(num_);
  if (v > 0) {
    num_.erase(num_.begin(), num_.begin() + v);
    shift_ -= v;
  }
}

bool Coef::is_constant() const { return is_zero() || (shift_ == 0 && rest_.size() == 1 && num_.size() == 1); }

Rational Coef::constant() const {
  if (!is_constant()) throw std::domain_error("Coef: not a constant");
  return is_zero() ? Rational(0) : num_[0];
}

Poly Coef::denominator() const {
  if (shift_ > 0) return poly::shift(rest_, shift_);
  return rest_;
}

int Coef::t_valuation() const {
  if (is_zero()) return 1 << 20;
  return -shift_;
}

Coef Coef::operator-() const {
  Coef c(*this);
  for (auto& x : c.num_) x = -x;
  return c;
}

Coef& Coef::operator+=(const Coef& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    int m = std::max(shift_, o.shift_);
    Poly a = poly::shift(num_, m - shift_);
    Poly b = poly::shift(o.num_, m - o.shift_);
    num_ = poly::add(a, b);
    shift_ = m;
    normalize_laurent();
    return *this;
  }
  int m = std::max(shift_, o.shift_);
  Poly n = poly::add(poly::shift(poly::mul(num_, o.rest_), m - shift_),
                     poly::shift(poly::mul(o.num_, rest_), m - o.shift_));
  Poly d = poly::shift(poly::mul(rest_, o.rest_), std::max(m, 0));
  if (m < 0) n = poly::shift(n, -m);
  normalize_general(std::move(n), std::move(d));
  return *this;
}

Coef& Coef::operator-=(const Coef& o) { return *this += -o; }

Coef& Coef::operator*=(const Coef& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Coef();
  if (is_laurent() && o.is_laurent()) {
    if (o.num_.size() == 1) {
      if (o.num_[0] != 1)
        for (auto& x : num_) x *= o.num_[0];
    } else {
      num_ = poly::mul(num_, o.num_);
    }
    shift_ += o.shift_;
    return *this;
  }
  Poly na = num_, nb = o.num_, ra = rest_, rb = o.rest_;
  auto cancel = [](Poly& n, Poly& d) {
    if (d.size() <= 1) return;
    Poly g = poly::gcd(n, d);
    if (g.size() <= 1) return;
    Poly q, r;
    poly::divmod(n, g, q, r);
    n = std::move(q);
    poly::divmod(d, g, q, r);
    d = std::move(q);
  };
  cancel(na, rb);
  cancel(nb, ra);
  num_ = poly::mul(na, nb);
  rest_ = poly::mul(ra, rb);
  shift_ += o.shift_;
  Rational lead = rest_.back();
  if (lead != 1) {
    for (auto& c : num_) c /= lead;
    for (auto& c : rest_) c /= lead;
  }
  return *this;
}

Coef& Coef::operator/=(const Coef& o) {
  if (o.is_zero()) throw std::domain_error("Coef: division by zero");
  Coef inv;
  Rational lead = o.num_.back();
  inv.num_ = poly::scale(o.rest_, 1 / lead);
  inv.rest_ = poly::scale(o.num_, 1 / lead);
  inv.shift_ = -o.shift_;
  return *this *= inv;
}

bool Coef::operator==(const Coef& o) const {
  return shift_ == o.shift_ && num_ == o.num_ && rest_ == o.rest_;
}

Coef Coef::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Coef();
  Coef r(*this);
  for (auto& x : r.num_) x *= c;
  return r;
}

Coef Coef::negate_t() const {
  if (is_zero()) return *this;
  Coef r(*this);
  for (size_t i = 1; i < r.num_.size(); i += 2) r.num_[i] = -r.num_[i];
  for (size_t i = 1; i < r.rest_.size(); i += 2) r.rest_[i] = -r.rest_[i];
  if (r.shift_ % 2 != 0)
    for (auto& x : r.num_) x = -x;
  // keep rest monic
  Rational lead = r.rest_.back();
  if (lead != 1) {
    for (auto& x : r.num_) x /= lead;
    for (auto& x : r.rest_) x /= lead;
  }
  return r;
}

Rational Coef::at_zero() const {
  if (is_zero()) return 0;
  if (shift_ > 0) throw std::domain_error("Coef: pole at t = 0");
  if (shift_ < 0) return 0;
  return num_[0] / rest_[0];
}

Rational Coef::eval(const Rational& t) const {
  if (is_zero()) return 0;
  Rational d = poly::eval(rest_, t);
  if (sgn(d) == 0 || (shift_ > 0 && sgn(t) == 0)) throw std::domain_error("Coef: pole");
  Rational n = poly::eval(num_, t) / d;
  Rational tp = 1;
  int s = shift_ < 0 ? -shift_ : shift_;
  for (int i = 0; i < s; ++i) tp *= t;
  return shift_ > 0 ? Rational(n / tp) : Rational(n * tp);
}

std::string Coef::str() const {
  if (is_zero()) return "0";
  Poly n = shift_ < 0 ? poly::shift(num_, -shift_) : num_;
  Poly d = denominator();
  mpz_class l = 1, g = 0;
  for (const auto* p : {&n, &d})
    for (const auto& c : *p) l = lcm(l, mpz_class(c.get_den()));
  for (auto* p : {&n, &d})
    for (auto& c : *p) {
      c *= l;
      g = gcd(g, mpz_class(c.get_num()));
    }
  for (auto* p : {&n, &d})
    for (auto& c : *p) c /= g;
  if (sgn(d.back()) < 0) {
    for (auto& c : n) c = -c;
    for (auto& c : d) c = -c;
  }
  std::string ns = poly::to_string(n);
  if (d.size() == 1 && d[0] == 1) return ns;
  bool n_multi = std::count_if(n.begin(), n.end(), [](const Rational& c) { return sgn(c) != 0; }) > 1;
  bool d_multi = std::count_if(d.begin(), d.end(), [](const Rational& c) { return sgn(c) != 0; }) > 1 ||
                 (d.size() > 1 && d.back() != 1);
  return (n_multi ? "(" + ns + ")" : ns) + "/" + (d_multi ? "(" + poly::to_string(d) + ")" : poly::to_string(d));
}

}  // namespace gwp1
