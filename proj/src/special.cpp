#include "gwp1/special.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gwp1 {

namespace {

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

UniSeries build_varsigma(int order) {
  UniSeries s{0, {}};
  for (int n = 0; n <= order; ++n) {
    if (n % 2 == 0) {
      s.c.push_back(0);
    } else {
      mpz_class p2 = 1;
      p2 <<= (n - 1);
      s.c.push_back(Rational(1) / (Rational(p2) * factorial(n)));
    }
  }
  return s;
}

UniSeries build_S(int order) {
  UniSeries s{0, {}};
  for (int m = 0; m <= order; ++m) {
    if (m % 2) {
      s.c.push_back(0);
    } else {
      mpz_class p2 = 1;
      p2 <<= m;
      s.c.push_back(Rational(1) / (Rational(p2) * factorial(m + 1)));
    }
  }
  return s;
}

// Reciprocal of a power series with constant term 1.
std::vector<Rational> reciprocal(const std::vector<Rational>& a, int order) {
  std::vector<Rational> b(order + 1);
  b[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) acc += a[k] * b[n - k];
    b[n] = -acc;
  }
  return b;
}

UniSeries build_inv_varsigma(int order) {
  // 1/varsigma(x) = x^{-1} / S(x)
  int need = std::max(0, order + 1);
  auto r = reciprocal(build_S(need).c, need);
  UniSeries s{-1, r};
  return s;
}

UniSeries build_log_S(int order) {
  auto a = build_S(std::max(order, 0)).c;
  std::vector<Rational> l(a.size());
  for (int n = 1; n < static_cast<int>(a.size()); ++n) {
    Rational acc = 0;
    for (int k = 1; k < n; ++k) acc += Rational(k) * l[k] * a[n - k];
    l[n] = a[n] - acc / n;
  }
  return UniSeries{0, l};
}

UniSeries build_exp(int order) {
  UniSeries s{0, {}};
  for (int n = 0; n <= order; ++n) s.c.push_back(1 / factorial(n));
  return s;
}

}  // namespace

UniSeries uni_varsigma(int order) { return uni_table(Uni::Varsigma, order); }
UniSeries uni_inv_varsigma(int order) { return uni_table(Uni::InvVarsigma, order); }
UniSeries uni_S(int order) { return uni_table(Uni::S, order); }
UniSeries uni_log_S(int order) { return uni_table(Uni::LogS, order); }
UniSeries uni_exp(int order) { return uni_table(Uni::Exp, order); }

UniSeries uni_table(Uni f, int order) {
  static std::mutex mu;
  static std::map<Uni, UniSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f);
  if (it == cache.end() || it->second.top() < order) {
    int build = std::max(order, 16);
    UniSeries s;
    switch (f) {
      case Uni::Varsigma: s = build_varsigma(build); break;
      case Uni::InvVarsigma: s = build_inv_varsigma(build); break;
      case Uni::S: s = build_S(build); break;
      case Uni::LogS: s = build_log_S(build); break;
      case Uni::Exp: s = build_exp(build); break;
    }
    it = cache.insert_or_assign(f, std::move(s)).first;
  }
  UniSeries out = it->second;
  int keep = order - out.val + 1;
  if (keep < 0) keep = 0;
  if (static_cast<int>(out.c.size()) > keep) out.c.resize(keep);
  return out;
}

Series substitute(Uni f, const Coef& c, const Key& mono, const Prec& p) {
  int n_max = INF;
  for (int i = 0; i < kSlots; ++i) {
    if (mono[i] < 0) throw std::invalid_argument("substitute: negative monomial exponent");
    if (mono[i] > 0 && p.hi[i] < INF) {
      int h = p.hi[i];
      int q = h >= 0 ? h / mono[i] : -((-h + mono[i] - 1) / mono[i]);
      n_max = std::min(n_max, q);
    }
  }
  if (p.gmask && p.ghi < INF) {
    int g = p.group_degree(mono);
    if (g > 0) {
      int h = p.ghi;
      n_max = std::min(n_max, h >= 0 ? h / g : -((-h + g - 1) / g));
    }
  }
  if (n_max >= INF) throw std::invalid_argument("substitute: argument not truncated by precision");
  UniSeries u = uni_table(f, std::max(n_max, 0));
  std::array<int, kSlots> lo;
  for (int i = 0; i < kSlots; ++i) lo[i] = u.val * mono[i];
  std::vector<Series::Term> terms;
  if (!c.is_zero()) {
    Coef cinv = Coef(1) / c;
    Coef cp = 1;
    for (int i = 0; i < -u.val; ++i) cp *= cinv;
    if (u.val > 0)
      for (int i = 0; i < u.val; ++i) cp *= c;
    for (int n = u.val; n <= n_max; ++n) {
      Rational a = u.at(n);
      if (sgn(a) != 0) {
        Key k;
        for (int i = 0; i < kSlots; ++i) k[i] = static_cast<int16_t>(n * mono[i]);
        terms.push_back({k, cp.scaled(a)});
      }
      cp *= c;
    }
  } else if (u.val <= 0) {
    if (u.val < 0) throw std::domain_error("substitute: pole at zero argument");
    terms.push_back({Key{}, Coef(u.at(0))});
  }
  return Series::from_terms(std::move(terms), p, lo);
}

Series varsigma_series(int slot, int order) {
  if (order < 1) throw std::invalid_argument("varsigma_series: order must be >= 1");
  Key m{};
  m[slot] = 1;
  return substitute(Uni::Varsigma, Coef(1), m, Prec().with(slot, order));
}

Series inv_varsigma_series(int slot, int order) {
  if (order < 1) throw std::invalid_argument("inv_varsigma_series: order must be >= 1");
  Key m{};
  m[slot] = 1;
  return substitute(Uni::InvVarsigma, Coef(1), m, Prec().with(slot, order));
}

Series s_power(const Series& a, const Coef& c, const Key& mono, const Prec& p) {
  Series l = substitute(Uni::LogS, c, mono, p);
  return exp_series((a * l).truncated(p));
}

Series s_power(int slot, const Series& a, int order) {
  Key m{};
  m[slot] = 1;
  return s_power(a, Coef(1), m, Prec().with(slot, order));
}

Coef pochhammer(const Coef& a, int k) {
  Coef r = 1;
  if (k >= 0) {
    for (int j = 1; j <= k; ++j) r *= a + Coef(j);
    return r;
  }
  for (int j = 0; j < -k; ++j) {
    Coef f = a - Coef(j);
    if (f.is_zero()) throw std::domain_error("pochhammer: zero factor");
    r *= f;
  }
  return Coef(1) / r;
}

Series pochhammer(const Series& a, int k) {
  if (k >= 0) {
    Series r(1);
    for (int j = 1; j <= k; ++j) r = r * (a + Series(j));
    return r;
  }
  return inverse(inv_pochhammer(a, k));
}

Series inv_pochhammer(const Series& a, int k) {
  Series r(1);
  if (k <= 0) {
    for (int j = 0; j < -k; ++j) r = r * (a - Series(j));
    return r;
  }
  for (int j = 1; j <= k; ++j) {
    Series f = a + Series(j);
    if (f.is_zero()) throw std::domain_error("inv_pochhammer: zero factor");
    r = r * inverse(f);
  }
  return r;
}

Series hypergeometric_series(const Series& nu, const Series& mu, const Series& x) {
  if (x.is_zero()) return Series(1).truncated(x.prec());
  if (x.prec().contains(Key{}) && !x.coeff(Key{}).is_zero())
    throw std::domain_error("hypergeometric_series: argument has a constant term");
  Series sum = Series(1).truncated(x.prec());
  Series ratio(1);  // nu(nu-1)...(nu-k+1) / ((mu+1)...(mu+k))
  Series xpow(1);
  Series negx = -x;
  for (int k = 1; k < 4096; ++k) {
    xpow = xpow * negx;
    if (xpow.is_zero()) return sum.truncated(xpow.prec());
    ratio = ratio * (nu - Series(k - 1)) * inverse(mu + Series(k));
    sum += ratio * xpow;
  }
  throw std::runtime_error("hypergeometric_series: did not terminate");
}

}  // namespace gwp1
