#include "gwp1/hodge.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace gwp1 {

namespace {

constexpr int kMaxMargin = 8;

Key u_key(int e) { return key_of({{U, e}}); }

// Calls f on every set partition of the bits of mask (blocks as submasks).
void for_each_set_partition(unsigned mask, std::vector<unsigned>& blocks,
                            const std::function<void(const std::vector<unsigned>&)>& f) {
  if (mask == 0) {
    f(blocks);
    return;
  }
  unsigned low = mask & (~mask + 1);
  unsigned rest = mask & ~low;
  // every submask of rest joins the block of the lowest element
  for (unsigned sub = rest;; sub = (sub - 1) & rest) {
    blocks.push_back(low | sub);
    for_each_set_partition(rest & ~sub, blocks, f);
    blocks.pop_back();
    if (sub == 0) break;
  }
}

const Series& need(const NPointFamily& fam, unsigned mask) {
  auto it = fam.find(mask);
  if (it == fam.end()) throw std::invalid_argument("n-point family: missing data for variable set " + std::to_string(mask));
  return it->second;
}

Prec z_prec(const std::vector<int>& orders, int n, int margin) {
  Prec p;
  for (int i = 0; i < n; ++i) p.hi[Z1 + i] = orders[i] + margin;
  return p;
}

// e^{c u (z1 + z2)}
Series exp_sum(const Rational& c, const Prec& p) {
  if (sgn(c) == 0) return Series(1).truncated(p);
  return substitute(Uni::Exp, Coef(c), key_of({{U, 1}, {Z1, 1}}), p) *
         substitute(Uni::Exp, Coef(c), key_of({{U, 1}, {Z2, 1}}), p);
}

// z(z-1)...(z-k+1) for z in slot
Series falling(int slot, int k) {
  Series r(1);
  for (int j = 0; j < k; ++j) r = r * (Series::var(slot) - Series(j));
  return r;
}

Truncation u_window(int u_lo, int u_hi) {
  Truncation tr;
  tr.q_max = 0;
  tr.u_lo = u_lo;
  tr.u_hi = u_hi;
  return tr;
}

}  // namespace

OpPtr hodge_A(int slot, const Prec& prec) {
  AFamilySpec spec;
  spec.a = Series::var(slot);
  spec.bcoef = 1;
  spec.bmono = key_of({{U, 1}, {slot, 1}});
  // Only the operator's own variable (and u) may be truncated: bounds on the
  // other z-slots would erode against their negative exponents.
  spec.prec = Prec().with(slot, prec.hi[slot]).with(U, prec.hi[U]);
  spec.label = "A(z,uz)";
  return a_family(spec);
}

OpPtr hodge_A_integer(int m, const Prec& prec) {
  if (m <= 0) throw std::invalid_argument("hodge_A_integer: m must be positive");
  AFamilySpec spec;
  spec.a = Series(m);
  spec.bcoef = m;
  spec.bmono = u_key(1);
  spec.prec = prec;
  spec.label = "A(m,um)";
  return a_family(spec);
}

Series hodge_vev(const std::vector<int>& slots, const Prec& prec) {
  std::vector<OpPtr> ops;
  for (int s : slots) ops.push_back(hodge_A(s, prec));
  return vacuum_expectation(ops).times_monomial(1, u_key(-static_cast<int>(slots.size())));
}

NPointFamily to_disconnected(const NPointFamily& connected, int n) {
  NPointFamily out;
  out[0] = Series(1);
  unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    Series acc;
    std::vector<unsigned> blocks;
    for_each_set_partition(mask, blocks, [&](const std::vector<unsigned>& bl) {
      Series term(1);
      for (unsigned b : bl) term = term * need(connected, b);
      acc += term;
    });
    out[mask] = acc;
  }
  return out;
}

NPointFamily to_connected(const NPointFamily& disconnected, int n) {
  NPointFamily out;
  out[0] = Series();
  unsigned full = (1u << n) - 1;
  std::vector<unsigned> order;
  for (unsigned mask = 1; mask <= full; ++mask) order.push_back(mask);
  std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  for (unsigned mask : order) {
    Series acc = need(disconnected, mask);
    std::vector<unsigned> blocks;
    for_each_set_partition(mask, blocks, [&](const std::vector<unsigned>& bl) {
      if (bl.size() < 2) return;
      Series term(1);
      for (unsigned b : bl) term = term * out.at(b);
      acc -= term;
    });
    out[mask] = acc;
  }
  return out;
}

Series hodge_npoint(int n, bool connected, const Truncation& tr) {
  validate(tr);
  if (n < 1 || n > 3) throw std::invalid_argument("hodge_npoint: 1 <= n <= 3");
  if (static_cast<int>(tr.z_orders.size()) < n) throw std::invalid_argument("hodge_npoint: need a z-order per variable");
  unsigned full = (1u << n) - 1;
  for (int margin = 0; margin <= kMaxMargin; ++margin) {
    Prec p = z_prec(tr.z_orders, n, margin);
    std::vector<OpPtr> ops;
    for (int i = 0; i < n; ++i) ops.push_back(hodge_A(Z1 + i, p));
    auto vev = [&](unsigned mask) {
      std::vector<OpPtr> chosen;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) chosen.push_back(ops[i]);
      return vacuum_expectation(chosen).times_monomial(1, u_key(-std::popcount(mask)));
    };
    Series result;
    if (!connected) {
      result = vev(full);
    } else {
      NPointFamily dis;
      for (unsigned mask = 1; mask <= full; ++mask) dis[mask] = vev(mask);
      result = to_connected(dis, n).at(full);
    }
    try {
      return window(result, tr);
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("hodge_npoint: truncation too small for the requested orders");
}

Rational hodge_integral(int g, const std::vector<int>& psi_powers) {
  int n = static_cast<int>(psi_powers.size());
  if (g < 0 || n < 1 || n > 3) throw std::invalid_argument("hodge_integral: need g >= 0 and 1 <= n <= 3");
  int j = 3 * g - 3 + n;
  for (int a : psi_powers) {
    if (a < 0) throw std::invalid_argument("hodge_integral: negative psi power");
    j -= a;
  }
  if (j < 0 || j > g) return 0;
  Truncation tr;
  tr.u_lo = tr.u_hi = 2 * g - 2;
  Key k = u_key(2 * g - 2);
  for (int i = 0; i < n; ++i) {
    tr.z_orders.push_back(psi_powers[i] + 1);
    k[Z1 + i] = static_cast<int16_t>(psi_powers[i] + 1);
  }
  tr.energy_cap = tr.q_max;
  Coef c = hodge_npoint(n, true, tr).coeff(k);
  Rational v = c.is_zero() ? Rational(0) : c.constant();
  return j % 2 ? -v : v;
}

int branch_points(int g, const Partition& mu) { return 2 * g + mu.size() + mu.length() - 2; }

Rational hurwitz_character(int g, const Partition& mu, bool* no_covers) {
  int b = branch_points(g, mu);
  if (no_covers) *no_covers = b < 0;
  if (b < 0) return 0;
  std::vector<OpPtr> ops{exp_op(alpha(1)), f2_power(b)};
  for (int part : mu.parts) ops.push_back(alpha(-part));
  Series v = vacuum_expectation(ops);
  Coef c = v.is_zero() ? Coef() : v.coeff(Key{});
  return (c.is_zero() ? Rational(0) : c.constant()) / z_mu(mu);
}

Rational hurwitz_oracle(int g, const Partition& mu) {
  int n = mu.size();
  int b = branch_points(g, mu);
  if (n > 6 || b > 8) throw std::invalid_argument("hurwitz_oracle: needs |mu| <= 6 and b <= 8");
  if (b < 0) return 0;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = id;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  auto cycle_type = [n](const std::vector<int>& s) {
    std::vector<int> seen(n, 0), lens;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = s[j]) seen[j] = 1, ++len;
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  };
  std::vector<mpz_class> count(perms.size());
  for (size_t i = 0; i < perms.size(); ++i)
    if (cycle_type(perms[i]) == mu.parts) count[i] = 1;
  for (int step = 0; step < b; ++step) {
    std::vector<mpz_class> next(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) {
      if (count[i] == 0) continue;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          std::vector<int> q = perms[i];
          // left multiplication by the transposition (x y)
          for (int& v : q) v = v == x ? y : (v == y ? x : v);
          next[index.at(q)] += count[i];
        }
    }
    count = std::move(next);
  }
  return Rational(count[index.at(id)]) / factorial(n);
}

Rational elsv_hodge(int g, const Partition& mu) {
  int b = branch_points(g, mu);
  if (b < 0) return 0;
  return hurwitz_character(g, mu) * z_mu(mu) / (factorial(b) * elsv_weight(mu));
}

Series hodge_at_integers(const Partition& mu, int u_lo, int u_hi) {
  if (mu.empty()) throw std::invalid_argument("hodge_at_integers: empty partition");
  Truncation tr = u_window(u_lo, u_hi);
  int base = u_hi + mu.length() + 2 * mu.size() + 4;
  for (int margin = 0; margin <= kMaxMargin; margin += 2) {
    Prec p = Prec().with(U, base + margin);
    std::vector<OpPtr> ops;
    for (int part : mu.parts) ops.push_back(hodge_A_integer(part, p));
    Series v = vacuum_expectation(ops).times_monomial(1, u_key(-mu.length()));
    try {
      return window(v, tr);
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("hodge_at_integers: u-precision exhausted");
}

Series hodge_at_integers_character(const Partition& mu, int u_lo, int u_hi) {
  Series acc;
  for (int e = u_lo; e <= u_hi; ++e) {
    if (e % 2) continue;
    int g = (e + 2) / 2;
    Rational h = elsv_hodge(g, mu);
    if (sgn(h)) acc += Series::monomial(Coef(h), u_key(e));
  }
  return window(acc, u_window(u_lo, u_hi));
}

Series two_point_closed_form(const Truncation& tr) {
  validate(tr);
  if (tr.z_orders.size() < 2) throw std::invalid_argument("two_point_closed_form: needs orders for z1 and z2");
  Key uz1 = key_of({{U, 1}, {Z1, 1}}), uz2 = key_of({{U, 1}, {Z2, 1}});
  for (int margin = 0; margin <= kMaxMargin; ++margin) {
    Prec p = z_prec(tr.z_orders, 2, margin);
    int kmax = p.hi[Z1];
    // z2^{-k} below needs room in z2
    Prec pw = p.with(Z2, p.hi[Z2] + kmax);
    Series vs1 = substitute(Uni::Varsigma, 1, uz1, pw);
    Series s2 = substitute(Uni::S, 1, uz2, pw);
    Series sum;
    for (int k = 1; k <= kmax; ++k) {
      // varsigma(kX)/varsigma(X) = sum_j e^{(k-1-2j) X / 2}, X = u(z1+z2)
      Series ratio;
      for (int j = 0; j < k; ++j) ratio += exp_sum(frac(k - 1 - 2 * j, 2), pw);
      Series inv_s2k = power(s2, -k).times_monomial(1, key_of({{U, -k}, {Z2, -k}}));
      Series term = ratio * power(vs1, k) * inv_s2k * falling(Z2, k) * inv_pochhammer(Series::var(Z1).truncated(pw), k);
      sum += term.truncated(p);
    }
    Series pre = s_power(Series::var(Z1), 1, uz1, pw) * s_power(Series::var(Z2), 1, uz2, pw);
    Series h = (pre * sum).times_monomial(1, u_key(-2));
    try {
      return window(h, tr);
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("two_point_closed_form: truncation too small");
}

Series two_point_hypergeometric(const Truncation& tr) {
  validate(tr);
  if (tr.z_orders.size() < 2) throw std::invalid_argument("two_point_hypergeometric: needs orders for z1 and z2");
  Key uz1 = key_of({{U, 1}, {Z1, 1}}), uz2 = key_of({{U, 1}, {Z2, 1}});
  Key inv_uz2 = key_of({{U, -1}, {Z2, -1}});
  for (int margin = 0; margin <= kMaxMargin; ++margin) {
    Prec p = z_prec(tr.z_orders, 2, margin);
    int h1 = p.hi[Z1];
    // Every factor below may carry z2^{-h1-1}; give z2 that much room twice.
    Prec pw = p.with(Z2, p.hi[Z2] + 2 * h1 + 4);
    int h2 = pw.hi[Z2];
    Series one = Series(1).truncated(pw);
    // x1 = (1 - e^{u z1}) / (1 - e^{-u z2}),  x2 = (1 - e^{-u z1}) / (1 - e^{u z2})
    Prec pg = pw.with(Z2, h2 + 1);
    // (1 - e^{-y})/y and (e^y - 1)/y, y = u z2: power series after the division
    Series g1 = (one - substitute(Uni::Exp, -1, uz2, pg)).times_monomial(1, inv_uz2).with_lo(U, 0).with_lo(Z2, 0);
    Series g2 = (substitute(Uni::Exp, 1, uz2, pg) - one).times_monomial(1, inv_uz2).with_lo(U, 0).with_lo(Z2, 0);
    Series x1 = ((one - substitute(Uni::Exp, 1, uz1, pw)) * inverse(g1)).times_monomial(1, inv_uz2);
    Series x2 = ((one - substitute(Uni::Exp, -1, uz1, pw)) * inverse(g2)).times_monomial(-1, inv_uz2);
    auto gauss = [&](const Series& x) {
      Series acc = one, xp = one;
      for (int k = 1; k <= h1; ++k) {
        xp = (xp * -x).truncated(pw);
        acc += (falling(Z2, k) * inv_pochhammer(Series::var(Z1).truncated(pw), k) * xp).truncated(pw);
      }
      return acc;
    };
    Series diff = gauss(x1) - gauss(x2);
    // 1/varsigma(X): the X^{-1} term expands 1/(z1 + z2) in z1/z2.
    std::vector<Series::Term> geo;
    for (int j = 0; j <= h1; ++j) geo.push_back({key_of({{U, -1}, {Z1, j}, {Z2, -1 - j}}), Coef(j % 2 ? -1 : 1)});
    std::array<int, kSlots> lo{};
    lo[U] = -1;
    lo[Z2] = -1 - h1;
    Series inv_sig = Series::from_terms(geo, Prec().with(Z1, h1), lo);
    UniSeries tab = uni_table(Uni::InvVarsigma, h1 + h2 + 1);
    Series lin = Series::var(Z1) + Series::var(Z2);
    Series xpow = one;
    for (int j = 1; j <= h1 + h2; ++j) {
      xpow = (xpow * lin).truncated(pw);
      if (sgn(tab.at(j))) inv_sig += xpow.times_monomial(Coef(tab.at(j)), u_key(j));
    }
    inv_sig = inv_sig.truncated(pw);
    Series pre = s_power(Series::var(Z1), 1, uz1, pw) * s_power(Series::var(Z2), 1, uz2, pw);
    Series h = (pre * inv_sig * diff).times_monomial(1, u_key(-2));
    try {
      return window(h, tr);
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("two_point_hypergeometric: truncation too small");
}

}  // namespace gwp1
