#include "gwp1/gw.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gwp1 {

namespace {

Key u_key(int e) { return key_of({{U, e}}); }

Series q_over_u2(int q_max) { return Series::monomial(1, key_of({{Q, 1}, {U, -2}})).truncated(Q, q_max); }

std::vector<int> slots_z(int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i) s.push_back(Z1 + i);
  return s;
}

std::vector<int> slots_w(int m) {
  std::vector<int> s;
  for (int j = 0; j < m; ++j) s.push_back(W1 + j);
  return s;
}

void check_counts(int n, int m) {
  if (n < 0 || m < 0 || n > 3 || m > 3) throw std::invalid_argument("at most three z and three w variables");
}

// A(a, b) with a = sign * t * slot, b = u * slot; optionally adjoint.
OpPtr equivariant_A(int slot, int order, int sign, bool adjoint, const Series& prefactor) {
  AFamilySpec spec;
  spec.a = Series::monomial(Coef::t_power(1).scaled(sign), key_of({{slot, 1}}));
  spec.bcoef = 1;
  spec.bmono = key_of({{U, 1}, {slot, 1}});
  spec.prefactor = prefactor;
  spec.adjoint = adjoint;
  spec.prec = Prec().with(slot, order);
  spec.label = adjoint ? "A*(w)" : "A(z)";
  return a_family(spec);
}

Series term_map(const Series& s, const std::function<Coef(const Key&, const Coef&)>& f) {
  std::vector<Series::Term> out;
  for (const auto& [k, c] : s.terms()) {
    Coef v = f(k, c);
    if (!v.is_zero()) out.push_back({k, v});
  }
  return Series::from_terms(out, s.prec(), s.lo());
}

Series negate_t(const Series& s) {
  return s.map_coef([](const Coef& c) { return c.negate_t(); });
}

// The operator route before windowing: exact in u, truncated in z and w.
Series operator_vev(const std::vector<int>& zs, const std::vector<int>& ws, const Truncation& tr, OpPtr middle,
                    int u_shift) {
  std::vector<OpPtr> ops;
  for (int s : zs) ops.push_back(bA(s, order_for(tr, s)));
  ops.push_back(exp_op(alpha(1)));
  ops.push_back(std::move(middle));
  ops.push_back(exp_op(alpha(-1)));
  for (int s : ws) ops.push_back(bA_star(s, order_for(tr, s)));
  return vacuum_expectation(ops).times_monomial(1, u_key(u_shift));
}

Series all_degrees_vev(const std::vector<int>& zs, const std::vector<int>& ws, const Truncation& tr) {
  return operator_vev(zs, ws, tr, scalar_pow_h(q_over_u2(tr.q_max)), 0);
}

Series exp_minus_q_over_u2(int q_max) { return exp_series(-q_over_u2(q_max)); }

}  // namespace

int order_for(const Truncation& tr, int slot) {
  int idx = slot - Z1;
  if (idx < 0 || idx >= static_cast<int>(tr.z_orders.size()))
    throw std::invalid_argument("truncation: no order given for variable slot " + std::to_string(slot));
  return tr.z_orders[idx];
}

Truncation uniform_truncation(int q_max, int u_lo, int u_hi, int order) {
  Truncation tr;
  tr.q_max = q_max;
  tr.u_lo = u_lo;
  tr.u_hi = u_hi;
  tr.z_orders.assign(6, order);
  tr.energy_cap = q_max;
  return tr;
}

OpPtr bA(int slot, int order) { return equivariant_A(slot, order, 1, false, Series::monomial(1, u_key(-1))); }

OpPtr bA_star(int slot, int order) { return equivariant_A(slot, order, -1, true, Series::monomial(1, u_key(-1))); }

OpPtr bA_coefficient(int k) {
  static std::mutex mu;
  static std::map<int, OpPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  OpPtr op = coefficient_op(bA(Z1, std::max(k + 1, 0)), Z1, k + 1);
  return cache.emplace(k, op).first->second;
}

OpPtr bA_star_coefficient(int k) {
  static std::mutex mu;
  static std::map<int, OpPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  OpPtr op = coefficient_op(bA_star(W1, std::max(k + 1, 0)), W1, k + 1);
  return cache.emplace(k, op).first->second;
}

Series j_function(const std::vector<int>& slots, const std::vector<int>& orders, const Partition& mu, int u_hi) {
  int d = mu.size(), n = static_cast<int>(slots.size());
  for (int h = u_hi + d + n + 4; h <= u_hi + d + n + 40; h += 4) {
    std::vector<OpPtr> ops;
    for (int i = 0; i < n; ++i) ops.push_back(equivariant_A(slots[i], orders[i], 1, false, Series(1)));
    ops.push_back(exp_op(alpha(1)));
    // (u/t)^j is kept only up to u^h; the final precision is tracked.
    ops.push_back(exp_f2(Series::monomial(Coef::t_power(-1), u_key(1)).truncated(U, h)));
    for (int part : mu.parts) ops.push_back(alpha(-part));
    Series v = vacuum_expectation(ops).times_monomial(1, u_key(-d - n));
    if (v.prec().hi[U] >= u_hi) return v;
  }
  throw std::runtime_error("j_function: u-precision did not reach the requested order");
}

Series j_function_direct(const std::vector<int>& slots, const std::vector<int>& orders, const Partition& mu, int u_hi) {
  int d = mu.size(), n = static_cast<int>(slots.size());
  for (int h = u_hi + 2 * d + n + 4; h <= u_hi + 2 * d + n + 40; h += 4) {
    std::vector<OpPtr> ops;
    for (int i = 0; i < n; ++i) ops.push_back(equivariant_A(slots[i], orders[i], 1, false, Series(1)));
    for (int part : mu.parts) {
      AFamilySpec spec;
      spec.a = Series(part);
      spec.bcoef = Coef::t_power(-1).scaled(part);
      spec.bmono = u_key(1);
      spec.prec = Prec().with(U, h);
      ops.push_back(a_family(spec));
    }
    Series v = vacuum_expectation(ops);
    Coef pre = Coef::t_power(-d).scaled(elsv_weight(mu));
    v = v.times_monomial(pre, u_key(-n));
    if (v.prec().hi[U] >= u_hi) return v;
  }
  throw std::runtime_error("j_function_direct: u-precision did not reach the requested order");
}

Series g_localization(int n, int m, int d, const Truncation& tr) {
  validate(tr);
  check_counts(n, m);
  auto zs = slots_z(n), ws = slots_w(m);
  // The adjoint reverses operator order, so the w side is expanded with the
  // last variable innermost.
  std::reverse(ws.begin(), ws.end());
  std::vector<int> zo, wo;
  for (int s : zs) zo.push_back(order_for(tr, s));
  for (int s : ws) wo.push_back(order_for(tr, s));
  for (int extra = 0; extra <= 24; extra += 4) {
    int target = tr.u_hi + 2 * d + n + m + 2 + extra;
    Series g;
    for (const auto& mu : enumerate_partitions(d)) {
      Series jz = j_function(zs, zo, mu, target);
      Series jw = negate_t(j_function(ws, wo, mu, target));
      g += (jz * jw).scaled(Coef(Rational(1) / z_mu(mu)));
    }
    try {
      return window(g, tr);
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("g_localization: u-window could not be filled");
}

Series g_operator(int n, int m, int d, const Truncation& tr) {
  validate(tr);
  check_counts(n, m);
  return window(operator_vev(slots_z(n), slots_w(m), tr, projection(d), -2 * d), tr);
}

Series g_all_degrees(int n, int m, const Truncation& tr) {
  validate(tr);
  check_counts(n, m);
  return window(all_degrees_vev(slots_z(n), slots_w(m), tr), tr);
}

NPointFamily g_connected_family(int n, int m, const Truncation& tr) {
  validate(tr);
  check_counts(n, m);
  int total = n + m;
  auto zs = slots_z(n), ws = slots_w(m);
  Series damp = exp_minus_q_over_u2(tr.q_max);
  NPointFamily dis;
  for (unsigned mask = 1; mask < (1u << total); ++mask) {
    std::vector<int> zsub, wsub;
    for (int i = 0; i < total; ++i)
      if (mask & (1u << i)) (i < n ? zsub.push_back(zs[i]) : wsub.push_back(ws[i - n]));
    // divide out the 0-point factor before inclusion-exclusion
    dis[mask] = all_degrees_vev(zsub, wsub, tr) * damp;
  }
  NPointFamily con = to_connected(dis, total);
  con[0] = q_over_u2(tr.q_max);
  for (auto& [mask, s] : con) s = window(s, tr);
  return con;
}

Series degree_zero_from_hodge(int n, const Truncation& tr) {
  Series h = hodge_npoint(n, false, tr);
  return term_map(h, [n](const Key& k, const Coef& c) {
    int zdeg = 0;
    for (int i = Z1; i <= Z3; ++i) zdeg += k[i];
    return c * Coef::t_power(zdeg - k[U] - n);
  });
}

std::vector<std::pair<Coef, InsertionList>> change_basis(const InsertionList& ins) {
  bool fixed = false, geometric = false;
  for (auto& x : ins) (x.cls == Cls::Zero || x.cls == Cls::Infinity ? fixed : geometric) = true;
  if (fixed && geometric) throw std::invalid_argument("change_basis: mixed bases in one list");
  std::map<InsertionList, Coef> acc;
  acc[{}] = Coef(1);
  for (auto& x : ins) {
    std::vector<std::pair<Coef, Cls>> images;
    switch (x.cls) {
      case Cls::Zero: images = {{Coef::t_power(1), Cls::One}, {Coef(1), Cls::Hyperplane}}; break;
      case Cls::Infinity: images = {{Coef(1), Cls::Hyperplane}}; break;
      case Cls::One: images = {{Coef::t_power(-1), Cls::Zero}, {-Coef::t_power(-1), Cls::Infinity}}; break;
      case Cls::Hyperplane: images = {{Coef(1), Cls::Infinity}}; break;
    }
    std::map<InsertionList, Coef> next;
    for (auto& [list, c] : acc)
      for (auto& [w, cls] : images) {
        InsertionList l = list;
        l.push_back({cls, x.k});
        Coef& slot = next[l];
        slot += c * w;
      }
    acc.clear();
    for (auto& [l, c] : next)
      if (!c.is_zero()) acc.emplace(l, c);
  }
  std::vector<std::pair<Coef, InsertionList>> out;
  for (auto& [l, c] : acc) out.push_back({c, l});
  return out;
}

namespace {

Series tau_fixed(const InsertionList& ins, int q_max) {
  std::vector<OpPtr> ops;
  for (auto& x : ins)
    if (x.cls == Cls::Zero) ops.push_back(bA_coefficient(x.k));
  ops.push_back(exp_op(alpha(1)));
  ops.push_back(scalar_pow_h(q_over_u2(q_max)));
  ops.push_back(exp_op(alpha(-1)));
  for (auto& x : ins)
    if (x.cls == Cls::Infinity) ops.push_back(bA_star_coefficient(x.k));
  return vacuum_expectation(ops);
}

}  // namespace

Series tau_disconnected(const InsertionList& ins, int q_max) {
  if (q_max < 0) throw std::invalid_argument("tau: q_max must be >= 0");
  for (auto& x : ins)
    if (x.k < 0) throw std::invalid_argument("tau: descendant index must be >= 0");
  bool fixed = true;
  for (auto& x : ins) fixed = fixed && (x.cls == Cls::Zero || x.cls == Cls::Infinity);
  if (fixed) return tau_fixed(ins, q_max);
  Series acc;
  for (auto& [c, list] : change_basis(ins)) acc += tau_fixed(list, q_max).scaled(c);
  return acc;
}

Series tau_connected(const InsertionList& ins, int q_max) {
  int total = static_cast<int>(ins.size());
  if (total == 0) return q_over_u2(q_max);
  if (total > 8) throw std::invalid_argument("tau_connected: at most 8 insertions");
  Series damp = exp_minus_q_over_u2(q_max);
  NPointFamily dis;
  for (unsigned mask = 1; mask < (1u << total); ++mask) {
    InsertionList sub;
    for (int i = 0; i < total; ++i)
      if (mask & (1u << i)) sub.push_back(ins[i]);
    dis[mask] = (tau_disconnected(sub, q_max) * damp).truncated(Q, q_max);
  }
  return to_connected(dis, total).at((1u << total) - 1);
}

bool is_t_polynomial(const Series& s) {
  for (const auto& [k, c] : s.terms())
    if (!c.is_polynomial()) return false;
  return true;
}

Series at_u_one(const Series& s) {
  if (s.prec().hi[U] < INF) throw std::invalid_argument("at_u_one: series must be exact in u");
  Prec p = s.prec();
  SeriesAccumulator acc(p);
  for (const auto& [k, c] : s.terms()) {
    Key kk = k;
    kk[U] = 0;
    acc.add(kk, c);
  }
  auto lo = s.lo();
  lo[U] = 0;
  return acc.finish(lo, s.glo());
}

Series at_t_zero(const Series& s) {
  return s.map_coef([](const Coef& c) { return Coef(c.at_zero()); });
}

Series stationary_by_degree(int n, int d, int order) {
  check_counts(n, 0);
  std::vector<OpPtr> ops;
  for (int i = 0; i < d; ++i) ops.push_back(alpha(1));
  for (int i = 0; i < n; ++i) ops.push_back(e_op(0, 1, key_of({{Z1 + i, 1}}), Prec().with(Z1 + i, order)));
  for (int i = 0; i < d; ++i) ops.push_back(alpha(-1));
  Rational f = factorial(d);
  return vacuum_expectation(ops).scaled(Coef(1 / (f * f)));
}

Series stationary_all_degrees(int n, int q_max, int order) {
  check_counts(n, 0);
  std::vector<OpPtr> ops{exp_op(alpha(1)), scalar_pow_h(Series::var(Q).truncated(Q, q_max))};
  for (int i = 0; i < n; ++i) ops.push_back(e_op(0, 1, key_of({{Z1 + i, 1}}), Prec().with(Z1 + i, order)));
  ops.push_back(exp_op(alpha(-1)));
  return vacuum_expectation(ops);
}

Series stationary_limit(int n, int d, int order) {
  check_counts(n, 0);
  Truncation tr = uniform_truncation(d, -2, 0, order);
  Series g = operator_vev(slots_z(n), {}, tr, projection(d), -2 * d);
  return at_t_zero(at_u_one(g));
}

}  // namespace gwp1
