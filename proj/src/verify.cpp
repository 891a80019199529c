#include "gwp1/verify.hpp"

#include <stdexcept>

namespace gwp1 {

const SlotNames kTodaNames = {"q", "u", "x0", "x1", "eps", "xs0", "xs1", "w3"};

bool Report::ok() const { return failures() == 0; }

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& e : entries) n += e.pass ? 0 : 1;
  return n;
}

namespace {

// have is known at least on need (a slot left exact in need must be exact).
bool covers(const Prec& have, const Prec& need) {
  for (int i = 0; i < kSlots; ++i)
    if (have.hi[i] < need.hi[i]) return false;
  if (have.gmask == 0) return need.gmask == 0 || true;
  if (need.gmask != have.gmask) return false;
  return have.ghi >= need.ghi;
}

std::string summary(const Series& s, const SlotNames& names) {
  return s.size() <= 6 ? s.str(names) : "<" + std::to_string(s.size()) + " terms>";
}

Key K(std::initializer_list<std::pair<int, int>> e) { return key_of(e); }

Series q_over_u2(int q_max) { return Series::monomial(1, K({{Q, 1}, {U, -2}})).truncated(Q, q_max); }

Prec x_prec(int deg) {
  Prec p;
  for (int s : {X0, X1, XS0, XS1}) p.hi[s] = deg;
  return p.with_group(kXMask, deg);
}

Series xvar(int slot, int deg) { return Series::var(slot).truncated(x_prec(deg)); }

// Box for comparisons: x-degree <= deg, q <= q_max, u <= u_hi.
Prec toda_box(int deg, int q_max, int u_hi) { return x_prec(deg).with(Q, q_max).with(U, u_hi); }

std::vector<OpPtr> m_ops(const Series& x0, const Series& x1, const Series& xs0, const Series& xs1, int q_max,
                         int max_terms) {
  OpPtr left = exp_op(sum_op({{x0, bA_coefficient(0)}, {x1, bA_coefficient(1)}}), Series(1), max_terms);
  OpPtr right = exp_op(sum_op({{xs0, bA_star_coefficient(0)}, {xs1, bA_star_coefficient(1)}}), Series(1), max_terms);
  return {left, exp_op(alpha(1)), scalar_pow_h(q_over_u2(q_max)), exp_op(alpha(-1)), right};
}

std::vector<OpPtr> formal_ops(int q_max, int deg) {
  return m_ops(xvar(X0, deg), xvar(X1, deg), xvar(XS0, deg), xvar(XS1, deg), q_max, deg);
}

// log of a tau function whose x = 0 value is e^{q/u^2}; the u valuation is
// set to the actual one so that exponentials of shifts stay nilpotent.
Series log_tau(const Series& tau, int q_max) {
  Series r = tau * exp_series(-q_over_u2(q_max)) - Series(1);
  Series f = log1p_series(r) + q_over_u2(q_max);
  return f.is_zero() ? f : f.with_lo(U, f.min_exp(U));
}

// d = (1/t)(d/dx_0 - d/dx*_0): the tau_0(1) insertion.
Series string_derivative(const Series& s) {
  return (s.derivative(X0) - s.derivative(XS0)).scaled(Coef::t_power(-1));
}

std::vector<State> states_up_to(int energy_cap, int max_charge) {
  std::vector<State> out;
  for (int c = -max_charge; c <= max_charge; ++c) {
    Rational rest = Rational(energy_cap) - frac(c * c, 2);
    if (rest < 0) continue;
    for (int n = 0; n <= rest; ++n)
      for (const auto& p : enumerate_partitions(n)) out.push_back(State{p, c});
  }
  return out;
}

CheckEntry entry(const std::string& id, const std::string& loc, const std::string& want, const std::string& got,
                 bool pass) {
  return CheckEntry{id, loc, want, got, pass};
}

}  // namespace

void Report::compare(const std::string& identity, const std::string& location, const Series& actual,
                     const Series& expected, const Prec& on, const SlotNames& names) {
  if (!covers(actual.prec(), on) || !covers(expected.prec(), on)) {
    add(entry(identity, location, "series known on the comparison box", "insufficient precision", false));
    return;
  }
  Series a = actual.truncated(on), b = expected.truncated(on);
  Series diff = a - b;
  if (diff.is_zero()) {
    add(entry(identity, location, summary(b, names), summary(a, names), true));
    return;
  }
  const Key& k = diff.terms().front().first;
  std::string where = location + " at " + Series::monomial(1, k).str(names);
  add(entry(identity, where, b.coeff(k).str(), a.coeff(k).str(), false));
}

// ---- commutation relations ----

Report check_commutator_A(int k_lo, int k_hi, int energy_cap, int z_order) {
  if (k_hi > z_order) throw std::invalid_argument("check_commutator_A: z_order must be >= k_hi");
  OpPtr full = hodge_A(Z1, Prec().with(Z1, z_order));
  std::map<int, OpPtr> a;
  for (int k = k_lo; k <= k_hi; ++k) a[k] = coefficient_op(full, Z1, k);
  std::vector<State> states = states_up_to(energy_cap, 3);
  Report rep;
  for (int k = k_lo; k <= k_hi; ++k)
    for (int l = k_lo; l <= k_hi; ++l) {
      std::string loc = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      CheckEntry e = entry("[A_k, A_l] = (-1)^l delta_{k+l,1}", loc, "", "", true);
      size_t checked = 0;
      for (const State& mu : states)
        for (const State& lam : states) {
          if (mu.charge != lam.charge) continue;
          Series v = expectation(basis(mu), {a[k], a[l]}, basis(lam)) - expectation(basis(mu), {a[l], a[k]}, basis(lam));
          Series want = (mu == lam && k + l == 1) ? Series(l % 2 ? -1 : 1) : Series();
          ++checked;
          if (e.pass && !(v - want).is_zero()) {
            e.pass = false;
            e.location += " <" + mu.str() + "|..|" + lam.str() + ">";
            e.expected = want.str();
            e.actual = v.str();
          }
        }
      if (e.pass) e.expected = e.actual = std::to_string(checked) + " matrix elements";
      rep.add(e);
    }
  return rep;
}

// ---- divisor and string equations ----

namespace {

Prec window_box(const Truncation& tr) {
  Prec p;
  p.hi[Q] = tr.q_max;
  p.hi[U] = tr.u_hi;
  for (size_t i = 0; i < tr.z_orders.size(); ++i) p.hi[Z1 + i] = tr.z_orders[i];
  return p;
}

}  // namespace

Report check_divisor(int d, int n, int m, const Truncation& tr) {
  if (n + 1 > 3 || m > 3) throw std::invalid_argument("check_divisor: at most two z spectators and three w");
  Truncation big = tr;
  big.z_orders.assign(6, 0);
  big.z_orders[0] = 1;
  for (int i = 0; i < n; ++i) big.z_orders[i + 1] = order_for(tr, Z1 + i);
  for (int j = 0; j < m; ++j) big.z_orders[3 + j] = order_for(tr, W1 + j);
  Series lhs = g_operator(n + 1, m, d, big).extract(Z1, 1);
  for (int i = 1; i <= n; ++i) lhs = lhs.rename(Z1 + i, Z1 + i - 1);
  Series factor = Series(Coef(d) - Coef(Rational(1, 24)));
  for (int i = 0; i < n; ++i) factor += Series::monomial(Coef::t_power(1), K({{Z1 + i, 1}}));
  Series rhs = factor * g_operator(n, m, d, tr);
  Prec box = window_box(tr);
  // absent variables occur only to the power 0
  for (int i = n; i < 3; ++i) box.hi[Z1 + i] = 0;
  for (int j = m; j < 3; ++j) box.hi[W1 + j] = 0;

  Report rep;
  rep.compare("divisor: [z0^1] G_d = (d - 1/24 + t sum z) G_d",
              "d=" + std::to_string(d) + " n=" + std::to_string(n) + " m=" + std::to_string(m), lhs, rhs, box);
  return rep;
}

Report check_string(int g, int d, const InsertionList& ins) {
  std::vector<int> zk, wl;
  for (const auto& x : ins) {
    if (x.k < 0) throw std::invalid_argument("check_string: descendant index must be >= 0");
    if (x.cls == Cls::Zero)
      zk.push_back(x.k);
    else if (x.cls == Cls::Infinity)
      wl.push_back(x.k);
    else
      throw std::invalid_argument("check_string: spectators must be fixed-point classes");
  }
  int n = zk.size(), m = wl.size();
  if (n > 3 || m > 3) throw std::invalid_argument("check_string: at most three of each kind");
  int ue = 2 * g - 2;
  int degree = 0;
  for (int k : zk) degree += k + 1;
  for (int l : wl) degree += l + 1;
  // The equivariant bracket is a polynomial in t of degree (insertion degree -
  // virtual dimension), so only finitely many tau_0(1) insertions survive.
  int a_max = degree - (ue + 2 * d + n + m);
  Key at = K({{U, ue}, {Q, d}});
  Coef lhs;
  for (int a = 0; a <= a_max; ++a) {
    InsertionList ones(a, Insertion{Cls::One, 0});
    for (const auto& [c, list] : change_basis(ones)) {
      InsertionList full = list;
      full.insert(full.end(), ins.begin(), ins.end());
      lhs += tau_disconnected(full, d).coeff(at) * c * Coef(Rational(1) / factorial(a));
    }
  }
  Truncation tr = uniform_truncation(d, ue, ue, 0);
  for (int i = 0; i < n; ++i) tr.z_orders[i] = zk[i] + 1;
  for (int j = 0; j < m; ++j) tr.z_orders[3 + j] = wl[j] + 1;
  Series gd = g_operator(n, m, d, tr);
  // G carries negative powers (unstable terms), so the exponentials must run
  // past the extracted order by the declared depth of those powers
  Series e(1);
  for (int i = 0; i < n; ++i) {
    int slot = Z1 + i;
    e = e * exp_series(Series::var(slot).truncated(slot, zk[i] + 1 - std::min(0, gd.lo()[slot])));
  }
  for (int j = 0; j < m; ++j) {
    int slot = W1 + j;
    e = e * exp_series(Series::var(slot).truncated(slot, wl[j] + 1 - std::min(0, gd.lo()[slot])));
  }
  Series prod = gd * e;
  for (int i = 0; i < n; ++i) prod = prod.extract(Z1 + i, zk[i] + 1);
  for (int j = 0; j < m; ++j) prod = prod.extract(W1 + j, wl[j] + 1);
  Coef rhs = prod.coeff(K({{U, ue}}));
  std::string loc = "g=" + std::to_string(g) + " d=" + std::to_string(d) + " insertions=";
  for (const auto& x : ins) loc += (x.cls == Cls::Zero ? "0:" : "inf:") + std::to_string(x.k) + " ";
  Report rep;
  rep.add(entry("string: <e^{tau_0(1)} ...> = [z^{k+1} w^{l+1}] e^{sum z + sum w} G", loc, rhs.str(), lhs.str(),
                lhs == rhs));
  return rep;
}

// ---- tau function and Toda ----

Series tau_formal(int q_max, int x_degree, int charge) {
  if (q_max < 0 || x_degree < 0) throw std::invalid_argument("tau_formal: negative truncation");
  return expectation(vacuum(charge), formal_ops(q_max, x_degree), vacuum(charge));
}

Series free_energy(int q_max, int x_degree) { return log_tau(tau_formal(q_max, x_degree), q_max); }

Report check_toda(int q_max, int budget, int u_hi) {
  if (u_hi < -2) throw std::invalid_argument("check_toda: u_hi must be >= -2");
  Report rep;
  std::string loc = "q<=" + std::to_string(q_max) + " x-degree<=" + std::to_string(budget) + " u<=" + std::to_string(u_hi);
  // Shifts u^{2j} d^{2j} F start at u^{2j-2}; j_max covers the u-window.
  int j_max = (u_hi + 4) / 2;
  int deg = budget + 2 * j_max;
  Series tau = tau_formal(q_max, deg);
  Series f = log_tau(tau, q_max);

  Series lhs = f.derivative(X0).derivative(XS0);
  Series delta;
  Series cur = f;
  for (int j = 1; j <= j_max; ++j) {
    cur = string_derivative(string_derivative(cur));
    delta += cur.times_monomial(Coef(Rational(2) / factorial(2 * j)), K({{U, 2 * j}}));
  }
  delta = delta.truncated(U, u_hi + 2);
  Series rhs = exp_series(delta).times_monomial(1, K({{Q, 1}, {U, -2}}));
  rep.compare("2-Toda: d^2 F/dx0 dx*0 = (q/u^2) exp(Delta F)", loc, lhs, rhs, toda_box(budget, q_max, u_hi), kTodaNames);

  // tau form and the derivative rule for A_0
  Series small = tau.truncated(x_prec(budget + 2));
  Series tp = tau_formal(q_max, budget, 1), tm = tau_formal(q_max, budget, -1);
  Series lhs1 = small * small.derivative(X0).derivative(XS0) - small.derivative(X0) * small.derivative(XS0);
  Series rhs1 = (tp * tm).times_monomial(1, K({{Q, 1}, {U, -2}}));
  Prec box_exact_u = x_prec(budget).with(Q, q_max);
  rep.compare("2-Toda, tau form: tau tau_{x0 x*0} - tau_x0 tau_x*0 = (q/u^2) tau_1 tau_-1", loc, lhs1, rhs1, box_exact_u,
              kTodaNames);
  std::vector<OpPtr> ops = formal_ops(q_max, budget + 1);
  std::vector<OpPtr> left{alpha(1)};
  left.insert(left.end(), ops.begin(), ops.end());
  std::vector<OpPtr> right = ops;
  right.push_back(alpha(-1));
  Series t1 = tau.truncated(x_prec(budget + 1));
  Series a_m = expectation(vacuum(0), left, vacuum(0)) - t1.scaled(Coef(Rational(1, 24)));
  Series m_a = expectation(vacuum(0), right, vacuum(0)) - t1.scaled(Coef(Rational(1, 24)));
  rep.compare("d tau/dx0 = <(alpha_1 - 1/24) M>", loc, t1.derivative(X0), a_m, box_exact_u, kTodaNames);
  rep.compare("d tau/dx*0 = <M (alpha_-1 - 1/24)>", loc, t1.derivative(XS0), m_a, box_exact_u, kTodaNames);

  // genus zero on the small phase space: z0 = t x0, y0 = x0 + x*0
  Series f0 = f.extract(U, -2).select(X1, 0).select(XS1, 0);
  auto dz = [](const Series& s) { return string_derivative(s); };
  auto dy = [](const Series& s) { return s.derivative(XS0); };
  Series g_lhs = dz(dy(f0)).scaled(Coef::t_power(1)) + dy(dy(f0));
  Series g_rhs = exp_series(dz(dz(f0))).times_monomial(1, K({{Q, 1}}));
  Prec small_box = x_prec(budget).with(Q, q_max);
  rep.compare("genus 0: t F_{z0 y0} + F_{y0 y0} = q exp(F_{z0 z0})", loc, g_lhs, g_rhs, small_box, kTodaNames);
  Series z0 = xvar(X0, deg).scaled(Coef::t_power(1));
  Series y0 = xvar(X0, deg) + xvar(XS0, deg);
  Series fc = (z0 * z0 * y0).scaled(Coef(Rational(1, 2))) - (z0 * y0 * y0).scaled(Coef::t_power(1).scaled(Rational(1, 2))) +
              (y0 * y0 * y0).scaled(Coef::t_power(2).scaled(Rational(1, 6)));
  Series classical = fc + exp_series(y0).times_monomial(1, K({{Q, 1}}));
  rep.compare("genus 0 small phase space: F^0 = F^c + q e^{y0}", loc, f0, classical, x_prec(deg).with(Q, q_max),
              kTodaNames);

  // degree one from degree zero: [q^1 x^0] F_{x0 x*0} through the right side
  Series d0 = delta.extract(Q, 0);
  Series at0 = exp_series(d0);
  for (int s : {X0, X1, XS0, XS1}) at0 = at0.extract(s, 0);
  Series rebuilt = at0.times_monomial(1, K({{U, -2}}));
  Series bracket = tau_connected({{Cls::Zero, 0}, {Cls::Infinity, 0}}, 1).extract(Q, 1);
  rep.compare("degree 1 <tau_0(0) tau_0(inf)> from degree 0 via Toda", "u<=" + std::to_string(u_hi), rebuilt, bracket,
              Prec().with(U, u_hi));
  return rep;
}

Report check_translation(int q_max, int budget, int u_hi) {
  if (u_hi < -2) throw std::invalid_argument("check_translation: u_hi must be >= -2");
  int j_max = u_hi + 2;
  Series f = free_energy(q_max, budget + j_max);
  Report rep;
  for (int n : {1, -1}) {
    Series lhs = log_tau(tau_formal(q_max, budget, n), q_max);
    Series rhs;
    Series cur = f;
    for (int j = 0; j <= j_max; ++j) {
      if (j > 0) cur = string_derivative(cur);
      Coef c = Coef(Rational(n == 1 || j % 2 == 0 ? 1 : -1) / factorial(j));
      rhs += cur.times_monomial(c, K({{U, j}}));
    }
    rhs = rhs.truncated(U, u_hi);
    rep.compare("translation: <T^-n M T^n> = q^{n^2/2} u^{-n^2} e^{n u d} tau",
                "n=" + std::to_string(n) + " q<=" + std::to_string(q_max) + " x-degree<=" + std::to_string(budget) +
                    " u<=" + std::to_string(u_hi),
                lhs, rhs, toda_box(budget, q_max, u_hi), kTodaNames);
  }
  return rep;
}

Report check_pluecker(const std::vector<std::array<Rational, 4>>& samples, int q_max, int eps_order) {
  Report rep;
  Series eps = Series::var(EPS).truncated(EPS, eps_order);
  OpPtr a1 = alpha(1), am1 = alpha(-1);
  for (const auto& r : samples) {
    std::vector<OpPtr> ops = m_ops(eps.scaled(Coef(r[0])), eps.scaled(Coef(r[1])), eps.scaled(Coef(r[2])),
                                   eps.scaled(Coef(r[3])), q_max, eps_order);
    auto with = [&](std::vector<OpPtr> pre, std::vector<OpPtr> post) {
      pre.insert(pre.end(), ops.begin(), ops.end());
      pre.insert(pre.end(), post.begin(), post.end());
      return pre;
    };
    FockVector v0 = vacuum(0);
    Series m = expectation(v0, ops, v0);
    Series ama = expectation(v0, with({a1}, {am1}), v0);
    Series am = expectation(v0, with({a1}, {}), v0);
    Series ma = expectation(v0, with({}, {am1}), v0);
    Series tp = expectation(vacuum(1), ops, vacuum(1));
    Series tm = expectation(vacuum(-1), ops, vacuum(-1));
    Series lhs = (tp * tm).times_monomial(1, K({{Q, 1}, {U, -2}}));
    Series rhs = m * ama - am * ma;
    std::string loc = "x=(" + r[0].get_str() + "," + r[1].get_str() + "," + r[2].get_str() + "," + r[3].get_str() +
                      ")*eps, q<=" + std::to_string(q_max) + " eps<=" + std::to_string(eps_order);
    rep.compare("Pluecker: <T^-1 M T><T M T^-1> = <M><a1 M a-1> - <a1 M><M a-1>", loc, lhs, rhs,
                Prec().with(EPS, eps_order).with(Q, q_max), kTodaNames);
  }
  return rep;
}

Report check_T_conjugation(int energy_cap, int z_order) {
  Report rep;
  std::vector<State> states = states_up_to(energy_cap, 2);
  OpPtr h = h_op();
  for (int n : {1, -1}) {
    CheckEntry e = entry("T^-n H T^n = H + nC + n^2/2", "n=" + std::to_string(n), "", "", true);
    for (const State& s : states) {
      FockVector got = gwp1::apply(*t_shift(-n), gwp1::apply(*h, gwp1::apply(*t_shift(n), basis(s))));
      Rational val = s.energy() + Rational(n * s.charge) + frac(n * n, 2);
      FockVector want = scale(basis(s), Series(Coef(val)));
      if (e.pass && got != want) {
        e.pass = false;
        e.location += " on " + s.str();
        e.expected = render(want);
        e.actual = render(got);
      }
    }
    if (e.pass) e.expected = e.actual = std::to_string(states.size()) + " states";
    rep.add(e);
  }
  struct Case {
    const char* name;
    OpPtr op;
    int slot;
  };
  std::vector<Case> cases{{"T^-n A(z) T^n = e^{n u z} A(z)", bA(Z1, z_order), Z1},
                          {"T^-n A*(w) T^n = e^{n u w} A*(w)", bA_star(W1, z_order), W1}};
  for (const auto& c : cases)
    for (int n : {1, -1}) {
      Series shift = exp_series(Series::monomial(Coef(n), K({{U, 1}, {c.slot, 1}})).truncated(c.slot, z_order + 2 * energy_cap + 4));
      CheckEntry e = entry(c.name, "n=" + std::to_string(n), "", "", true);
      size_t checked = 0;
      for (const State& mu : states)
        for (const State& lam : states) {
          if (mu.charge != lam.charge) continue;
          Series lhs = expectation(basis(mu), {t_shift(-n), c.op, t_shift(n)}, basis(lam));
          Series rhs = shift * expectation(basis(mu), {c.op}, basis(lam));
          Prec box = Prec().with(c.slot, z_order);
          ++checked;
          if (!covers(lhs.prec(), box) || !covers(rhs.prec(), box) || !(lhs.truncated(box) - rhs.truncated(box)).is_zero()) {
            if (e.pass) {
              e.pass = false;
              e.location += " <" + mu.str() + "|..|" + lam.str() + ">";
              e.expected = rhs.truncated(box).str();
              e.actual = lhs.truncated(box).str();
            }
          }
        }
      if (e.pass) e.expected = e.actual = std::to_string(checked) + " matrix elements";
      rep.add(e);
    }
  return rep;
}

// ---- dressing ----

std::map<std::pair<int, int>, Series> dressing_coefficients(int k_max) {
  if (k_max < 0) throw std::invalid_argument("dressing_coefficients: k_max must be >= 0");
  std::map<std::pair<int, int>, Series> out;
  for (int k = 0; k <= k_max; ++k)
    for (int l = 1; l <= k + 1; ++l) {
      int m = k + 1 - l;
      Series tz = Series::monomial(Coef::t_power(1), K({{Z1, 1}})).truncated(Z1, m);
      Coef c = inv_pochhammer(tz, l).coeff(K({{Z1, m}}));
      out[{k, l}] = Series::monomial(c, K({{U, l - 1}}));
    }
  return out;
}

Report check_dressing_coefficients(int k_max) {
  Report rep;
  for (const auto& [kl, c] : dressing_coefficients(k_max)) {
    auto [k, l] = kl;
    std::string loc = "k=" + std::to_string(k) + " l=" + std::to_string(l);
    bool mono = c.size() == 1 && c.terms()[0].first == K({{U, l - 1}}) &&
                (c.terms()[0].second * Coef::t_power(l - k - 1)).is_constant();
    rep.add(entry("c_{k,l} = c u^{l-1} t^{k-l+1}", loc, "monomial u^" + std::to_string(l - 1) + " t^" + std::to_string(k - l + 1),
                  c.str(), mono));
    if (l == k + 1) {
      Series want = Series::monomial(Coef(Rational(1) / factorial(k + 1)), K({{U, k}}));
      rep.add(entry("c_{k,k+1} = u^k/(k+1)!", loc, want.str(), c.str(), c == want));
    }
  }
  return rep;
}

Series HalfInfiniteMatrix::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Series() : it->second;
}

HalfInfiniteMatrix HalfInfiniteMatrix::operator*(const HalfInfiniteMatrix& o) const {
  if (lo != o.lo || hi != o.hi) throw std::invalid_argument("HalfInfiniteMatrix: windows differ");
  HalfInfiniteMatrix r;
  r.lo = lo;
  r.hi = hi;
  r.lower = lower + o.lower;
  r.row_hi = std::min(row_hi, o.row_hi - lower);
  r.col_lo = std::max(o.col_lo, col_lo + o.lower);
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      if (j - i > r.lower) continue;
      Series acc;
      for (int m = std::max(lo, j - o.lower); m <= std::min(hi, i + lower); ++m) {
        auto a = entries.find({i, m});
        if (a == entries.end()) continue;
        auto b = o.entries.find({m, j});
        if (b == o.entries.end()) continue;
        acc += a->second * b->second;
      }
      if (!acc.is_zero()) r.entries[{i, j}] = acc;
    }
  return r;
}

HalfInfiniteMatrix bA_matrix(int k, int E) {
  if (E < 1) throw std::invalid_argument("bA_matrix: E must be >= 1");
  HalfInfiniteMatrix a;
  a.lo = -E - 1;
  a.hi = E - 1;
  a.row_hi = a.hi;
  a.col_lo = a.lo;
  a.lower = k + 1;
  Key uz = K({{U, 1}, {Z1, 1}});
  for (int i = a.lo; i <= a.hi; ++i)
    for (int j = a.lo; j <= a.hi; ++j) {
      // E_r(uz) e_s = e^{uz(s - r/2)} e_{s-r} with s = j + 1/2, r = j - i; the
      // entry is u^{r-1} [z^{k+1-r}] S(uz)^{tz+r} e^{uz(s-r/2)} / (1+tz)_r.
      int r = j - i;
      int n = k + 1 - r;
      if (n < 0) continue;
      Prec p = Prec().with(Z1, n);
      Series tz = Series::monomial(Coef::t_power(1), K({{Z1, 1}}));
      Series s_pow = s_power(tz + Series(r), Coef(1), uz, p);
      Series ex = substitute(Uni::Exp, Coef(frac(i + j + 1, 2)), uz, p);
      Series poch = inv_pochhammer(tz.truncated(p), r);
      Series w = (s_pow * ex * poch).truncated(p).extract(Z1, n).times_monomial(1, K({{U, r - 1}}));
      if (!w.is_zero()) a.entries[{i, j}] = w;
    }
  return a;
}

Report check_dressing_identity(int k_max, int E) {
  auto c = dressing_coefficients(k_max);
  HalfInfiniteMatrix a0 = bA_matrix(0, E);
  std::vector<HalfInfiniteMatrix> pw{HalfInfiniteMatrix{}, a0};
  for (int l = 2; l <= k_max + 1; ++l) pw.push_back(pw.back() * a0);
  Report rep;
  for (int k = 0; k <= k_max; ++k) {
    HalfInfiniteMatrix ak = bA_matrix(k, E);
    int row_hi = ak.row_hi, col_lo = ak.col_lo;
    for (int l = 1; l <= k + 1; ++l) {
      row_hi = std::min(row_hi, pw[l].row_hi);
      col_lo = std::max(col_lo, pw[l].col_lo);
    }
    int trusted = row_hi - col_lo + 1;
    std::string loc = "k=" + std::to_string(k) + " E=" + std::to_string(E);
    CheckEntry e = entry("A_k = sum_l c_{k,l} A_0^l in End(infinity)", loc, "", "", true);
    if (trusted < 1) throw std::invalid_argument("check_dressing_identity: window too small for k_max");
    size_t checked = 0;
    for (int i = ak.lo; i <= row_hi; ++i)
      for (int j = col_lo; j <= ak.hi; ++j) {
        Series rhs;
        for (int l = 1; l <= k + 1; ++l) rhs += c.at({k, l}) * pw[l].at(i, j);
        Series lhs = ak.at(i, j);
        ++checked;
        if (e.pass && !(lhs - rhs).is_zero()) {
          e.pass = false;
          e.location += " entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
          e.expected = rhs.str();
          e.actual = lhs.str();
        }
      }
    if (e.pass) e.expected = e.actual = std::to_string(checked) + " entries, trusted indices " + std::to_string(trusted);
    rep.add(e);
  }
  return rep;
}

}  // namespace gwp1
