// Acceptance run: one PASS/FAIL line per criterion. Every check is an exact
// equality of rationals, rational functions in t, or truncated series.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "gwp1/verify.hpp"

using namespace gwp1;

namespace {

Key K(std::initializer_list<std::pair<int, int>> e) { return key_of(e); }

// Collects the outcome of one criterion; keeps the first failure message.
struct Outcome {
  size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  void absorb(const Report& r) {
    for (const auto& e : r.entries)
      expect(e.pass, e.identity + " | " + e.location + " | expected " + e.expected + " | actual " + e.actual);
  }
};

Series exact_series_sum(int q_max) {
  Series s;
  for (int d = 0; d <= q_max; ++d) s += Series::monomial(Coef(Rational(1) / factorial(d)), K({{Q, d}, {U, -2 * d}}));
  return s;
}

// ---- criteria ----

void unstable_and_classical(Outcome& o) {
  // Hodge side: 1/z1 and z1 z2/(z1 + z2), the latter expanded for |z1| < |z2|
  Truncation h1;
  h1.z_orders = {3};
  h1.u_lo = h1.u_hi = -2;
  Series one = hodge_npoint(1, true, h1);
  o.expect(one == window(Series::monomial(1, K({{U, -2}, {Z1, -1}})), h1), "genus-0 Hodge one-point function");
  Truncation h2;
  h2.z_orders = {4, 4};
  h2.u_lo = h2.u_hi = -2;
  Series two = hodge_npoint(2, true, h2);
  Series expect;
  for (int j = 1; j <= 4; ++j) expect += Series::monomial(Coef(j % 2 ? 1 : -1), K({{U, -2}, {Z1, j}, {Z2, 1 - j}}));
  o.expect(two == window(expect, h2), "genus-0 Hodge two-point function");

  // unstable equivariant functions in degree 0
  Truncation tr = uniform_truncation(1, -2, -2, 3);
  auto deg0 = [](const Series& s) { return s.extract(Q, 0); };
  NPointFamily zw = g_connected_family(1, 1, tr);
  o.expect(deg0(zw.at(1)).coeff(K({{U, -2}, {Z1, -1}})) == Coef(1) && deg0(zw.at(1)).size() == 1, "G(z1) = 1/z1");
  o.expect(deg0(zw.at(2)).coeff(K({{U, -2}, {W1, -1}})) == Coef(1) && deg0(zw.at(2)).size() == 1, "G(w1) = 1/w1");
  o.expect(deg0(zw.at(3)).is_zero(), "G(z1, w1) = 0");
  Series zz = deg0(g_connected_family(2, 0, tr).at(3));
  Series ww = deg0(g_connected_family(0, 2, tr).at(3));
  bool zz_ok = zz.size() == 3, ww_ok = ww.size() == 3;
  for (int j = 1; j <= 3; ++j) {
    Coef s = Coef::t_power(1).scaled(Rational(j % 2 ? 1 : -1));
    zz_ok = zz_ok && zz.coeff(K({{U, -2}, {Z1, j}, {Z2, 1 - j}})) == s;
    // tangent weight -t at infinity; the adjoint puts w2 inside
    ww_ok = ww_ok && ww.coeff(K({{U, -2}, {W1, 1 - j}, {W2, j}})) == -s;
  }
  o.expect(zz_ok, "G(z1, z2) = t z1 z2/(z1 + z2)");
  o.expect(ww_ok, "G(w1, w2) = -t w1 w2/(w1 + w2)");

  // zero-point functions
  Truncation t3 = uniform_truncation(3, -8, 2, 3);
  o.expect(g_connected_family(0, 0, t3).at(0) == window(Series::monomial(1, K({{Q, 1}, {U, -2}})), t3),
           "connected 0-point function = q u^-2");
  o.expect(g_all_degrees(0, 0, t3) == window(exact_series_sum(3), t3), "G() = e^{q/u^2}");

  // classical genus-0 potential from the degree-0 triple products
  auto triple = [](int a) {
    InsertionList l;
    for (int i = 0; i < 3; ++i) l.push_back({i < a ? Cls::One : Cls::Hyperplane, 0});
    return tau_connected(l, 0).coeff(K({{U, -2}})).scaled(Rational(1) / (factorial(a) * factorial(3 - a)));
  };
  o.expect(triple(3).is_zero(), "F^c: no z0^3 term");
  o.expect(triple(2) == Coef(Rational(1, 2)), "F^c: z0^2 y0 / 2");
  o.expect(triple(1) == Coef::t_power(1).scaled(Rational(-1, 2)), "F^c: -t z0 y0^2 / 2");
  o.expect(triple(0) == Coef::t_power(2).scaled(Rational(1, 6)), "F^c: t^2 y0^3 / 6");
}

void route_equality(Outcome& o) {
  Truncation tr = uniform_truncation(3, -8, 2, 3);
  for (int d = 0; d <= 2; ++d)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; n + m <= 2; ++m) {
        std::ostringstream at;
        at << "d=" << d << " n=" << n << " m=" << m;
        o.expect(g_localization(n, m, d, tr) == g_operator(n, m, d, tr), at.str());
      }
  for (auto [n, m] : {std::pair{0, 0}, {1, 0}, {0, 1}})
    o.expect(g_localization(n, m, 3, tr) == g_operator(n, m, 3, tr), "d=3 n+m<=1");
}

void hurwitz_triple(Outcome& o) {
  for (int size = 1; size <= 5; ++size)
    for (const auto& mu : enumerate_partitions(size))
      for (int g = -4; g <= 4; ++g) {
        int b = branch_points(g, mu);
        if (b < 0 || b > 6) continue;
        Rational ch = hurwitz_character(g, mu);
        Rational oracle = hurwitz_oracle(g, mu);
        // ELSV in reverse: Hodge integral from the operator at integers
        int e = 2 * g - 2;
        Coef h = hodge_at_integers(mu, e, e).coeff(K({{U, e}}));
        Coef via_hodge = h.scaled(factorial(b) * elsv_weight(mu) / z_mu(mu));
        std::string at = "g=" + std::to_string(g) + " mu=" + mu.str();
        o.expect(ch == oracle, at + " character vs enumeration");
        o.expect(Coef(ch) == via_hodge, at + " character vs Hodge route");
      }
}

void hodge_at_integers_match(Outcome& o) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : enumerate_partitions(n))
      o.expect(hodge_at_integers(mu, -8, 4) == hodge_at_integers_character(mu, -8, 4), mu.str());
}

void commutators(Outcome& o) { o.absorb(check_commutator_A(-2, 3, 4, 4)); }

void two_point(Outcome& o) {
  Truncation tr;
  tr.q_max = 0;
  tr.z_orders = {4, 4};
  tr.u_lo = -2;
  tr.u_hi = 4;
  Series op = hodge_npoint(2, true, tr);
  o.expect(two_point_closed_form(tr) == op, "closed form vs operator");
  o.expect(two_point_hypergeometric(tr) == op, "hypergeometric form vs operator");
  Series g0 = op.select(U, -2);
  Series expect;
  for (int j = 1; j <= 4; ++j) expect += Series::monomial(Coef(j % 2 ? 1 : -1), K({{U, -2}, {Z1, j}, {Z2, 1 - j}}));
  o.expect((g0 - expect).is_zero(), "genus-0 layer = z1 z2/(z1 + z2)");
}

void toda_suite(Outcome& o) {
  Report t = check_toda(2, 2, 2);
  o.absorb(t);
  bool has_eqt = false, has_gztd = false;
  for (const auto& e : t.entries) {
    has_eqt = has_eqt || e.identity.rfind("2-Toda: ", 0) == 0;
    has_gztd = has_gztd || e.identity.rfind("genus 0: ", 0) == 0;
  }
  o.expect(has_eqt && has_gztd, "Toda report covers both equations");
  for (int d = 0; d <= 2; ++d)
    for (auto [n, m] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}})
      o.absorb(check_divisor(d, n, m, uniform_truncation(d, -8, 2, 2)));
  std::vector<InsertionList> lists{{},
                                   {{Cls::Zero, 1}},
                                   {{Cls::Infinity, 2}},
                                   {{Cls::Zero, 2}, {Cls::Infinity, 1}},
                                   {{Cls::Zero, 0}, {Cls::Zero, 1}},
                                   {{Cls::Infinity, 1}, {Cls::Infinity, 2}}};
  for (int g = 0; g <= 1; ++g)
    for (int d = 0; d <= 2; ++d)
      for (const auto& ins : lists) o.absorb(check_string(g, d, ins));
}

void pluecker_and_T(Outcome& o) {
  o.absorb(check_pluecker({{Rational(1), 0, 0, 0},
                           {Rational(1, 2), -1, Rational(2, 3), 0},
                           {Rational(-3, 2), Rational(1, 3), 1, Rational(1, 4)}},
                          2, 3));
  o.absorb(check_T_conjugation(3, 3));
  o.absorb(check_translation(2, 2, 2));
}

void dressing(Outcome& o) {
  o.absorb(check_dressing_coefficients(4));
  HalfInfiniteMatrix a0 = bA_matrix(0, 7);
  int trusted = (a0 * a0 * a0).trusted_size();
  o.expect(trusted >= 8, "trusted window of A_0^3 has " + std::to_string(trusted) + " indices");
  o.absorb(check_dressing_identity(2, 7));
}

void stationary(Outcome& o) {
  for (int d = 0; d <= 2; ++d)
    for (int n = 1; n <= 2; ++n) {
      Series lim = stationary_limit(n, d, 3);
      Series ref = stationary_by_degree(n, d, 3);
      std::string at = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      o.expect(lim.agrees_with(ref) && ref.agrees_with(lim) && !ref.is_zero(), at);
    }
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {"1", "unstable and classical closed-form values", 10, unstable_and_classical},
      {"2", "fixed-point sum equals operator formula", 300, route_equality},
      {"3", "Hurwitz numbers: characters, enumeration, Hodge route", 120, hurwitz_triple},
      {"4", "A at integers equals ELSV/character Hodge series", 120, hodge_at_integers_match},
      {"5", "commutation relations of the A_k", 120, commutators},
      {"6", "two-point closed form equals operator two-point function", 60, two_point},
      {"7", "2-Toda, genus-0 Toda, divisor and string equations", 600, toda_suite},
      {"8", "Pluecker relation and conjugation by T", 120, pluecker_and_T},
      {"9", "dressing coefficients and matrix identity", 120, dressing},
      {"10", "non-equivariant limit equals stationary theory", 120, stationary},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && o.first_failure.empty() && o.checks > 0 && secs <= c.budget_s;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << o.checks << " checks, "
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s of " << c.budget_s << " s)";
    if (!error.empty()) std::cout << " exception: " << error;
    if (!o.first_failure.empty()) std::cout << " first failure: " << o.first_failure;
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
