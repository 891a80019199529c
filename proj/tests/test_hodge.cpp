#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gwp1/hodge.hpp"

using namespace gwp1;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

Truncation trunc(std::vector<int> orders, int u_lo, int u_hi) {
  Truncation tr;
  tr.z_orders = std::move(orders);
  tr.u_lo = u_lo;
  tr.u_hi = u_hi;
  return tr;
}

Rational coef_of(const Series& s, const Key& k) {
  Coef c = s.coeff(k);
  return c.is_zero() ? Rational(0) : c.constant();
}

Key mono(int u, int a, int b = 0, int c = 0) { return key_of({{U, u}, {Z1, a}, {Z2, b}, {Z3, c}}); }

}  // namespace

TEST_CASE("the operator A at integer and symbolic arguments") {
  // u^{-1} <A(1,u)> is H((1),u); its u^{-2} coefficient is H_0(1) = 1
  Series h1 = hodge_at_integers(P({1}), -2, 4);
  CHECK(coef_of(h1, key_of({{U, -2}})) == 1);
  // [z^{-1}] <A(z, uz)> = 1/u
  Prec p = Prec().with(Z1, 2);
  Series a = vacuum_expectation({hodge_A(Z1, p)});
  CHECK(a.extract(Z1, -1) == Series::monomial(1, key_of({{U, -1}})).truncated(a.extract(Z1, -1).prec()));
  CHECK(a.min_exp(Z1) == -1);
  CHECK_THROWS_AS(hodge_A_integer(0, p), std::invalid_argument);
  AFamilySpec bad;
  bad.a = Series(-2);
  bad.bmono = key_of({{U, 1}});
  bad.prec = Prec().with(U, 3);
  CHECK_THROWS_AS(a_family(bad), std::domain_error);
}

TEST_CASE("one-point function") {
  Series h = hodge_npoint(1, true, trunc({4}, -2, 2));
  CHECK(coef_of(h, mono(-2, -1)) == 1);
  CHECK(coef_of(h, mono(-2, 0)) == 0);
  CHECK(coef_of(h, mono(0, 2)) == Rational(1, 24));
  CHECK(coef_of(h, mono(0, 1)) == Rational(-1, 24));
  // connected and disconnected agree for one variable
  CHECK(h == hodge_npoint(1, false, trunc({4}, -2, 2)));
  for (auto& [k, c] : h.terms()) CHECK(k[U] % 2 == 0);
}

TEST_CASE("two-point function in genus zero") {
  Series h = hodge_npoint(2, true, trunc({4, 3}, -2, -2));
  // z1 z2 / (z1 + z2) expanded for |z1| < |z2|
  for (int j = 1; j <= 4; ++j) {
    Rational expect = (j % 2) ? 1 : -1;
    CHECK(coef_of(h, mono(-2, j, 1 - j)) == expect);
  }
  CHECK(h.size() == 4);
  // multiplying by z1 + z2 leaves z1 z2 (up to the z1 truncation edge)
  Series prod = (h * (Series::var(Z1) + Series::var(Z2))).truncated(Z1, 3);
  CHECK(prod.agrees_with(Series::monomial(1, mono(-2, 1, 1))));
  CHECK(prod.size() == 1);
}

TEST_CASE("Hurwitz numbers") {
  CHECK(hurwitz_character(0, P({2})) == Rational(1, 2));
  CHECK(hurwitz_character(0, P({1, 1})) == Rational(1, 2));
  bool none = false;
  CHECK(hurwitz_character(1, P({1}), &none) == 0);
  CHECK(!none);
  CHECK(hurwitz_character(-2, P({1}), &none) == 0);
  CHECK(none);
  CHECK(hurwitz_oracle(0, P({2})) == Rational(1, 2));
  CHECK(hurwitz_oracle(0, P({3})) == 1);
  CHECK(hurwitz_oracle(0, P({1})) == 1);
  CHECK_THROWS(hurwitz_oracle(0, P({7})));
  int compared = 0;
  for (int n = 1; n <= 5; ++n)
    for (auto& mu : enumerate_partitions(n))
      for (int g = -3; g <= 3; ++g) {
        int b = branch_points(g, mu);
        if (b < 0 || b > 6) continue;
        CHECK(hurwitz_character(g, mu) == hurwitz_oracle(g, mu));
        ++compared;
      }
  CHECK(compared > 40);
}

TEST_CASE("ELSV inversion") {
  CHECK(elsv_hodge(0, P({1})) == 1);
  CHECK(elsv_hodge(1, P({2})) == Rational(1, 12));
  // H_0(1,1) = H°_0(1,1) + 2 H°_0(1) H°_1(1) with H°_0(z1,z2) = z1 z2/(z1+z2),
  // H°_0(z) = 1/z, H°_1(z) = (z^2 - z)/24
  CHECK(elsv_hodge(0, P({1, 1})) == Rational(1, 2));
  CHECK(elsv_hodge(-1, P({1, 1})) == 1);
  // one-point check: H_1(m) = (m^2 - m)/24
  for (int m = 1; m <= 5; ++m) CHECK(elsv_hodge(1, P({m})) == frac(m * m - m, 24));
}

TEST_CASE("operator side equals character side at integers") {
  for (int n = 1; n <= 4; ++n)
    for (auto& mu : enumerate_partitions(n)) {
      Series op = hodge_at_integers(mu, -8, 4);
      Series ch = hodge_at_integers_character(mu, -8, 4);
      CHECK_MESSAGE(op == ch, mu.str());
    }
}

TEST_CASE("connected and disconnected families") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rnd = [&] { return Series::monomial(Coef(d(rng)), key_of({{U, d(rng)}})) + Series(d(rng)); };
  NPointFamily c1{{1u, rnd()}};
  CHECK(to_disconnected(c1, 1).at(1) == c1.at(1));
  NPointFamily c2{{1u, rnd()}, {2u, rnd()}, {3u, rnd()}};
  CHECK(to_disconnected(c2, 2).at(3) == c2.at(3) + c2.at(1) * c2.at(2));
  for (int trial = 0; trial < 5; ++trial) {
    NPointFamily c3;
    for (unsigned m = 1; m < 8; ++m) c3[m] = rnd();
    NPointFamily back = to_connected(to_disconnected(c3, 3), 3);
    for (unsigned m = 1; m < 8; ++m) CHECK(back.at(m) == c3.at(m));
    CHECK(to_disconnected(c3, 3).at(0) == Series(1));
    CHECK(back.at(0).is_zero());
  }
  NPointFamily missing{{1u, rnd()}};
  CHECK_THROWS_AS(to_disconnected(missing, 2), std::invalid_argument);
}

TEST_CASE("two-point closed forms") {
  Truncation tr = trunc({3, 3}, -2, 2);
  Series op = hodge_npoint(2, true, tr);
  Series closed = two_point_closed_form(tr);
  CHECK(op == closed);
  Series hyp = two_point_hypergeometric(tr);
  CHECK(hyp == closed);
  for (auto& [k, c] : op.terms()) CHECK(k[U] % 2 == 0);
  // genus 1 and 2 parts are symmetric polynomials
  for (int e : {0, 2}) {
    Series part = op.extract(U, e);
    CHECK(!part.is_zero());
    for (auto& [k, c] : part.terms()) {
      CHECK(k[Z1] >= 0);
      CHECK(k[Z2] >= 0);
      Key sw = k;
      std::swap(sw[Z1], sw[Z2]);
      CHECK(part.coeff(sw) == c);
    }
  }
  // genus 1 on M_{1,2}: psi-psi integrals are 1/24, psi_i lambda_1 is 1/24
  CHECK(coef_of(op, mono(0, 1, 1)) == 0);
  CHECK(coef_of(op, mono(0, 2, 1)) == Rational(-1, 24));
  CHECK(coef_of(op, mono(0, 3, 1)) == Rational(1, 24));
  CHECK(coef_of(op, mono(0, 2, 2)) == Rational(1, 24));
}

TEST_CASE("three-point function") {
  Series h = hodge_npoint(3, true, trunc({2, 2, 2}, -2, 0));
  // genus zero: z1 z2 z3 times the point class of M_{0,3}
  Series g0 = h.extract(U, -2);
  CHECK(g0.size() == 1);
  CHECK(coef_of(h, mono(-2, 1, 1, 1)) == 1);
  Series g1 = h.extract(U, 0);
  for (auto& [k, c] : g1.terms()) {
    CHECK(k[Z1] >= 1);
    CHECK(k[Z2] >= 1);
    CHECK(k[Z3] >= 1);
    std::array<int, 3> e{k[Z1], k[Z2], k[Z3]};
    std::array<int, 3> perm{0, 1, 2};
    do {
      Key s = k;
      s[Z1] = e[perm[0]];
      s[Z2] = e[perm[1]];
      s[Z3] = e[perm[2]];
      CHECK(g1.coeff(s) == c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (auto& [k, c] : h.terms()) CHECK(k[U] % 2 == 0);
}

TEST_CASE("Hodge integrals") {
  CHECK(hodge_integral(1, {1}) == Rational(1, 24));
  CHECK(hodge_integral(1, {0}) == Rational(1, 24));  // lambda_1 on M_{1,1}
  CHECK(hodge_integral(0, {0, 0, 0}) == 1);
  CHECK(hodge_integral(0, {1, 0, 0}) == 0);  // dimension mismatch
  CHECK(hodge_integral(0, {2, 0}) == 0);     // M_{0,2} is unstable; only the unstable convention remains
  CHECK(hodge_integral(1, {1, 1}) == Rational(1, 24));
  CHECK(hodge_integral(1, {2, 0}) == Rational(1, 24));
  CHECK(hodge_integral(2, {4}) == Rational(1, 1152));
  CHECK(hodge_integral(2, {2}) == Rational(7, 5760));  // psi^{2g-2} lambda_g
}
