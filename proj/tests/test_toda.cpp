#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwp1/verify.hpp"

using namespace gwp1;

namespace {

Key K(std::initializer_list<std::pair<int, int>> e) { return key_of(e); }

void require_ok(const Report& r) {
  CHECK(!r.entries.empty());
  for (const auto& e : r.entries)
    CHECK_MESSAGE(e.pass, e.identity << " | " << e.location << " | expected " << e.expected << " | actual "
                                      << e.actual);
}

}  // namespace

TEST_CASE("report comparison detects differences and missing precision") {
  Report r;
  Series a = Series::var(Z1).truncated(Z1, 3);
  r.compare("same", "", a, a, Prec().with(Z1, 3));
  Series b = a + Series::monomial(Coef(2), K({{Z1, 2}}));
  r.compare("differs", "", a, b, Prec().with(Z1, 3));
  r.compare("outside the box", "", a, b, Prec().with(Z1, 1));
  r.compare("too coarse", "", a, a, Prec().with(Z1, 4));
  REQUIRE(r.entries.size() == 4);
  CHECK(r.entries[0].pass);
  CHECK(!r.entries[1].pass);
  CHECK(r.entries[1].location.find("z1^2") != std::string::npos);
  CHECK(r.entries[1].expected == "2");
  CHECK(r.entries[2].pass);
  CHECK(!r.entries[3].pass);
  CHECK(r.failures() == 2);
  CHECK(!r.ok());
}

TEST_CASE("commutation relations of the A_k") {
  Report r = check_commutator_A(-2, 3, 4, 4);
  CHECK(r.entries.size() == 36);
  require_ok(r);
  // spot values on the vacuum
  OpPtr full = hodge_A(Z1, Prec().with(Z1, 3));
  OpPtr a0 = coefficient_op(full, Z1, 0), a1 = coefficient_op(full, Z1, 1), a2 = coefficient_op(full, Z1, 2);
  FockVector v = vacuum(0);
  auto comm = [&](const OpPtr& x, const OpPtr& y) { return expectation(v, {x, y}, v) - expectation(v, {y, x}, v); };
  CHECK(comm(a1, a0) == Series(1));
  CHECK(comm(a0, a1) == Series(-1));
  CHECK(comm(a2, a2).is_zero());
}

TEST_CASE("divisor equation") {
  for (int d = 0; d <= 2; ++d)
    for (auto [n, m] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}})
      require_ok(check_divisor(d, n, m, uniform_truncation(d, -6, 1, 2)));
  // no other insertions in degree 1: (1 - 1/24) u^-2
  Truncation tr = uniform_truncation(1, -2, -2, 0);
  tr.z_orders[0] = 1;
  Series one = g_operator(1, 0, 1, tr).extract(Z1, 1);
  CHECK(one.coeff(K({{U, -2}})) == Coef(Rational(23, 24)));
  CHECK(one.size() == 1);
}

TEST_CASE("string equation") {
  using I = InsertionList;
  require_ok(check_string(0, 1, I{}));
  require_ok(check_string(0, 1, I{{Cls::Zero, 1}}));
  require_ok(check_string(0, 0, I{{Cls::Zero, 1}}));
  for (int g = 0; g <= 1; ++g)
    for (int d = 0; d <= 2; ++d) {
      require_ok(check_string(g, d, I{{Cls::Zero, 2}}));
      require_ok(check_string(g, d, I{{Cls::Infinity, 1}, {Cls::Zero, 0}}));
      require_ok(check_string(g, d, I{{Cls::Infinity, 2}, {Cls::Infinity, 1}}));
      require_ok(check_string(g, d, I{{Cls::Infinity, 1}, {Cls::Infinity, 2}}));
      require_ok(check_string(g, d, I{{Cls::Zero, 0}, {Cls::Zero, 1}}));
    }
  CHECK_THROWS_AS(check_string(0, 1, I{{Cls::One, 0}}), std::invalid_argument);
}

TEST_CASE("tau function normalization") {
  // at x = 0 the matrix element is e^{q/u^2} in every charge (reduced)
  for (int c : {-1, 0, 1}) {
    Series tau = tau_formal(2, 1, c);
    for (int s : {X0, X1, XS0, XS1}) tau = tau.extract(s, 0);
    Series expect;
    for (int d = 0; d <= 2; ++d) expect += Series::monomial(Coef(Rational(1) / factorial(d)), K({{Q, d}, {U, -2 * d}}));
    CHECK((tau - expect).is_zero());
    CHECK(tau.prec().hi[Q] == 2);
  }
  // the linear term in x_0 is <(alpha_1 - 1/24) e^{alpha_1} q^H e^{alpha_-1}>
  Series f = free_energy(1, 1);
  CHECK(f.coeff(K({{X0, 1}})) == Coef(Rational(-1, 24)));
  CHECK(f.coeff(K({{X0, 1}, {Q, 1}, {U, -2}})) == Coef(1));
}

TEST_CASE("2-Toda equation and its consequences") {
  Report r = check_toda(2, 2, 0);
  CHECK(r.entries.size() == 7);
  require_ok(r);
}

TEST_CASE("translation by T") { require_ok(check_translation(2, 2, 0)); }

TEST_CASE("Pluecker relation") {
  std::vector<std::array<Rational, 4>> samples{{Rational(0), 0, 0, 0},
                                               {Rational(1), 0, 0, 0},
                                               {Rational(1, 2), -1, Rational(2, 3), 0},
                                               {Rational(-3, 2), Rational(1, 3), 1, Rational(1, 4)}};
  require_ok(check_pluecker(samples, 2, 3));
}

TEST_CASE("conjugation by T") {
  require_ok(check_T_conjugation(3, 3));
  // diagonal values: 1/2 on the vacuum and 1 + 1 + 1/2 on (1) in charge 1
  FockVector v = gwp1::apply(*t_shift(-1), gwp1::apply(*h_op(), gwp1::apply(*t_shift(1), vacuum(0))));
  CHECK(v == scale(vacuum(0), Series(Coef(Rational(1, 2)))));
  State s{Partition({1}), 1};
  FockVector w = gwp1::apply(*t_shift(-1), gwp1::apply(*h_op(), gwp1::apply(*t_shift(1), basis(s))));
  // energy(s) = 1 + 1/2, so the conjugate gives 3/2 + 1 + 1/2
  CHECK(w == scale(basis(s), Series(Coef(Rational(3)))));
}

TEST_CASE("dressing coefficients") {
  auto c = dressing_coefficients(4);
  CHECK(c.size() == 15);
  CHECK(c.at({0, 1}) == Series(1));
  CHECK(c.at({1, 2}) == Series::monomial(Coef(Rational(1, 2)), K({{U, 1}})));
  CHECK(c.at({1, 1}) == Series(-Coef::t_power(1)));
  require_ok(check_dressing_coefficients(4));
}

TEST_CASE("matrix realization and the dressing identity") {
  HalfInfiniteMatrix a0 = bA_matrix(0, 7);
  CHECK(a0.trusted_size() == 15);
  HalfInfiniteMatrix a2 = a0 * a0;
  // each product loses the operand bandwidth at both ends of the window
  CHECK(a2.trusted_size() == 13);
  CHECK((a2 * a0).trusted_size() == 11);
  // k = 0 is the identity A_0 = A_0; the u -> 0 leading term of each entry
  // is the coefficient of the Pochhammer expansion
  auto c = dressing_coefficients(3);
  for (int k = 0; k <= 2; ++k) {
    HalfInfiniteMatrix ak = bA_matrix(k, 5);
    for (const auto& [ij, s] : ak.entries) {
      int r = ij.second - ij.first;
      if (r < 1) continue;
      CHECK(s.min_exp(U) >= r - 1);
      CHECK(s.coeff(K({{U, r - 1}})) == c.at({k, r}).coeff(K({{U, r - 1}})));
    }
  }
  Report r = check_dressing_identity(2, 7);
  CHECK(r.entries.size() == 3);
  require_ok(r);
  CHECK_THROWS_AS(check_dressing_identity(3, 1), std::invalid_argument);
}
