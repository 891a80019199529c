#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwp1/partition.hpp"

using namespace gwp1;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> pentagonal_counts(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sign = (k % 2) ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p;
}

Rational hook_dimension(const Partition& nu) {
  Partition c = nu.conjugate();
  Rational prod = 1;
  for (int i = 0; i < nu.length(); ++i)
    for (int j = 0; j < nu[i]; ++j) prod *= (nu[i] - j - 1) + (c[j] - i - 1) + 1;
  return factorial(nu.size()) / prod;
}

Rational content_sum(const Partition& l) {
  Rational s = 0;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l[i]; ++j) s += j - i;
  return s;
}

}  // namespace

TEST_CASE("enumeration") {
  auto p0 = enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
  auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == P({4}));
  CHECK(p4[1] == P({3, 1}));
  CHECK(p4[2] == P({2, 2}));
  CHECK(p4[3] == P({2, 1, 1}));
  CHECK(p4[4] == P({1, 1, 1, 1}));
  CHECK(enumerate_partitions(10).size() == 42);
  auto counts = pentagonal_counts(30);
  for (int d = 0; d <= 30; ++d) {
    auto ps = enumerate_partitions(d);
    CHECK(static_cast<long>(ps.size()) == counts[d]);
    if (d <= 12)
      for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i] < ps[i - 1]);
  }
}

TEST_CASE("z_mu and parsing") {
  CHECK(z_mu(Partition()) == 1);
  CHECK(z_mu(P({2, 1, 1})) == 4);
  CHECK(z_mu(P({3, 3, 2})) == 36);
  CHECK(Partition::parse("(3,1)") == P({3, 1}));
  CHECK(Partition::parse("1 3") == P({3, 1}));
  CHECK(Partition::parse("()").empty());
  CHECK(P({2, 1}).str() == "(2,1)");
  CHECK_THROWS(P({1, 2}));
  CHECK_THROWS(Partition::parse("2,x"));
}

TEST_CASE("characters") {
  CHECK(character(P({1}), P({1})) == 1);
  CHECK(character(P({1, 1}), P({2})) == -1);
  CHECK(character(P({2}), P({1, 1})) == 1);
  CHECK_THROWS(character(P({2}), P({1})));
  for (int n = 1; n <= 8; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& nu : ps) CHECK(Rational(character(nu, P(std::vector<int>(n, 1)))) == hook_dimension(nu));
    for (const auto& mu : ps)
      for (const auto& rho : ps) {
        int64_t s = 0;
        for (const auto& nu : ps) s += character(nu, mu) * character(nu, rho);
        CHECK(Rational(s) == (mu == rho ? z_mu(mu) : Rational(0)));
      }
  }
}

TEST_CASE("quadratic eigenvalue") {
  CHECK(f2_eigenvalue(Partition()) == 0);
  CHECK(f2_eigenvalue(P({2})) == 1);
  CHECK(f2_eigenvalue(P({1, 1})) == -1);
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      CHECK(f2_eigenvalue(l) == -f2_eigenvalue(l.conjugate()));
      CHECK(f2_eigenvalue(l) == content_sum(l));
    }
}

TEST_CASE("set partitions") {
  // Bell numbers
  CHECK(set_partitions(0).size() == 1);
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(4).size() == 15);
}
