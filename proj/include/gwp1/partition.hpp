#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwp1/coef.hpp"

namespace gwp1 {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return parts[i]; }
  Partition conjugate() const;
  std::string str() const;  // "(3,1)", "()" for the empty partition
  static Partition parse(const std::string& s);  // accepts "(3,1)", "3,1", "3 1", "()"

  auto operator<=>(const Partition&) const = default;
};

// All partitions of d, reverse lexicographic: (d), (d-1,1), ..., (1^d).
std::vector<Partition> enumerate_partitions(int d);

// |Aut(mu)| * prod(mu_i).
Rational z_mu(const Partition& mu);
// prod mu_i^mu_i / mu_i!
Rational elsv_weight(const Partition& mu);

// Symmetric group character chi^nu evaluated on cycle type mu.
int64_t character(const Partition& nu, const Partition& mu);

// Content sum of lambda: eigenvalue of the quadratic diagonal operator.
Rational f2_eigenvalue(const Partition& lambda);

// Set partitions of {0..n-1}, blocks ordered by their smallest element.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

Rational factorial(int n);

}  // namespace gwp1
