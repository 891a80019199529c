#include "gwp1/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gwp1 {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw std::invalid_argument("partition: parts must be positive");
  if (!std::is_sorted(parts.rbegin(), parts.rend())) throw std::invalid_argument("partition: parts must be weakly decreasing");
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts.empty())
    for (int j = 1; j <= parts[0]; ++j) {
      int cnt = 0;
      for (int x : parts) cnt += (x >= j);
      c.push_back(cnt);
    }
  return Partition(c);
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream in(s);
  std::vector<int> p;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("partition: bad token '" + tok + "'");
    p.push_back(v);
  }
  std::sort(p.rbegin(), p.rend());
  return Partition(p);
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(d, d, cur, out);
  return out;
}

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

Rational z_mu(const Partition& mu) {
  Rational z = 1;
  std::map<int, int> mult;
  for (int x : mu.parts) {
    z *= x;
    ++mult[x];
  }
  for (auto [part, m] : mult) z *= factorial(m);
  return z;
}

Rational elsv_weight(const Partition& mu) {
  Rational w = 1;
  for (int x : mu.parts) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), x, x);
    w *= Rational(p) / factorial(x);
  }
  return w;
}

namespace {

// Murnaghan-Nakayama on bead positions: removing a border strip of size r
// moves one bead from b to b - r; the sign counts beads jumped over.
int64_t mn(const std::vector<int>& beads, const std::vector<int>& mu, size_t idx,
           std::map<std::pair<std::vector<int>, size_t>, int64_t>& memo) {
  if (idx == mu.size()) return 1;
  auto key = std::make_pair(beads, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = mu[idx];
  int64_t total = 0;
  for (size_t i = 0; i < beads.size(); ++i) {
    int b = beads[i], nb = b - r;
    if (nb < 0 || std::find(beads.begin(), beads.end(), nb) != beads.end()) continue;
    int between = 0;
    for (int x : beads) between += (x > nb && x < b);
    std::vector<int> next = beads;
    next[i] = nb;
    std::sort(next.rbegin(), next.rend());
    int64_t sub = mn(next, mu, idx + 1, memo);
    total += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct CharTable {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<std::vector<int64_t>> chi;  // chi[nu][mu]
};

const CharTable& table_for(int n) {
  static std::mutex m;
  static std::map<int, CharTable> tables;
  std::lock_guard<std::mutex> lock(m);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  CharTable t;
  t.parts = enumerate_partitions(n);
  for (size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = static_cast<int>(i);
  t.chi.assign(t.parts.size(), std::vector<int64_t>(t.parts.size()));
  for (size_t a = 0; a < t.parts.size(); ++a) {
    const auto& nu = t.parts[a];
    int len = nu.length();
    std::vector<int> beads;
    for (int i = 0; i < len; ++i) beads.push_back(nu[i] - (i + 1) + len);
    for (size_t b = 0; b < t.parts.size(); ++b) {
      std::map<std::pair<std::vector<int>, size_t>, int64_t> memo;
      t.chi[a][b] = mn(beads, t.parts[b].parts, 0, memo);
    }
  }
  return tables.emplace(n, std::move(t)).first->second;
}

}  // namespace

int64_t character(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("character: size mismatch");
  const CharTable& t = table_for(nu.size());
  return t.chi[t.index.at(nu)][t.index.at(mu)];
}

Rational f2_eigenvalue(const Partition& lambda) {
  // sum over rows i of ((l_i - i + 1/2)^2 - (-i + 1/2)^2) / 2
  Rational s = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational a = Rational(lambda[i - 1] - i) + Rational(1, 2);
    Rational b = Rational(-i) + Rational(1, 2);
    s += (a * a - b * b) / 2;
  }
  return s;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (auto& block : cur) {
      block.push_back(i);
      self(self, i + 1);
      block.pop_back();
    }
    cur.push_back({i});
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);
  return out;
}

}  // namespace gwp1
