#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gwp1/coef.hpp"

namespace gwp1 {

// Exponent slots of a series. The z/w slots are reused for other formal
// variables (Toda times, ray parameters) by passing different names to str().
constexpr int kSlots = 8;
enum Slot : int { Q = 0, U = 1, Z1 = 2, Z2 = 3, Z3 = 4, W1 = 5, W2 = 6, W3 = 7 };
using Key = std::array<int16_t, kSlots>;
using SlotNames = std::array<const char*, kSlots>;
extern const SlotNames kDefaultNames;

constexpr int INF = 1 << 28;

inline int sat_add(int a, int b) {
  if (a >= INF || b >= INF) return INF;
  return a + b;
}

// Precision of a series value: every monomial with each slot exponent <= hi
// (and, if a group mask is set, total degree over the group <= ghi) is known
// exactly. Monomials outside that box are unknown and never stored.
struct Prec {
  std::array<int, kSlots> hi;
  uint8_t gmask = 0;
  int ghi = INF;

  Prec() { hi.fill(INF); }
  static Prec exact() { return Prec(); }
  Prec with(int slot, int h) const {
    Prec p = *this;
    p.hi[slot] = h;
    return p;
  }
  Prec with_group(uint8_t mask, int h) const {
    Prec p = *this;
    p.gmask = mask;
    p.ghi = h;
    return p;
  }
  bool contains(const Key& k) const;
  int group_degree(const Key& k) const;
  bool operator==(const Prec& o) const = default;
};

// Componentwise intersection. Throws if the two sides carry different
// degree groups.
Prec meet(const Prec& a, const Prec& b);

struct KeyHash {
  size_t operator()(const Key& k) const noexcept;
};

inline Key key_of(std::initializer_list<std::pair<int, int>> slots) {
  Key k{};
  for (auto [s, e] : slots) k[s] = static_cast<int16_t>(e);
  return k;
}

inline Key key_add(const Key& a, const Key& b) {
  Key r;
  for (int i = 0; i < kSlots; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

class Series {
 public:
  using Term = std::pair<Key, Coef>;

  Series();  // exact zero
  Series(const Coef& c);  // NOLINT(google-explicit-constructor) exact constant
  Series(long c) : Series(Coef(c)) {}  // NOLINT(google-explicit-constructor)
  static Series monomial(const Coef& c, const Key& k);
  static Series var(int slot, int power = 1);
  // Build from raw terms; lo gives a valuation lower bound valid for the
  // untruncated value in every slot (defaults to the stored minimum, which is
  // only sound when prec is exact in every slot).
  static Series from_terms(std::vector<Term> terms, const Prec& prec);
  static Series from_terms(std::vector<Term> terms, const Prec& prec, const std::array<int, kSlots>& lo);

  const std::vector<Term>& terms() const { return terms_; }
  const Prec& prec() const { return prec_; }
  const std::array<int, kSlots>& lo() const { return lo_; }
  int glo() const { return glo_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Narrow the precision; terms outside are dropped. Never widens.
  Series truncated(const Prec& p) const;
  Series truncated(int slot, int hi) const { return truncated(prec_.with(slot, hi)); }
  // Replace the declared valuation bound of a slot (caller asserts validity).
  Series with_lo(int slot, int lo) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);

  Series scaled(const Coef& c) const;
  Series times_monomial(const Coef& c, const Key& k) const;
  Series map_coef(const std::function<Coef(const Coef&)>& f) const;

  Coef coeff(const Key& k) const;
  // Coefficient of slot^e as a series in the remaining slots.
  Series extract(int slot, int e) const;
  // Keep only terms whose slot exponent is e (exponent retained).
  Series select(int slot, int e) const;
  // Rename a slot (target slot must be free of exponents).
  Series rename(int from, int to) const;
  // Substitute slot -> c * slot.
  Series rescale_slot(int slot, const Coef& c) const;
  Series derivative(int slot) const;
  // Max and min exponent present in a slot (0 when empty).
  int max_exp(int slot) const;
  int min_exp(int slot) const;

  // Exact equality of the parts both sides know (common precision).
  bool agrees_with(const Series& o) const;
  // Strict equality: same terms and same precision.
  bool operator==(const Series& o) const { return terms_ == o.terms_ && prec_ == o.prec_; }

  std::string str(const SlotNames& names = kDefaultNames) const;

 private:
  friend class SeriesAccumulator;
  void finish_lo_from_terms();

  std::vector<Term> terms_;
  Prec prec_;
  std::array<int, kSlots> lo_;
  int glo_ = INF;
};

// Accumulates terms by exact addition, then produces a Series.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const Prec& p) : prec_(p) {}
  void add(const Key& k, const Coef& c);
  void add(const Series& s, const Coef& scale = Coef(1));
  Series finish(const std::array<int, kSlots>& lo, int glo) const;

 private:
  Prec prec_;
  std::vector<Series::Term> items_;
};

// Truncation window used at result boundaries.
struct Truncation {
  int q_max = 2;
  int u_lo = -8;
  int u_hi = 2;
  std::vector<int> z_orders;  // slot order: z1, z2, z3, w1, w2, w3
  Rational energy_cap = 0;
};

void validate(const Truncation& tr);

// Restrict to the window: q <= q_max, u_lo <= u <= u_hi, z/w <= orders.
// Throws if the series does not know the requested window.
Series window(const Series& s, const Truncation& tr);

Series exp_series(const Series& s);
Series log1p_series(const Series& s);  // log(1 + s)
Series inverse(const Series& s);
Series power(const Series& s, int n);

}  // namespace gwp1
