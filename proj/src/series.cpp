#include "gwp1/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gwp1 {

const SlotNames kDefaultNames = {"q", "u", "z1", "z2", "z3", "w1", "w2", "w3"};

int Prec::group_degree(const Key& k) const {
  int d = 0;
  for (int i = 0; i < kSlots; ++i)
    if (gmask & (1u << i)) d += k[i];
  return d;
}

bool Prec::contains(const Key& k) const {
  for (int i = 0; i < kSlots; ++i)
    if (k[i] > hi[i]) return false;
  if (gmask && group_degree(k) > ghi) return false;
  return true;
}

Prec meet(const Prec& a, const Prec& b) {
  Prec r;
  for (int i = 0; i < kSlots; ++i) r.hi[i] = std::min(a.hi[i], b.hi[i]);
  if (a.gmask && b.gmask && a.gmask != b.gmask)
    throw std::invalid_argument("series: incompatible degree groups");
  r.gmask = a.gmask | b.gmask;
  r.ghi = std::min(a.ghi, b.ghi);
  return r;
}

size_t KeyHash::operator()(const Key& k) const noexcept {
  uint64_t a = 0, b = 0;
  for (int i = 0; i < 4; ++i) a = (a << 16) | static_cast<uint16_t>(k[i]);
  for (int i = 4; i < 8; ++i) b = (b << 16) | static_cast<uint16_t>(k[i]);
  uint64_t h = a * 0x9E3779B97F4A7C15ULL ^ (b + 0x7F4A7C159E3779B9ULL + (a << 6) + (a >> 2));
  return static_cast<size_t>(h ^ (h >> 29));
}

namespace {

std::array<int, kSlots> inf_lo() {
  std::array<int, kSlots> a;
  a.fill(INF);
  return a;
}

int group_lo_from(const std::array<int, kSlots>& lo, uint8_t mask) {
  int g = 0;
  for (int i = 0; i < kSlots; ++i)
    if (mask & (1u << i)) g = sat_add(g, lo[i]);
  return g;
}

}  // namespace

Series::Series() : lo_(inf_lo()) {}

Series::Series(const Coef& c) : lo_(inf_lo()) {
  if (!c.is_zero()) {
    terms_.push_back({Key{}, c});
    lo_.fill(0);
    glo_ = 0;
  }
}

Series Series::monomial(const Coef& c, const Key& k) {
  Series s;
  if (c.is_zero()) return s;
  s.terms_.push_back({k, c});
  for (int i = 0; i < kSlots; ++i) s.lo_[i] = k[i];
  s.glo_ = 0;
  return s;
}

Series Series::var(int slot, int power) {
  Key k{};
  k[slot] = static_cast<int16_t>(power);
  return monomial(Coef(1), k);
}

void Series::finish_lo_from_terms() {
  lo_ = inf_lo();
  for (const auto& [k, c] : terms_)
    for (int i = 0; i < kSlots; ++i) lo_[i] = std::min(lo_[i], static_cast<int>(k[i]));
  glo_ = INF;
  if (prec_.gmask)
    for (const auto& [k, c] : terms_) glo_ = std::min(glo_, prec_.group_degree(k));
}

Series Series::from_terms(std::vector<Term> terms, const Prec& prec) {
  SeriesAccumulator acc(prec);
  for (auto& [k, c] : terms) acc.add(k, c);
  Series s = acc.finish(inf_lo(), INF);
  s.finish_lo_from_terms();
  return s;
}

Series Series::from_terms(std::vector<Term> terms, const Prec& prec, const std::array<int, kSlots>& lo) {
  SeriesAccumulator acc(prec);
  for (auto& [k, c] : terms) acc.add(k, c);
  return acc.finish(lo, prec.gmask ? group_lo_from(lo, prec.gmask) : INF);
}

Series Series::truncated(const Prec& p) const {
  Series s;
  s.prec_ = meet(prec_, p);
  s.lo_ = lo_;
  s.glo_ = prec_.gmask ? glo_ : (s.prec_.gmask ? group_lo_from(lo_, s.prec_.gmask) : INF);
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    if (s.prec_.contains(t.first)) s.terms_.push_back(t);
  return s;
}

Series Series::with_lo(int slot, int lo) const {
  Series s = *this;
  s.lo_[slot] = lo;
  if (s.prec_.gmask) s.glo_ = std::min(s.glo_, group_lo_from(s.lo_, s.prec_.gmask));
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Series& Series::operator+=(const Series& o) {
  Prec p = meet(prec_, o.prec_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      if (p.contains(terms_[i].first)) out.push_back(std::move(terms_[i]));
      ++i;
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      if (p.contains(o.terms_[j].first)) out.push_back(o.terms_[j]);
      ++j;
    } else {
      if (p.contains(terms_[i].first)) {
        Coef c = terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) out.push_back({terms_[i].first, std::move(c)});
      }
      ++i;
      ++j;
    }
  }
  int ga = prec_.gmask ? glo_ : group_lo_from(lo_, p.gmask);
  int gb = o.prec_.gmask ? o.glo_ : group_lo_from(o.lo_, p.gmask);
  for (int k = 0; k < kSlots; ++k) lo_[k] = std::min(lo_[k], o.lo_[k]);
  glo_ = p.gmask ? std::min(ga, gb) : INF;
  prec_ = p;
  terms_ = std::move(out);
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series operator*(const Series& a, const Series& b) {
  Prec p = meet(a.prec_, b.prec_);
  for (int i = 0; i < kSlots; ++i)
    p.hi[i] = std::min(p.hi[i], std::min(sat_add(a.prec_.hi[i], b.lo_[i]), sat_add(b.prec_.hi[i], a.lo_[i])));
  std::array<int, kSlots> lo;
  for (int i = 0; i < kSlots; ++i) lo[i] = sat_add(a.lo_[i], b.lo_[i]);
  int glo = INF;
  if (p.gmask) {
    int ga = a.prec_.gmask ? a.glo_ : group_lo_from(a.lo_, p.gmask);
    int gb = b.prec_.gmask ? b.glo_ : group_lo_from(b.lo_, p.gmask);
    p.ghi = std::min(p.ghi, std::min(sat_add(a.prec_.ghi, gb), sat_add(b.prec_.ghi, ga)));
    glo = sat_add(ga, gb);
  }
  Series r;
  r.prec_ = p;
  r.lo_ = lo;
  r.glo_ = glo;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Series& one = a.terms_.size() == 1 ? a : b;
    const Series& many = a.terms_.size() == 1 ? b : a;
    const auto& [k1, c1] = one.terms_[0];
    r.terms_.reserve(many.terms_.size());
    for (const auto& [k, c] : many.terms_) {
      Key kk = key_add(k, k1);
      if (p.contains(kk)) r.terms_.push_back({kk, c * c1});
    }
    return r;
  }
  std::unordered_map<Key, Coef, KeyHash> acc;
  acc.reserve(a.terms_.size() * 2);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Key kk = key_add(ka, kb);
      if (!p.contains(kk)) continue;
      auto [it, fresh] = acc.try_emplace(kk);
      if (fresh)
        it->second = ca * cb;
      else
        it->second += ca * cb;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({k, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Series::Term& x, const Series::Term& y) { return x.first < y.first; });
  return r;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series Series::scaled(const Coef& c) const {
  if (c.is_zero()) {
    Series s = *this;
    s.terms_.clear();
    return s;
  }
  Series s = *this;
  for (auto& t : s.terms_) t.second *= c;
  return s;
}

Series Series::times_monomial(const Coef& c, const Key& k) const { return *this * monomial(c, k); }

Series Series::map_coef(const std::function<Coef(const Coef&)>& f) const {
  Series s = *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    Coef v = f(c);
    if (!v.is_zero()) out.push_back({k, std::move(v)});
  }
  s.terms_ = std::move(out);
  return s;
}

Coef Series::coeff(const Key& k) const {
  if (!prec_.contains(k)) throw std::out_of_range("series: coefficient outside known precision");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, const Key& key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return Coef();
}

Series Series::extract(int slot, int e) const {
  if (e > prec_.hi[slot]) throw std::out_of_range("series: extraction beyond precision");
  Series s;
  s.prec_ = prec_;
  s.prec_.hi[slot] = INF;
  s.lo_ = lo_;
  s.lo_[slot] = 0;
  if (prec_.gmask & (1u << slot)) {
    s.prec_.ghi = sat_add(prec_.ghi, -e);
    s.glo_ = glo_ >= INF ? INF : glo_ - e;
    // the slot is now constant 0, so it leaves the group
    s.prec_.gmask &= static_cast<uint8_t>(~(1u << slot));
    if (s.prec_.gmask == 0) {
      s.prec_.ghi = INF;
      s.glo_ = INF;
    }
  } else {
    s.glo_ = glo_;
  }
  for (const auto& [k, c] : terms_) {
    if (k[slot] != e) continue;
    Key kk = k;
    kk[slot] = 0;
    s.terms_.push_back({kk, c});
  }
  std::sort(s.terms_.begin(), s.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return s;
}

Series Series::select(int slot, int e) const {
  Series s = *this;
  s.terms_.clear();
  for (const auto& t : terms_)
    if (t.first[slot] == e) s.terms_.push_back(t);
  return s;
}

Series Series::rename(int from, int to) const {
  if (from == to) return *this;
  Series s;
  s.prec_ = prec_;
  s.prec_.hi[to] = prec_.hi[from];
  s.prec_.hi[from] = INF;
  s.lo_ = lo_;
  s.lo_[to] = lo_[from];
  s.lo_[from] = terms_.empty() ? INF : 0;
  if (prec_.gmask) throw std::logic_error("series: rename with degree group");
  s.glo_ = INF;
  for (const auto& [k, c] : terms_) {
    if (k[to] != 0) throw std::logic_error("series: rename target slot in use");
    Key kk = k;
    kk[to] = k[from];
    kk[from] = 0;
    s.terms_.push_back({kk, c});
  }
  std::sort(s.terms_.begin(), s.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return s;
}

Series Series::rescale_slot(int slot, const Coef& c) const {
  Series s = *this;
  for (auto& [k, v] : s.terms_) {
    Coef f = 1;
    int e = k[slot];
    Coef base = e >= 0 ? c : Coef(1) / c;
    for (int i = 0; i < std::abs(e); ++i) f *= base;
    v *= f;
  }
  return s;
}

Series Series::derivative(int slot) const {
  Series s;
  s.prec_ = prec_;
  s.prec_.hi[slot] = sat_add(prec_.hi[slot], -1);
  s.lo_ = lo_;
  // a term of exponent 0 is killed, so a valuation of 0 survives
  s.lo_[slot] = lo_[slot] == 0 ? 0 : sat_add(lo_[slot], -1);
  if (prec_.gmask) {
    s.glo_ = glo_;
    if (prec_.gmask & (1u << slot)) {
      s.prec_.ghi = sat_add(prec_.ghi, -1);
      s.glo_ = sat_add(glo_, -1);
      if (glo_ == 0 && group_lo_from(lo_, prec_.gmask) >= 0) s.glo_ = 0;
    }
  }
  for (const auto& [k, c] : terms_) {
    if (k[slot] == 0) continue;
    Key kk = k;
    kk[slot] = static_cast<int16_t>(k[slot] - 1);
    s.terms_.push_back({kk, c.scaled(Rational(k[slot]))});
  }
  return s;
}

int Series::max_exp(int slot) const {
  int m = terms_.empty() ? 0 : -INF;
  for (const auto& t : terms_) m = std::max(m, static_cast<int>(t.first[slot]));
  return m;
}

int Series::min_exp(int slot) const {
  int m = terms_.empty() ? 0 : INF;
  for (const auto& t : terms_) m = std::min(m, static_cast<int>(t.first[slot]));
  return m;
}

bool Series::agrees_with(const Series& o) const {
  Prec p = meet(prec_, o.prec_);
  Series a = truncated(p), b = o.truncated(p);
  return a.terms_ == b.terms_;
}

std::string Series::str(const SlotNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    std::string mono;
    for (int i = 0; i < kSlots; ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += names[i];
      if (k[i] != 1) mono += "^" + std::to_string(k[i]);
    }
    if (!mono.empty()) out += " * " + mono;
  }
  return out;
}

void SeriesAccumulator::add(const Key& k, const Coef& c) {
  if (c.is_zero() || !prec_.contains(k)) return;
  items_.push_back({k, c});
}

void SeriesAccumulator::add(const Series& s, const Coef& scale) {
  if (scale.is_zero()) return;
  for (const auto& [k, c] : s.terms())
    if (prec_.contains(k)) items_.push_back({k, scale == Coef(1) ? c : c * scale});
}

Series SeriesAccumulator::finish(const std::array<int, kSlots>& lo, int glo) const {
  std::unordered_map<Key, Coef, KeyHash> acc;
  for (const auto& [k, c] : items_) {
    auto [it, fresh] = acc.try_emplace(k, c);
    if (!fresh) it->second += c;
  }
  Series s;
  s.prec_ = prec_;
  s.lo_ = lo;
  s.glo_ = glo;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) s.terms_.push_back({k, std::move(c)});
  std::sort(s.terms_.begin(), s.terms_.end(), [](const Series::Term& x, const Series::Term& y) { return x.first < y.first; });
  return s;
}

void validate(const Truncation& tr) {
  if (tr.q_max < 0) throw std::invalid_argument("truncation: q_max must be >= 0");
  if (tr.u_lo > tr.u_hi) throw std::invalid_argument("truncation: u_lo must be <= u_hi");
  for (int z : tr.z_orders)
    if (z < 0) throw std::invalid_argument("truncation: z orders must be >= 0");
  if (tr.z_orders.size() > 6) throw std::invalid_argument("truncation: at most six formal variables");
  if (tr.energy_cap != 0 && tr.energy_cap < tr.q_max)
    throw std::invalid_argument("truncation: energy_cap must be >= q_max");
}

Series window(const Series& s, const Truncation& tr) {
  Prec p;
  p.hi[Q] = tr.q_max;
  p.hi[U] = tr.u_hi;
  for (size_t i = 0; i < tr.z_orders.size(); ++i) p.hi[Z1 + i] = tr.z_orders[i];
  for (int i = 0; i < kSlots; ++i)
    if (p.hi[i] < INF && s.prec().hi[i] < p.hi[i])
      throw std::runtime_error("window: series precision below requested window");
  Series t = s.truncated(p);
  std::vector<Series::Term> kept;
  for (const auto& term : t.terms())
    if (term.first[U] >= tr.u_lo) kept.push_back(term);
  return Series::from_terms(kept, t.prec(), t.lo());
}

namespace {

// Splits s = c + r and checks that powers of r die out under the precision
// of s without eroding it: every slot with finite precision has a
// nonnegative valuation bound, and every known term of r has positive degree
// in those slots (or in the degree group).
Coef split_nilpotent(const Series& s, Series& r) {
  Coef c = s.prec().contains(Key{}) ? s.coeff(Key{}) : Coef();
  r = s - Series(c);
  const Prec& p = s.prec();
  bool any_finite = p.gmask && p.ghi < INF;
  for (int i = 0; i < kSlots; ++i) {
    if (p.hi[i] >= INF) continue;
    any_finite = true;
    if (r.lo()[i] < 0) throw std::domain_error("series: nilpotent argument with negative valuation in a truncated slot");
  }
  if (!any_finite && !r.is_zero()) throw std::domain_error("series: argument is not nilpotent under its precision");
  for (const auto& [k, v] : r.terms()) {
    int w = 0;
    for (int i = 0; i < kSlots; ++i)
      if (p.hi[i] < INF) w += k[i];
    if (p.gmask && p.ghi < INF) w += p.group_degree(k);
    if (w <= 0) throw std::domain_error("series: argument term without positive truncated degree");
  }
  return c;
}

// sum_n coeffs(n) r^n, stopping once r^n vanishes.
template <class F>
Series nilpotent_sum(const Series& r, F&& coeff_of, const Prec& base) {
  Series acc = Series(coeff_of(0)).truncated(base);
  Series pw = Series(1).truncated(base);
  for (int n = 1; n < 4096; ++n) {
    pw = pw * r;
    if (pw.is_zero()) {
      acc = acc.truncated(pw.prec());
      return acc;
    }
    acc += pw.scaled(coeff_of(n));
  }
  throw std::runtime_error("series: nilpotent sum did not terminate");
}

}  // namespace

Series exp_series(const Series& s) {
  Series r;
  Coef c = split_nilpotent(s, r);
  if (!c.is_zero()) throw std::domain_error("exp: nonzero constant term");
  std::vector<Rational> inv_fact{1};
  return nilpotent_sum(
      r,
      [&](int n) {
        while (static_cast<int>(inv_fact.size()) <= n) inv_fact.push_back(inv_fact.back() / static_cast<long>(inv_fact.size()));
        return Coef(inv_fact[n]);
      },
      s.prec());
}

Series log1p_series(const Series& s) {
  Series r;
  Coef c = split_nilpotent(s, r);
  if (!c.is_zero()) throw std::domain_error("log1p: nonzero constant term");
  return nilpotent_sum(
      r, [](int n) { return n == 0 ? Coef() : Coef(Rational(n % 2 ? 1 : -1, n)); }, s.prec());
}

Series inverse(const Series& s) {
  Series r;
  Coef c = split_nilpotent(s, r);
  if (c.is_zero()) throw std::domain_error("inverse: zero constant term");
  Coef ic = Coef(1) / c;
  Series x = r.scaled(-ic);
  return nilpotent_sum(x, [](int) { return Coef(1); }, s.prec()).scaled(ic);
}

Series power(const Series& s, int n) {
  if (n < 0) return power(inverse(s), -n);
  Series result(1);
  Series base = s;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace gwp1
