#include "gwp1/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwp1 {

std::string State::str() const { return "(" + lambda.str() + ", " + std::to_string(charge) + ")"; }

FockVector basis(const State& s) { return FockVector{{s, Series(1)}}; }

FockVector vacuum(int charge) { return basis(State{Partition(), charge}); }

void add_into(FockVector& v, const State& s, const Series& w) {
  auto it = v.find(s);
  if (it == v.end()) {
    if (!w.is_zero()) v.emplace(s, w);
    return;
  }
  it->second += w;
  if (it->second.is_zero()) v.erase(it);
}

FockVector add(const FockVector& a, const FockVector& b, const Coef& scale_b) {
  FockVector r = a;
  for (const auto& [s, w] : b) add_into(r, s, w.scaled(scale_b));
  return r;
}

FockVector scale(const FockVector& v, const Series& s) {
  FockVector r;
  for (const auto& [st, w] : v) add_into(r, st, w * s);
  return r;
}

Series inner_product(const FockVector& a, const FockVector& b) {
  Series acc;
  bool first = true;
  for (const auto& [s, w] : a) {
    auto it = b.find(s);
    if (it == b.end()) continue;
    if (first) {
      acc = w * it->second;
      first = false;
    } else {
      acc += w * it->second;
    }
  }
  return acc;
}

int max_size(const FockVector& v) {
  int m = 0;
  for (const auto& [s, w] : v) m = std::max(m, s.size());
  return m;
}

std::string render(const FockVector& v, const SlotNames& names) {
  std::string out;
  for (const auto& [s, w] : v) out += s.str() + ": " + w.str(names) + "\n";
  return out;
}

std::vector<Move> wedge_moves(const State& s, int r, int cap) {
  std::vector<Move> out;
  if (r == 0) return out;
  int n = s.size();
  if (r > 0 && r > n) return out;
  if (r < 0 && n - r > cap) return out;
  int len = s.lambda.length();
  int rows = len + (r < 0 ? -r : 0);
  int c = s.charge;
  std::vector<int> pos(rows);
  for (int i = 0; i < rows; ++i) pos[i] = (i < len ? s.lambda[i] : 0) - (i + 1) + c;
  int sea_top = -(rows + 1) + c;  // every level at or below is occupied
  auto occupied = [&](int p) {
    if (p <= sea_top) return true;
    return std::find(pos.begin(), pos.end(), p) != pos.end();
  };
  int src_rows = r > 0 ? len : rows;
  for (int i = 0; i < src_rows; ++i) {
    int p = pos[i], target = p - r;
    if (occupied(target)) continue;
    int lo = std::min(p, target), hi = std::max(p, target);
    int between = 0;
    for (int x : pos) between += (x > lo && x < hi);
    std::vector<int> np = pos;
    np[i] = target;
    std::sort(np.rbegin(), np.rend());
    std::vector<int> parts;
    for (int j = 0; j < rows; ++j) {
      int l = np[j] + (j + 1) - c;
      if (l > 0) parts.push_back(l);
    }
    out.push_back(Move{State{Partition(parts), c}, between % 2 ? -1 : 1, p});
  }
  return out;
}

const Operator::Result& Operator::act(const State& s, int cap) const {
  int mr = max_raise();
  int key_cap = mr >= INF ? cap : std::min(cap, mr >= INF ? INF : s.size() + mr);
  if (mr == 0) key_cap = INF;
  auto key = std::make_pair(s, key_cap);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto res = std::make_unique<Result>(compute(s, key_cap));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = memo_.try_emplace(key, std::move(res));
  return *it->second;
}

FockVector apply(const Operator& op, const FockVector& v, int cap) {
  FockVector out;
  for (const auto& [s, w] : v) {
    if (s.size() > op.max_in()) continue;
    for (const auto& [t, c] : op.act(s, cap)) {
      if (t.size() > cap) continue;
      add_into(out, t, w * c);
    }
  }
  return out;
}

FockVector apply_chain(const std::vector<OpPtr>& ops, const FockVector& right, int left_cap) {
  size_t n = ops.size();
  // caps[i] bounds |lambda| of the output of ops[i].
  std::vector<int> caps(n + 1);
  caps[0] = left_cap;
  for (size_t i = 0; i < n; ++i) {
    int c = sat_add(caps[i], ops[i]->max_lower());
    caps[i + 1] = std::min(c, ops[i]->max_in());
  }
  FockVector v;
  for (const auto& [s, w] : right)
    if (s.size() <= caps[n]) v.emplace(s, w);
  for (size_t i = n; i-- > 0;) v = apply(*ops[i], v, caps[i]);
  return v;
}

Series expectation(const FockVector& left, const std::vector<OpPtr>& ops, const FockVector& right) {
  FockVector v = apply_chain(ops, right, max_size(left));
  return inner_product(left, v);
}

Series vacuum_expectation(const std::vector<OpPtr>& ops) { return expectation(vacuum(), ops, vacuum()); }

namespace {

Series exp_weight(const Coef& coef, const Key& mono, const Rational& y, const Prec& prec) {
  // e^{y b}, b = coef * mono
  if (sgn(y) == 0) return Series(1).truncated(prec);
  return substitute(Uni::Exp, coef.scaled(y), mono, prec);
}

bool is_zero_key(const Key& k) {
  for (auto e : k)
    if (e) return false;
  return true;
}

// Largest k >= 0 with k*mono + base inside prec (INF if unbounded).
int max_multiple(const Key& mono, const std::array<int, kSlots>& base, const Prec& prec) {
  int best = INF;
  for (int i = 0; i < kSlots; ++i) {
    if (mono[i] <= 0 || prec.hi[i] >= INF) continue;
    int room = prec.hi[i] - base[i];
    best = std::min(best, room < 0 ? -1 : room / mono[i]);
  }
  if (prec.gmask && prec.ghi < INF) {
    int g = prec.group_degree(mono);
    if (g > 0) {
      int gb = 0;
      for (int i = 0; i < kSlots; ++i)
        if (prec.gmask & (1u << i)) gb += base[i];
      int room = prec.ghi - gb;
      best = std::min(best, room < 0 ? -1 : room / g);
    }
  }
  return best;
}

Prec widen(const Prec& p, const Key& by, int times) {
  Prec q = p;
  for (int i = 0; i < kSlots; ++i)
    if (q.hi[i] < INF) q.hi[i] += by[i] * times;
  if (q.gmask && q.ghi < INF) q.ghi += q.group_degree(by) * times;
  return q;
}

class AlphaOp : public Operator {
 public:
  explicit AlphaOp(int k) : k_(k) {
    if (k == 0) throw std::invalid_argument("alpha: k must be nonzero");
  }
  int max_lower() const override { return std::max(k_, 0); }
  int max_raise() const override { return std::max(-k_, 0); }
  OpPtr adjoint() const override { return alpha(-k_); }
  std::string name() const override { return "alpha_" + std::to_string(k_); }

 protected:
  Result compute(const State& s, int cap) const override {
    Result r;
    for (auto& m : wedge_moves(s, k_, cap)) r.push_back({m.target, Series(m.sign)});
    return r;
  }

 private:
  int k_;
};

class EOp : public Operator {
 public:
  EOp(int r, Coef coef, Key mono, Prec prec) : r_(r), coef_(std::move(coef)), mono_(mono), prec_(prec) {}
  int max_lower() const override { return std::max(r_, 0); }
  int max_raise() const override { return std::max(-r_, 0); }
  OpPtr adjoint() const override { return e_op(-r_, coef_, mono_, prec_); }
  std::string name() const override { return "E_" + std::to_string(r_); }

 protected:
  Result compute(const State& s, int cap) const override {
    Result res;
    if (r_ == 0) {
      // e^{cb}/varsigma(b) + sum_i (e^{b(l_i - i + 1/2 + c)} - e^{b(-i + 1/2 + c)})
      Prec wide = widen(prec_, mono_, 1);
      Series w = substitute(Uni::InvVarsigma, coef_, mono_, wide) * exp_weight(coef_, mono_, s.charge, wide);
      w = w.truncated(prec_);
      for (int i = 1; i <= s.lambda.length(); ++i) {
        Rational hi = Rational(s.lambda[i - 1] - i + s.charge) + Rational(1, 2);
        Rational lo = Rational(-i + s.charge) + Rational(1, 2);
        w += exp_weight(coef_, mono_, hi, prec_) - exp_weight(coef_, mono_, lo, prec_);
      }
      res.push_back({s, w});
      return res;
    }
    for (auto& m : wedge_moves(s, r_, cap)) {
      Rational y = frac(2 * m.pos + 1 - r_, 2);
      Series w = exp_weight(coef_, mono_, y, prec_);
      if (m.sign < 0) w = -w;
      res.push_back({m.target, w});
    }
    return res;
  }

 private:
  int r_;
  Coef coef_;
  Key mono_;
  Prec prec_;
};

class DiagOp : public Operator {
 public:
  using Fn = std::function<Series(const State&)>;
  DiagOp(std::string name, Fn f, int max_in = INF) : name_(std::move(name)), f_(std::move(f)), max_in_(max_in) {}
  int max_lower() const override { return 0; }
  int max_raise() const override { return 0; }
  int max_in() const override { return max_in_; }
  OpPtr adjoint() const override { return std::make_shared<DiagOp>(name_, f_, max_in_); }
  std::string name() const override { return name_; }

 protected:
  Result compute(const State& s, int) const override {
    Series w = f_(s);
    if (w.is_zero()) return {};
    return {{s, w}};
  }

 private:
  std::string name_;
  Fn f_;
  int max_in_;
};

class TShift : public Operator {
 public:
  explicit TShift(int n) : n_(n) {}
  int max_lower() const override { return 0; }
  int max_raise() const override { return 0; }
  OpPtr adjoint() const override { return t_shift(-n_); }
  std::string name() const override { return "T^" + std::to_string(n_); }

 protected:
  Result compute(const State& s, int) const override { return {{State{s.lambda, s.charge + n_}, Series(1)}}; }

 private:
  int n_;
};

class ExpOp : public Operator {
 public:
  ExpOp(OpPtr op, Series coeff, int max_terms) : op_(std::move(op)), coeff_(std::move(coeff)), max_terms_(max_terms) {
    if (op_->max_raise() > 0 && op_->max_lower() > 0 && max_terms_ >= INF)
      throw std::invalid_argument("exp_op: operator without definite energy step needs a term bound");
  }
  int max_lower() const override {
    if (op_->max_lower() == 0) return 0;
    if (op_->max_raise() == 0) return INF;
    return max_terms_ >= INF || op_->max_lower() >= INF ? INF : max_terms_ * op_->max_lower();
  }
  int max_raise() const override {
    if (op_->max_raise() == 0) return 0;
    if (op_->max_lower() == 0) return INF;
    return max_terms_ >= INF || op_->max_raise() >= INF ? INF : max_terms_ * op_->max_raise();
  }
  OpPtr adjoint() const override { return exp_op(op_->adjoint(), coeff_, max_terms_); }
  std::string name() const override { return "exp(" + op_->name() + ")"; }

 protected:
  Result compute(const State& s, int cap) const override {
    FockVector total = basis(s);
    FockVector cur = total;
    for (int n = 1;; ++n) {
      if (n > max_terms_) break;
      int step_cap;
      if (op_->max_raise() == 0)
        step_cap = INF;
      else if (op_->max_lower() == 0)
        step_cap = cap;
      else
        step_cap = sat_add(cap, op_->max_lower() >= INF ? INF : (max_terms_ - n) * op_->max_lower());
      cur = apply(*op_, cur, step_cap);
      cur = scale(cur, coeff_.scaled(Coef(Rational(1, n))));
      if (cur.empty()) break;
      for (const auto& [st, w] : cur)
        if (st.size() <= cap) add_into(total, st, w);
      if (n > 100000) throw std::runtime_error("exp_op: runaway series");
    }
    Result r;
    for (auto& [st, w] : total)
      if (st.size() <= cap) r.push_back({st, w});
    return r;
  }

 private:
  OpPtr op_;
  Series coeff_;
  int max_terms_;
};

class SumOp : public Operator {
 public:
  explicit SumOp(std::vector<std::pair<Series, OpPtr>> terms) : terms_(std::move(terms)) {}
  int max_lower() const override {
    int m = 0;
    for (auto& [c, op] : terms_) m = std::max(m, op->max_lower());
    return m;
  }
  int max_raise() const override {
    int m = 0;
    for (auto& [c, op] : terms_) m = std::max(m, op->max_raise());
    return m;
  }
  OpPtr adjoint() const override {
    std::vector<std::pair<Series, OpPtr>> t;
    for (auto& [c, op] : terms_) t.push_back({c, op->adjoint()});
    return sum_op(std::move(t));
  }
  std::string name() const override { return "sum"; }

 protected:
  Result compute(const State& s, int cap) const override {
    FockVector out;
    for (auto& [c, op] : terms_)
      if (s.size() <= op->max_in())
        for (const auto& [t, w] : op->act(s, cap)) add_into(out, t, w * c);
    return Result(out.begin(), out.end());
  }

 private:
  std::vector<std::pair<Series, OpPtr>> terms_;
};

class CoefficientOp : public Operator {
 public:
  CoefficientOp(OpPtr op, int slot, int e) : op_(std::move(op)), slot_(slot), e_(e) {}
  int max_lower() const override { return op_->max_lower(); }
  int max_raise() const override { return op_->max_raise(); }
  int max_in() const override { return op_->max_in(); }
  OpPtr adjoint() const override { return coefficient_op(op_->adjoint(), slot_, e_); }
  std::string name() const override { return "[" + std::to_string(slot_) + "^" + std::to_string(e_) + "]" + op_->name(); }

 protected:
  Result compute(const State& s, int cap) const override {
    Result r;
    for (const auto& [t, w] : op_->act(s, cap)) {
      Series x = w.extract(slot_, e_);
      if (!x.is_zero()) r.push_back({t, x});
    }
    return r;
  }

 private:
  OpPtr op_;
  int slot_, e_;
};

class ProductOp : public Operator {
 public:
  explicit ProductOp(std::vector<OpPtr> ops) : ops_(std::move(ops)) {}
  int max_lower() const override {
    int m = 0;
    for (auto& op : ops_) m = sat_add(m, op->max_lower());
    return m;
  }
  int max_raise() const override {
    int m = 0;
    for (auto& op : ops_) m = sat_add(m, op->max_raise());
    return m;
  }
  int max_in() const override { return ops_.empty() ? INF : ops_.back()->max_in(); }
  OpPtr adjoint() const override {
    std::vector<OpPtr> r;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) r.push_back((*it)->adjoint());
    return product_op(std::move(r));
  }
  std::string name() const override { return "product"; }

 protected:
  Result compute(const State& s, int cap) const override {
    FockVector v = apply_chain(ops_, basis(s), cap);
    Result r;
    for (auto& [t, w] : v)
      if (t.size() <= cap) r.push_back({t, w});
    return r;
  }

 private:
  std::vector<OpPtr> ops_;
};

class AFamily : public Operator {
 public:
  explicit AFamily(AFamilySpec spec) : spec_(std::move(spec)) {
    pre_lo_ = spec_.prefactor.lo();
    for (auto& x : pre_lo_)
      if (x >= INF) x = 0;
    lower_max_ = max_multiple(spec_.bmono, pre_lo_, spec_.prec);
    raise_max_ = INF;
    if (spec_.a.size() <= 1 && spec_.a.prec() == Prec::exact()) {
      Coef a0 = spec_.a.is_zero() ? Coef() : spec_.a.coeff(Key{});
      if (spec_.a.is_zero() || (spec_.a.terms()[0].first == Key{} && a0.is_constant())) {
        Rational v = a0.is_zero() ? Rational(0) : a0.constant();
        if (v.get_den() == 1 && sgn(v) >= 0) raise_max_ = static_cast<int>(v.get_num().get_si());
        if (v.get_den() == 1 && sgn(v) < 0) throw std::domain_error("a_family: a is a negative integer, (a+1)_k has a pole");
      }
    }
  }
  int max_lower() const override { return spec_.adjoint ? raise_max_ : lower_max_; }
  int max_raise() const override { return spec_.adjoint ? lower_max_ : raise_max_; }
  OpPtr adjoint() const override {
    AFamilySpec s = spec_;
    s.adjoint = !s.adjoint;
    return a_family(s);
  }
  std::string name() const override { return spec_.label; }

 protected:
  Result compute(const State& s, int cap) const override {
    FockVector out;
    int n = s.size();
    // k indexes the family; the state moves by r = +-k.
    // lower_max_ bounds positive k (precision of b^k), raise_max_ bounds -k
    // (integer a). Without adjoint k > 0 lowers; with adjoint it raises.
    int k_lo, k_hi;
    if (spec_.adjoint) {
      k_lo = -std::min(raise_max_, n);
      k_hi = std::min(lower_max_, cap - n);
    } else {
      k_lo = -std::min(raise_max_, cap - n);
      k_hi = std::min(lower_max_, n);
    }
    for (int k = k_lo; k <= k_hi; ++k) {
      if (k == 0) {
        add_into(out, s, diagonal(s));
        continue;
      }
      int r = spec_.adjoint ? -k : k;
      if (r < 0 && n - r > cap) continue;
      if (r > n) continue;
      auto moves = wedge_moves(s, r, cap);
      if (moves.empty()) continue;
      const Series& ck = coefficient(k);
      if (ck.is_zero()) continue;
      Prec wp = k < 0 ? widen(spec_.prec, spec_.bmono, -k) : spec_.prec;
      for (auto& m : moves) {
        Rational y = frac(2 * m.pos + 1 - r, 2);
        Series w = (ck * exp_weight(spec_.bcoef, spec_.bmono, y, wp)).truncated(spec_.prec);
        if (m.sign < 0) w = -w;
        add_into(out, m.target, w);
      }
    }
    return Result(out.begin(), out.end());
  }

 private:
  // Internal precision for factors multiplied by b^k with k < 0 (and by the
  // prefactor), so that the truncated product is still exact on prec.
  Prec inner_prec(int k) const {
    Prec p = spec_.prec;
    for (int i = 0; i < kSlots; ++i) {
      if (p.hi[i] >= INF) continue;
      int extra = 0;
      if (k < 0) extra += -k * spec_.bmono[i];
      if (pre_lo_[i] < 0) extra += -pre_lo_[i];
      p.hi[i] += extra;
    }
    if (p.gmask && p.ghi < INF) {
      int extra = k < 0 ? -k * p.group_degree(spec_.bmono) : 0;
      p.ghi += extra;
    }
    return p;
  }

  const Series& s_pow_a(const Prec& p) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = sa_cache_.find(p.hi);
    if (it != sa_cache_.end()) return it->second;
    Series v = s_power(spec_.a.truncated(p), spec_.bcoef, spec_.bmono, p);
    return sa_cache_.emplace(p.hi, std::move(v)).first->second;
  }

  // S(b)^k for integer k
  Series s_int_pow(int k, const Prec& p) const {
    Series base = substitute(Uni::S, spec_.bcoef, spec_.bmono, p);
    return power(base, k);
  }

  const Series& coefficient(int k) const {
    {
      std::lock_guard<std::mutex> lock(cache_mu_);
      auto it = ck_cache_.find(k);
      if (it != ck_cache_.end()) return it->second;
    }
    Prec p = inner_prec(k);
    Series c = spec_.prefactor.truncated(p);
    Key bk = spec_.bmono;
    for (auto& e : bk) e = static_cast<int16_t>(e * k);
    Coef bc = 1;
    for (int i = 0; i < std::abs(k); ++i) bc *= spec_.bcoef;
    if (k < 0) bc = Coef(1) / bc;
    c = c * Series::monomial(bc, bk);
    Series sa = s_pow_a(p);
    c = c * sa * s_int_pow(k, p) * inv_pochhammer(spec_.a.truncated(p), k);
    c = c.truncated(spec_.prec);
    for (int i = 0; i < kSlots; ++i)
      if (spec_.prec.hi[i] < INF && c.prec().hi[i] < spec_.prec.hi[i])
        throw std::logic_error("a_family: coefficient lost precision");
    std::lock_guard<std::mutex> lock(cache_mu_);
    return ck_cache_.emplace(k, std::move(c)).first->second;
  }

  Series diagonal(const State& s) const {
    // b^{-1} S^{a-1} e^{cb} + S^a sum_i (e^{b x_i} - e^{b y_i}), times prefactor
    Prec p = inner_prec(-1);
    Series sa = s_pow_a(p);
    Key inv = spec_.bmono;
    for (auto& e : inv) e = static_cast<int16_t>(-e);
    Series head = Series::monomial(Coef(1) / spec_.bcoef, inv) * sa * s_int_pow(-1, p) *
                  exp_weight(spec_.bcoef, spec_.bmono, s.charge, p);
    Series body;
    for (int i = 1; i <= s.lambda.length(); ++i) {
      Rational hi = Rational(s.lambda[i - 1] - i + s.charge) + Rational(1, 2);
      Rational lo = Rational(-i + s.charge) + Rational(1, 2);
      body += exp_weight(spec_.bcoef, spec_.bmono, hi, p) - exp_weight(spec_.bcoef, spec_.bmono, lo, p);
    }
    Series w = spec_.prefactor.truncated(p) * (head + sa * body);
    return w.truncated(spec_.prec);
  }

  AFamilySpec spec_;
  std::array<int, kSlots> pre_lo_;
  int lower_max_, raise_max_;
  mutable std::mutex cache_mu_;
  mutable std::map<int, Series> ck_cache_;
  mutable std::map<std::array<int, kSlots>, Series> sa_cache_;
};

}  // namespace

OpPtr alpha(int k) { return std::make_shared<AlphaOp>(k); }

OpPtr e_op(int r, const Coef& coef, const Key& mono, const Prec& prec) {
  if (r == 0 && (coef.is_zero() || is_zero_key(mono))) throw std::invalid_argument("e_op: E_0 needs a nonzero argument");
  if (coef.is_zero() || is_zero_key(mono)) return alpha(r);
  return std::make_shared<EOp>(r, coef, mono, prec);
}

OpPtr h_op() {
  return std::make_shared<DiagOp>("H", [](const State& s) { return Series(Coef(s.energy())); });
}

OpPtr c_op() {
  return std::make_shared<DiagOp>("C", [](const State& s) { return Series(Coef(s.charge)); });
}

namespace {
Rational f2_checked(const State& s) {
  if (s.charge != 0) throw std::domain_error("F2 applied to a charged state");
  return f2_eigenvalue(s.lambda);
}
}  // namespace

OpPtr f2_op() {
  return std::make_shared<DiagOp>("F2", [](const State& s) { return Series(Coef(f2_checked(s))); });
}

OpPtr f2_power(int b) {
  return std::make_shared<DiagOp>("F2^" + std::to_string(b), [b](const State& s) {
    Rational f = f2_checked(s), p = 1;
    for (int i = 0; i < b; ++i) p *= f;
    return Series(Coef(p));
  });
}

OpPtr exp_f2(const Series& sarg) {
  return std::make_shared<DiagOp>("exp(sF2)", [sarg](const State& s) {
    Rational f = f2_checked(s);
    if (sgn(f) == 0) return Series(1).truncated(sarg.prec());
    return exp_series(sarg.scaled(Coef(f)));
  });
}

OpPtr scalar_pow_h(const Series& sv) {
  int mi = INF;
  for (int i = 0; i < kSlots; ++i)
    if (sv.prec().hi[i] < INF && sv.lo()[i] > 0 && sv.lo()[i] < INF) mi = std::min(mi, sv.prec().hi[i] / sv.lo()[i]);
  auto cache = std::make_shared<std::vector<Series>>();
  auto mu = std::make_shared<std::mutex>();
  return std::make_shared<DiagOp>(
      "s^H",
      [sv, cache, mu](const State& s) {
        std::lock_guard<std::mutex> lock(*mu);
        if (cache->empty()) cache->push_back(Series(1).truncated(sv.prec()));
        while (static_cast<int>(cache->size()) <= s.size()) cache->push_back(cache->back() * sv);
        return (*cache)[s.size()];
      },
      mi);
}

OpPtr t_shift(int n) { return std::make_shared<TShift>(n); }

OpPtr projection(int d) {
  return std::make_shared<DiagOp>(
      "P_" + std::to_string(d), [d](const State& s) { return s.energy() == d ? Series(1) : Series(); }, d);
}

OpPtr scalar(const Series& sv) {
  return std::make_shared<DiagOp>("scalar", [sv](const State&) { return sv; });
}

OpPtr exp_op(OpPtr op, const Series& coeff, int max_terms) { return std::make_shared<ExpOp>(std::move(op), coeff, max_terms); }

OpPtr sum_op(std::vector<std::pair<Series, OpPtr>> terms) { return std::make_shared<SumOp>(std::move(terms)); }

OpPtr coefficient_op(OpPtr op, int slot, int e) { return std::make_shared<CoefficientOp>(std::move(op), slot, e); }

OpPtr product_op(std::vector<OpPtr> ops) { return std::make_shared<ProductOp>(std::move(ops)); }

OpPtr a_family(const AFamilySpec& spec) { return std::make_shared<AFamily>(spec); }

}  // namespace gwp1
