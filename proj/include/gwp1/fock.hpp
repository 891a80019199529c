#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gwp1/partition.hpp"
#include "gwp1/special.hpp"

namespace gwp1 {

// Basis vector of the semi-infinite wedge: occupied levels are
// lambda_i - i + 1/2 + charge for i >= 1.
struct State {
  Partition lambda;
  int charge = 0;

  int size() const { return lambda.size(); }  // |lambda|, used for pruning
  Rational energy() const { return Rational(lambda.size()) + frac(charge * charge, 2); }
  std::string str() const;
  auto operator<=>(const State&) const = default;
};

using FockVector = std::map<State, Series>;

FockVector basis(const State& s);
FockVector vacuum(int charge = 0);
void add_into(FockVector& v, const State& s, const Series& w);
FockVector add(const FockVector& a, const FockVector& b, const Coef& scale_b = Coef(1));
FockVector scale(const FockVector& v, const Series& s);
Series inner_product(const FockVector& a, const FockVector& b);
int max_size(const FockVector& v);
std::string render(const FockVector& v, const SlotNames& names = kDefaultNames);

// One wedge move: the particle at level (pos + 1/2) jumps to level
// (pos - r + 1/2). Empty when the move is blocked.
struct Move {
  State target;
  int sign;
  int pos;
};
// All moves lowering |lambda| by r (r > 0) or raising it by -r (r < 0, only
// targets with |lambda| <= cap).
std::vector<Move> wedge_moves(const State& s, int r, int cap);

// Operators act on basis states and return finite weighted combinations.
// cap bounds |lambda| of the produced states; pruning above it is exact
// because the caller never pairs those components with anything.
class Operator {
 public:
  virtual ~Operator() = default;
  using Result = std::vector<std::pair<State, Series>>;

  const Result& act(const State& s, int cap) const;

  virtual int max_lower() const = 0;  // largest possible drop of |lambda|
  virtual int max_raise() const = 0;  // largest possible rise of |lambda|
  // Largest input |lambda| that can give a nonzero image.
  virtual int max_in() const { return INF; }
  virtual std::shared_ptr<const Operator> adjoint() const = 0;
  virtual std::string name() const = 0;

 protected:
  virtual Result compute(const State& s, int cap) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<std::pair<State, int>, std::unique_ptr<Result>> memo_;
};

using OpPtr = std::shared_ptr<const Operator>;

FockVector apply(const Operator& op, const FockVector& v, int cap = INF);
// (ops[0] ops[1] ... ops[n-1] right, left) with exact backward pruning.
Series expectation(const FockVector& left, const std::vector<OpPtr>& ops, const FockVector& right);
Series vacuum_expectation(const std::vector<OpPtr>& ops);
// Applies ops right to left to `right`, keeping only what can still reach
// states of |lambda| <= left_cap.
FockVector apply_chain(const std::vector<OpPtr>& ops, const FockVector& right, int left_cap);

// ---- concrete operators ----

OpPtr alpha(int k);
// E_r(b) with argument b = coef * mono; weights known on prec.
OpPtr e_op(int r, const Coef& coef, const Key& mono, const Prec& prec);
OpPtr h_op();
OpPtr c_op();
OpPtr f2_op();                  // charge-0 only
OpPtr f2_power(int b);          // F2^b
OpPtr exp_f2(const Series& s);  // exp(s * F2), s nilpotent
// s^{|lambda|}; with charge 0 this is s^H. max_in derived from s.
OpPtr scalar_pow_h(const Series& s);
OpPtr t_shift(int n);
OpPtr projection(int d);
OpPtr scalar(const Series& s);
// exp(coeff * op); coeff must be nilpotent unless op strictly raises or
// lowers. max_terms bounds the number of nonzero terms (INF if unknown).
OpPtr exp_op(OpPtr op, const Series& coeff = Series(1), int max_terms = INF);
OpPtr sum_op(std::vector<std::pair<Series, OpPtr>> terms);
// Coefficient of slot^e in every weight.
OpPtr coefficient_op(OpPtr op, int slot, int e);
// Operator product ops[0] * ops[1] * ... (rightmost acts first).
OpPtr product_op(std::vector<OpPtr> ops);

// prefactor * sum_k b^k S(b)^(a+k) / (a+1)_k * E_{+-k}(b), b = bcoef * bmono.
// adjoint = true uses E_{-k}. The k-sum is cut by prec (lowering side) and by
// the caller's cap (raising side).
struct AFamilySpec {
  Series a;
  Coef bcoef = 1;
  Key bmono{};
  Series prefactor = Series(1);
  bool adjoint = false;
  Prec prec;
  // Integer a = m >= 0: terms with k <= -m-1 vanish identically.
  std::string label = "A";
};
OpPtr a_family(const AFamilySpec& spec);

}  // namespace gwp1
