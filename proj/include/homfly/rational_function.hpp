#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace homfly {

struct NotPolynomial : std::runtime_error {
  explicit NotPolynomial(const std::string& m) : std::runtime_error(m) {}
};

struct NotPalindromic : std::runtime_error {
  explicit NotPalindromic(const std::string& m) : std::runtime_error(m) {}
};

struct DenominatorZero : std::runtime_error {
  explicit DenominatorZero(const std::string& m) : std::runtime_error(m) {}
};

// (variable, m) naming the factor x^{m/2} - x^{-m/2}
struct BracketFactor {
  Var var;
  long m;
};

// Quotient num / prod of brackets. Denominators stay in factored bracket form
// through every operation; addition never needs multivariate gcd.
class RationalFunction {
 public:
  using DenMap = std::map<std::pair<int, long>, long>;  // (var, m) -> multiplicity

  RationalFunction() = default;
  /* implicit */ RationalFunction(ExactLaurent num) : num_(std::move(num)) {}
  explicit RationalFunction(const Rat& c) : num_(ExactLaurent::constant(c)) {}

  static RationalFunction zero() { return {}; }
  static RationalFunction one() { return RationalFunction(Rat(1)); }

  // [m]_x as a value
  static RationalFunction bracket(Var x, long m) {
    return RationalFunction(ExactLaurent::bracket_poly(x, m));
  }

  static RationalFunction over_brackets(ExactLaurent num, const std::vector<BracketFactor>& den) {
    RationalFunction r(std::move(num));
    for (const auto& b : den) r.push_den(b.var, b.m);
    r.reduce();
    return r;
  }

  // c * t^{et} v^{ev} * prod(num brackets) / prod(den brackets)
  static RationalFunction monomial_ratio(const Rat& c, const Rat& et, const Rat& ev,
                                         const std::vector<BracketFactor>& num_brs,
                                         const std::vector<BracketFactor>& den_brs) {
    ExactLaurent n = ExactLaurent::monomial(et, ev, c);
    for (const auto& b : num_brs) n *= ExactLaurent::bracket_poly(b.var, b.m);
    return over_brackets(std::move(n), den_brs);
  }

  const ExactLaurent& num() const { return num_; }
  const DenMap& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::vector<BracketFactor> den_factors() const {
    std::vector<BracketFactor> v;
    for (const auto& [k, mult] : den_)
      for (long i = 0; i < mult; ++i) v.push_back({static_cast<Var>(k.first), k.second});
    return v;
  }

  ExactLaurent den_expanded() const {
    ExactLaurent d = ExactLaurent::one();
    for (const auto& [k, mult] : den_)
      for (long i = 0; i < mult; ++i)
        d *= ExactLaurent::bracket_poly(static_cast<Var>(k.first), k.second);
    return d;
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return zero();
    RationalFunction r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& [k, mult] : o.den_) r.den_[k] += mult;
    r.reduce();
    return r;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RationalFunction r;
    // common denominator: per-bracket max multiplicity
    r.den_ = den_;
    for (const auto& [k, mult] : o.den_) {
      auto it = r.den_.find(k);
      if (it == r.den_.end())
        r.den_[k] = mult;
      else
        it->second = std::max(it->second, mult);
    }
    ExactLaurent a = num_, b = o.num_;
    for (const auto& [k, mult] : r.den_) {
      long ma = mult, mb = mult;
      if (auto it = den_.find(k); it != den_.end()) ma -= it->second;
      if (auto it = o.den_.find(k); it != o.den_.end()) mb -= it->second;
      ExactLaurent br = ExactLaurent::bracket_poly(static_cast<Var>(k.first), k.second);
      for (long i = 0; i < ma; ++i) a *= br;
      for (long i = 0; i < mb; ++i) b *= br;
    }
    r.num_ = a + b;
    if (r.num_.is_zero())
      r.den_.clear();
    else
      r.reduce();
    return r;
  }

  RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction scaled(const Rat& s) const {
    if (s == 0) return zero();
    RationalFunction r(*this);
    r.num_ = r.num_.scaled(s);
    return r;
  }

  RationalFunction scale(const Rat& s) const { return scaled(s); }

  // t -> t^d, v -> v^d; brackets [m] -> [d*m]
  RationalFunction adams(long d) const {
    RationalFunction r;
    r.num_ = num_.adams(d);
    for (const auto& [k, mult] : den_) r.den_[{k.first, k.second * d}] += mult;
    return r;
  }

  // x -> x^{-1}; brackets flip sign, absorbed into the numerator
  RationalFunction invert_var(Var x) const {
    RationalFunction r;
    r.num_ = num_.invert_var(x);
    long flips = 0;
    for (const auto& [k, mult] : den_)
      if (static_cast<Var>(k.first) == x) flips += mult;
    if (flips % 2) r.num_ = -r.num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const RationalFunction& o) const {
    // cancel shared denominator factors, then cross-multiply
    DenMap mine = den_, theirs = o.den_;
    for (auto& [k, mult] : mine) {
      auto it = theirs.find(k);
      if (it != theirs.end()) {
        long c = std::min(mult, it->second);
        mult -= c;
        it->second -= c;
      }
    }
    ExactLaurent lhs = num_, rhs = o.num_;
    for (const auto& [k, mult] : theirs)
      for (long i = 0; i < mult; ++i)
        lhs *= ExactLaurent::bracket_poly(static_cast<Var>(k.first), k.second);
    for (const auto& [k, mult] : mine)
      for (long i = 0; i < mult; ++i)
        rhs *= ExactLaurent::bracket_poly(static_cast<Var>(k.first), k.second);
    return lhs == rhs;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Cancels denominator brackets that divide the numerator exactly.
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      Var x = static_cast<Var>(it->first.first);
      long m = it->first.second;
      while (it->second > 0) {
        auto q = num_.divided_by_bracket(x, m);
        if (!q) break;
        num_ = std::move(*q);
        it->second--;
      }
      it = (it->second == 0) ? den_.erase(it) : std::next(it);
    }
  }

  // Exact Laurent form; throws if any denominator factor fails to divide.
  ExactLaurent certify_polynomial() const {
    ExactLaurent p = num_;
    for (const auto& [k, mult] : den_) {
      for (long i = 0; i < mult; ++i) {
        auto q = p.divided_by_bracket(static_cast<Var>(k.first), k.second);
        if (!q)
          throw NotPolynomial("denominator bracket [" + std::to_string(k.second) + "]_" +
                              var_name(static_cast<Var>(k.first)) + " does not divide numerator");
        p = std::move(*q);
      }
    }
    return p;
  }

  bool univariate_in(Var x) const {
    if (!num_.univariate_in(x)) return false;
    for (const auto& [k, mult] : den_)
      if (static_cast<Var>(k.first) != x) return false;
    return true;
  }

  Rat evaluate(const Rat& sqrt_t, const Rat& sqrt_v) const {
    Rat d(1);
    for (const auto& [k, mult] : den_) {
      const Rat& s = (static_cast<Var>(k.first) == Var::t) ? sqrt_t : sqrt_v;
      Rat b = rat_pow(s, k.second) - rat_pow(s, -k.second);
      if (b == 0)
        throw DenominatorZero("bracket [" + std::to_string(k.second) + "]_" +
                              var_name(static_cast<Var>(k.first)) + " vanishes at evaluation point");
      for (long i = 0; i < mult; ++i) d *= b;
    }
    return num_.evaluate(sqrt_t, sqrt_v) / d;
  }

  std::string str() const {
    std::ostringstream os;
    if (den_.empty()) return num_.str();
    os << "(" << num_.str() << ") / (";
    bool first = true;
    for (const auto& [k, mult] : den_) {
      if (!first) os << " ";
      first = false;
      os << "[" << k.second << "]_" << var_name(static_cast<Var>(k.first));
      if (mult > 1) os << "^" << mult;
    }
    os << ")";
    return os.str();
  }

 private:
  ExactLaurent num_;
  DenMap den_;

  void push_den(Var x, long m) {
    if (m <= 0) throw std::invalid_argument("denominator bracket with m <= 0");
    den_[{static_cast<int>(x), m}]++;
  }
};

inline RationalFunction adams(const RationalFunction& f, long d) { return f.adams(d); }
inline ExactLaurent adams(const ExactLaurent& p, long d) { return p.adams(d); }

// Writes a palindromic integer-exponent Laurent polynomial p(x) as
// sum_g a_g * (x - 2 + x^{-1})^g, over the variable x given. Returns g -> a_g.
inline std::map<long, Rat> zsquared_decompose(const ExactLaurent& p, Var x = Var::t) {
  if (!p.univariate_in(x)) throw NotPalindromic("zsquared_decompose: not univariate");
  if (!p.is_palindromic(x)) throw NotPalindromic("zsquared_decompose: not palindromic");
  ExactLaurent rem = p;
  std::map<long, Rat> out;
  ExactLaurent zsq = ExactLaurent::var_monomial(x, Rat(1)) + ExactLaurent::constant(Rat(-2)) +
                     ExactLaurent::var_monomial(x, Rat(-1));
  while (!rem.is_zero()) {
    Rat e = rem.max_exp(x);
    if (!rat_is_integer(e) || e < 0)
      throw NotPalindromic("zsquared_decompose: exponent " + rat_to_string(e));
    long g = rat_to_long(e);
    Rat a = rem.coeff(x == Var::t ? e : Rat(0), x == Var::t ? Rat(0) : e);
    out[g] = a;
    rem -= zsq.pow(static_cast<unsigned>(g)).scaled(a);
  }
  return out;
}

// Substitution q = t^{-1/2} for values built over q alone (stored in the t slot).
// Requires integer exponents and even bracket indices, which hold for every
// value the representation-theoretic side produces.
inline RationalFunction q_to_t(const RationalFunction& f) {
  for (const auto& t : f.num().terms()) {
    if (t.ev != 0) throw std::invalid_argument("q_to_t: value not univariate in q");
    if (!rat_is_integer(t.et)) throw std::invalid_argument("q_to_t: fractional q exponent");
  }
  ExactLaurent num = f.num().scale_exponents(rat_frac(-1, 2), Rat(1));
  long sign_flips = 0;
  std::vector<BracketFactor> den;
  for (const auto& b : f.den_factors()) {
    if (b.var != Var::t || b.m % 2 != 0) throw std::invalid_argument("q_to_t: odd bracket in q");
    den.push_back({Var::t, b.m / 2});
    sign_flips++;
  }
  if (sign_flips % 2) num = -num;
  return RationalFunction::over_brackets(std::move(num), den);
}

}  // namespace homfly
