#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace homfly {

// The two formal variables. Half powers are represented with exponent 1/2,
// so values live in Q[t^{\pm 1/2}, v^{\pm 1/2}] and beyond (any rational exponent).
enum class Var { t = 0, v = 1 };

inline const char* var_name(Var x) { return x == Var::t ? "t" : "v"; }

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& m) : std::runtime_error(m) {}
};

struct LTerm {
  Rat et, ev, c;
};

// Exact Laurent "polynomial" with rational exponents in two variables.
// Invariant: terms sorted ascending by (et, ev), coefficients nonzero.
class ExactLaurent {
 public:
  ExactLaurent() = default;

  static ExactLaurent zero() { return {}; }

  static ExactLaurent constant(const Rat& c) { return monomial(Rat(0), Rat(0), c); }

  static ExactLaurent one() { return constant(Rat(1)); }

  static ExactLaurent monomial(const Rat& et, const Rat& ev, const Rat& c) {
    ExactLaurent p;
    if (c != 0) {
      LTerm t{et, ev, c};
      t.et.canonicalize();
      t.ev.canonicalize();
      t.c.canonicalize();
      p.t_.push_back(std::move(t));
    }
    return p;
  }

  static ExactLaurent var_monomial(Var x, const Rat& e, const Rat& c = Rat(1)) {
    return x == Var::t ? monomial(e, Rat(0), c) : monomial(Rat(0), e, c);
  }

  // x^{m/2} - x^{-m/2}; m = 0 gives zero.
  static ExactLaurent bracket_poly(Var x, long m) {
    if (m == 0) return zero();
    Rat h(m, 2);
    h.canonicalize();
    return var_monomial(x, h) + var_monomial(x, -h, Rat(-1));
  }

  const std::vector<LTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  bool operator==(const ExactLaurent& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i) {
      if (t_[i].et != o.t_[i].et || t_[i].ev != o.t_[i].ev || t_[i].c != o.t_[i].c) return false;
    }
    return true;
  }
  bool operator!=(const ExactLaurent& o) const { return !(*this == o); }

  ExactLaurent operator-() const {
    ExactLaurent r(*this);
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }

  ExactLaurent operator+(const ExactLaurent& o) const {
    ExactLaurent r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
      int cmp;
      if (i == t_.size())
        cmp = 1;
      else if (j == o.t_.size())
        cmp = -1;
      else
        cmp = key_cmp(t_[i], o.t_[j]);
      if (cmp < 0) {
        r.t_.push_back(t_[i++]);
      } else if (cmp > 0) {
        r.t_.push_back(o.t_[j++]);
      } else {
        Rat c = t_[i].c + o.t_[j].c;
        if (c != 0) r.t_.push_back({t_[i].et, t_[i].ev, c});
        ++i, ++j;
      }
    }
    return r;
  }

  ExactLaurent operator-(const ExactLaurent& o) const { return *this + (-o); }

  ExactLaurent operator*(const ExactLaurent& o) const {
    std::map<std::pair<Rat, Rat>, Rat> acc;
    for (const auto& a : t_)
      for (const auto& b : o.t_) {
        auto key = std::make_pair(a.et + b.et, a.ev + b.ev);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(std::move(key), a.c * b.c);
        else
          it->second += a.c * b.c;
      }
    ExactLaurent r;
    r.t_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (c != 0) r.t_.push_back({k.first, k.second, c});
    return r;
  }

  ExactLaurent& operator+=(const ExactLaurent& o) { return *this = *this + o; }
  ExactLaurent& operator-=(const ExactLaurent& o) { return *this = *this - o; }
  ExactLaurent& operator*=(const ExactLaurent& o) { return *this = *this * o; }

  ExactLaurent scaled(const Rat& s) const {
    if (s == 0) return zero();
    ExactLaurent r(*this);
    for (auto& t : r.t_) t.c *= s;
    return r;
  }

  ExactLaurent pow(unsigned e) const {
    ExactLaurent r = one(), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b = (e >>= 1) ? b * b : b;
    }
    return r;
  }

  // t -> t^d, v -> v^d
  ExactLaurent adams(long d) const { return scale_exponents(Rat(d), Rat(d)); }

  ExactLaurent scale_exponents(const Rat& ft, const Rat& fv) const {
    ExactLaurent r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.et * ft, t.ev * fv, t.c});
    r.resort();
    return r;
  }

  ExactLaurent invert_var(Var x) const {
    return x == Var::t ? scale_exponents(Rat(-1), Rat(1)) : scale_exponents(Rat(1), Rat(-1));
  }

  bool is_palindromic(Var x) const { return invert_var(x) == *this; }

  bool univariate_in(Var x) const {
    for (const auto& t : t_)
      if ((x == Var::t ? t.ev : t.et) != 0) return false;
    return true;
  }

  Rat coeff(const Rat& et, const Rat& ev) const {
    for (const auto& t : t_)
      if (t.et == et && t.ev == ev) return t.c;
    return Rat(0);
  }

  Rat min_exp(Var x) const {
    require_nonzero("min_exp");
    Rat m = get(t_[0], x);
    for (const auto& t : t_) m = std::min(m, get(t, x));
    return m;
  }

  Rat max_exp(Var x) const {
    require_nonzero("max_exp");
    Rat m = get(t_[0], x);
    for (const auto& t : t_) m = std::max(m, get(t, x));
    return m;
  }

  // Group terms by the exponent of x; each slice has its x-exponent cleared.
  std::map<Rat, ExactLaurent> slices_by(Var x) const {
    std::map<Rat, ExactLaurent> out;
    for (const auto& t : t_) {
      LTerm s = t;
      Rat e = get(t, x);
      (x == Var::t ? s.et : s.ev) = 0;
      out[e].t_.push_back(s);
    }
    for (auto& [e, p] : out) p.resort();
    return out;
  }

  // Exact division by x^{m/2} - x^{-m/2}; nullopt if not divisible.
  std::optional<ExactLaurent> divided_by_bracket(Var x, long m) const {
    if (m <= 0) throw std::invalid_argument("divided_by_bracket: m must be positive");
    if (is_zero()) return zero();
    Var y = (x == Var::t) ? Var::v : Var::t;
    ExactLaurent result;
    for (auto& [oe, slice] : slices_by(y)) {
      auto q = divide_slice(slice, x, m);
      if (!q) return std::nullopt;
      result += y == Var::t ? q->scale_shift(Var::t, oe) : q->scale_shift(Var::v, oe);
    }
    return result;
  }

  // Requires 2*e integral for every exponent; evaluates with the given square roots.
  Rat evaluate(const Rat& sqrt_t, const Rat& sqrt_v) const {
    Rat sum(0);
    for (const auto& t : t_) {
      Rat e2t = t.et * 2, e2v = t.ev * 2;
      if (!rat_is_integer(e2t) || !rat_is_integer(e2v))
        throw EvalError("exponent with denominator beyond 2 in evaluate");
      long pt = rat_to_long(e2t), pv = rat_to_long(e2v);
      if ((sqrt_t == 0 && pt < 0) || (sqrt_v == 0 && pv < 0))
        throw EvalError("negative power of zero in evaluate");
      sum += t.c * rat_pow(sqrt_t, pt) * rat_pow(sqrt_v, pv);
    }
    return sum;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
      Rat c = t.c;
      if (!first) os << (c >= 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      if (c < 0) c = -c;
      bool hasvar = (t.et != 0 || t.ev != 0);
      if (c != 1 || !hasvar) os << rat_to_string(c);
      if (c != 1 && hasvar) os << "*";
      if (t.et != 0) os << "t^" << rat_to_string(t.et);
      if (t.et != 0 && t.ev != 0) os << "*";
      if (t.ev != 0) os << "v^" << rat_to_string(t.ev);
    }
    return os.str();
  }

 private:
  std::vector<LTerm> t_;

  static int key_cmp(const LTerm& a, const LTerm& b) {
    int c = cmp(a.et, b.et);
    if (c) return c;
    return cmp(a.ev, b.ev);
  }

  static Rat get(const LTerm& t, Var x) { return x == Var::t ? t.et : t.ev; }

  void require_nonzero(const char* who) const {
    if (t_.empty()) throw std::logic_error(std::string(who) + " on zero");
  }

  ExactLaurent scale_shift(Var x, const Rat& e) const {
    ExactLaurent r(*this);
    for (auto& t : r.t_) (x == Var::t ? t.et : t.ev) += e;
    r.resort();
    return r;
  }

  void resort() {
    std::sort(t_.begin(), t_.end(),
              [](const LTerm& a, const LTerm& b) { return key_cmp(a, b) < 0; });
    std::vector<LTerm> merged;
    merged.reserve(t_.size());
    for (auto& t : t_) {
      if (!merged.empty() && key_cmp(merged.back(), t) == 0)
        merged.back().c += t.c;
      else
        merged.push_back(t);
    }
    t_.clear();
    for (auto& t : merged)
      if (t.c != 0) t_.push_back(t);
  }

  // Univariate slice division by x^{m/2} - x^{-m/2}, exact or nullopt.
  static std::optional<ExactLaurent> divide_slice(const ExactLaurent& slice, Var x, long m) {
    // Integerize exponents: y = x^{1/L} with L covering all denominators and m/2.
    long L = 2;
    for (const auto& t : slice.t_) {
      const Rat& e = (x == Var::t) ? t.et : t.ev;
      if (!e.get_den().fits_slong_p()) throw std::overflow_error("exponent denominator overflow");
      L = lcm_long(L, e.get_den().get_si());
    }
    long a = rat_to_long(rat_frac(m, 2) * L);  // divisor is y^a - y^{-a}
    std::map<long, Rat> p;  // exponent in y -> coefficient
    long emin = 0;
    bool first = true;
    for (const auto& t : slice.t_) {
      Rat e = ((x == Var::t) ? t.et : t.ev) * L;
      long E = rat_to_long(e);
      p[E] += t.c;
      if (first || E < emin) emin = E, first = false;
    }
    std::map<long, Rat> q;
    while (!p.empty()) {
      auto top = std::prev(p.end());
      long E = top->first;
      Rat c = top->second;
      if (c == 0) {
        p.erase(top);
        continue;
      }
      long qe = E - a;
      if (qe < emin + a) return std::nullopt;  // quotient support exhausted
      q[qe] += c;
      p.erase(top);
      p[E - 2 * a] += c;
      if (p[E - 2 * a] == 0) p.erase(E - 2 * a);
    }
    ExactLaurent out;
    for (auto& [E, c] : q) {
      if (c == 0) continue;
      Rat e(E, L);
      e.canonicalize();
      out.t_.push_back(x == Var::t ? LTerm{e, Rat(0), c} : LTerm{Rat(0), e, c});
    }
    out.resort();
    return out;
  }
};

}  // namespace homfly
