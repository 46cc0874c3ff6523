#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "series.hpp"
#include "torus.hpp"

namespace homfly {

// A structural failure of an expected property. Findings are results, not
// errors: the run completes and reports them.
struct Finding {
  std::string kind;    // non-laurent | q-parity | non-palindromic | non-integer | u-grid | mismatch
  std::string where;   // location, e.g. the color tuple
  std::string detail;
};

inline std::string tuple_label(const PartitionTuple& t) { return "(" + tuple_to_string(t) + ")"; }

// One checked integer of the reformulated invariant.
struct BpsEntry {
  PartitionTuple mu;
  long g = 0;
  Rat q;  // v-exponent
  Rat n;  // integral when the structure holds
};

struct LmvResult {
  TorusLinkSpec link;
  std::vector<int> sizes;
  long total_cap = 0;
  std::map<PartitionTuple, RationalFunction> f;     // connected invariants, Schur indices
  std::map<PartitionTuple, RationalFunction> fhat;  // after the per-component change of basis
  std::vector<BpsEntry> bps;
  std::vector<Finding> findings;
  bool verified() const { return findings.empty(); }
};

namespace detail {

// Size vectors 0 <= m_i <= caps[i] with 0 < sum <= tcap, plus the zero vector.
inline std::vector<std::vector<int>> size_vectors(const std::vector<int>& caps, long tcap) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(caps.size(), 0);
  while (true) {
    long tot = 0;
    for (int x : m) tot += x;
    if (tot <= tcap) out.push_back(m);
    size_t i = 0;
    while (i < m.size() && ++m[i] > caps[i]) m[i++] = 0;
    if (i == m.size()) break;
  }
  return out;
}

inline Rat tuple_char_weight(const PartitionTuple& lams, const PartitionTuple& taus) {
  Rat w(1);
  for (size_t i = 0; i < lams.size(); ++i) {
    const auto& tab = character_table(static_cast<int>(weight(lams[i])));
    w *= rat_frac(tab.chi(lams[i], taus[i]), z_order(taus[i]));
  }
  return w;
}

}  // namespace detail

// Generating function of the colored invariants in power-sum coordinates:
// index tau-vec carries sum over color tuples of prod_i z^{-1} chi^{lam^i}(tau^i)
// times the invariant. The empty index carries 1.
inline TupleSeries<RationalFunction> build_z(const TorusLinkSpec& s, const std::vector<int>& caps,
                                             long tcap) {
  TupleSeries<RationalFunction> z;
  for (const auto& m : detail::size_vectors(caps, tcap)) {
    auto tuples = partition_tuples(m);
    for (const auto& lams : tuples) {
      RationalFunction w = colored_homfly_torus(s, lams).value();
      if (w.is_zero()) continue;
      for (const auto& taus : tuples) {
        Rat cw = detail::tuple_char_weight(lams, taus);
        if (cw == 0) continue;
        auto it = z.find(taus);
        if (it == z.end())
          z.emplace(taus, w.scaled(cw));
        else
          it->second += w.scaled(cw);
      }
    }
  }
  series_prune(z);
  return z;
}

// f * [1]_t^{2-l}: the part of fhat that should expand over z^2 = t - 2 + t^{-1}.
inline RationalFunction genus_normalized(const RationalFunction& fhat, int l) {
  RationalFunction adj = fhat;
  if (l == 1) adj = adj * RationalFunction::bracket(Var::t, 1);
  for (int i = 0; i < l - 2; ++i)
    adj = adj * RationalFunction::over_brackets(ExactLaurent::one(), {{Var::t, 1}});
  return adj;
}

// Checks one fhat value against the claimed integer structure, appending its
// table rows and any violations.
inline void extract_bps(const PartitionTuple& mu, const RationalFunction& fhat, int l,
                        std::vector<BpsEntry>& bps, std::vector<Finding>& findings) {
  RationalFunction adj = genus_normalized(fhat, l);
  ExactLaurent p;
  try {
    p = adj.certify_polynomial();
  } catch (const NotPolynomial& e) {
    findings.push_back({"non-laurent", tuple_label(mu), e.what()});
    return;
  }
  if (p.is_zero()) return;
  auto slices = p.slices_by(Var::v);
  bool first = true;
  bool odd2q = false;
  for (const auto& [q, slice] : slices) {
    Rat twoq = q * 2;
    if (!rat_is_integer(twoq)) {
      findings.push_back({"q-parity", tuple_label(mu), "v-exponent " + rat_to_string(q)});
      continue;
    }
    bool odd = (rat_to_long(twoq) % 2) != 0;
    if (first) {
      odd2q = odd;
      first = false;
    } else if (odd != odd2q) {
      findings.push_back(
          {"q-parity", tuple_label(mu), "mixed integer and half-integer v-exponents"});
    }
    std::map<long, Rat> dec;
    try {
      dec = zsquared_decompose(slice);
    } catch (const NotPalindromic& e) {
      findings.push_back({"non-palindromic", tuple_label(mu) + " v^" + rat_to_string(q), e.what()});
      continue;
    }
    for (const auto& [g, n] : dec) {
      if (n == 0) continue;
      if (!rat_is_integer(n))
        findings.push_back({"non-integer", tuple_label(mu) + " v^" + rat_to_string(q) + " g=" +
                                               std::to_string(g),
                            rat_to_string(n)});
      bps.push_back({mu, g, q, n});
    }
  }
}

inline LmvResult lmv_run(const TorusLinkSpec& s, const std::vector<int>& sizes, long tcap = -1) {
  validate_spec(s);
  if (static_cast<int>(sizes.size()) != s.l)
    throw std::invalid_argument("lmv_run: need one size cap per component");
  long total = 0;
  for (int x : sizes) {
    if (x < 0) throw std::invalid_argument("lmv_run: negative size cap");
    total += x;
  }
  if (tcap < 0) tcap = total;
  LmvResult res{s, sizes, tcap, {}, {}, {}, {}};

  auto z = build_z(s, sizes, tcap);
  auto logz = series_log(z, sizes, tcap);
  auto conn = connected_parts(logz);

  // birth of f: invert the power-sum expansion componentwise
  for (const auto& m : detail::size_vectors(sizes, tcap)) {
    long mt = 0;
    for (int x : m) mt += x;
    if (mt == 0) continue;
    auto tuples = partition_tuples(m);
    for (const auto& lams : tuples) {
      RationalFunction val;
      for (const auto& taus : tuples) {
        auto it = conn.find(taus);
        if (it == conn.end()) continue;
        Rat w(1);
        for (size_t i = 0; i < lams.size(); ++i)
          w *= rat_of(character_table(static_cast<int>(weight(lams[i]))).chi(lams[i], taus[i]));
        if (w != 0) val += it->second.scaled(w);
      }
      if (!val.is_zero()) res.f.emplace(lams, std::move(val));
    }
    // change of basis with the closed-form inverse, one factor per component
    std::map<int, std::vector<std::vector<RationalFunction>>> minv;
    for (int x : m)
      if (!minv.count(x)) minv.emplace(x, m_matrix_inverse(x));
    for (const auto& mus : tuples) {
      RationalFunction val;
      for (const auto& lams : tuples) {
        auto it = res.f.find(lams);
        if (it == res.f.end()) continue;
        RationalFunction w = it->second;
        for (size_t i = 0; i < mus.size(); ++i) {
          const auto& tab = character_table(m[i]);
          w = w * minv.at(m[i])[tab.index_of(mus[i])][tab.index_of(lams[i])];
        }
        val += w;
      }
      if (!val.is_zero()) res.fhat.emplace(mus, std::move(val));
    }
  }

  for (const auto& [mu, fh] : res.fhat) extract_bps(mu, fh, s.l, res.bps, res.findings);
  return res;
}

// ---------------------------------------------------------------------------
// Structured extraction of the one-variable palindromic tables.
// The v-dependence of every intermediate value is a combination
// of products prod_j [sigma_j]_v, and those products become linearly
// dependent once the degree reaches five, so the pipeline below never
// collapses them: coefficients live in a ring keyed by sigma.

class NuStruct {
 public:
  NuStruct() = default;

  static NuStruct zero() { return {}; }

  static NuStruct one() {
    NuStruct s;
    s.c_.emplace(Partition{}, RationalFunction::one());
    return s;
  }

  static NuStruct single(Partition sigma, RationalFunction coeff) {
    NuStruct s;
    if (!coeff.is_zero()) s.c_.emplace(std::move(sigma), std::move(coeff));
    return s;
  }

  const std::map<Partition, RationalFunction>& parts() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  NuStruct scaled(const Rat& x) const {
    if (x == 0) return {};
    NuStruct r(*this);
    for (auto& [k, c] : r.c_) c = c.scaled(x);
    return r;
  }

  NuStruct times_rf(const RationalFunction& f) const {
    if (f.is_zero()) return {};
    NuStruct r(*this);
    for (auto& [k, c] : r.c_) c = c * f;
    r.prune();
    return r;
  }

  NuStruct& operator+=(const NuStruct& o) {
    for (const auto& [k, c] : o.c_) {
      auto it = c_.find(k);
      if (it == c_.end())
        c_.emplace(k, c);
      else
        it->second += c;
    }
    prune();
    return *this;
  }

  NuStruct operator+(const NuStruct& o) const {
    NuStruct r(*this);
    r += o;
    return r;
  }

  NuStruct operator*(const NuStruct& o) const {
    NuStruct r;
    for (const auto& [ka, ca] : c_)
      for (const auto& [kb, cb] : o.c_) {
        RationalFunction p = ca * cb;
        if (p.is_zero()) continue;
        Partition k = add_partitions(ka, kb);
        auto it = r.c_.find(k);
        if (it == r.c_.end())
          r.c_.emplace(std::move(k), std::move(p));
        else
          it->second += p;
      }
    r.prune();
    return r;
  }

  NuStruct adams_applied(long d) const {
    NuStruct r;
    for (const auto& [k, c] : c_) r.c_.emplace(stretch(k, static_cast<int>(d)), c.adams(d));
    return r;
  }

  // expand the v-bracket products; for validation against the plain pipeline
  RationalFunction collapse() const {
    RationalFunction acc;
    for (const auto& [k, c] : c_) {
      ExactLaurent pv = ExactLaurent::one();
      for (int part : k) pv *= ExactLaurent::bracket_poly(Var::v, part);
      acc += c * RationalFunction(pv);
    }
    return acc;
  }

 private:
  std::map<Partition, RationalFunction> c_;

  void prune() {
    for (auto it = c_.begin(); it != c_.end();)
      it = it->second.is_zero() ? c_.erase(it) : std::next(it);
  }
};

inline NuStruct adams(const NuStruct& s, long d) { return s.adams_applied(d); }

// colors -> big partition -> Laurent polynomial; the t slot of the stored
// value holds the exponent of u = t^{-k}.
struct GTable {
  TorusLinkSpec link;
  std::vector<int> sizes;
  long total_cap = 0;
  std::map<PartitionTuple, std::map<Partition, ExactLaurent>> g;
  bool integral = true;
  bool palindromic = true;
  std::vector<Finding> findings;
  bool verified() const { return findings.empty(); }
};

// Stripped invariant of one color tuple as a structured value: the uniform
// monomial v^{k(r-1)n/2} is dropped (it is restored where needed), and each
// s* summand keeps its v-bracket product factored.
inline NuStruct structured_invariant(const TorusLinkSpec& s, const PartitionTuple& colors) {
  auto inv = colored_homfly_torus(s, colors);
  const int rn = static_cast<int>(weight(inv.terms.empty() ? Partition{} : inv.terms[0].lam));
  const auto& tab = character_table(rn);
  NuStruct acc;
  for (const auto& term : inv.terms) {
    if (term.mono.is_zero()) continue;
    const auto& ts = term.mono.terms();
    if (ts.size() != 1) throw std::logic_error("structured_invariant: non-monomial term");
    for (const auto& mu : tab.partitions()) {
      long long chi = tab.chi(term.lam, mu);
      if (!chi) continue;
      std::vector<BracketFactor> den;
      for (int part : mu) den.push_back({Var::t, part});
      acc += NuStruct::single(
          mu, RationalFunction::monomial_ratio(ts[0].c * rat_frac(chi, z_order(mu)), ts[0].et,
                                               Rat(0), {}, den));
    }
  }
  return acc;
}

inline GTable extract_g(const TorusLinkSpec& s, const std::vector<int>& sizes, long tcap = -1) {
  validate_spec(s);
  if (s.k < 1) throw std::invalid_argument("extract_g: needs k >= 1");
  if (static_cast<int>(sizes.size()) != s.l)
    throw std::invalid_argument("extract_g: need one size cap per component");
  long total = 0;
  for (int x : sizes) {
    if (x < 0) throw std::invalid_argument("extract_g: negative size cap");
    total += x;
  }
  if (tcap < 0) tcap = total;
  GTable table{s, sizes, tcap, {}, true, true, {}};

  // structured generating function, log, connected layer
  TupleSeries<NuStruct> z;
  for (const auto& m : detail::size_vectors(sizes, tcap)) {
    auto tuples = partition_tuples(m);
    for (const auto& lams : tuples) {
      NuStruct w = structured_invariant(s, lams);
      if (w.is_zero()) continue;
      for (const auto& taus : tuples) {
        Rat cw = detail::tuple_char_weight(lams, taus);
        if (cw == 0) continue;
        auto it = z.find(taus);
        if (it == z.end())
          z.emplace(taus, w.scaled(cw));
        else
          it->second += w.scaled(cw);
      }
    }
  }
  series_prune(z);
  auto conn = connected_parts(series_log(z, sizes, tcap));

  RationalFunction ksq = RationalFunction::bracket(Var::t, s.k) * RationalFunction::bracket(Var::t, s.k);

  for (const auto& m : detail::size_vectors(sizes, tcap)) {
    long n = 0;
    for (int x : m) n += x;
    if (n == 0) continue;
    const int rn = static_cast<int>(n) * s.r;
    const auto& big = character_table(rn);
    auto tuples = partition_tuples(m);
    for (const auto& lams : tuples) {
      // V = [k]^2 sum_tau prod_i chi^{lam^i}(tau^i) F_tau / prod_i E^(k)_{tau^i}
      NuStruct v;
      for (const auto& taus : tuples) {
        auto it = conn.find(taus);
        if (it == conn.end()) continue;
        Rat w(1);
        long flen = 0;
        std::vector<BracketFactor> eden;
        for (size_t i = 0; i < taus.size(); ++i) {
          w *= rat_of(character_table(m[i]).chi(lams[i], taus[i]));
          flen += static_cast<long>(taus[i].size());
          for (int part : taus[i]) eden.push_back({Var::t, static_cast<long>(s.k) * part});
        }
        if (w == 0) continue;
        if (flen % 2) w = -w;  // sign of 1/E
        v += it->second.times_rf(
            RationalFunction::monomial_ratio(w, Rat(0), Rat(0), {}, eden));
      }
      if (v.is_zero()) continue;
      v = v.times_rf(ksq);

      // per-sigma unwind, then the character inversion to the big partition
      std::map<Partition, ExactLaurent> row;
      for (const auto& lam : big.partitions()) {
        RationalFunction gx;
        for (const auto& [sigma, coef] : v.parts()) {
          long long chi = big.chi(lam, sigma);
          if (!chi) continue;
          std::vector<BracketFactor> num, den;
          for (int part : sigma) {
            num.push_back({Var::t, part});
            den.push_back({Var::t, static_cast<long>(s.k) * part});
          }
          Rat w = rat_of(chi);
          if (sigma.size() % 2) w = -w;
          gx += coef * RationalFunction::monomial_ratio(w, Rat(0), Rat(0), num, den);
        }
        if (gx.is_zero()) continue;
        ExactLaurent gp;
        try {
          gp = gx.certify_polynomial();
        } catch (const NotPolynomial& e) {
          table.findings.push_back(
              {"non-laurent", tuple_label(lams) + " -> " + partition_to_string(lam), e.what()});
          continue;
        }
        // t-exponents must sit on the u-grid: e = -k * (u-exponent)
        ExactLaurent gu;
        bool grid_ok = true;
        for (const auto& tm : gp.terms()) {
          if (tm.ev != 0) throw std::logic_error("extract_g: v leaked into a table value");
          Rat ue = -tm.et / s.k;
          if (!rat_is_integer(ue)) {
            table.findings.push_back({"u-grid",
                                      tuple_label(lams) + " -> " + partition_to_string(lam),
                                      "t-exponent " + rat_to_string(tm.et)});
            grid_ok = false;
            break;
          }
          gu += ExactLaurent::var_monomial(Var::t, ue, tm.c);
          if (!rat_is_integer(tm.c)) {
            table.integral = false;
            table.findings.push_back({"non-integer",
                                      tuple_label(lams) + " -> " + partition_to_string(lam),
                                      rat_to_string(tm.c)});
          }
        }
        if (!grid_ok || gu.is_zero()) continue;
        if (!gu.is_palindromic(Var::t)) {
          table.palindromic = false;
          table.findings.push_back(
              {"non-palindromic", tuple_label(lams) + " -> " + partition_to_string(lam), gu.str()});
        }
        row.emplace(lam, std::move(gu));
      }
      if (!row.empty()) table.g.emplace(lams, std::move(row));
    }
  }
  return table;
}

// Cross-check: rebuild every fhat from the extracted tables through the
// closed identity
//   fhat_mu = (-1)^l [1]^l / [k]^2 * v^{k(r-1)n/2}
//             * sum_lams prod_i S_{lam^i, mu^i}(k-point)
//             * sum_lam g^lam_lams(t^k) * s_{lam; v^{-1/2}}(k-point)
// and compare with the series pipeline.
inline std::vector<Finding> fhat_vs_g_consistency(const TorusLinkSpec& s,
                                                  const std::vector<int>& sizes, long tcap = -1) {
  auto lmv = lmv_run(s, sizes, tcap);
  auto table = extract_g(s, sizes, tcap);
  std::vector<Finding> out = table.findings;

  RationalFunction ksq_inv =
      RationalFunction::over_brackets(ExactLaurent::one(), {{Var::t, s.k}, {Var::t, s.k}});
  ExactLaurent b1l = ExactLaurent::one();
  for (int i = 0; i < s.l; ++i) b1l *= ExactLaurent::bracket_poly(Var::t, 1);
  if (s.l % 2) b1l = -b1l;

  for (const auto& m : detail::size_vectors(sizes, tcap < 0 ? lmv.total_cap : tcap)) {
    long n = 0;
    for (int x : m) n += x;
    if (n == 0) continue;
    auto tuples = partition_tuples(m);

    // per-lams inner sums over the big partition
    std::map<PartitionTuple, RationalFunction> inner;
    for (const auto& lams : tuples) {
      auto it = table.g.find(lams);
      if (it == table.g.end()) continue;
      RationalFunction accum;
      for (const auto& [lam, gu] : it->second) {
        // g evaluated at t^k: stored u-exponents scale by k into the t slot
        RationalFunction gtk(gu.scale_exponents(Rat(s.k), Rat(1)));
        accum += gtk * principal_specialize_sq(lam, s.k);
      }
      if (!accum.is_zero()) inner.emplace(lams, std::move(accum));
    }

    ExactLaurent pre_mono = ExactLaurent::monomial(
        Rat(0), rat_frac(static_cast<long long>(s.k) * (s.r - 1) * n, 2), Rat(1));
    RationalFunction pre = RationalFunction(b1l * pre_mono) * ksq_inv;

    for (const auto& mus : tuples) {
      RationalFunction rhs;
      for (const auto& lams : tuples) {
        auto it = inner.find(lams);
        if (it == inner.end()) continue;
        RationalFunction w = it->second;
        for (size_t i = 0; i < mus.size(); ++i) w = w * s_pair_principal(lams[i], mus[i], s.k);
        rhs += w;
      }
      rhs = rhs * pre;
      RationalFunction lhs;
      if (auto it = lmv.fhat.find(mus); it != lmv.fhat.end()) lhs = it->second;
      if (!(lhs == rhs))
        out.push_back({"mismatch", tuple_label(mus),
                       "series fhat and table reconstruction disagree"});
    }
  }
  return out;
}

}  // namespace homfly
