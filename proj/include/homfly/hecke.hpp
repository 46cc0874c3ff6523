#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symfunc.hpp"
#include "torus.hpp"

// Matrix models of the deformed symmetric-group algebra, built from scratch:
// everything here reaches the invariants through braid words, cabling and
// exact linear algebra, never through the character-sum shortcuts of the
// rest of the library. The deformation variable q lives in the t slot of the
// shared value types: stored exponent e means q^e, and a bracket {t, 2d} in
// a denominator reads q^d - q^{-d}.

namespace homfly {

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// interpolation nodes must be pairwise distinct; violation is an internal bug
struct SpectralCollision : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// standard tableaux

struct Tableau {
  Partition shape;
  std::vector<std::pair<int, int>> cell;  // cell[m-1] = (row, col) of entry m, 0-based

  int content(int m) const { return cell[m - 1].second - cell[m - 1].first; }
};

namespace detail {

inline void fill_tableaux(Tableau& t, std::vector<int>& len, int m, std::vector<Tableau>& out) {
  const int n = static_cast<int>(t.cell.size());
  if (m > n) {
    out.push_back(t);
    return;
  }
  for (size_t i = 0; i < t.shape.size(); ++i) {
    if (len[i] >= t.shape[i]) continue;
    if (i > 0 && len[i - 1] <= len[i]) continue;
    t.cell[m - 1] = {static_cast<int>(i), len[i]};
    ++len[i];
    fill_tableaux(t, len, m + 1, out);
    --len[i];
  }
}

}  // namespace detail

// Topmost-row-first order: the first tableau fills row 1, then row 2, ...
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  Tableau t;
  t.shape = shape;
  t.cell.resize(weight(shape));
  std::vector<int> len(shape.size(), 0);
  std::vector<Tableau> out;
  detail::fill_tableaux(t, len, 1, out);
  return out;
}

// Contents the entry m can take over all standard fillings: contents of
// removable cells of shapes with m boxes.
inline std::vector<int> achievable_contents(int m) {
  std::set<int> s;
  for (const auto& nu : partitions_of(m))
    for (size_t i = 0; i < nu.size(); ++i)
      if (i + 1 == nu.size() || nu[i + 1] < nu[i]) s.insert(nu[i] - 1 - static_cast<int>(i));
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// braid words

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +i for sigma_i, -i for its inverse, 1 <= i < strands
};

// (sigma_1 ... sigma_{m-1})^p
inline BraidWord torus_word(int m, int p) {
  BraidWord w;
  w.strands = m;
  for (int a = 0; a < (p < 0 ? -p : p); ++a) {
    if (p > 0)
      for (int i = 1; i < m; ++i) w.letters.push_back(i);
    else
      for (int i = m - 1; i >= 1; --i) w.letters.push_back(-i);
  }
  return w;
}

// Replace each strand by a ribbon of parallel ones; widths are listed by
// bottom position and travel with the strands. A crossing of ribbons of
// widths a, b becomes a block of a*b single crossings of the same sign.
inline BraidWord cable_word(const BraidWord& w, std::vector<int> widths) {
  if (static_cast<int>(widths.size()) != w.strands)
    throw SizeMismatch("cable_word: one width per strand");
  BraidWord out;
  out.strands = std::accumulate(widths.begin(), widths.end(), 0);
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    const int a = widths[i - 1], b = widths[i];
    const int p = std::accumulate(widths.begin(), widths.begin() + (i - 1), 0);
    if (letter > 0) {
      for (int x = p + a; x > p; --x)
        for (int y = 0; y < b; ++y) out.letters.push_back(x + y);
    } else {
      for (int x = p + 1; x <= p + a; ++x)
        for (int y = b - 1; y >= 0; --y) out.letters.push_back(-(x + y));
    }
    std::swap(widths[i - 1], widths[i]);
  }
  return out;
}

// Signed self-crossing count per component: comp[s] is the 1-based component
// of the strand starting at bottom position s+1.
inline std::vector<long> component_writhes(const BraidWord& w, const std::vector<int>& comp,
                                           int ncomp) {
  if (static_cast<int>(comp.size()) != w.strands)
    throw SizeMismatch("component_writhes: one component per strand");
  std::vector<int> at(w.strands);
  std::iota(at.begin(), at.end(), 0);
  std::vector<long> wr(ncomp, 0);
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    if (comp[at[i - 1]] == comp[at[i]]) wr[comp[at[i - 1]] - 1] += letter > 0 ? 1 : -1;
    std::swap(at[i - 1], at[i]);
  }
  return wr;
}

// ---------------------------------------------------------------------------
// matrices over the q-field

using QMatrix = std::vector<std::vector<RationalFunction>>;

inline QMatrix qm_identity(int d) {
  QMatrix m(d, std::vector<RationalFunction>(d));
  for (int i = 0; i < d; ++i) m[i][i] = RationalFunction::one();
  return m;
}

inline QMatrix qm_mul(const QMatrix& a, const QMatrix& b) {
  const int n = static_cast<int>(a.size());
  QMatrix c(n, std::vector<RationalFunction>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  for (auto& row : c)
    for (auto& e : row) e.reduce();
  return c;
}

inline RationalFunction qm_trace(const QMatrix& a) {
  RationalFunction t;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  t.reduce();
  return t;
}

inline bool qm_equal(const QMatrix& a, const QMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

// (q - q^{-1}) q^d / (q^d - q^{-d}); covers the one-dimensional cases via
// d = 1 -> q and d = -1 -> -q^{-1}
inline RationalFunction axial_weight(int d) {
  ExactLaurent num = ExactLaurent::var_monomial(Var::t, Rat(d + 1)) -
                     ExactLaurent::var_monomial(Var::t, Rat(d - 1));
  RationalFunction r = d > 0 ? RationalFunction::over_brackets(num, {{Var::t, 2L * d}})
                             : RationalFunction::over_brackets(-num, {{Var::t, -2L * d}});
  r.reduce();
  return r;
}

// 1 / (q^{2a} - q^{2c}) = q^{-a-c} / (q^{a-c} - q^{c-a})
inline RationalFunction node_gap_inverse(int a, int c) {
  if (a == c) throw SpectralCollision("node_gap_inverse: equal exponents");
  Rat e = rat_of(-a - c);
  return a > c ? RationalFunction::monomial_ratio(Rat(1), e, Rat(0), {}, {{Var::t, 2L * (a - c)}})
               : RationalFunction::monomial_ratio(Rat(-1), e, Rat(0), {},
                                                  {{Var::t, 2L * (c - a)}});
}

// ---------------------------------------------------------------------------
// one irreducible block, in the rational seminormal form

class HeckeIrrep {
 public:
  explicit HeckeIrrep(Partition lambda)
      : shape_(std::move(lambda)), n_(weight(shape_)), tabs_(standard_tableaux(shape_)) {
    std::map<std::vector<std::pair<int, int>>, int> index;
    for (size_t a = 0; a < tabs_.size(); ++a) index.emplace(tabs_[a].cell, static_cast<int>(a));
    const int d = dim();
    for (int i = 1; i < n_; ++i) {
      QMatrix g(d, std::vector<RationalFunction>(d));
      for (int a = 0; a < d; ++a) {
        const Tableau& t = tabs_[a];
        const int dist = t.content(i + 1) - t.content(i);
        g[a][a] = axial_weight(dist);
        auto swapped = t.cell;
        std::swap(swapped[i - 1], swapped[i]);
        auto it = index.find(swapped);
        if (it == index.end()) continue;
        if (dist > 0)
          g[it->second][a] = RationalFunction::one() + axial_weight(dist) * axial_weight(-dist);
        else
          g[it->second][a] = RationalFunction::one();
      }
      gens_.push_back(g);
      // g^{-1} = g - (q - q^{-1})
      QMatrix gi = g;
      RationalFunction qq(ExactLaurent::bracket_poly(Var::t, 2));
      for (int a = 0; a < d; ++a) gi[a][a] -= qq;
      inv_gens_.push_back(std::move(gi));
    }
  }

  const Partition& shape() const { return shape_; }
  int strands() const { return n_; }
  int dim() const { return static_cast<int>(tabs_.size()); }
  const std::vector<Tableau>& tableaux() const { return tabs_; }

  const QMatrix& generator(int i) const { return gens_.at(i - 1); }
  const QMatrix& generator_inverse(int i) const { return inv_gens_.at(i - 1); }

  QMatrix word_matrix(const BraidWord& w) const {
    if (w.strands != n_) throw SizeMismatch("word_matrix: strand count != |shape|");
    QMatrix m = qm_identity(dim());
    for (int letter : w.letters)
      m = qm_mul(m, letter > 0 ? generator(letter) : generator_inverse(-letter));
    return m;
  }

 private:
  Partition shape_;
  int n_;
  std::vector<Tableau> tabs_;
  std::vector<QMatrix> gens_, inv_gens_;
};

// shared, lazily built blocks; immutable once constructed
inline const HeckeIrrep& hecke_irrep(const Partition& lambda) {
  static std::map<Partition, std::unique_ptr<HeckeIrrep>> cache;
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, std::make_unique<HeckeIrrep>(lambda)).first;
  return *it->second;
}

inline RationalFunction irrep_character(const Partition& lambda, const BraidWord& w) {
  return qm_trace(hecke_irrep(lambda).word_matrix(w));
}

// ---------------------------------------------------------------------------
// spectral projectors from the commuting ladder elements

// L_1 = 1, L_m = G_{s+m-2} L_{m-1} G_{s+m-2} relative to block start s;
// joint eigenvalues on any module are q^{2 content} along a standard filling.
inline std::vector<QMatrix> murphy_ladder(const HeckeIrrep& rep, int start, int size) {
  std::vector<QMatrix> ladder{qm_identity(rep.dim())};
  for (int m = 2; m <= size; ++m) {
    const QMatrix& g = rep.generator(start + m - 2);
    ladder.push_back(qm_mul(qm_mul(g, ladder.back()), g));
  }
  return ladder;
}

// Image of p_{mu^1} x ... x p_{mu^b} (one minimal projection per consecutive
// strand block) inside the given irrep, via interpolation on the ladder
// spectra. The chosen one-dimensional target is the top-row-first filling.
inline QMatrix jm_projector(const HeckeIrrep& rep,
                            const std::vector<std::pair<int, Partition>>& blocks) {
  // deterministic in (shape, blocks); sweeps rebuild the same ones constantly
  using Key = std::pair<Partition, std::vector<std::pair<int, Partition>>>;
  static std::map<Key, QMatrix> cache;
  Key key{rep.shape(), blocks};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  QMatrix p = qm_identity(rep.dim());
  for (const auto& [start, mu] : blocks) {
    const int size = weight(mu);
    if (size == 0) continue;
    if (start < 1 || start + size - 1 > rep.strands())
      throw SizeMismatch("jm_projector: block outside the strand range");
    const Tableau target = standard_tableaux(mu).front();
    auto ladder = murphy_ladder(rep, start, size);
    for (int m = 2; m <= size; ++m) {
      const int c0 = target.content(m);
      auto nodes = achievable_contents(m);
      if (std::set<int>(nodes.begin(), nodes.end()).size() != nodes.size())
        throw SpectralCollision("jm_projector: repeated node");
      for (int c : nodes) {
        if (c == c0) continue;
        // (L_m - q^{2c}) / (q^{2c0} - q^{2c})
        QMatrix f = ladder[m - 1];
        RationalFunction shift(ExactLaurent::var_monomial(Var::t, Rat(2L * c)));
        for (int a = 0; a < rep.dim(); ++a) f[a][a] -= shift;
        RationalFunction gap = node_gap_inverse(c0, c);
        for (auto& row : f)
          for (auto& e : row) {
            e = e * gap;
            e.reduce();
          }
        p = qm_mul(p, f);
      }
    }
  }
  cache.emplace(std::move(key), p);
  return p;
}

// ---------------------------------------------------------------------------
// the three checks

// h(full twist) must be the scalar q^{kappa} on the whole block
inline bool full_twist_check(const Partition& lambda) {
  const HeckeIrrep& rep = hecke_irrep(lambda);
  QMatrix m = rep.word_matrix(torus_word(rep.strands(), rep.strands()));
  RationalFunction scalar(ExactLaurent::var_monomial(Var::t, rat_of(kappa(lambda))));
  for (int a = 0; a < rep.dim(); ++a)
    for (int b = 0; b < rep.dim(); ++b)
      if (!(m[a][b] == (a == b ? scalar : RationalFunction::zero()))) return false;
  return true;
}

namespace detail {

// bottom data of the cabled torus braid: widths per strand and the
// projected blocks, components cycling with period l
struct CabledTorus {
  BraidWord word;
  std::vector<std::pair<int, Partition>> blocks;
  std::vector<int> comp;  // per original strand
};

inline CabledTorus cabled_torus(int r, int k, int l, const PartitionTuple& colors) {
  CabledTorus out;
  std::vector<int> widths(static_cast<size_t>(r) * l);
  int pos = 1;
  for (int s = 0; s < r * l; ++s) {
    const Partition& mu = colors[s % l];
    widths[s] = weight(mu);
    if (widths[s] > 0) out.blocks.emplace_back(pos, mu);
    pos += widths[s];
    out.comp.push_back(s % l + 1);
  }
  out.word = cable_word(torus_word(r * l, k * l), widths);
  return out;
}

}  // namespace detail

// trace identity for the cabled torus braid against the stretched
// coefficients: zeta^lambda(h(beta) p^{x r}) = c^lambda q^{-k sum kappa + k kappa_lambda / r}
inline bool cabled_trace_check(int r, int k, const PartitionTuple& colors, const Partition& lambda) {
  long n = 0;
  long sum_kappa = 0;
  for (const auto& mu : colors) {
    n += weight(mu);
    sum_kappa += kappa(mu);
  }
  if (weight(lambda) != r * n) throw SizeMismatch("cabled_trace_check: |lambda| != r * n");
  if (r < 1 || std::gcd(r, k < 0 ? -k : k) != 1)
    throw std::invalid_argument("cabled_trace_check: need coprime r, k");
  auto data = detail::cabled_torus(r, k, static_cast<int>(colors.size()), colors);
  const HeckeIrrep& rep = hecke_irrep(lambda);
  RationalFunction lhs =
      qm_trace(qm_mul(rep.word_matrix(data.word), jm_projector(rep, data.blocks)));
  auto c = stretched_lr(colors, r);
  RationalFunction rhs;
  if (auto it = c.find(lambda); it != c.end() && it->second != 0)
    rhs = RationalFunction(ExactLaurent::var_monomial(
                               Var::t, rat_of(-static_cast<long long>(k) * sum_kappa) +
                                           rat_frac(static_cast<long long>(k) * kappa(lambda), r))
                               .scaled(rat_of(it->second)));
  return lhs == rhs;
}

// Full independent assembly of the invariant: braid -> cable -> matrices ->
// characters -> s*-basis, with per-component writhes counted on the braid.
inline ColoredInvariant matrix_pipeline(const TorusLinkSpec& s, const PartitionTuple& colors) {
  validate_spec(s);
  if (static_cast<int>(colors.size()) != s.l)
    throw SizeMismatch("matrix_pipeline: one color per component");
  auto data = detail::cabled_torus(s.r, s.k, s.l, colors);
  auto writhes = component_writhes(torus_word(s.r * s.l, s.k * s.l), data.comp, s.l);
  Rat et(0), ev(0);
  for (int i = 0; i < s.l; ++i) {
    et += rat_frac(kappa(colors[i]) * writhes[i], 2);
    ev += rat_frac(static_cast<long long>(weight(colors[i])) * writhes[i], 2);
  }
  ExactLaurent frame = ExactLaurent::monomial(et, ev, Rat(1));

  ColoredInvariant out{s, colors, {}};
  const int total = data.word.strands;
  for (const auto& lambda : partitions_of(total)) {
    const HeckeIrrep& rep = hecke_irrep(lambda);
    RationalFunction zeta =
        qm_trace(qm_mul(rep.word_matrix(data.word), jm_projector(rep, data.blocks)));
    if (zeta.is_zero()) continue;
    RationalFunction zt = q_to_t(zeta);
    zt.reduce();
    if (!zt.den_factors().empty())
      throw std::logic_error("matrix_pipeline: character did not reduce to a monomial");
    out.terms.push_back({lambda, zt.num() * frame});
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const SStarTerm& a, const SStarTerm& b) {
              return canonical_partition_less(a.lam, b.lam);
            });
  return out;
}

}  // namespace homfly
