#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "symfunc.hpp"

namespace homfly {

// T(r*l, k*l): l parallel (r, k) curves on the torus. Requires gcd(r, k) = 1;
// k < 0 gives the mirror, and k = 0 (forcing r = 1) the l-component unlink.
struct TorusLinkSpec {
  int r = 1;
  int k = 1;
  int l = 1;
};

inline void validate_spec(const TorusLinkSpec& s) {
  if (s.r < 1) throw std::invalid_argument("torus spec: r must be >= 1");
  if (s.l < 1) throw std::invalid_argument("torus spec: l must be >= 1");
  if (std::gcd(s.r, std::abs(s.k)) != 1)
    throw std::invalid_argument("torus spec: gcd(r, k) must be 1");
}

// Sum of pairwise linking numbers between components.
inline long long linking_sum(const TorusLinkSpec& s) {
  return static_cast<long long>(s.l) * (s.l - 1) / 2 * s.r * s.k;
}

inline TorusLinkSpec sublink(const TorusLinkSpec& s, int keep) {
  if (keep < 1 || keep > s.l) throw std::invalid_argument("sublink: bad component count");
  return {s.r, s.k, keep};
}

// One summand c * t^{e} v^{f} * s*_{lam}; mono is always a single monomial
// with integer coefficient.
struct SStarTerm {
  Partition lam;
  ExactLaurent mono;
};

struct ColoredInvariant {
  TorusLinkSpec link;
  PartitionTuple colors;
  std::vector<SStarTerm> terms;  // canonical partition order

  RationalFunction value() const {
    RationalFunction acc;
    for (const auto& t : terms) acc += RationalFunction(t.mono) * s_star(t.lam);
    return acc;
  }

  Rat evaluate(const Rat& sqrt_t, const Rat& sqrt_v) const {
    Rat acc(0);
    for (const auto& t : terms)
      acc += t.mono.evaluate(sqrt_t, sqrt_v) * s_star(t.lam).evaluate(sqrt_t, sqrt_v);
    return acc;
  }
};

// Colored invariant of T(rl, kl) with one color per component:
//   t^{k r sum_i kappa_i / 2} v^{k (r-1) n / 2}
//     * sum_{lam of size rn} c_lam t^{-k kappa_lam / (2r)} s*_lam,
// with c_lam the stretched product expansion of the colors.
inline ColoredInvariant colored_homfly_torus(const TorusLinkSpec& s, const PartitionTuple& colors) {
  validate_spec(s);
  if (static_cast<int>(colors.size()) != s.l)
    throw std::invalid_argument("colors: need one partition per component");
  const long long n = tuple_weight(colors);
  long long kap = 0;
  for (const auto& c : colors) kap += kappa(c);
  Rat base_t = rat_frac(static_cast<long long>(s.k) * s.r * kap, 2);
  Rat base_v = rat_frac(static_cast<long long>(s.k) * (s.r - 1) * n, 2);
  ColoredInvariant inv{s, colors, {}};
  for (const auto& [lam, c] : stretched_lr(colors, s.r)) {
    Rat e = base_t - rat_frac(static_cast<long long>(s.k) * kappa(lam), 2LL * s.r);
    if (!rat_is_integer(e * 2)) throw std::logic_error("torus term exponent not half-integral");
    inv.terms.push_back({lam, ExactLaurent::monomial(e, base_v, Rat(static_cast<long>(c)))});
  }
  std::sort(inv.terms.begin(), inv.terms.end(),
            [](const SStarTerm& a, const SStarTerm& b) {
              return canonical_partition_less(a.lam, b.lam);
            });
  return inv;
}

// Classical two-variable polynomial, normalized to 1 on the unknot:
//   P = v^{linking_sum} [1]_t / [1]_v * (invariant with every color a single box).
inline RationalFunction homfly_polynomial(const TorusLinkSpec& s) {
  PartitionTuple colors(static_cast<size_t>(s.l), Partition{1});
  auto w = colored_homfly_torus(s, colors).value();
  auto pre = RationalFunction::over_brackets(
      ExactLaurent::var_monomial(Var::v, rat_of(linking_sum(s))) * ExactLaurent::bracket_poly(Var::t, 1),
      {{Var::v, 1}});
  return pre * w;
}

}  // namespace homfly
