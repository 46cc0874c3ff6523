#pragma once

#include <map>
#include <vector>

#include "characters.hpp"
#include "partition.hpp"
#include "rational_function.hpp"

namespace homfly {

// Expansion of prod_i s_{lambda^i}(x^r) in the Schur basis: lambda -> integer
// coefficient, over partitions of r * (total color size). Computed through the
// power-sum basis; p_mu(x^r) = p_{r mu}(x).
inline std::map<Partition, long long> stretched_lr(const PartitionTuple& colors, int r) {
  if (r <= 0) throw std::invalid_argument("stretched_lr: r must be positive");
  std::vector<int> sizes;
  sizes.reserve(colors.size());
  for (const auto& c : colors) sizes.push_back(static_cast<int>(weight(c)));
  const int n = static_cast<int>(tuple_weight(colors));
  const auto& big = character_table(r * n);
  std::map<Partition, Rat> acc;
  for (const auto& mus : partition_tuples(sizes)) {
    Rat w(1);
    Partition merged;
    for (size_t i = 0; i < mus.size(); ++i) {
      w *= rat_frac(character_table(sizes[i]).chi(colors[i], mus[i]), z_order(mus[i]));
      merged = add_partitions(merged, mus[i]);
    }
    if (w == 0) continue;
    Partition cls = stretch(merged, r);
    int ci = big.index_of(cls);
    for (int l = 0; l < static_cast<int>(big.partitions().size()); ++l) {
      long long chi = big.chi(l, ci);
      if (chi) acc[big.partitions()[l]] += w * static_cast<long>(chi);
    }
  }
  std::map<Partition, long long> out;
  for (auto& [lam, c] : acc) {
    if (c == 0) continue;
    out[lam] = rat_to_long(c);  // throws if a rounding bug ever loses integrality
  }
  return out;
}

// Schur value on the full two-parameter alphabet:
//   sum_{mu} z_mu^{-1} chi^lam(mu) prod_j [mu_j]_v / [mu_j]_t.
inline RationalFunction s_star(const Partition& lam) {
  const int n = static_cast<int>(weight(lam));
  const auto& tab = character_table(n);
  RationalFunction acc;
  for (const auto& mu : tab.partitions()) {
    long long chi = tab.chi(lam, mu);
    if (!chi) continue;
    std::vector<BracketFactor> num, den;
    for (int part : mu) {
      num.push_back({Var::v, part});
      den.push_back({Var::t, part});
    }
    acc += RationalFunction::monomial_ratio(rat_frac(chi, z_order(mu)), Rat(0), Rat(0), num, den);
  }
  return acc;
}

// Same value as a hook-content product:
//   prod_{cells (i,j)} (v^{1/2} t^{c/2} - v^{-1/2} t^{-c/2}) / [h]_t,  c = j - i.
inline RationalFunction s_star_hook(const Partition& lam) {
  ExactLaurent num = ExactLaurent::one();
  std::vector<BracketFactor> den;
  for (const auto& [h, c] : hooks_contents(lam)) {
    num *= ExactLaurent::monomial(rat_frac(c, 2), rat_frac(1, 2), Rat(1)) +
           ExactLaurent::monomial(rat_frac(-c, 2), rat_frac(-1, 2), Rat(-1));
    den.push_back({Var::t, h});
  }
  return RationalFunction::over_brackets(std::move(num), den);
}

// Transition matrix in the t variable, both indices over partitions of n in
// canonical order:
//   M_{lam,mu} = sum_tau z_tau^{-1} chi^lam(tau) chi^mu(tau) (-1)^{len(tau)-1}
//                prod_j [tau_j]_t / [1]_t.
inline std::vector<std::vector<RationalFunction>> m_matrix(int n) {
  const auto& tab = character_table(n);
  const auto& parts = tab.partitions();
  const int p = static_cast<int>(parts.size());
  std::vector<std::vector<RationalFunction>> m(p, std::vector<RationalFunction>(p));
  for (int ti = 0; ti < p; ++ti) {
    const Partition& tau = parts[ti];
    ExactLaurent prod = ExactLaurent::one();
    for (int part : tau) prod *= ExactLaurent::bracket_poly(Var::t, part);
    if (tau.size() % 2 == 0) prod = -prod;  // (-1)^{len-1}
    RationalFunction base = RationalFunction::over_brackets(prod, {{Var::t, 1}});
    for (int l = 0; l < p; ++l) {
      long long cl = tab.chi(l, ti);
      if (!cl) continue;
      for (int u = 0; u < p; ++u) {
        long long cu = tab.chi(u, ti);
        if (!cu) continue;
        m[l][u] += base.scaled(rat_frac(cl * cu, z_order(tau)));
      }
    }
  }
  return m;
}

// Closed-form inverse by column orthogonality of the character table:
//   (M^{-1})_{mu,nu} = sum_tau z_tau^{-1} chi^mu(tau) chi^nu(tau)
//                      (-1)^{len(tau)+1} [1]_t / prod_j [tau_j]_t.
inline std::vector<std::vector<RationalFunction>> m_matrix_inverse(int n) {
  const auto& tab = character_table(n);
  const auto& parts = tab.partitions();
  const int p = static_cast<int>(parts.size());
  std::vector<std::vector<RationalFunction>> m(p, std::vector<RationalFunction>(p));
  for (int ti = 0; ti < p; ++ti) {
    const Partition& tau = parts[ti];
    std::vector<BracketFactor> den;
    for (int part : tau) den.push_back({Var::t, part});
    for (int l = 0; l < p; ++l) {
      long long cl = tab.chi(l, ti);
      if (!cl) continue;
      for (int u = 0; u < p; ++u) {
        long long cu = tab.chi(u, ti);
        if (!cu) continue;
        Rat w = rat_frac(cl * cu, z_order(tau));
        if (tau.size() % 2 == 0) w = -w;  // (-1)^{len+1}
        m[l][u] += RationalFunction::monomial_ratio(w, Rat(0), Rat(0), {{Var::t, 1}}, den);
      }
    }
  }
  return m;
}

// Schur expansion of the length-k q-point evaluation attached to column mu:
// coefficient on s_lam is (-[k]_t) * M_{lam,mu}(t^k). Indices follow the
// canonical order of partitions of |mu|.
inline std::vector<RationalFunction> s_q_vector(const Partition& mu, long k) {
  const int n = static_cast<int>(weight(mu));
  const auto& tab = character_table(n);
  const int mi = tab.index_of(mu);
  auto m = m_matrix(n);
  RationalFunction mk = -RationalFunction::bracket(Var::t, k);
  std::vector<RationalFunction> out;
  out.reserve(m.size());
  for (size_t l = 0; l < m.size(); ++l) out.push_back(mk * m[l][mi].adams(k));
  return out;
}

// Schur value on the k-point t-alphabet joined with the v-alphabet:
//   sum_tau z_tau^{-1} chi^lam(tau) (-1)^{len(tau)}
//           prod_j [tau_j]_v [k tau_j]_t / [tau_j]_t.
inline RationalFunction principal_specialize_sq(const Partition& lam, long k) {
  const int n = static_cast<int>(weight(lam));
  const auto& tab = character_table(n);
  RationalFunction acc;
  for (const auto& tau : tab.partitions()) {
    long long chi = tab.chi(lam, tau);
    if (!chi) continue;
    std::vector<BracketFactor> num, den;
    for (int part : tau) {
      num.push_back({Var::v, part});
      num.push_back({Var::t, static_cast<long>(k) * part});
      den.push_back({Var::t, part});
    }
    Rat w = rat_frac(chi, z_order(tau));
    if (tau.size() % 2) w = -w;
    acc += RationalFunction::monomial_ratio(w, Rat(0), Rat(0), num, den);
  }
  return acc;
}

// Pairing of two Schur functions on the k-point t-alphabet:
//   sum_tau z_tau^{-1} chi^lam(tau) chi^mu(tau) prod_j [k tau_j]_t / [tau_j]_t.
inline RationalFunction s_pair_principal(const Partition& lam, const Partition& mu, long k) {
  if (weight(lam) != weight(mu)) throw std::invalid_argument("s_pair_principal: weight mismatch");
  const int n = static_cast<int>(weight(lam));
  const auto& tab = character_table(n);
  RationalFunction acc;
  for (const auto& tau : tab.partitions()) {
    long long c = tab.chi(lam, tau) * tab.chi(mu, tau);
    if (!c) continue;
    std::vector<BracketFactor> num, den;
    for (int part : tau) {
      num.push_back({Var::t, static_cast<long>(k) * part});
      den.push_back({Var::t, part});
    }
    acc += RationalFunction::monomial_ratio(rat_frac(c, z_order(tau)), Rat(0), Rat(0), num, den);
  }
  return acc;
}

// Numeric Schur value at concrete points, via the power-sum expansion.
inline Rat schur_evaluate(const Partition& lam, const std::vector<Rat>& xs) {
  const int n = static_cast<int>(weight(lam));
  const auto& tab = character_table(n);
  Rat sum(0);
  for (const auto& mu : tab.partitions()) {
    long long chi = tab.chi(lam, mu);
    if (!chi) continue;
    Rat prod(1);
    for (int part : mu) {
      Rat pm(0);
      for (const auto& x : xs) pm += rat_pow(x, part);
      prod *= pm;
    }
    sum += rat_frac(chi, z_order(mu)) * prod;
  }
  return sum;
}

}  // namespace homfly
