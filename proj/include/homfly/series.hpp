#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace homfly {

// Formal series in l alphabets, written in the power-sum basis and indexed by
// partition tuples: sum over tau-vec of c_{tau-vec} prod_i p_{tau^i}(x_i).
// In this basis multiplication is just multiset union of indices, so exact
// truncated log/exp stay cheap. C must provide +=, *, is_zero, scaled, one,
// and an adams(c, d) free function.
template <class C>
using TupleSeries = std::map<PartitionTuple, C>;

inline bool within_caps(const PartitionTuple& t, const std::vector<int>& caps, long tcap) {
  long tot = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    long w = weight(t[i]);
    if (w > caps[i]) return false;
    tot += w;
  }
  return tot <= tcap;
}

template <class C>
void series_prune(TupleSeries<C>& s) {
  for (auto it = s.begin(); it != s.end();)
    it = it->second.is_zero() ? s.erase(it) : std::next(it);
}

template <class C>
void series_add_scaled(TupleSeries<C>& into, const TupleSeries<C>& what, const Rat& scale) {
  for (const auto& [key, c] : what) {
    C term = c.scaled(scale);
    if (term.is_zero()) continue;
    auto it = into.find(key);
    if (it == into.end())
      into.emplace(key, std::move(term));
    else
      it->second += term;
  }
}

template <class C>
TupleSeries<C> series_mul(const TupleSeries<C>& a, const TupleSeries<C>& b,
                          const std::vector<int>& caps, long tcap) {
  TupleSeries<C> out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      PartitionTuple m(ta.size());
      for (size_t i = 0; i < ta.size(); ++i) m[i] = add_partitions(ta[i], tb[i]);
      if (!within_caps(m, caps, tcap)) continue;
      C prod = ca * cb;
      if (prod.is_zero()) continue;
      auto it = out.find(m);
      if (it == out.end())
        out.emplace(std::move(m), std::move(prod));
      else
        it->second += prod;
    }
  series_prune(out);
  return out;
}

// log of a series with constant term exactly one.
template <class C>
TupleSeries<C> series_log(const TupleSeries<C>& z, const std::vector<int>& caps, long tcap) {
  PartitionTuple empty(caps.size());
  TupleSeries<C> u = z;
  auto it = u.find(empty);
  if (it == u.end()) throw std::invalid_argument("series_log: missing constant term");
  it->second += C::one().scaled(Rat(-1));
  if (!it->second.is_zero()) throw std::invalid_argument("series_log: constant term is not 1");
  u.erase(it);
  TupleSeries<C> acc, pw = u;
  for (long m = 1; m <= tcap && !pw.empty(); ++m) {
    series_add_scaled(acc, pw, rat_frac((m % 2) ? 1 : -1, m));
    if (m < tcap) pw = series_mul(pw, u, caps, tcap);
  }
  series_prune(acc);
  return acc;
}

// exp of a series with no constant term.
template <class C>
TupleSeries<C> series_exp(const TupleSeries<C>& f, const std::vector<int>& caps, long tcap) {
  PartitionTuple empty(caps.size());
  if (auto it = f.find(empty); it != f.end() && !it->second.is_zero())
    throw std::invalid_argument("series_exp: nonzero constant term");
  TupleSeries<C> acc, pw = f;
  acc.emplace(empty, C::one());
  Rat fact(1);
  for (long m = 1; m <= tcap && !pw.empty(); ++m) {
    fact /= static_cast<long>(m);
    series_add_scaled(acc, pw, fact);
    if (m < tcap) pw = series_mul(pw, f, caps, tcap);
  }
  series_prune(acc);
  return acc;
}

inline long tuple_part_gcd(const PartitionTuple& t) {
  long g = 0;
  for (const auto& p : t)
    for (int x : p) g = std::gcd(g, static_cast<long>(x));
  return g;
}

inline PartitionTuple tuple_stretch(const PartitionTuple& t, int d) {
  PartitionTuple out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = stretch(t[i], d);
  return out;
}

inline PartitionTuple tuple_shrink(const PartitionTuple& t, int d) {
  PartitionTuple out(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    out[i] = t[i];
    for (int& x : out[i]) {
      if (x % d) throw std::invalid_argument("tuple_shrink: part not divisible");
      x /= d;
    }
  }
  return out;
}

// Extracts the degree-one layer of log Z = sum_{d >= 1} (1/d) adams_d(F):
//   F_{sigma} = L_{sigma} - sum_{d >= 2, d | gcd(parts)} (1/d) adams_d(F_{sigma/d}).
template <class C>
TupleSeries<C> connected_parts(const TupleSeries<C>& logz) {
  std::vector<PartitionTuple> keys;
  keys.reserve(logz.size());
  for (const auto& [key, c] : logz) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const PartitionTuple& a, const PartitionTuple& b) {
    return tuple_weight(a) < tuple_weight(b);
  });
  TupleSeries<C> out;
  for (const auto& key : keys) {
    C val = logz.at(key);
    long g = tuple_part_gcd(key);
    for (long d = 2; d <= g; ++d) {
      if (g % d) continue;
      auto it = out.find(tuple_shrink(key, static_cast<int>(d)));
      if (it == out.end()) continue;
      val += adams(it->second, d).scaled(rat_frac(-1, d));
    }
    out.emplace(key, std::move(val));  // keep zeros until the sweep finishes
  }
  series_prune(out);
  return out;
}

}  // namespace homfly
