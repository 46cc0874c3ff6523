#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace homfly {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
using PartitionTuple = std::vector<Partition>;

inline bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int tuple_weight(const PartitionTuple& t) {
  int s = 0;
  for (const auto& p : t) s += weight(p);
  return s;
}

namespace detail {
inline void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// Canonical order: (n) first, (1,...,1) last.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  detail::gen_partitions(n, n, cur, out);
  if (n == 0) out = {Partition{}};
  return out;
}

inline Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) q[j]++;
  return q;
}

// kappa = sum over cells of 2*(col - row), zero-based offsets.
inline long long kappa(const Partition& p) {
  long long k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    long long li = p[i];
    k += li * (li + 1 - 2 * static_cast<long long>(i + 1));
  }
  return k;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Centralizer order of the conjugacy class: prod i^{m_i} * m_i!.
inline long long z_order(const Partition& p) {
  long long z = 1;
  int run = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    z *= p[i];
    if (i + 1 < p.size() && p[i + 1] == p[i]) {
      run++;
      z *= run;
    } else {
      run = 1;
    }
  }
  return z;
}

inline long long class_size(const Partition& p) { return factorial(weight(p)) / z_order(p); }

// (hook length, content) for every cell, row-major.
inline std::vector<std::pair<int, int>> hooks_contents(const Partition& p) {
  Partition pc = conjugate(p);
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int hook = (p[i] - j) + (pc[j] - static_cast<int>(i)) - 1;
      int content = j - static_cast<int>(i);
      out.emplace_back(hook, content);
    }
  return out;
}

inline long long hook_product(const Partition& p) {
  long long h = 1;
  for (auto& [hook, c] : hooks_contents(p)) h *= hook;
  return h;
}

// Number of standard tableaux.
inline long long standard_tableaux_count(const Partition& p) {
  return factorial(weight(p)) / hook_product(p);
}

// Multiset union of parts.
inline Partition add_partitions(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<int>());
  return out;
}

inline Partition stretch(const Partition& p, int r) {
  Partition out(p);
  for (int& x : out) x *= r;
  return out;
}

// true if a precedes b in the canonical order above
inline bool canonical_partition_less(const Partition& a, const Partition& b) {
  if (weight(a) != weight(b)) return weight(a) < weight(b);
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// All tuples (mu^1, ..., mu^l) with mu^i a partition of sizes[i].
inline std::vector<PartitionTuple> partition_tuples(const std::vector<int>& sizes) {
  std::vector<std::vector<Partition>> per;
  per.reserve(sizes.size());
  for (int s : sizes) per.push_back(partitions_of(s));
  std::vector<PartitionTuple> out;
  PartitionTuple cur(sizes.size());
  std::vector<size_t> idx(sizes.size(), 0);
  while (true) {
    for (size_t i = 0; i < sizes.size(); ++i) cur[i] = per[i][idx[i]];
    out.push_back(cur);
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == per[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

inline std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os.str();
}

// "2,1" -> (2,1); "" -> empty partition
inline Partition partition_from_string(const std::string& s) {
  Partition p;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad partition: '" + s + "'");
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition: '" + s + "'");
    p.push_back(v);
  }
  if (!is_valid_partition(p)) throw std::invalid_argument("not weakly decreasing: '" + s + "'");
  return p;
}

inline std::string tuple_to_string(const PartitionTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += '|';
    s += partition_to_string(t[i]);
  }
  return s;
}

// Components separated by '|'; an empty component is the empty partition.
inline PartitionTuple tuple_from_string(const std::string& s) {
  PartitionTuple t;
  std::string tok;
  size_t start = 0;
  while (true) {
    size_t bar = s.find('|', start);
    tok = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    t.push_back(partition_from_string(tok));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return t;
}

}  // namespace homfly
