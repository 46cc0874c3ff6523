#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace homfly {

namespace detail {

// First-column hook lengths padded to a fixed number of rows, strictly decreasing.
inline std::vector<long> beta_set(const Partition& lam, int rows) {
  std::vector<long> b(rows);
  for (int i = 0; i < rows; ++i) {
    long li = i < static_cast<int>(lam.size()) ? lam[i] : 0;
    b[i] = li + rows - 1 - i;
  }
  return b;
}

inline Partition partition_from_beta(std::vector<long> b) {
  std::sort(b.begin(), b.end(), std::greater<long>());
  Partition lam;
  int rows = static_cast<int>(b.size());
  for (int i = 0; i < rows; ++i) {
    long li = b[i] - (rows - 1 - i);
    if (li > 0) lam.push_back(static_cast<int>(li));
  }
  return lam;
}

// Border-strip recursion. Strips of sizes mu[k..] remain to be removed; the
// memo is only valid for a fixed mu. Removing a strip of size s moves one
// beta number down by s; the height of the strip is the number of beta
// numbers jumped over, which carries the sign.
inline long long mn_value(const Partition& lam, const Partition& mu, size_t k,
                          std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (k == mu.size()) return lam.empty() ? 1 : 0;
  auto key = std::make_pair(lam, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long s = mu[k];
  const int rows = static_cast<int>(lam.size());
  auto b = beta_set(lam, rows);
  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    long nb = b[i] - s;
    if (nb < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < rows; ++j) {
      if (j == i) continue;
      if (b[j] == nb) {
        occupied = true;
        break;
      }
      if (b[j] > nb && b[j] < b[i]) ++between;
    }
    if (occupied) continue;
    auto b2 = b;
    b2[i] = nb;
    long long sub = mn_value(partition_from_beta(std::move(b2)), mu, k + 1, memo);
    total += (between % 2) ? -sub : sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

// chi^lam evaluated on the conjugacy class of cycle type mu.
inline long long character_value(const Partition& lam, const Partition& mu) {
  if (weight(lam) != weight(mu)) throw std::invalid_argument("character_value: weight mismatch");
  std::map<std::pair<Partition, size_t>, long long> memo;
  return detail::mn_value(lam, mu, 0, memo);
}

// Full character table of S_n, rows and columns in the canonical partition
// order. Optionally persisted as plain text under $HOMFLY_CHAR_CACHE; a file
// that fails version, shape, or checksum validation is recomputed in place.
class CharacterTable {
 public:
  explicit CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
    for (int i = 0; i < static_cast<int>(parts_.size()); ++i) index_[parts_[i]] = i;
    if (!load_cache()) {
      compute();
      save_cache();
    }
  }

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }

  int index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("not a partition of " + std::to_string(n_));
    return it->second;
  }

  long long chi(int lam, int mu) const { return chi_[lam][mu]; }
  long long chi(const Partition& lam, const Partition& mu) const {
    return chi_[index_of(lam)][index_of(mu)];
  }

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, int> index_;
  std::vector<std::vector<long long>> chi_;

  void compute() {
    const int p = static_cast<int>(parts_.size());
    chi_.assign(p, std::vector<long long>(p, 0));
    for (int m = 0; m < p; ++m) {
      std::map<std::pair<Partition, size_t>, long long> memo;  // shared across rows, fixed mu
      for (int l = 0; l < p; ++l) chi_[l][m] = detail::mn_value(parts_[l], parts_[m], 0, memo);
    }
  }

  std::string body_text() const {
    std::ostringstream os;
    for (const auto& row : chi_) {
      for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
    return os.str();
  }

  static std::filesystem::path cache_path(int n) {
    const char* dir = std::getenv("HOMFLY_CHAR_CACHE");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / ("chartab_v1_n" + std::to_string(n) + ".txt");
  }

  bool load_cache() {
    auto path = cache_path(n_);
    if (path.empty()) return false;
    std::ifstream in(path);
    if (!in) return false;
    std::string magic, key;
    int n = -1;
    size_t p = 0;
    uint64_t sum = 0;
    std::getline(in, magic);
    if (magic != "homfly chartab v1") return false;
    if (!(in >> key >> n) || key != "n" || n != n_) return false;
    if (!(in >> key >> p) || key != "parts" || p != parts_.size()) return false;
    if (!(in >> key >> std::hex >> sum >> std::dec) || key != "checksum") return false;
    in.ignore();
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (detail::fnv1a(body) != sum) return false;
    std::istringstream bs(body);
    std::vector<std::vector<long long>> m(p, std::vector<long long>(p));
    for (size_t i = 0; i < p; ++i)
      for (size_t j = 0; j < p; ++j)
        if (!(bs >> m[i][j])) return false;
    chi_ = std::move(m);
    return true;
  }

  void save_cache() const {
    auto path = cache_path(n_);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    std::string body = body_text();
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << "homfly chartab v1\n";
      out << "n " << n_ << "\n";
      out << "parts " << parts_.size() << "\n";
      out << "checksum " << std::hex << detail::fnv1a(body) << std::dec << "\n";
      out << body;
    }
    std::filesystem::rename(tmp, path, ec);  // best effort; cache is advisory
  }
};

// Memoized per-n access point.
inline const CharacterTable& character_table(int n) {
  static std::map<int, std::unique_ptr<CharacterTable>> tables;
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, std::make_unique<CharacterTable>(n)).first;
  return *it->second;
}

}  // namespace homfly
