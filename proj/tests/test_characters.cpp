#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "homfly/characters.hpp"
#include "homfly/hecke.hpp"

using namespace homfly;

TEST_CASE("small character values") {
  const auto& t3 = character_table(3);
  CHECK(t3.chi(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(t3.chi(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(t3.chi(Partition{2, 1}, Partition{3}) == -1);
  const auto& t5 = character_table(5);
  CHECK(t5.chi(Partition{3, 2}, Partition{1, 1, 1, 1, 1}) == 5);
  CHECK(t5.chi(Partition{3, 2}, Partition{5}) == 0);
  CHECK(t5.chi(Partition{3, 1, 1}, Partition{5}) == 1);
  for (int n = 1; n <= 6; ++n) {
    const auto& t = character_table(n);
    for (const auto& mu : t.partitions()) {
      CHECK(t.chi(Partition{n}, mu) == 1);  // trivial
      int sign = (n - static_cast<int>(mu.size())) % 2 == 0 ? 1 : -1;
      CHECK(t.chi(Partition(n, 1), mu) == sign);  // alternating
    }
  }
}

TEST_CASE("row and column orthogonality") {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = character_table(n);
    const auto& parts = t.partitions();
    const int p = static_cast<int>(parts.size());
    for (int a = 0; a < p; ++a)
      for (int b = a; b < p; ++b) {
        long long dot = 0;
        for (int m = 0; m < p; ++m) dot += class_size(parts[m]) * t.chi(a, m) * t.chi(b, m);
        CHECK(dot == (a == b ? factorial(n) : 0));
      }
    for (int m = 0; m < p; ++m) {
      long long dot = 0;
      for (int a = 0; a < p; ++a) dot += t.chi(a, m) * t.chi(a, m);
      CHECK(dot == z_order(parts[m]));
    }
  }
}

// ---------------------------------------------------------------------------
// Independent check: build Young's seminormal representation of the symmetric
// group over Q and take traces of explicit permutation words. No shared code
// with the border-strip recursion beyond tableau enumeration.

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat mat_id(size_t n) {
  Mat m(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat c(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// transposition (i, i+1), 1-based i
Mat sn_generator(const std::vector<Tableau>& tabs, int i) {
  std::map<std::vector<std::pair<int, int>>, size_t> at;
  for (size_t a = 0; a < tabs.size(); ++a) at[tabs[a].cell] = a;
  Mat m(tabs.size(), std::vector<Rat>(tabs.size(), Rat(0)));
  for (size_t a = 0; a < tabs.size(); ++a) {
    auto [ri, ci] = tabs[a].cell[i - 1];
    auto [rj, cj] = tabs[a].cell[i];
    if (ri == rj) {
      m[a][a] = 1;
      continue;
    }
    if (ci == cj) {
      m[a][a] = -1;
      continue;
    }
    long d = tabs[a].content(i + 1) - tabs[a].content(i);
    auto swapped = tabs[a].cell;
    std::swap(swapped[i - 1], swapped[i]);
    size_t b = at.at(swapped);
    if (d > 0) {
      m[a][a] = rat_frac(1, d);
      m[b][a] = rat_frac(d * d - 1, d * d);
    } else {
      m[a][a] = rat_frac(1, d);
      m[b][a] = 1;
    }
  }
  return m;
}

// block word realizing one permutation of the given cycle type
std::vector<int> cycle_type_word(const Partition& mu) {
  std::vector<int> w;
  int base = 0;
  for (int part : mu) {
    for (int j = 1; j < part; ++j) w.push_back(base + j);
    base += part;
  }
  return w;
}

}  // namespace

TEST_CASE("seminormal matrices satisfy the Coxeter relations") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto tabs = standard_tableaux(lam);
      std::vector<Mat> gen;
      for (int i = 1; i < n; ++i) gen.push_back(sn_generator(tabs, i));
      Mat id = mat_id(tabs.size());
      for (int i = 0; i + 1 < n; ++i) CHECK(mat_mul(gen[i], gen[i]) == id);
      for (int i = 0; i + 2 < n; ++i)
        CHECK(mat_mul(gen[i], mat_mul(gen[i + 1], gen[i])) ==
              mat_mul(gen[i + 1], mat_mul(gen[i], gen[i + 1])));
      for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 2; j + 1 < n; ++j)
          CHECK(mat_mul(gen[i], gen[j]) == mat_mul(gen[j], gen[i]));
    }
}

TEST_CASE("border-strip recursion matches seminormal traces") {
  for (int n = 1; n <= 5; ++n) {
    const auto& t = character_table(n);
    for (const auto& lam : partitions_of(n)) {
      auto tabs = standard_tableaux(lam);
      std::vector<Mat> gen{mat_id(tabs.size())};  // 1-based
      for (int i = 1; i < n; ++i) gen.push_back(sn_generator(tabs, i));
      for (const auto& mu : t.partitions()) {
        Mat m = mat_id(tabs.size());
        for (int letter : cycle_type_word(mu)) m = mat_mul(m, gen[letter]);
        Rat trace(0);
        for (size_t a = 0; a < m.size(); ++a) trace += m[a][a];
        CHECK(trace == rat_of(t.chi(lam, mu)));
      }
    }
  }
}

TEST_CASE("disk cache survives corruption") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "homfly_chartab_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  setenv("HOMFLY_CHAR_CACHE", dir.c_str(), 1);

  CharacterTable fresh(6);
  fs::path file = dir / "chartab_v1_n6.txt";
  REQUIRE(fs::exists(file));

  CharacterTable reloaded(6);
  for (const auto& lam : partitions_of(6))
    for (const auto& mu : partitions_of(6)) CHECK(reloaded.chi(lam, mu) == fresh.chi(lam, mu));

  SECTION("bit flip is detected and the table rebuilt") {
    std::string text;
    {
      std::ifstream in(file);
      std::getline(in, text, '\0');
    }
    text[text.size() / 2] = text[text.size() / 2] == '7' ? '8' : '7';
    std::ofstream(file) << text;
    CharacterTable rebuilt(6);
    CHECK(rebuilt.chi(Partition{3, 2, 1}, Partition{1, 1, 1, 1, 1, 1}) == 16);
    CHECK(rebuilt.chi(Partition{6}, Partition{6}) == 1);
  }

  SECTION("version mismatch is ignored") {
    std::ofstream(file) << "homfly chartab v0\ngarbage\n";
    CharacterTable rebuilt(6);
    for (const auto& mu : partitions_of(6)) CHECK(rebuilt.chi(Partition{6}, mu) == 1);
  }

  SECTION("truncated file is ignored") {
    std::ofstream(file) << "homfly chartab v1\nn 6\n";
    CharacterTable rebuilt(6);
    CHECK(rebuilt.chi(Partition{2, 2, 2}, Partition{2, 2, 2}) == fresh.chi(Partition{2, 2, 2}, Partition{2, 2, 2}));
  }

  unsetenv("HOMFLY_CHAR_CACHE");
  fs::remove_all(dir);
}
