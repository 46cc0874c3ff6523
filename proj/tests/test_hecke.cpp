#include <catch2/catch_amalgamated.hpp>

#include "homfly/hecke.hpp"
#include "homfly/selftest.hpp"

using namespace homfly;

namespace {

RationalFunction qpow(long e) {
  return RationalFunction(ExactLaurent::var_monomial(Var::t, rat_of(e)));
}

QMatrix scaled_identity(int d, const RationalFunction& s) {
  QMatrix m(d, std::vector<RationalFunction>(d));
  for (int i = 0; i < d; ++i) m[i][i] = s;
  return m;
}

}  // namespace

TEST_CASE("tableau enumeration") {
  CHECK(standard_tableaux({3}).size() == 1);
  CHECK(standard_tableaux({1, 1, 1}).size() == 1);
  CHECK(standard_tableaux({2, 1}).size() == 2);
  CHECK(standard_tableaux({3, 2}).size() == 5);
  CHECK(standard_tableaux({2, 2, 1}).size() == 5);
  // first filling is row-by-row
  auto first = standard_tableaux({3, 2}).front();
  CHECK(first.cell == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}});
  CHECK(first.content(3) == 2);
  CHECK(first.content(4) == -1);
  // counts match the hook formula
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(standard_tableaux(lam).size() ==
            static_cast<size_t>(standard_tableaux_count(lam)));
}

TEST_CASE("achievable contents") {
  CHECK(achievable_contents(1) == std::vector<int>{0});
  CHECK(achievable_contents(2) == std::vector<int>{-1, 1});
  CHECK(achievable_contents(3) == std::vector<int>{-2, -1, 1, 2});
  CHECK(achievable_contents(4) == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
  // cross-check against a direct sweep over fillings
  for (int m = 1; m <= 5; ++m) {
    std::set<int> seen;
    for (const auto& lam : partitions_of(m))
      for (const auto& t : standard_tableaux(lam)) seen.insert(t.content(m));
    CHECK(achievable_contents(m) == std::vector<int>(seen.begin(), seen.end()));
  }
}

TEST_CASE("generator relations hold in every block") {
  for (int n = 2; n <= 6; ++n) {
    long dimsq = 0;
    for (const auto& lam : partitions_of(n)) {
      const HeckeIrrep& rep = hecke_irrep(lam);
      dimsq += static_cast<long>(rep.dim()) * rep.dim();
      RationalFunction qq(ExactLaurent::bracket_poly(Var::t, 2));
      for (int i = 1; i < n; ++i) {
        const QMatrix& g = rep.generator(i);
        // inverse really inverts, so the quadratic relation holds
        CHECK(qm_equal(qm_mul(g, rep.generator_inverse(i)), qm_identity(rep.dim())));
        if (i + 1 < n) {
          const QMatrix& h = rep.generator(i + 1);
          CHECK(qm_equal(qm_mul(qm_mul(g, h), g), qm_mul(qm_mul(h, g), h)));
        }
        for (int j = i + 2; j < n; ++j) {
          const QMatrix& far = rep.generator(j);
          CHECK(qm_equal(qm_mul(g, far), qm_mul(far, g)));
        }
      }
    }
    // the blocks together have the dimension of the whole algebra
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(dimsq == fact);
  }
}

TEST_CASE("one-crossing characters") {
  BraidWord one;
  one.strands = 2;
  one.letters = {1};
  CHECK(irrep_character({2}, one) == qpow(1));
  CHECK(irrep_character({1, 1}, one) == -qpow(-1));
  BraidWord inv;
  inv.strands = 2;
  inv.letters = {-1};
  CHECK(irrep_character({2}, inv) == qpow(-1));
  CHECK(irrep_character({1, 1}, inv) == -qpow(1));
}

TEST_CASE("full twist acts by the content scalar") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      INFO(partition_to_string(lam));
      CHECK(full_twist_check(lam));
    }
  // sensitivity: the exponent is kappa, not kappa + 1
  const HeckeIrrep& rep = hecke_irrep({2, 1});
  QMatrix tw = rep.word_matrix(torus_word(3, 3));
  CHECK(qm_equal(tw, scaled_identity(rep.dim(), qpow(kappa({2, 1})))));
  CHECK(!qm_equal(tw, scaled_identity(rep.dim(), qpow(kappa({2, 1}) + 1))));
  QMatrix tw4 = hecke_irrep({3, 1}).word_matrix(torus_word(4, 4));
  CHECK(qm_equal(tw4, scaled_identity(hecke_irrep({3, 1}).dim(), qpow(kappa({3, 1})))));
}

TEST_CASE("ladder elements are diagonal with content eigenvalues") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& lam : partitions_of(n)) {
      const HeckeIrrep& rep = hecke_irrep(lam);
      auto ladder = murphy_ladder(rep, 1, n);
      for (int m = 1; m <= n; ++m)
        for (int a = 0; a < rep.dim(); ++a)
          for (int b = 0; b < rep.dim(); ++b) {
            const RationalFunction& e = ladder[m - 1][a][b];
            if (a == b)
              CHECK(e == qpow(2L * rep.tableaux()[a].content(m)));
            else
              CHECK(e.is_zero());
          }
    }
}

TEST_CASE("projectors") {
  SECTION("single-box blocks change nothing") {
    const HeckeIrrep& rep = hecke_irrep({2, 1});
    CHECK(qm_equal(jm_projector(rep, {{1, {1}}, {2, {1}}, {3, {1}}}), qm_identity(rep.dim())));
  }
  SECTION("branching cut inside a hook") {
    const HeckeIrrep& rep = hecke_irrep({2, 1});
    // entries 1, 2 confined to a row: keeps exactly the filling 12/3
    QMatrix p = jm_projector(rep, {{1, {2}}});
    QMatrix expect(2, std::vector<RationalFunction>(2));
    expect[0][0] = RationalFunction::one();
    CHECK(qm_equal(p, expect));
    // the column block keeps the other filling
    QMatrix pc = jm_projector(rep, {{1, {1, 1}}});
    QMatrix expect_c(2, std::vector<RationalFunction>(2));
    expect_c[1][1] = RationalFunction::one();
    CHECK(qm_equal(pc, expect_c));
  }
  SECTION("idempotent, block-ladder-commuting, rank = multiplicity") {
    for (const auto& [shape, blocks] :
         std::vector<std::pair<Partition, std::vector<std::pair<int, Partition>>>>{
             {{3, 1}, {{1, {2}}, {3, {2}}}},
             {{2, 2}, {{1, {2}}, {3, {1, 1}}}},     // incompatible pair: rank 0
             {{2, 1, 1}, {{1, {1, 1}}, {3, {2}}}},
             {{3, 2}, {{1, {2, 1}}, {4, {2}}}}}) {
      const HeckeIrrep& rep = hecke_irrep(shape);
      QMatrix p = jm_projector(rep, blocks);
      CHECK(qm_equal(qm_mul(p, p), p));
      for (const auto& [start, mu] : blocks) {
        auto ladder = murphy_ladder(rep, start, static_cast<int>(weight(mu)));
        for (const auto& l : ladder)
          CHECK(qm_equal(qm_mul(p, l), qm_mul(l, p)));
      }
      // the restriction to the block subalgebra splits by the product rule,
      // and each matching summand keeps a single line
      PartitionTuple mus;
      for (const auto& [start, mu] : blocks) mus.push_back(mu);
      auto prod = stretched_lr(mus, 1);
      long long rank = 0;
      if (auto it = prod.find(shape); it != prod.end()) rank = it->second;
      CHECK(qm_trace(p) == RationalFunction(rat_of(rank)));
    }
  }
}

TEST_CASE("cabled trace identity") {
  struct Case {
    int r, k;
    PartitionTuple colors;
  };
  for (const auto& c : std::vector<Case>{{2, 1, {{1}}},
                                         {2, 3, {{1}}},
                                         {3, 1, {{1}}},
                                         {2, 1, {{2}}},
                                         {1, 2, {{1}, {1}}}}) {
    long n = tuple_weight(c.colors);
    for (const auto& lam : partitions_of(static_cast<int>(c.r * n))) {
      INFO("r=" << c.r << " k=" << c.k << " colors " << tuple_label(c.colors) << " lambda "
                << partition_to_string(lam));
      CHECK(cabled_trace_check(c.r, c.k, c.colors, lam));
    }
  }
  CHECK_THROWS_AS(cabled_trace_check(2, 1, {{1}}, {1, 1, 1}), SizeMismatch);
  CHECK_THROWS_AS(cabled_trace_check(2, 4, {{1}}, {2, 1, 1}), std::invalid_argument);
}

TEST_CASE("matrix pipeline reproduces the invariant") {
  struct Case {
    TorusLinkSpec s;
    PartitionTuple colors;
  };
  for (const auto& c : std::vector<Case>{{{1, 1, 1}, {{1}}},
                                         {{1, 1, 1}, {{2}}},
                                         {{2, 1, 1}, {{1}}},
                                         {{2, 1, 1}, {{1, 1}}},
                                         {{2, 3, 1}, {{1}}},
                                         {{2, 3, 1}, {{2}}},
                                         {{3, 2, 1}, {{1}}},
                                         {{2, -1, 1}, {{1}}},
                                         {{1, 1, 2}, {{1}, {1}}},
                                         {{1, -1, 2}, {{1}, {1}}},
                                         {{1, 2, 2}, {{1}, {1}}},
                                         {{1, 1, 2}, {{2}, {1}}},
                                         {{2, 1, 2}, {{1}, {1}}},
                                         {{1, 1, 3}, {{1}, {1}, {1}}}}) {
    INFO("T(" << c.s.r * c.s.l << "," << c.s.k * c.s.l << ") colors " << tuple_label(c.colors));
    CHECK(invariants_equal(matrix_pipeline(c.s, c.colors), colored_homfly_torus(c.s, c.colors)));
  }
  CHECK_THROWS_AS(matrix_pipeline({2, 1, 1}, {{1}, {1}}), SizeMismatch);
}

TEST_CASE("cabling bookkeeping") {
  // cabling with unit widths is the identity on words
  BraidWord w = torus_word(3, 2);
  auto same = cable_word(w, {1, 1, 1});
  CHECK(same.strands == 3);
  CHECK(same.letters == w.letters);
  // widths must match the strand count
  CHECK_THROWS_AS(cable_word(w, {1, 1}), SizeMismatch);
  // a single positive crossing of ribbons (2, 1) opens into 2 crossings
  BraidWord x;
  x.strands = 2;
  x.letters = {1};
  auto c = cable_word(x, {2, 1});
  CHECK(c.strands == 3);
  CHECK(c.letters.size() == 2);
  // writhes: trefoil as a 2-strand braid is one component with writhe 3
  CHECK(component_writhes(torus_word(2, 3), {1, 1}, 1) == std::vector<long>{3});
  // Hopf braid: two components, no self-crossings
  CHECK(component_writhes(torus_word(2, 2), {1, 2}, 2) == std::vector<long>{0, 0});
  CHECK_THROWS_AS(component_writhes(w, {1, 1}, 1), SizeMismatch);
}

TEST_CASE("spectral guard rails") {
  CHECK_THROWS_AS(node_gap_inverse(2, 2), SpectralCollision);
  BraidWord w = torus_word(3, 1);
  CHECK_THROWS_AS(hecke_irrep({2, 1, 1}).word_matrix(w), SizeMismatch);
  CHECK_THROWS_AS(jm_projector(hecke_irrep({2, 1}), {{3, {2}}}), SizeMismatch);
}
