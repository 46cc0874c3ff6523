#include <catch2/catch_amalgamated.hpp>

#include "homfly/lmv.hpp"
#include "homfly/selftest.hpp"

using namespace homfly;

namespace {

RationalFunction rf_frac(long num, long den) { return RationalFunction(rat_frac(num, den)); }

}  // namespace

TEST_CASE("series log and exp invert each other") {
  SECTION("synthetic one-component series") {
    std::vector<int> caps = {2};
    TupleSeries<RationalFunction> z;
    z.emplace(PartitionTuple{{}}, RationalFunction::one());
    z.emplace(PartitionTuple{{1}}, RationalFunction::bracket(Var::t, 2));
    z.emplace(PartitionTuple{{2}}, rf_frac(3, 7));
    z.emplace(PartitionTuple{{1, 1}},
              RationalFunction::over_brackets(ExactLaurent::bracket_poly(Var::v, 1), {{Var::t, 1}}));
    auto back = series_exp(series_log(z, caps, 2), caps, 2);
    CHECK(back == z);
  }
  SECTION("invariant-generated series") {
    for (const auto& [s, sizes] : std::vector<std::pair<TorusLinkSpec, std::vector<int>>>{
             {{2, 3, 1}, {2}}, {{1, 1, 2}, {1, 1}}}) {
      auto z = build_z(s, sizes, 2);
      auto back = series_exp(series_log(z, sizes, 2), sizes, 2);
      CHECK(back == z);
    }
  }
  SECTION("guards") {
    std::vector<int> caps = {1};
    TupleSeries<RationalFunction> bad;
    bad.emplace(PartitionTuple{{}}, rf_frac(2, 1));
    CHECK_THROWS_AS(series_log(bad, caps, 1), std::invalid_argument);
    TupleSeries<RationalFunction> nozero;
    nozero.emplace(PartitionTuple{{1}}, RationalFunction::one());
    CHECK_THROWS_AS(series_log(nozero, caps, 1), std::invalid_argument);
  }
}

TEST_CASE("connected invariants by hand") {
  // one component: f_(1) = W_(1),
  //   f_(2)   = W_(2)   - W_(1)^2 / 2 - psi_2(W_(1)) / 2,
  //   f_(1,1) = W_(1,1) - W_(1)^2 / 2 + psi_2(W_(1)) / 2.
  TorusLinkSpec s{2, 3, 1};
  auto w = [&](const Partition& lam) { return colored_homfly_torus(s, {lam}).value(); };
  auto res = lmv_run(s, {2});
  RationalFunction w1 = w({1});
  CHECK(res.f.at({{1}}) == w1);
  RationalFunction sq = (w1 * w1).scaled(rat_frac(1, 2));
  RationalFunction tw = w1.adams(2).scaled(rat_frac(1, 2));
  CHECK(res.f.at({{2}}) == w({2}) - sq - tw);
  CHECK(res.f.at({{1, 1}}) == w({1, 1}) - sq + tw);

  // two components: f_((1),(1)) = W_((1),(1)) - W_((1)) W_((1))
  TorusLinkSpec h{1, 1, 2};
  auto hres = lmv_run(h, {1, 1});
  RationalFunction once = colored_homfly_torus({1, 1, 1}, {{1}}).value();
  CHECK(hres.f.at({{1}, {1}}) ==
        colored_homfly_torus(h, {{1}, {1}}).value() - once * once);
}

TEST_CASE("unknot collapses to two unit charges") {
  auto res = lmv_run({1, 1, 1}, {2});
  CHECK(res.verified());
  // the change of basis kills every color of size two
  CHECK(res.fhat.size() == 1);
  CHECK(res.fhat.count({{1}}) == 1);
  REQUIRE(res.bps.size() == 2);
  CHECK(res.bps[0].g == 0);
  CHECK(res.bps[0].q == rat_frac(-1, 2));
  CHECK(res.bps[0].n == Rat(-1));
  CHECK(res.bps[1].g == 0);
  CHECK(res.bps[1].q == rat_frac(1, 2));
  CHECK(res.bps[1].n == Rat(1));
}

TEST_CASE("two-strand closed forms for the changed basis") {
  // zero-valued colors are pruned from the map; look up with a zero default
  // so k = 1, where the [k-1] factor kills both entries, stays covered
  auto fhat_of = [](const LmvResult& res, const PartitionTuple& mu) {
    auto it = res.fhat.find(mu);
    return it == res.fhat.end() ? RationalFunction::zero() : it->second;
  };
  for (int k : {1, 3}) {
    auto res = lmv_run({2, k, 1}, {2});
    INFO("k=" << k);
    CHECK(res.verified());
    CHECK(fhat_of(res, {{2}}) == golden::closed_fhat_two_strand(k, true));
    CHECK(fhat_of(res, {{1, 1}}) == golden::closed_fhat_two_strand(k, false));
  }
}

TEST_CASE("charge table of the trefoil") {
  auto res = lmv_run({2, 3, 1}, {2});
  REQUIRE(res.verified());
  std::map<std::pair<long, Rat>, Rat> box;
  for (const auto& e : res.bps)
    if (e.mu == PartitionTuple{{1}}) box[{e.g, e.q}] = e.n;
  std::map<std::pair<long, Rat>, Rat> expect = {
      {{0, rat_frac(1, 2)}, Rat(-2)}, {{1, rat_frac(1, 2)}, Rat(-1)},
      {{0, rat_frac(3, 2)}, Rat(3)},  {{1, rat_frac(3, 2)}, Rat(1)},
      {{0, rat_frac(5, 2)}, Rat(-1)}};
  CHECK(box == expect);
  // integer charges everywhere, and integer-spaced v-exponents per color
  for (const auto& e : res.bps) {
    CHECK(rat_is_integer(e.n));
    CHECK(rat_is_integer(e.q * 2));
  }
}

TEST_CASE("perturbations are caught") {
  auto res = lmv_run({2, 3, 1}, {2});
  REQUIRE(res.verified());

  SECTION("scaling breaks integrality") {
    auto broken = res.fhat.at({{1}}).scaled(rat_frac(1, 3));
    std::vector<BpsEntry> bps;
    std::vector<Finding> findings;
    extract_bps({{1}}, broken, 1, bps, findings);
    REQUIRE(!findings.empty());
    bool integer_hit = false;
    for (const auto& f : findings) integer_hit |= f.kind == "non-integer";
    CHECK(integer_hit);
  }
  SECTION("a pole is reported, not thrown") {
    auto broken = res.fhat.at({{2}}) +
                  RationalFunction::over_brackets(ExactLaurent::one(),
                                                  {{Var::t, 1}, {Var::t, 1}, {Var::t, 1}});
    std::vector<BpsEntry> bps;
    std::vector<Finding> findings;
    extract_bps({{2}}, broken, 1, bps, findings);
    REQUIRE(!findings.empty());
    CHECK(findings.front().kind == "non-laurent");
  }
}

TEST_CASE("genus normalization exponent") {
  RationalFunction f = RationalFunction::bracket(Var::v, 1);
  CHECK(genus_normalized(f, 1) == f * RationalFunction::bracket(Var::t, 1));
  CHECK(genus_normalized(f, 2) == f);
  CHECK(genus_normalized(f, 3) ==
        f * RationalFunction::over_brackets(ExactLaurent::one(), {{Var::t, 1}}));
}

TEST_CASE("series pipeline agrees with the table identity") {
  CHECK(fhat_vs_g_consistency({2, 1, 1}, {3}).empty());
  CHECK(fhat_vs_g_consistency({2, 3, 1}, {2}).empty());
  CHECK(fhat_vs_g_consistency({3, 1, 1}, {2}).empty());
  CHECK(fhat_vs_g_consistency({1, 1, 2}, {2, 2}, 2).empty());
  CHECK(fhat_vs_g_consistency({1, 2, 2}, {1, 1}).empty());
}
