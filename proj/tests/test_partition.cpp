#include <catch2/catch_amalgamated.hpp>

#include "homfly/partition.hpp"

using namespace homfly;

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{{}});
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  // p(n) for n = 0..10
  const size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[n]);
  for (const auto& p : partitions_of(7)) {
    CHECK(is_valid_partition(p));
    CHECK(weight(p) == 7);
  }
}

TEST_CASE("conjugate is an involution and flips kappa") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(kappa(conjugate(p)) == -kappa(p));
    }
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(kappa(Partition{2}) == 2);
  CHECK(kappa(Partition{1, 1}) == -2);
  CHECK(kappa(Partition{3, 3}) == 6);
  CHECK(kappa(Partition{4, 1, 1}) == 6);
}

TEST_CASE("class sizes partition the symmetric group") {
  for (int n = 1; n <= 8; ++n) {
    long long total = 0;
    for (const auto& mu : partitions_of(n)) total += class_size(mu);
    CHECK(total == factorial(n));
  }
  CHECK(z_order(Partition{1, 1, 1}) == 6);
  CHECK(z_order(Partition{3}) == 3);
  CHECK(z_order(Partition{2, 1}) == 2);
  CHECK(z_order(Partition{2, 2, 1}) == 8);
}

TEST_CASE("hooks and dimensions") {
  CHECK(hook_product(Partition{2, 1}) == 3);
  CHECK(standard_tableaux_count(Partition{2, 1}) == 2);
  CHECK(standard_tableaux_count(Partition{3, 2}) == 5);
  for (int n = 1; n <= 8; ++n) {
    long long sq = 0;
    for (const auto& lam : partitions_of(n)) {
      long long d = standard_tableaux_count(lam);
      sq += d * d;
    }
    CHECK(sq == factorial(n));
  }
  // |kappa| = 2 * sum of contents
  for (const auto& lam : partitions_of(6)) {
    long long twice = 0;
    for (auto [h, c] : hooks_contents(lam)) twice += 2 * c;
    CHECK(twice == kappa(lam));
  }
}

TEST_CASE("part merge and stretch") {
  // parts interleave in weakly decreasing order, as in p_mu * p_nu
  CHECK(add_partitions(Partition{2, 1}, Partition{1}) == Partition{2, 1, 1});
  CHECK(add_partitions(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2, 2, 1});
  CHECK(add_partitions(Partition{}, Partition{2}) == Partition{2});
  CHECK(z_order(add_partitions(Partition{2}, Partition{2})) == 8);
  CHECK(stretch(Partition{2, 1}, 3) == Partition{6, 3});
  CHECK(stretch(Partition{}, 5) == Partition{});
}

TEST_CASE("string forms round trip") {
  for (const auto& p : partitions_of(6)) CHECK(partition_from_string(partition_to_string(p)) == p);
  PartitionTuple t{{2, 1}, {}, {3}};
  CHECK(tuple_from_string(tuple_to_string(t)) == t);
  CHECK(partition_to_string(Partition{2, 1}) == "2,1");
  CHECK(tuple_to_string(PartitionTuple{{1}, {1}}) == "1|1");
}

TEST_CASE("tuples by size vector") {
  auto ts = partition_tuples({2, 1});
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].size() == 2);
  auto empty_slot = partition_tuples({0, 2});
  REQUIRE(empty_slot.size() == 2);
  CHECK(empty_slot[0][0] == Partition{});
}

TEST_CASE("canonical order is total on fixed weight") {
  auto ps = partitions_of(5);
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      CHECK((canonical_partition_less(ps[i], ps[j]) || canonical_partition_less(ps[j], ps[i])));
    }
}
