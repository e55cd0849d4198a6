/*
 *   Copyright 2026 the oclat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oclat/partitions.hpp"
#include "oracles.hpp"

using namespace oclat;

namespace {

const std::vector<std::string> kAbc = {"a", "b", "c"};

Partition P(const char* text, const std::vector<std::string>& universe) {
  return Partition::parse(text, universe);
}

Partition random_partition(std::mt19937& rng,
                           const std::vector<std::string>& universe) {
  std::uniform_int_distribution<size_t> pick(0, universe.size() - 1);
  std::vector<size_t> ids(universe.size());
  for (size_t& id : ids) id = pick(rng);
  return Partition(universe, ids);
}

}  // namespace

TEST_CASE("canonical form and text round-trip") {
  Partition p(kAbc, {5, 2, 5});
  CHECK(p.rgs() == std::vector<size_t>{0, 1, 0});
  CHECK(p.str() == "a,c|b");
  CHECK(Partition::parse(p.str(), kAbc) == p);
  CHECK(Partition::top(kAbc).str() == "a,b,c");
  CHECK(Partition::bottom(kAbc).str() == "a|b|c");
  CHECK_THROWS_AS(Partition::parse("a,b", kAbc), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a,b|c|a", kAbc), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a,,b|c", kAbc), ParseError);
  CHECK_THROWS_AS(Partition(kAbc, {0, 1}), std::invalid_argument);
}

TEST_CASE("meet examples") {
  Partition bottom = Partition::bottom(kAbc);
  Partition p = P("a,b|c", kAbc);
  CHECK(meet(p, bottom) == bottom);
  CHECK(meet(P("a,b|c", kAbc), P("b,c|a", kAbc)) == bottom);
  CHECK(meet(p, p) == p);
  CHECK_THROWS_AS(meet(p, Partition::top({"a", "b"})), std::invalid_argument);
}

TEST_CASE("join examples") {
  Partition top = Partition::top(kAbc);
  Partition p = P("a,b|c", kAbc);
  CHECK(join(p, top) == top);
  CHECK(join(P("a,b|c", kAbc), P("b,c|a", kAbc)) == top);
  CHECK(join(p, Partition::bottom(kAbc)) == p);
}

TEST_CASE("refinement order") {
  CHECK(leq(Partition::bottom(kAbc), P("a,b|c", kAbc)));
  CHECK(leq(P("a,b|c", kAbc), Partition::top(kAbc)));
  CHECK(!leq(P("a,b|c", kAbc), P("a,c|b", kAbc)));
}

TEST_CASE("enumeration matches the Bell recurrence") {
  const auto bell = oracles::bell_numbers(8);
  for (size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_partitions(default_labels(n));
    CHECK(all.size() == bell[n]);
    // Each exactly once.
    std::set<std::string> texts;
    for (const auto& p : all) texts.insert(p.str());
    CHECK(texts.size() == all.size());
  }
  CHECK(enumerate_partitions(default_labels(1)).size() == 1);
  CHECK(enumerate_partitions(default_labels(3)).size() == 5);
  CHECK(enumerate_partitions(default_labels(5)).size() == 52);
  CHECK_THROWS_AS(enumerate_partitions(default_labels(9)), BudgetError);
}

TEST_CASE("enumeration starts at the top RGS and is lexicographic") {
  const auto all = enumerate_partitions(kAbc);
  REQUIRE(all.size() == 5);
  CHECK(all[0].str() == "a,b,c");
  CHECK(all[1].str() == "a,b|c");
  CHECK(all[2].str() == "a,c|b");
  CHECK(all[3].str() == "a|b,c");
  CHECK(all[4].str() == "a|b|c");
}

TEST_CASE("lattice laws on random triples") {
  std::mt19937 rng(2718);
  for (int round = 0; round < 2000; ++round) {
    std::uniform_int_distribution<size_t> size(1, 6);
    const auto universe = default_labels(size(rng));
    Partition p = random_partition(rng, universe);
    Partition q = random_partition(rng, universe);
    Partition r = random_partition(rng, universe);
    CHECK(join(p, q) == join(q, p));
    CHECK(meet(p, q) == meet(q, p));
    CHECK(join(p, join(q, r)) == join(join(p, q), r));
    CHECK(meet(p, meet(q, r)) == meet(meet(p, q), r));
    CHECK(join(p, meet(p, q)) == p);
    CHECK(meet(p, join(p, q)) == p);
    CHECK(join(p, p) == p);
    CHECK(meet(p, p) == p);
    // Order characterizations agree.
    CHECK(leq(p, q) == (meet(p, q) == p));
    CHECK(leq(p, q) == (join(p, q) == q));
  }
}

TEST_CASE("restriction") {
  const std::vector<std::string> abcde = {"a", "b", "c", "d", "e"};
  CHECK(restrict_to(Partition::top(kAbc), {"a", "b"}) ==
        Partition::top({"a", "b"}));
  CHECK(restrict_to(P("a,b|c", kAbc), {"a", "c"}) ==
        Partition::bottom({"a", "c"}));
  CHECK(restrict_to(P("a,b,c|d,e", abcde), {"a", "b", "d"}) ==
        P("a,b|d", {"a", "b", "d"}));
  CHECK_THROWS_AS(restrict_to(P("a,b|c", kAbc), {"a", "q"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(restrict_to(P("a,b|c", kAbc), {}), std::invalid_argument);
}

TEST_CASE("restriction is monotone") {
  std::mt19937 rng(14);
  const auto universe = default_labels(5);
  const std::vector<std::string> sub = {"a", "c", "d"};
  for (int round = 0; round < 500; ++round) {
    Partition p = random_partition(rng, universe);
    Partition q = random_partition(rng, universe);
    if (leq(p, q)) {
      CHECK(leq(restrict_to(p, sub), restrict_to(q, sub)));
    }
    Partition finer = meet(p, q);
    CHECK(leq(restrict_to(finer, sub), restrict_to(p, sub)));
  }
}

TEST_CASE("two-block ideal split round-trips") {
  const auto universe = default_labels(5);
  std::vector<size_t> two = {0, 0, 1, 1, 1};
  IdealSplit split(Partition(universe, two));
  CHECK(split.part_a() == std::vector<std::string>{"a", "b"});
  CHECK(split.part_b() == std::vector<std::string>{"c", "d", "e"});

  auto [ba, bb] = split.forward(Partition::bottom(universe));
  CHECK(ba == Partition::bottom(split.part_a()));
  CHECK(bb == Partition::bottom(split.part_b()));
  CHECK(split.inverse(Partition::top(split.part_a()),
                      Partition::top(split.part_b())) == split.alpha());

  CHECK_THROWS_AS(split.forward(Partition::top(universe)),
                  std::invalid_argument);
  CHECK_THROWS_AS(IdealSplit(Partition::top(universe)),
                  std::invalid_argument);
}

TEST_CASE("ideal decomposition certified exhaustively") {
  auto report = verify_ideal_split(5, 2);
  CHECK(report.ideal_size == 10);
  CHECK(report.product_size == 10);
  CHECK(report.bijective);
  CHECK(report.preserves_join);
  CHECK(report.preserves_meet);
  CHECK(report.inverse_ok);
  CHECK(report.pass());

  for (size_t n = 2; n <= 6; ++n) {
    for (size_t s = 1; s < n; ++s) {
      CHECK(verify_ideal_split(n, s).pass());
    }
  }
}

TEST_CASE("partition text round-trip on random partitions") {
  std::mt19937 rng(808);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<size_t> size(1, 7);
    const auto universe = default_labels(size(rng));
    Partition p = random_partition(rng, universe);
    CHECK(Partition::parse(p.str(), universe) == p);
  }
}
