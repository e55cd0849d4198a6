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
#include <set>

#include "oclat/deduction.hpp"
#include "oracles.hpp"

using namespace oclat;

namespace {

Word W(const char* text) { return Word::parse(text); }

IdentitySystem S(std::initializer_list<std::pair<const char*, const char*>>
                     identities) {
  std::vector<Identity> ids;
  for (const auto& [l, r] : identities) ids.emplace_back(W(l), W(r));
  return IdentitySystem(std::move(ids));
}

std::set<Word> successor_words(const Word& w, const IdentitySystem& sigma,
                               const SearchBounds& bounds) {
  std::set<Word> out;
  for (const auto& [word, step] : rewrite_successors(w, sigma, bounds)) {
    out.insert(word);
  }
  return out;
}

constexpr size_t kBig = 1'000'000;

}  // namespace

TEST_CASE("identity construction enforces content balance") {
  CHECK_NOTHROW(Identity(W("x^2y"), W("xyx")));
  CHECK_NOTHROW(Identity(W("xy"), W("x^2y")));  // content-balanced only
  CHECK_THROWS_AS(Identity(W("xy"), W("x")), std::invalid_argument);
  CHECK_THROWS_AS(Identity(W("x"), W("1")), std::invalid_argument);
}

TEST_CASE("system normalization drops reflexive pairs and duplicates") {
  IdentitySystem sigma(
      {Identity(W("xy"), W("yx")), Identity(W("xy"), W("yx")),
       Identity(W("x"), W("x"))});
  CHECK(sigma.size() == 1);
  CHECK(sigma[0] == Identity(W("xy"), W("yx")));
}

TEST_CASE("system file parsing") {
  IdentitySystem sigma = IdentitySystem::parse(
      "# commutative plus a rotation\n"
      "xy = yx\n"
      "\n"
      "x^2y = xyx   # rotation\n");
  REQUIRE(sigma.size() == 2);
  CHECK(sigma[0] == Identity(W("xy"), W("yx")));
  CHECK(sigma[1] == Identity(W("x^2y"), W("xyx")));
  CHECK(IdentitySystem::parse(sigma.str()).size() == 2);
  CHECK_THROWS_AS(IdentitySystem::parse("xy = yx = xy\n"), ParseError);
  CHECK_THROWS_AS(IdentitySystem::parse("xy\n"), ParseError);
  CHECK_THROWS_AS(IdentitySystem::parse("xy = x\n"), std::invalid_argument);
}

TEST_CASE("one-step rewrites: whole-word generator application") {
  SearchBounds bounds(10, 10, kBig);
  auto succ = successor_words(W("xy"), S({{"xy", "yx"}}), bounds);
  CHECK(succ.contains(W("yx")));
  CHECK(successor_words(W("x^2y"), S({{"x^2y", "xyx"}}), bounds)
            .contains(W("xyx")));
}

TEST_CASE("one-step rewrites: erasing matches collapse both sides") {
  // x -> empty, y -> z sends both sides of x^2y = xyx to z.
  SearchBounds bounds(10, 10, kBig);
  auto succ = successor_words(W("z"), S({{"x^2y", "xyx"}}), bounds);
  CHECK(succ.contains(W("z")));
}

TEST_CASE("one-step rewrites agree with the composition oracle") {
  std::mt19937 rng(60601);
  for (int round = 0; round < 150; ++round) {
    IdentitySystem sigma = oracles::random_system(rng, 2, round % 2 == 0);
    Word w = oracles::random_word(rng, 2, 0, 6);
    SearchBounds bounds(8, 10, kBig);
    CHECK(successor_words(w, sigma, bounds) ==
          oracles::one_step_oracle(w, sigma, 8));
  }
}

TEST_CASE("every emitted step replays") {
  std::mt19937 rng(313);
  SearchBounds bounds(8, 10, kBig);
  for (int round = 0; round < 100; ++round) {
    IdentitySystem sigma = oracles::random_system(rng, 2, false);
    Word w = oracles::random_word(rng, 2, 0, 6);
    for (const auto& [next, step] : rewrite_successors(w, sigma, bounds)) {
      const Identity& id = sigma[step.identity_index];
      const Word& from =
          step.direction == StepDirection::Forward ? id.lhs : id.rhs;
      const Word& to =
          step.direction == StepDirection::Forward ? id.rhs : id.lhs;
      CHECK(step.context_left + step.xi.apply(from) + step.context_right == w);
      CHECK(step.context_left + step.xi.apply(to) + step.context_right ==
            next);
    }
  }
}

TEST_CASE("derive: reflexivity gives the empty certificate") {
  auto res = derive(W("xyx"), W("xyx"), S({{"xy", "yx"}}),
                    SearchBounds(3, 5, kBig));
  REQUIRE(res.found());
  CHECK(res.certificate->words == std::vector<Word>{W("xyx")});
  CHECK(res.certificate->steps.empty());
  CHECK(check_certificate(*res.certificate, S({{"xy", "yx"}})));
}

TEST_CASE("derive: forced two-step chain through the middle word") {
  IdentitySystem sigma = S({{"x^2y", "xyx"}, {"xyx", "yx^2"}});
  auto res = derive(W("x^2y"), W("yx^2"), sigma, SearchBounds(3, 10, kBig));
  REQUIRE(res.found());
  CHECK(res.certificate->words ==
        std::vector<Word>{W("x^2y"), W("xyx"), W("yx^2")});
  CHECK(res.certificate->steps.size() == 2);
  CHECK(check_certificate(*res.certificate, sigma));

  // The shortest derivation in the full A_2 top system is also 2 steps.
  IdentitySystem top =
      S({{"x^2y", "xyx"}, {"x^2y", "yx^2"}, {"xyx", "yx^2"}});
  auto direct = derive(W("x^2y"), W("yx^2"), top, SearchBounds(3, 10, kBig));
  REQUIRE(direct.found());
  CHECK(direct.certificate->steps.size() == 1);
}

TEST_CASE("derive: empty system proves non-derivability") {
  auto res = derive(W("x^2y"), W("xyx"), IdentitySystem{},
                    SearchBounds(3, 5, kBig));
  CHECK(!res.found());
  CHECK(res.outcome == SearchOutcome::FrontierEmpty);
  CHECK(res.complete());
}

TEST_CASE("derive: depth and visited limits are reported as inconclusive") {
  // xy = x^2y grows words; reaching x^4y needs 3 steps.
  IdentitySystem growing = S({{"xy", "x^2y"}});
  CHECK(derive(W("xy"), W("x^4y"), growing, SearchBounds(8, 10, kBig))
            .found());
  auto depth_limited =
      derive(W("xy"), W("x^4y"), growing, SearchBounds(8, 2, kBig));
  CHECK(depth_limited.outcome == SearchOutcome::DepthLimit);
  CHECK(!depth_limited.complete());
  auto visited_limited =
      derive(W("xy"), W("x^4y"), growing, SearchBounds(8, 10, 2));
  CHECK(visited_limited.outcome == SearchOutcome::VisitedLimit);
  CHECK(!visited_limited.complete());
  // Tight length bound: the frontier drains and the verdict is complete
  // within that bound.
  auto clipped = derive(W("xy"), W("x^4y"), growing, SearchBounds(3, 10, kBig));
  CHECK(clipped.outcome == SearchOutcome::FrontierEmpty);
  CHECK(clipped.complete());
}

TEST_CASE("certificates with a mutated word fail replay") {
  IdentitySystem sigma = S({{"x^2y", "xyx"}, {"xyx", "yx^2"}});
  auto res = derive(W("x^2y"), W("yx^2"), sigma, SearchBounds(3, 10, kBig));
  REQUIRE(res.found());
  Certificate bad = *res.certificate;
  bad.words[1] = W("yxx");
  CHECK(!check_certificate(bad, sigma));
  Certificate truncated = *res.certificate;
  truncated.words.pop_back();
  CHECK(!check_certificate(truncated, sigma));
  Certificate bad_index = *res.certificate;
  bad_index.steps[0].identity_index = 99;
  CHECK(!check_certificate(bad_index, sigma));
}

TEST_CASE("randomized soundness: emitted certificates replay") {
  std::mt19937 rng(11012);
  size_t found = 0;
  for (int round = 0; round < 300; ++round) {
    const bool balanced = round % 2 == 0;
    IdentitySystem sigma = oracles::random_system(rng, 2, balanced);
    Word u = oracles::random_word(rng, 2, 1, 5);
    Word target = oracles::random_word(rng, 2, 1, 5);
    SearchBounds bounds(u.length() + 3, 5, 20000);
    auto res = derive(u, target, sigma, bounds);
    if (!res.found()) continue;
    ++found;
    CHECK(check_certificate(*res.certificate, sigma));
    if (sigma.balanced()) {
      for (const Word& w : res.certificate->words) {
        CHECK(occurrence_vector(w) == occurrence_vector(u));
      }
    }
  }
  CHECK(found > 20);  // the generator produces plenty of positives
}

TEST_CASE("derivability is symmetric") {
  std::mt19937 rng(995);
  for (int round = 0; round < 120; ++round) {
    IdentitySystem sigma = oracles::random_system(rng, 2, true);
    Word u = oracles::random_word(rng, 2, 1, 5);
    Word v = oracles::shuffled(rng, u);
    SearchBounds bounds(u.length(), 6, 20000);
    CHECK(derive(u, v, sigma, bounds).found() ==
          derive(v, u, sigma, bounds).found());
  }
}

TEST_CASE("reachability matches the naive fixpoint oracle") {
  std::mt19937 rng(51423);
  for (int round = 0; round < 60; ++round) {
    IdentitySystem sigma = oracles::random_system(rng, 2, true);
    Word u = oracles::random_word(rng, 2, 1, 5);
    const size_t max_len = u.length();
    const auto reachable = oracles::reachable_oracle(u, sigma, max_len, 4);
    SearchBounds bounds(max_len, 4, 20000);
    for (const Word& v : reachable) {
      CHECK(derive(u, v, sigma, bounds).found());
    }
    // A couple of words outside the reachable set must not be derivable.
    int negatives = 0;
    for (int tries = 0; tries < 20 && negatives < 3; ++tries) {
      Word w = oracles::random_word(rng, 2, 1, max_len);
      if (reachable.contains(w)) continue;
      ++negatives;
      auto res = derive(u, w, sigma, SearchBounds(max_len, 50, 100000));
      CHECK(!res.found());
    }
  }
}

TEST_CASE("theory restriction blocks") {
  const auto a2 = generate_antichain(2);
  SearchBounds bounds(3, 30, kBig);

  CHECK(theory_restriction(IdentitySystem{}, a2, bounds) ==
        std::vector<size_t>{0, 1, 2});
  CHECK(theory_restriction(S({{"x^2y", "xyx"}}), a2, bounds) ==
        std::vector<size_t>{0, 0, 1});
  // Two overlapping generators merge everything.
  CHECK(theory_restriction(S({{"x^2y", "xyx"}, {"xyx", "yx^2"}}), a2,
                           bounds) == std::vector<size_t>{0, 0, 0});
  // The commutative law identifies the n=1 family words.
  CHECK(theory_restriction(S({{"xy", "yx"}}), generate_antichain(1),
                           SearchBounds(2, 10, kBig)) ==
        std::vector<size_t>{0, 0});
}

TEST_CASE("theory restriction parallel path matches the serial reference") {
  std::mt19937 rng(777111);
  for (int round = 0; round < 40; ++round) {
    IdentitySystem sigma = oracles::random_system(rng, 2, true);
    std::set<Word> pool;
    while (pool.size() < 5) pool.insert(oracles::random_word(rng, 2, 2, 5));
    std::vector<Word> words(pool.begin(), pool.end());
    SearchBounds bounds(5, 8, 20000);
    CHECK(theory_restriction(sigma, words, bounds) ==
          theory_restriction_serial(sigma, words, bounds));
  }
}

TEST_CASE("search bounds must be positive") {
  CHECK_THROWS_AS(SearchBounds(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SearchBounds(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SearchBounds(1, 1, 0), std::invalid_argument);
}
