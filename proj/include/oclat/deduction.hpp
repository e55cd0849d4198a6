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

// Bounded equational deduction for monoid identity systems: one-step
// rewriting under monoid endomorphisms (erasing images allowed), breadth-
// first derivation search with replayable certificates, and restriction of
// the induced equational theory to a finite word set.
//
// An elementary step rewrites w = a·xi(u_i)·b into a·xi(v_i)·b for an
// identity u_i ≈ v_i of the system, applied in either direction.

#ifndef OCLAT_DEDUCTION_HPP_
#define OCLAT_DEDUCTION_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oclat/words.hpp"

namespace oclat {

/// A word pair u ≈ v. The engine only accepts content-balanced identities
/// (content(lhs) = content(rhs)): letters on one side only would admit
/// arbitrary images and an infinite successor set.
struct Identity {
  Word lhs, rhs;

  Identity(Word l, Word r);

  bool balanced() const { return is_balanced_pair(lhs, rhs); }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }

  friend bool operator==(const Identity&, const Identity&) = default;
};

/// A finite identity system. Reflexive pairs and exact duplicates are
/// dropped on construction.
class IdentitySystem {
 public:
  IdentitySystem() = default;
  explicit IdentitySystem(std::vector<Identity> identities);

  /// File format: one `<word> = <word>` per line; blank lines and text from
  /// '#' to end of line are ignored.
  static IdentitySystem parse(std::string_view text);
  static IdentitySystem load(const std::filesystem::path& file);
  std::string str() const;

  size_t size() const noexcept { return identities_.size(); }
  bool empty() const noexcept { return identities_.empty(); }
  const Identity& operator[](size_t i) const { return identities_.at(i); }
  const std::vector<Identity>& identities() const noexcept {
    return identities_;
  }

  /// All identities occurrence-balanced (the overcommutativity criterion).
  bool balanced() const;

  /// Union of two systems, deduplicated.
  IdentitySystem merged_with(const IdentitySystem& other) const;

 private:
  std::vector<Identity> identities_;
};

enum class StepDirection : unsigned char { Forward, Backward };

/// One elementary deduction step. Replay:
///   from = a · xi(side_from) · b,  to = a · xi(side_to) · b
/// where (side_from, side_to) is (lhs, rhs) for Forward and (rhs, lhs) for
/// Backward of the identity at identity_index.
struct DerivationStep {
  Word context_left;   // a
  Word context_right;  // b
  Substitution xi;     // MonoidEndo; erasing images allowed
  size_t identity_index = 0;
  StepDirection direction = StepDirection::Forward;
};

/// A replayable derivation: words w_0..w_n with n validating steps.
struct Certificate {
  std::vector<Word> words;
  std::vector<DerivationStep> steps;

  const Word& start() const { return words.front(); }
  const Word& end() const { return words.back(); }
};

struct SearchBounds {
  size_t max_word_length = 0;
  size_t max_depth = 0;
  size_t max_visited = 0;

  SearchBounds(size_t len, size_t depth, size_t visited);
};

/// Every word reachable from w by one identity application in either
/// direction, with length <= bounds.max_word_length, paired with a step
/// that produces it. Exhaustive over all factorizations w = a·m·b and all
/// (possibly erasing) matches of m; one deterministic step per distinct
/// successor word.
std::vector<std::pair<Word, DerivationStep>> rewrite_successors(
    const Word& w, const IdentitySystem& sigma, const SearchBounds& bounds);

enum class SearchOutcome : unsigned char {
  Found,
  FrontierEmpty,  // reachable set exhausted within the length bound
  DepthLimit,
  VisitedLimit,
};

struct DeriveResult {
  SearchOutcome outcome = SearchOutcome::FrontierEmpty;
  std::optional<Certificate> certificate;  // set iff outcome == Found
  size_t visited = 0;

  bool found() const { return outcome == SearchOutcome::Found; }
  /// A FrontierEmpty result proves non-derivability within the length
  /// bound; the depth/visited limits abort the search inconclusively.
  bool complete() const { return outcome == SearchOutcome::FrontierEmpty; }
};

/// Breadth-first search for a derivation u -> v over sigma, yielding a
/// shortest certificate. Deterministic for fixed inputs.
DeriveResult derive(const Word& u, const Word& v, const IdentitySystem& sigma,
                    const SearchBounds& bounds);

/// Independent replay of a certificate: every step's replay equation must
/// hold exactly and every identity index must be valid.
bool check_certificate(const Certificate& cert, const IdentitySystem& sigma);

/// Restriction of the equational theory of sigma to the word list: block
/// ids (restricted-growth labeling) of the equivalence generated by bounded
/// pairwise derivability, transitively closed. The pair space fans out
/// across OpenMP threads; theory_restriction_serial is the reference.
std::vector<size_t> theory_restriction(const IdentitySystem& sigma,
                                       const std::vector<Word>& words,
                                       const SearchBounds& bounds);
std::vector<size_t> theory_restriction_serial(const IdentitySystem& sigma,
                                              const std::vector<Word>& words,
                                              const SearchBounds& bounds);

}  // namespace oclat

#endif  // OCLAT_DEDUCTION_HPP_
