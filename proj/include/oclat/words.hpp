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

// Free-monoid word calculus: content, occurrence counts, letter deletion,
// substitution application, the encounter quasiorder u <= v
// (v = a·xi(u)·b for a semigroup endomorphism xi), anti-chain and
// deletion-hypothesis certification, and the x^{n-i}yx^i anti-chain family.

#ifndef OCLAT_WORDS_HPP_
#define OCLAT_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oclat/errors.hpp"

namespace oclat {

/// A letter of the countable alphabet, identified by its index.
/// Printable names cover indices 0..25: x, y, z, then a, b, ..., w.
class Letter {
 public:
  explicit constexpr Letter(int index) : index_(index) {}

  constexpr int index() const noexcept { return index_; }

  /// Single-character name; throws std::out_of_range for index >= 26.
  char name() const;

  /// Inverse of name(); nullopt for characters outside [a-z].
  static std::optional<Letter> from_char(char c);

  friend constexpr auto operator<=>(Letter a, Letter b) = default;

 private:
  int index_;
};

/// An element of the free monoid: a finite (possibly empty) letter sequence.
/// The empty word renders as "1".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Grammar: word ::= (letter power?)+ | "1", power ::= "^" positive-int.
  /// "x^2y" parses to the flat sequence x x y. Throws ParseError.
  static Word parse(std::string_view text);

  /// Canonical text: maximal runs render as letter^k (k >= 2), single
  /// occurrences as the bare letter; the empty word as "1".
  /// parse(str()) reproduces the word exactly.
  std::string str() const;

  size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter at(size_t i) const { return letters_.at(i); }

  Word operator+(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

using LetterSet = std::set<Letter>;

/// The set of letters occurring in w.
LetterSet content(const Word& w);

/// Number of positions of w carrying a.
size_t occ(const Word& w, Letter a);

/// Letter -> occurrence count, over content(w) only.
std::map<Letter, size_t> occurrence_vector(const Word& w);

/// Copy of w with every occurrence of every letter of xs removed.
Word delete_letters(const Word& w, const LetterSet& xs);

/// True iff content(u) = content(v) and occ(u,a) = occ(v,a) for every a.
bool is_balanced_pair(const Word& u, const Word& v);

enum class SubstKind : uint8_t {
  MonoidEndo,     // images may be empty
  SemigroupEndo,  // images must be nonempty
};

/// A letter-to-word mapping extended homomorphically. Letters absent from
/// the mapping are fixed.
class Substitution {
 public:
  /// The identity endomorphism.
  Substitution() : kind_(SubstKind::MonoidEndo) {}

  /// Throws std::invalid_argument if kind is SemigroupEndo and some image
  /// is empty.
  Substitution(SubstKind kind, std::map<Letter, Word> images);

  static Substitution identity(SubstKind kind = SubstKind::MonoidEndo) {
    return Substitution(kind, {});
  }

  SubstKind kind() const noexcept { return kind_; }
  const std::map<Letter, Word>& images() const noexcept { return images_; }

  /// Image of a single letter (the letter itself if unmapped).
  Word image(Letter a) const;

  /// Homomorphic extension: apply(u·v) = apply(u)·apply(v), apply(λ) = λ.
  Word apply(const Word& w) const;

 private:
  SubstKind kind_;
  std::map<Letter, Word> images_;
};

/// Witness for an encounter u <= v: v = prefix · xi(u) · suffix with xi a
/// semigroup endomorphism (nonempty images on content(u)).
struct Encounter {
  Word prefix;
  Substitution xi;
  Word suffix;
};

/// Exhaustive search for an encounter witness of u in v. Backtracks over
/// the prefix (increasing length) and a left-to-right factor assignment
/// with repeated-letter consistency, longest images first, pruning on the
/// length bound ℓ(xi(u)) >= ℓ(u). Returns the first witness in that order;
/// absence is a proof that u does not encounter v.
/// Throws std::invalid_argument if u is empty (u must lie in F).
std::optional<Encounter> encounters(const Word& u, const Word& v);

struct AntichainViolation {
  Word u, v;  // u encounters v
  Encounter witness;
};

/// nullopt iff no ordered pair of distinct words has an encounter, i.e. the
/// set is an anti-chain under the encounter quasiorder. Reports the first
/// violating pair in row-major pair order. Throws std::invalid_argument on
/// empty or duplicate words. OpenMP-parallel over the pair space;
/// antichain_violation_serial is the reference implementation.
std::optional<AntichainViolation> antichain_violation(
    const std::vector<Word>& words);
std::optional<AntichainViolation> antichain_violation_serial(
    const std::vector<Word>& words);

struct HypothesisViolation {
  Word u, v;
  // Empty when the contents already differ; otherwise the deleted letter
  // set X with delete_letters(u, X) != delete_letters(v, X).
  LetterSet deleted;
  bool content_mismatch = false;
};

/// Checks the deletion hypothesis on A: all members share one content C and
/// for every nonempty X ⊆ C all deletions agree. Enumerates all 2^|C|-1
/// subsets. nullopt = hypothesis holds. Throws std::invalid_argument if A
/// is empty.
std::optional<HypothesisViolation> hypothesis_violation(
    const std::vector<Word>& words);

/// The n+1 words x^{n-i}·y·x^i for i = 0..n. Throws std::invalid_argument
/// for n < 1 (the n = 0 family degenerates to the singleton {y}).
std::vector<Word> generate_antichain(int n);

}  // namespace oclat

template <>
struct std::hash<oclat::Word> {
  size_t operator()(const oclat::Word& w) const noexcept {
    // FNV-1a over letter indices.
    size_t h = 1469598103934665603ull;
    for (oclat::Letter a : w.letters()) {
      h ^= static_cast<size_t>(a.index());
      h *= 1099511628211ull;
    }
    return h;
  }
};

#endif  // OCLAT_WORDS_HPP_
