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

// Finite partition lattices Part(X): refinement order, join, meet,
// restricted-growth enumeration, restriction to a subset, and the
// two-block principal-ideal decomposition (α] ≅ Part(A) × Part(B).

#ifndef OCLAT_PARTITIONS_HPP_
#define OCLAT_PARTITIONS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oclat/errors.hpp"

namespace oclat {

inline constexpr size_t kDefaultEnumerationCap = 8;

/// A partition of an ordered universe of opaque labels. Canonical form is
/// the restricted-growth string over universe positions: block ids appear
/// in first-occurrence order, so equal partitions compare equal structurally.
class Partition {
 public:
  /// block_of[i] = block id of universe[i]; any labeling is accepted and
  /// normalized. Throws std::invalid_argument on size mismatch or an empty
  /// or duplicate-label universe.
  Partition(std::vector<std::string> universe, std::vector<size_t> block_of);

  static Partition bottom(std::vector<std::string> universe);
  static Partition top(std::vector<std::string> universe);

  /// Blocks as label lists; validates disjoint nonempty cover.
  static Partition from_blocks(std::vector<std::string> universe,
                               const std::vector<std::vector<std::string>>& blocks);

  /// Text syntax: blocks joined by '|', elements comma-separated, e.g.
  /// "x^2y,xyx|yx^2". Whitespace around tokens ignored. Throws ParseError.
  static Partition parse(std::string_view text,
                         const std::vector<std::string>& universe);

  /// Canonical text: blocks ordered by least universe position, elements in
  /// universe order. parse(str(), universe()) reproduces the partition.
  std::string str() const;

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<size_t>& rgs() const noexcept { return block_of_; }
  size_t size() const noexcept { return universe_.size(); }
  size_t block_count() const noexcept { return block_count_; }
  bool same_block(size_t i, size_t j) const { return block_of_.at(i) == block_of_.at(j); }
  std::vector<std::vector<std::string>> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<size_t> block_of_;
  size_t block_count_ = 0;
};

/// Coarsest common refinement (blockwise intersection). Universe mismatch
/// throws std::invalid_argument; likewise for join/leq/restrict below.
Partition meet(const Partition& p, const Partition& q);

/// Finest common coarsening, via a union-find pass over both block lists.
Partition join(const Partition& p, const Partition& q);

/// Refinement order: every block of p lies inside a block of q.
bool leq(const Partition& p, const Partition& q);

/// All partitions of the universe, each once, in restricted-growth
/// lexicographic order. Throws BudgetError beyond the cap (Bell(8) = 4140).
std::vector<Partition> enumerate_partitions(
    const std::vector<std::string>& universe,
    size_t cap = kDefaultEnumerationCap);

/// Partition of `sub` whose blocks are the nonempty traces of p's blocks.
/// `sub` must be a nonempty subset of the universe; the result keeps
/// universe order.
Partition restrict_to(const Partition& p, const std::vector<std::string>& sub);

/// The Part(A) × Part(B) decomposition of the principal ideal (α] for a
/// two-block α. forward/inverse are mutually inverse lattice isomorphisms.
class IdealSplit {
 public:
  /// Throws std::invalid_argument unless alpha has exactly two blocks.
  explicit IdealSplit(Partition alpha);

  const Partition& alpha() const noexcept { return alpha_; }
  const std::vector<std::string>& part_a() const noexcept { return part_a_; }
  const std::vector<std::string>& part_b() const noexcept { return part_b_; }

  /// beta ↦ (beta|_A, beta|_B); requires beta ≤ alpha.
  std::pair<Partition, Partition> forward(const Partition& beta) const;

  /// (p, q) ↦ the partition of X with block set blocks(p) ∪ blocks(q).
  Partition inverse(const Partition& pa, const Partition& pb) const;

 private:
  Partition alpha_;
  std::vector<std::string> part_a_, part_b_;
};

/// Exhaustive desk-scale certification of the two-block ideal decomposition
/// over {a, b, c, ...} of the given size: enumerates (α], checks that
/// forward is a bijection onto Part(A) × Part(B) and that both directions
/// preserve join and meet.
struct IdealCheckReport {
  size_t universe_size = 0;
  size_t split = 0;
  size_t ideal_size = 0;
  size_t product_size = 0;
  bool bijective = false;
  bool preserves_join = false;
  bool preserves_meet = false;
  bool inverse_ok = false;
  bool pass() const {
    return bijective && preserves_join && preserves_meet && inverse_ok;
  }
};

IdealCheckReport verify_ideal_split(size_t universe_size, size_t split,
                                    size_t cap = kDefaultEnumerationCap);

/// Labels a, b, c, ... for abstract universes (size <= 26).
std::vector<std::string> default_labels(size_t n);

}  // namespace oclat

#endif  // OCLAT_PARTITIONS_HPP_
