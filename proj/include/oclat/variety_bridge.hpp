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

// The bridge between word anti-chains and partition lattices: monoid
// variety presentations V_β generated by the pairs of a partition β of a
// certified anti-chain A, the restriction map φ_A(V) = FIC(V)|_A computed
// by bounded deduction, desk-scale verification that φ_A is a surjective
// lattice anti-homomorphism onto Part(A), and the falsifier that turns a
// nontrivial lattice identity into an explicit witness over Part(A_n):
// overcommutative varieties on which the identity fails.

#ifndef OCLAT_VARIETY_BRIDGE_HPP_
#define OCLAT_VARIETY_BRIDGE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oclat/deduction.hpp"
#include "oclat/lattice_terms.hpp"
#include "oclat/partitions.hpp"
#include "oclat/words.hpp"

namespace oclat {

/// A word set together with evidence that it is an anti-chain satisfying
/// the deletion hypothesis (equal contents, equal deletions for every
/// nonempty letter subset). Construction runs both checks and fails with
/// CertificationError otherwise, so every context in circulation satisfies
/// the hypothesis.
class AntichainContext {
 public:
  static AntichainContext certify(std::vector<Word> words);

  /// The x^{n-i}yx^i family, certified.
  static AntichainContext family(int n);

  const std::vector<Word>& words() const noexcept { return words_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  size_t size() const noexcept { return words_.size(); }
  size_t max_length() const noexcept { return max_length_; }

  /// max ℓ over A, 10·|A| depth, 10^6 visited.
  SearchBounds default_bounds() const;

 private:
  explicit AntichainContext(std::vector<Word> words);
  std::vector<Word> words_;
  std::vector<std::string> labels_;
  size_t max_length_ = 0;
};

enum class GeneratorMode : unsigned char {
  AllPairs,      // every unordered non-reflexive in-block pair
  SpanningTree,  // consecutive chain within each block (cross-validation)
};

/// An identity system presenting a monoid variety, with provenance when it
/// came from a partition of an anti-chain. Presentations built from
/// certified contexts are occurrence-balanced, hence present
/// overcommutative varieties.
struct VarietyPresentation {
  IdentitySystem system;
  std::optional<Partition> origin;
};

/// The presentation generated by all in-block pairs of beta (or a spanning
/// chain per block). beta's universe must be the context's label list.
VarietyPresentation variety_of_partition(
    const Partition& beta, const AntichainContext& context,
    GeneratorMode mode = GeneratorMode::AllPairs);

/// φ_A of a presentation: the restriction of its equational theory to the
/// context's words, as a partition of the label universe.
Partition phi(const VarietyPresentation& presentation,
              const AntichainContext& context, const SearchBounds& bounds);

/// True iff every identity of the system is occurrence-balanced; balanced
/// rewriting preserves occurrence vectors, so this certifies that every
/// derivable identity is balanced and the presented variety contains all
/// commutative monoids.
bool verify_overcommutative(const VarietyPresentation& presentation);

/// Exhaustive surjectivity check: every partition of the context round-trips
/// through variety_of_partition and phi.
struct SurjectivityReport {
  size_t total = 0;
  struct Failure {
    Partition beta;
    Partition got;
    // Label index pairs where the two equivalences disagree.
    std::vector<std::pair<size_t, size_t>> mismatched_pairs;
  };
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};
SurjectivityReport verify_surjectivity(const AntichainContext& context,
                                       const SearchBounds& bounds);

/// Depth-1 anti-homomorphism check over all partition pairs (β₁, β₂):
///   union:        φ(Σ_{β₁} ∪ Σ_{β₂}) = join(β₁, β₂)
///                 (the union presents the varieties' meet),
///   intersection: pairwise-common derivability = meet(β₁, β₂)
///                 (the theories' intersection restricted to A).
struct AntihomReport {
  size_t pairs = 0;
  struct Failure {
    Partition beta1, beta2;
    std::string check;  // "union" or "intersection"
    Partition expected, got;
  };
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};
AntihomReport verify_antihomomorphism(const AntichainContext& context,
                                      const SearchBounds& bounds);

enum class VerificationLevel : unsigned char {
  GeneratorLevel,   // per-generator certificates + φ round-trips
  Depth1AntiHom,    // additionally verify_antihomomorphism passed for A_n
};

/// Per-variable evidence attached to a witness: the assigned partition's
/// presentation round-trips through φ and its generators replay.
struct GeneratorEvidence {
  std::string variable;
  Partition beta;
  bool phi_roundtrip = false;
  bool overcommutative = false;
  std::vector<Certificate> certificates;  // one per generator pair

  bool pass() const { return phi_roundtrip && overcommutative; }
};

/// The falsification output for a nontrivial lattice identity ε: an n, the
/// certified anti-chain A_n, and an assignment of Part(A_n) elements under
/// which the dual identity fails; each assigned partition is realized as an
/// overcommutative variety presentation. Because φ_{A_n} is a surjective
/// anti-homomorphism onto Part(A_n), the corresponding varieties witness
/// the failure of ε in the lattice of overcommutative monoid varieties.
struct WitnessReport {
  std::string identity_text;
  std::string dual_text;
  int n = 0;
  std::vector<Word> antichain;
  std::map<std::string, Partition> assignment;
  std::map<std::string, VarietyPresentation> presentations;
  std::optional<Partition> lhs_value, rhs_value;  // dual(ε) sides at the assignment
  std::vector<GeneratorEvidence> evidence;
  VerificationLevel level = VerificationLevel::GeneratorLevel;
  double wall_ms = 0.0;
};

struct FalsifyOutcome {
  std::optional<WitnessReport> witness;
  int max_n = 0;
  // One status line per examined n ("no counterexample", "budget exceeded").
  std::vector<std::pair<int, std::string>> scanned;

  bool found() const { return witness.has_value(); }
};

struct FalsifyOptions {
  int max_n = 3;
  size_t budget = kDefaultAssignmentBudget;
  std::optional<SearchBounds> bounds;  // default: per-context bounds
  bool run_antihom = false;            // depth-1 verification per witness n
  GeneratorMode generator_mode = GeneratorMode::AllPairs;
};

/// Scans n = 1..max_n; at the first n where dual(ε) fails in Part(A_n),
/// assembles the full witness. Throws TrivialIdentityError when ε holds in
/// every lattice (Whitman check).
FalsifyOutcome falsify_in_oc(const LatticeIdentity& identity,
                             const FalsifyOptions& options = {});

}  // namespace oclat

#endif  // OCLAT_VARIETY_BRIDGE_HPP_
