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

// Lattice terms and identities: parsing (/\ and \/, /\ binds tighter),
// dualization, evaluation in finite lattices, exhaustive identity checking
// with deterministic first counterexample, and triviality via the free
// lattice word problem (Whitman's condition).

#ifndef OCLAT_LATTICE_TERMS_HPP_
#define OCLAT_LATTICE_TERMS_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oclat/errors.hpp"
#include "oclat/partitions.hpp"

namespace oclat {

struct LatticeTerm;
using TermPtr = std::shared_ptr<const LatticeTerm>;

struct LatticeTerm {
  enum class Kind { Variable, Meet, Join };

  Kind kind;
  std::string var;      // Variable only
  TermPtr left, right;  // Meet/Join only

  static TermPtr variable(std::string name);
  static TermPtr meet(TermPtr l, TermPtr r);
  static TermPtr join(TermPtr l, TermPtr r);
};

struct LatticeIdentity {
  TermPtr lhs, rhs;
};

/// Grammar (whitespace insignificant):
///   identity ::= term "=" term
///   term     ::= factor ( "\/" factor )*
///   factor   ::= atom ( "/\" atom )*
///   atom     ::= variable | "(" term ")"
///   variable ::= [a-z][a-z0-9]*
/// Throws ParseError with the offending position.
LatticeIdentity parse_identity(std::string_view text);
TermPtr parse_term(std::string_view text);

std::string term_str(const TermPtr& t);
std::string identity_str(const LatticeIdentity& id);

/// Meet and join swapped throughout; an involution.
TermPtr dual(const TermPtr& t);
LatticeIdentity dual(const LatticeIdentity& id);

/// Sorted distinct variable names of both sides.
std::vector<std::string> variables(const LatticeIdentity& id);
std::vector<std::string> variables(const TermPtr& t);

/// A finite lattice given by element names and join/meet over element
/// indices. Explicit tables are validated against the lattice axioms;
/// callable-backed instances (e.g. partition lattices) are trusted.
class FiniteLattice {
 public:
  using Op = std::function<size_t(size_t, size_t)>;

  static FiniteLattice from_tables(std::vector<std::string> names,
                                   std::vector<std::vector<size_t>> join,
                                   std::vector<std::vector<size_t>> meet);
  static FiniteLattice from_ops(std::vector<std::string> names, Op join,
                                Op meet);

  /// Part(universe): elements in restricted-growth enumeration order.
  static FiniteLattice partition_lattice(
      const std::vector<std::string>& universe,
      size_t cap = kDefaultEnumerationCap);

  size_t size() const noexcept { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  size_t join(size_t a, size_t b) const { return join_(a, b); }
  size_t meet(size_t a, size_t b) const { return meet_(a, b); }

  /// Same elements with join and meet swapped.
  FiniteLattice dual_lattice() const;

  /// The backing partitions when built by partition_lattice, else empty.
  const std::vector<Partition>& partitions() const noexcept {
    return partitions_;
  }

 private:
  FiniteLattice() = default;
  std::vector<std::string> names_;
  Op join_, meet_;
  std::vector<Partition> partitions_;
};

/// Bottom-up evaluation; throws std::invalid_argument on unbound variables.
size_t evaluate(const TermPtr& t, const std::map<std::string, size_t>& sigma,
                const FiniteLattice& lattice);

struct IdentityCheckResult {
  bool holds = true;
  // Set when !holds: the lexicographically first failing assignment under
  // variable-name order with elements in lattice order.
  std::map<std::string, size_t> counterexample;
  size_t lhs_value = 0, rhs_value = 0;
  // Deterministic across serial/parallel paths: the full space size when the
  // identity holds, otherwise the failing assignment's enumeration index + 1.
  size_t assignments_checked = 0;
};

inline constexpr size_t kDefaultAssignmentBudget = 1'000'000;

/// Exhaustive check over all |L|^k assignments in mixed-radix lexicographic
/// order (first variable most significant). Throws BudgetError when the
/// space exceeds the budget. The default entry point splits the assignment
/// space across OpenMP threads and merges by least failing index, so the
/// counterexample matches the serial reference exactly.
IdentityCheckResult check_identity(const LatticeIdentity& id,
                                   const FiniteLattice& lattice,
                                   size_t budget = kDefaultAssignmentBudget);
IdentityCheckResult check_identity_serial(
    const LatticeIdentity& id, const FiniteLattice& lattice,
    size_t budget = kDefaultAssignmentBudget);

/// Free-lattice order: s <= t in every lattice, decided by Whitman's
/// recursive condition.
bool free_leq(const TermPtr& s, const TermPtr& t);

/// True iff the identity holds in every lattice (free-lattice equality).
bool is_trivial(const LatticeIdentity& id);

}  // namespace oclat

#endif  // OCLAT_LATTICE_TERMS_HPP_
