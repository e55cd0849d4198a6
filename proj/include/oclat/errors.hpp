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

#ifndef OCLAT_ERRORS_HPP_
#define OCLAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oclat {

/// Raised by the text-format parsers (words, identity systems, partitions,
/// lattice identities). Carries the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}

  size_t position() const noexcept { return position_; }

 private:
  size_t position_;
};

/// An exhaustive search was asked to cover more cases than its budget allows.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The falsifier rejects identities that hold in every lattice.
class TrivialIdentityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A word set failed anti-chain or deletion-hypothesis certification.
class CertificationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace oclat

#endif  // OCLAT_ERRORS_HPP_
