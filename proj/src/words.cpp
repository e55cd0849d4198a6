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

#include "oclat/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace oclat {

namespace {
constexpr char kNames[] = "xyzabcdefghijklmnopqrstuvw";
}  // namespace

char Letter::name() const {
  if (index_ < 0 || index_ >= 26) {
    throw std::out_of_range("letter index " + std::to_string(index_) +
                            " has no printable name");
  }
  return kNames[index_];
}

std::optional<Letter> Letter::from_char(char c) {
  if (c < 'a' || c > 'z') return std::nullopt;
  if (c == 'x') return Letter(0);
  if (c == 'y') return Letter(1);
  if (c == 'z') return Letter(2);
  return Letter(3 + (c - 'a'));
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty word text", 0);
  if (text == "1") return Word{};
  std::vector<Letter> out;
  size_t i = 0;
  while (i < text.size()) {
    auto letter = Letter::from_char(text[i]);
    if (!letter) {
      throw ParseError(std::string("expected a letter, got '") + text[i] + "'",
                       i);
    }
    size_t count = 1;
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw ParseError("expected a power after '^'", i);
      count = 0;
      for (size_t k = start; k < i; ++k) {
        count = count * 10 + static_cast<size_t>(text[k] - '0');
        if (count > 1'000'000) throw ParseError("power too large", start);
      }
      if (count == 0) throw ParseError("power must be positive", start);
    }
    out.insert(out.end(), count, *letter);
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    size_t run = 1;
    while (i + run < letters_.size() && letters_[i + run] == letters_[i]) {
      ++run;
    }
    out += letters_[i].name();
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

Word Word::operator+(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

LetterSet content(const Word& w) {
  return LetterSet(w.letters().begin(), w.letters().end());
}

size_t occ(const Word& w, Letter a) {
  return static_cast<size_t>(
      std::count(w.letters().begin(), w.letters().end(), a));
}

std::map<Letter, size_t> occurrence_vector(const Word& w) {
  std::map<Letter, size_t> out;
  for (Letter a : w.letters()) ++out[a];
  return out;
}

Word delete_letters(const Word& w, const LetterSet& xs) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter a : w.letters()) {
    if (!xs.contains(a)) out.push_back(a);
  }
  return Word(std::move(out));
}

bool is_balanced_pair(const Word& u, const Word& v) {
  return occurrence_vector(u) == occurrence_vector(v);
}

Substitution::Substitution(SubstKind kind, std::map<Letter, Word> images)
    : kind_(kind), images_(std::move(images)) {
  if (kind_ == SubstKind::SemigroupEndo) {
    for (const auto& [letter, image] : images_) {
      if (image.empty()) {
        throw std::invalid_argument(
            "semigroup endomorphism maps " + std::string(1, letter.name()) +
            " to the empty word");
      }
    }
  }
}

Word Substitution::image(Letter a) const {
  auto it = images_.find(a);
  if (it != images_.end()) return it->second;
  return Word({a});
}

Word Substitution::apply(const Word& w) const {
  std::vector<Letter> out;
  for (Letter a : w.letters()) {
    auto it = images_.find(a);
    if (it == images_.end()) {
      out.push_back(a);
    } else {
      const auto& img = it->second.letters();
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return Word(std::move(out));
}

namespace {

// Backtracking matcher for the encounter search: bind each letter of u to a
// nonempty factor of v, consuming v from position `pos` on, consistently for
// repeated letters. State memo keyed by (position in u, position in v,
// bindings) prunes re-explored dead ends.
class EncounterSearch {
 public:
  EncounterSearch(const Word& u, const Word& v) : u_(u), v_(v) {}

  std::optional<Encounter> run() {
    const size_t lu = u_.length();
    const size_t lv = v_.length();
    if (lu > lv) return std::nullopt;
    // Prefix a by increasing length; xi(u) needs at least lu letters.
    for (size_t start = 0; start + lu <= lv; ++start) {
      bindings_.clear();
      failed_.clear();
      start_ = start;
      if (auto found = match(0, start)) return found;
    }
    return std::nullopt;
  }

 private:
  std::optional<Encounter> match(size_t pos_u, size_t pos_v) {
    if (pos_u == u_.length()) {
      // Everything matched; the rest of v is the suffix b.
      std::map<Letter, Word> images;
      for (const auto& [letter, img] : bindings_) {
        images.emplace(letter, Word(img));
      }
      Word prefix(std::vector<Letter>(v_.letters().begin(),
                                      v_.letters().begin() + start_));
      Word suffix(std::vector<Letter>(v_.letters().begin() + pos_v,
                                      v_.letters().end()));
      return Encounter{std::move(prefix),
                       Substitution(SubstKind::SemigroupEndo, std::move(images)),
                       std::move(suffix)};
    }
    // Every unmatched letter still needs a nonempty image.
    size_t needed = 0;
    for (size_t i = pos_u; i < u_.length(); ++i) {
      auto it = bindings_.find(u_.at(i));
      needed += (it == bindings_.end()) ? 1 : it->second.size();
    }
    if (pos_v + needed > v_.length()) return std::nullopt;
    if (failed_.contains(state_key(pos_u, pos_v))) return std::nullopt;

    Letter a = u_.at(pos_u);
    auto it = bindings_.find(a);
    if (it != bindings_.end()) {
      const auto& img = it->second;
      if (pos_v + img.size() <= v_.length() &&
          std::equal(img.begin(), img.end(), v_.letters().begin() + pos_v)) {
        if (auto found = match(pos_u + 1, pos_v + img.size())) return found;
      }
    } else {
      // needed counts this letter as 1, so longer images shrink the slack.
      size_t max_len = v_.length() - pos_v - (needed - 1);
      for (size_t len = max_len; len >= 1; --len) {
        bindings_.emplace(a, std::vector<Letter>(
                                 v_.letters().begin() + pos_v,
                                 v_.letters().begin() + pos_v + len));
        if (auto found = match(pos_u + 1, pos_v + len)) return found;
        bindings_.erase(a);
      }
    }
    failed_.insert(state_key(pos_u, pos_v));
    return std::nullopt;
  }

  std::string state_key(size_t pos_u, size_t pos_v) const {
    std::string key;
    key += std::to_string(pos_u) + "|" + std::to_string(pos_v);
    for (const auto& [letter, img] : bindings_) {
      key += "|" + std::to_string(letter.index()) + ":";
      for (Letter b : img) key += std::to_string(b.index()) + ",";
    }
    return key;
  }

  const Word& u_;
  const Word& v_;
  size_t start_ = 0;
  std::map<Letter, std::vector<Letter>> bindings_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<Encounter> encounters(const Word& u, const Word& v) {
  if (u.empty()) {
    throw std::invalid_argument("encounter pattern must be a nonempty word");
  }
  return EncounterSearch(u, v).run();
}

namespace {

void validate_antichain_input(const std::vector<Word>& words) {
  std::unordered_set<Word> seen;
  for (const Word& w : words) {
    if (w.empty()) {
      throw std::invalid_argument("anti-chain members must be nonempty");
    }
    if (!seen.insert(w).second) {
      throw std::invalid_argument("duplicate word " + w.str() +
                                  " in anti-chain candidate");
    }
  }
}

}  // namespace

std::optional<AntichainViolation> antichain_violation_serial(
    const std::vector<Word>& words) {
  validate_antichain_input(words);
  const size_t n = words.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (auto w = encounters(words[i], words[j])) {
        return AntichainViolation{words[i], words[j], std::move(*w)};
      }
    }
  }
  return std::nullopt;
}

std::optional<AntichainViolation> antichain_violation(
    const std::vector<Word>& words) {
  validate_antichain_input(words);
  const size_t n = words.size();
  if (n < 2) return std::nullopt;
  const size_t pairs = n * n;
  std::vector<std::optional<Encounter>> hits(pairs);

#pragma omp parallel for schedule(dynamic)
  for (size_t k = 0; k < pairs; ++k) {
    const size_t i = k / n;
    const size_t j = k % n;
    if (i == j) continue;
    hits[k] = encounters(words[i], words[j]);
  }

  for (size_t k = 0; k < pairs; ++k) {
    if (hits[k]) {
      return AntichainViolation{words[k / n], words[k % n],
                                std::move(*hits[k])};
    }
  }
  return std::nullopt;
}

std::optional<HypothesisViolation> hypothesis_violation(
    const std::vector<Word>& words) {
  if (words.empty()) {
    throw std::invalid_argument("hypothesis check needs a nonempty word set");
  }
  const LetterSet base = content(words.front());
  for (size_t i = 1; i < words.size(); ++i) {
    if (content(words[i]) != base) {
      return HypothesisViolation{words.front(), words[i], {}, true};
    }
  }
  std::vector<Letter> letters(base.begin(), base.end());
  const size_t m = letters.size();
  // All 2^m - 1 nonempty subsets; contents here stay tiny.
  for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
    LetterSet xs;
    for (size_t b = 0; b < m; ++b) {
      if (mask & (size_t{1} << b)) xs.insert(letters[b]);
    }
    const Word first = delete_letters(words.front(), xs);
    for (size_t i = 1; i < words.size(); ++i) {
      if (delete_letters(words[i], xs) != first) {
        return HypothesisViolation{words.front(), words[i], xs, false};
      }
    }
  }
  return std::nullopt;
}

std::vector<Word> generate_antichain(int n) {
  if (n < 1) {
    throw std::invalid_argument(
        "anti-chain family needs n >= 1 (n = 0 degenerates to {y})");
  }
  const Letter x(0), y(1);
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<Letter> letters;
    letters.insert(letters.end(), static_cast<size_t>(n - i), x);
    letters.push_back(y);
    letters.insert(letters.end(), static_cast<size_t>(i), x);
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace oclat
