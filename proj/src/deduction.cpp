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

#include "oclat/deduction.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace oclat {

Identity::Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (content(lhs) != content(rhs)) {
    throw std::invalid_argument("identity " + lhs.str() + " = " + rhs.str() +
                                " is not content-balanced");
  }
}

IdentitySystem::IdentitySystem(std::vector<Identity> identities) {
  for (Identity& id : identities) {
    if (id.lhs == id.rhs) continue;
    if (std::find(identities_.begin(), identities_.end(), id) ==
        identities_.end()) {
      identities_.push_back(std::move(id));
    }
  }
}

IdentitySystem IdentitySystem::parse(std::string_view text) {
  std::vector<Identity> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line(text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    if (size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto not_ws = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
    line.erase(line.begin(),
               std::find_if(line.begin(), line.end(), not_ws));
    line.erase(std::find_if(line.rbegin(), line.rend(), not_ws).base(),
               line.end());
    if (line.empty()) continue;

    size_t eq = line.find('=');
    if (eq == std::string::npos || line.find('=', eq + 1) != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected exactly one '='",
                       pos);
    }
    auto trim = [&not_ws](std::string s) {
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_ws));
      s.erase(std::find_if(s.rbegin(), s.rend(), not_ws).base(), s.end());
      return s;
    };
    const std::string left = trim(line.substr(0, eq));
    const std::string right = trim(line.substr(eq + 1));
    out.emplace_back(Word::parse(left), Word::parse(right));
  }
  return IdentitySystem(std::move(out));
}

IdentitySystem IdentitySystem::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open identity system file " +
                             file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string IdentitySystem::str() const {
  std::string out;
  for (const Identity& id : identities_) {
    out += id.str();
    out += '\n';
  }
  return out;
}

bool IdentitySystem::balanced() const {
  return std::all_of(identities_.begin(), identities_.end(),
                     [](const Identity& id) { return id.balanced(); });
}

IdentitySystem IdentitySystem::merged_with(const IdentitySystem& other) const {
  std::vector<Identity> all = identities_;
  all.insert(all.end(), other.identities_.begin(), other.identities_.end());
  return IdentitySystem(std::move(all));
}

SearchBounds::SearchBounds(size_t len, size_t depth, size_t visited)
    : max_word_length(len), max_depth(depth), max_visited(visited) {
  if (len == 0 || depth == 0 || visited == 0) {
    throw std::invalid_argument("search bounds must be positive");
  }
}

namespace {

// Enumerates every substitution (possibly erasing) matching `pattern`
// against the letters [begin, end) of a word, invoking `emit` once per
// complete consistent binding of content(pattern).
class FactorMatcher {
 public:
  using Span = std::pair<size_t, size_t>;  // [first, second) into target_

  FactorMatcher(const std::vector<Letter>& target, size_t begin, size_t end,
                const Word& pattern)
      : target_(target), begin_(begin), end_(end), pattern_(pattern) {}

  template <typename Emit>
  void enumerate(Emit&& emit) {
    std::map<Letter, Span> bindings;
    recurse(0, begin_, bindings, emit);
  }

 private:
  template <typename Emit>
  void recurse(size_t pos_p, size_t pos_t, std::map<Letter, Span>& bindings,
               Emit& emit) {
    if (pos_p == pattern_.length()) {
      if (pos_t == end_) {
        std::map<Letter, Word> images;
        for (const auto& [letter, span] : bindings) {
          images.emplace(letter,
                         Word(std::vector<Letter>(
                             target_.begin() + static_cast<long>(span.first),
                             target_.begin() + static_cast<long>(span.second))));
        }
        emit(Substitution(SubstKind::MonoidEndo, std::move(images)));
      }
      return;
    }
    Letter a = pattern_.at(pos_p);
    auto it = bindings.find(a);
    if (it != bindings.end()) {
      const size_t len = it->second.second - it->second.first;
      if (pos_t + len <= end_ &&
          std::equal(target_.begin() + static_cast<long>(it->second.first),
                     target_.begin() + static_cast<long>(it->second.second),
                     target_.begin() + static_cast<long>(pos_t))) {
        recurse(pos_p + 1, pos_t + len, bindings, emit);
      }
      return;
    }
    // Unbound: try every image length from erasing upwards.
    for (size_t len = 0; pos_t + len <= end_; ++len) {
      bindings.emplace(a, Span{pos_t, pos_t + len});
      recurse(pos_p + 1, pos_t + len, bindings, emit);
      bindings.erase(a);
    }
  }

  const std::vector<Letter>& target_;
  size_t begin_, end_;
  const Word& pattern_;
};

Word splice(const std::vector<Letter>& letters, size_t begin, size_t end,
            const Word& middle) {
  std::vector<Letter> out;
  out.reserve(letters.size() - (end - begin) + middle.length());
  out.insert(out.end(), letters.begin(), letters.begin() + static_cast<long>(begin));
  out.insert(out.end(), middle.letters().begin(), middle.letters().end());
  out.insert(out.end(), letters.begin() + static_cast<long>(end), letters.end());
  return Word(std::move(out));
}

}  // namespace

std::vector<std::pair<Word, DerivationStep>> rewrite_successors(
    const Word& w, const IdentitySystem& sigma, const SearchBounds& bounds) {
  std::vector<std::pair<Word, DerivationStep>> out;
  std::unordered_set<Word> seen;
  const auto& letters = w.letters();
  const size_t n = letters.size();

  for (size_t k = 0; k < sigma.size(); ++k) {
    for (StepDirection dir :
         {StepDirection::Forward, StepDirection::Backward}) {
      const Word& from_side =
          dir == StepDirection::Forward ? sigma[k].lhs : sigma[k].rhs;
      const Word& to_side =
          dir == StepDirection::Forward ? sigma[k].rhs : sigma[k].lhs;
      for (size_t i = 0; i <= n; ++i) {
        for (size_t j = i; j <= n; ++j) {
          FactorMatcher matcher(letters, i, j, from_side);
          matcher.enumerate([&](Substitution xi) {
            Word image = xi.apply(to_side);
            if (n - (j - i) + image.length() > bounds.max_word_length) return;
            Word next = splice(letters, i, j, image);
            if (!seen.insert(next).second) return;
            DerivationStep step{
                Word(std::vector<Letter>(letters.begin(),
                                         letters.begin() + static_cast<long>(i))),
                Word(std::vector<Letter>(letters.begin() + static_cast<long>(j),
                                         letters.end())),
                std::move(xi), k, dir};
            out.emplace_back(std::move(next), std::move(step));
          });
        }
      }
    }
  }
  return out;
}

DeriveResult derive(const Word& u, const Word& v, const IdentitySystem& sigma,
                    const SearchBounds& bounds) {
  DeriveResult res;
  if (u == v) {
    res.outcome = SearchOutcome::Found;
    res.certificate = Certificate{{u}, {}};
    res.visited = 1;
    return res;
  }

  struct Node {
    Word parent;
    DerivationStep step;
  };
  std::unordered_map<Word, Node> visited;
  std::deque<std::pair<Word, size_t>> frontier;  // word, depth
  visited.emplace(u, Node{});
  frontier.emplace_back(u, 0);
  bool depth_capped = false;

  while (!frontier.empty()) {
    auto [word, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= bounds.max_depth) {
      depth_capped = true;
      continue;
    }
    for (auto& [next, step] : rewrite_successors(word, sigma, bounds)) {
      if (visited.contains(next)) continue;
      if (visited.size() >= bounds.max_visited) {
        res.outcome = SearchOutcome::VisitedLimit;
        res.visited = visited.size();
        return res;
      }
      visited.emplace(next, Node{word, step});
      if (next == v) {
        Certificate cert;
        Word at = next;
        while (!(at == u)) {
          const Node& node = visited.at(at);
          cert.words.push_back(at);
          cert.steps.push_back(node.step);
          at = node.parent;
        }
        cert.words.push_back(u);
        std::reverse(cert.words.begin(), cert.words.end());
        std::reverse(cert.steps.begin(), cert.steps.end());
        res.outcome = SearchOutcome::Found;
        res.certificate = std::move(cert);
        res.visited = visited.size();
        return res;
      }
      frontier.emplace_back(next, depth + 1);
    }
  }

  res.outcome =
      depth_capped ? SearchOutcome::DepthLimit : SearchOutcome::FrontierEmpty;
  res.visited = visited.size();
  return res;
}

bool check_certificate(const Certificate& cert, const IdentitySystem& sigma) {
  if (cert.words.empty()) return false;
  if (cert.steps.size() + 1 != cert.words.size()) return false;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const DerivationStep& step = cert.steps[i];
    if (step.identity_index >= sigma.size()) return false;
    const Identity& id = sigma[step.identity_index];
    const Word& from_side =
        step.direction == StepDirection::Forward ? id.lhs : id.rhs;
    const Word& to_side =
        step.direction == StepDirection::Forward ? id.rhs : id.lhs;
    const Word expect_from =
        step.context_left + step.xi.apply(from_side) + step.context_right;
    const Word expect_to =
        step.context_left + step.xi.apply(to_side) + step.context_right;
    if (cert.words[i] != expect_from || cert.words[i + 1] != expect_to) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<size_t> close_pairs(size_t n,
                                const std::vector<unsigned char>& derivable) {
  // Union-find closure of the derivable pair set, then RGS normalization.
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j, ++k) {
      if (derivable[k]) parent[find(i)] = find(j);
    }
  }
  std::vector<size_t> rgs(n);
  std::unordered_map<size_t, size_t> relabel;
  for (size_t i = 0; i < n; ++i) {
    auto [it, fresh] = relabel.emplace(find(i), relabel.size());
    (void)fresh;
    rgs[i] = it->second;
  }
  return rgs;
}

void validate_restriction_words(const std::vector<Word>& words) {
  std::unordered_set<Word> seen;
  for (const Word& w : words) {
    if (!seen.insert(w).second) {
      throw std::invalid_argument("theory restriction needs distinct words");
    }
  }
}

}  // namespace

std::vector<size_t> theory_restriction_serial(const IdentitySystem& sigma,
                                              const std::vector<Word>& words,
                                              const SearchBounds& bounds) {
  validate_restriction_words(words);
  const size_t n = words.size();
  std::vector<unsigned char> derivable(n * (n - 1) / 2, 0);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j, ++k) {
      derivable[k] = derive(words[i], words[j], sigma, bounds).found();
    }
  }
  return close_pairs(n, derivable);
}

std::vector<size_t> theory_restriction(const IdentitySystem& sigma,
                                       const std::vector<Word>& words,
                                       const SearchBounds& bounds) {
  validate_restriction_words(words);
  const size_t n = words.size();
  if (n < 2) return std::vector<size_t>(n, 0);
  const size_t pair_count = n * (n - 1) / 2;
  std::vector<std::pair<size_t, size_t>> pairs;
  pairs.reserve(pair_count);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<unsigned char> derivable(pair_count, 0);

#pragma omp parallel for schedule(dynamic)
  for (size_t k = 0; k < pair_count; ++k) {
    derivable[k] =
        derive(words[pairs[k].first], words[pairs[k].second], sigma, bounds)
            .found();
  }

  return close_pairs(n, derivable);
}

}  // namespace oclat
