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

#include "oclat/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace oclat {

namespace {

std::vector<size_t> normalize_rgs(const std::vector<size_t>& raw,
                                  size_t* block_count) {
  std::vector<size_t> out(raw.size());
  std::unordered_map<size_t, size_t> relabel;
  size_t next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = relabel.emplace(raw[i], next);
    if (fresh) ++next;
    out[i] = it->second;
  }
  if (block_count) *block_count = next;
  return out;
}

void require_same_universe(const Partition& p, const Partition& q) {
  if (p.universe() != q.universe()) {
    throw std::invalid_argument("partitions live over different universes");
  }
}

// Plain union-find over 0..n-1.
class Dsu {
 public:
  explicit Dsu(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t find(size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(size_t i, size_t j) { parent_[find(i)] = find(j); }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

Partition::Partition(std::vector<std::string> universe,
                     std::vector<size_t> block_of)
    : universe_(std::move(universe)) {
  if (universe_.empty()) {
    throw std::invalid_argument("partition universe must be nonempty");
  }
  if (block_of.size() != universe_.size()) {
    throw std::invalid_argument("block assignment size mismatch");
  }
  std::set<std::string> labels(universe_.begin(), universe_.end());
  if (labels.size() != universe_.size()) {
    throw std::invalid_argument("duplicate labels in partition universe");
  }
  block_of_ = normalize_rgs(block_of, &block_count_);
}

Partition Partition::bottom(std::vector<std::string> universe) {
  std::vector<size_t> ids(universe.size());
  std::iota(ids.begin(), ids.end(), size_t{0});
  return Partition(std::move(universe), std::move(ids));
}

Partition Partition::top(std::vector<std::string> universe) {
  std::vector<size_t> ids(universe.size(), 0);
  return Partition(std::move(universe), std::move(ids));
}

Partition Partition::from_blocks(
    std::vector<std::string> universe,
    const std::vector<std::vector<std::string>>& blocks) {
  std::unordered_map<std::string, size_t> position;
  for (size_t i = 0; i < universe.size(); ++i) position[universe[i]] = i;
  std::vector<size_t> block_of(universe.size(), SIZE_MAX);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw std::invalid_argument("partition blocks must be nonempty");
    }
    for (const std::string& label : blocks[b]) {
      auto it = position.find(label);
      if (it == position.end()) {
        throw std::invalid_argument("label " + label + " not in universe");
      }
      if (block_of[it->second] != SIZE_MAX) {
        throw std::invalid_argument("label " + label + " appears twice");
      }
      block_of[it->second] = b;
    }
  }
  for (size_t i = 0; i < block_of.size(); ++i) {
    if (block_of[i] == SIZE_MAX) {
      throw std::invalid_argument("label " + universe[i] +
                                  " not covered by any block");
    }
  }
  return Partition(std::move(universe), std::move(block_of));
}

Partition Partition::parse(std::string_view text,
                           const std::vector<std::string>& universe) {
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> current;
  std::string token;
  auto trim = [](const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string{};
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  auto flush_token = [&](size_t at) {
    std::string t = trim(token);
    if (t.empty()) throw ParseError("empty element in partition text", at);
    current.push_back(std::move(t));
    token.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',') {
      flush_token(i);
    } else if (c == '|') {
      flush_token(i);
      blocks.push_back(std::move(current));
      current.clear();
    } else {
      token += c;
    }
  }
  flush_token(text.size());
  blocks.push_back(std::move(current));
  return from_blocks(universe, blocks);
}

std::vector<std::vector<std::string>> Partition::blocks() const {
  std::vector<std::vector<std::string>> out(block_count_);
  for (size_t i = 0; i < universe_.size(); ++i) {
    out[block_of_[i]].push_back(universe_[i]);
  }
  return out;
}

std::string Partition::str() const {
  std::string out;
  const auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b > 0) out += "|";
    for (size_t i = 0; i < bs[b].size(); ++i) {
      if (i > 0) out += ",";
      out += bs[b][i];
    }
  }
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  const size_t n = p.size();
  std::vector<size_t> ids(n);
  std::map<std::pair<size_t, size_t>, size_t> pair_ids;
  for (size_t i = 0; i < n; ++i) {
    auto key = std::make_pair(p.rgs()[i], q.rgs()[i]);
    auto [it, fresh] = pair_ids.emplace(key, pair_ids.size());
    (void)fresh;
    ids[i] = it->second;
  }
  return Partition(p.universe(), std::move(ids));
}

Partition join(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  const size_t n = p.size();
  Dsu dsu(n);
  std::unordered_map<size_t, size_t> first_p, first_q;
  for (size_t i = 0; i < n; ++i) {
    auto [pit, pfresh] = first_p.emplace(p.rgs()[i], i);
    if (!pfresh) dsu.unite(i, pit->second);
    auto [qit, qfresh] = first_q.emplace(q.rgs()[i], i);
    if (!qfresh) dsu.unite(i, qit->second);
  }
  std::vector<size_t> ids(n);
  for (size_t i = 0; i < n; ++i) ids[i] = dsu.find(i);
  return Partition(p.universe(), std::move(ids));
}

bool leq(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  // p ≤ q iff each p-block maps into a single q-block.
  std::unordered_map<size_t, size_t> image;
  for (size_t i = 0; i < p.size(); ++i) {
    auto [it, fresh] = image.emplace(p.rgs()[i], q.rgs()[i]);
    if (!fresh && it->second != q.rgs()[i]) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(
    const std::vector<std::string>& universe, size_t cap) {
  if (universe.empty()) {
    throw std::invalid_argument("cannot enumerate partitions of an empty set");
  }
  if (universe.size() > cap) {
    throw BudgetError("universe size " + std::to_string(universe.size()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  }
  const size_t n = universe.size();
  std::vector<Partition> out;
  std::vector<size_t> rgs(n, 0);
  // Lexicographic restricted-growth enumeration: rgs[i] <= max(prefix) + 1.
  while (true) {
    out.emplace_back(universe, rgs);
    bool advanced = false;
    size_t i = n;
    while (i-- > 1) {
      size_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), size_t{0});
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

Partition restrict_to(const Partition& p,
                      const std::vector<std::string>& sub) {
  if (sub.empty()) {
    throw std::invalid_argument("restriction target must be nonempty");
  }
  std::set<std::string> wanted(sub.begin(), sub.end());
  if (wanted.size() != sub.size()) {
    throw std::invalid_argument("restriction target has duplicate labels");
  }
  std::vector<std::string> kept;
  std::vector<size_t> ids;
  for (size_t i = 0; i < p.size(); ++i) {
    if (wanted.contains(p.universe()[i])) {
      kept.push_back(p.universe()[i]);
      ids.push_back(p.rgs()[i]);
    }
  }
  if (kept.size() != wanted.size()) {
    throw std::invalid_argument("restriction target is not a subset");
  }
  return Partition(std::move(kept), std::move(ids));
}

IdealSplit::IdealSplit(Partition alpha) : alpha_(std::move(alpha)) {
  if (alpha_.block_count() != 2) {
    throw std::invalid_argument("ideal split needs a two-block partition");
  }
  for (size_t i = 0; i < alpha_.size(); ++i) {
    (alpha_.rgs()[i] == 0 ? part_a_ : part_b_).push_back(alpha_.universe()[i]);
  }
}

std::pair<Partition, Partition> IdealSplit::forward(
    const Partition& beta) const {
  if (!leq(beta, alpha_)) {
    throw std::invalid_argument("partition lies outside the principal ideal");
  }
  return {restrict_to(beta, part_a_), restrict_to(beta, part_b_)};
}

Partition IdealSplit::inverse(const Partition& pa, const Partition& pb) const {
  if (pa.universe() != part_a_ || pb.universe() != part_b_) {
    throw std::invalid_argument("factor universes do not match the split");
  }
  auto blocks = pa.blocks();
  auto more = pb.blocks();
  blocks.insert(blocks.end(), more.begin(), more.end());
  return Partition::from_blocks(alpha_.universe(), blocks);
}

IdealCheckReport verify_ideal_split(size_t universe_size, size_t split,
                                    size_t cap) {
  if (split == 0 || split >= universe_size) {
    throw std::invalid_argument("split must cut the universe in two");
  }
  const auto universe = default_labels(universe_size);
  std::vector<size_t> two(universe_size, 1);
  std::fill(two.begin(), two.begin() + static_cast<long>(split), size_t{0});
  IdealSplit is(Partition(universe, two));

  IdealCheckReport report;
  report.universe_size = universe_size;
  report.split = split;

  std::vector<Partition> ideal;
  for (const Partition& beta : enumerate_partitions(universe, cap)) {
    if (leq(beta, is.alpha())) ideal.push_back(beta);
  }
  const auto part_a = enumerate_partitions(is.part_a(), cap);
  const auto part_b = enumerate_partitions(is.part_b(), cap);
  report.ideal_size = ideal.size();
  report.product_size = part_a.size() * part_b.size();

  std::set<std::pair<std::string, std::string>> images;
  report.inverse_ok = true;
  for (const Partition& beta : ideal) {
    auto [pa, pb] = is.forward(beta);
    images.emplace(pa.str(), pb.str());
    if (is.inverse(pa, pb) != beta) report.inverse_ok = false;
  }
  report.bijective =
      images.size() == ideal.size() && ideal.size() == report.product_size;

  report.preserves_join = true;
  report.preserves_meet = true;
  for (const Partition& b1 : ideal) {
    auto f1 = is.forward(b1);
    for (const Partition& b2 : ideal) {
      auto f2 = is.forward(b2);
      auto fj = is.forward(join(b1, b2));
      if (fj.first != join(f1.first, f2.first) ||
          fj.second != join(f1.second, f2.second)) {
        report.preserves_join = false;
      }
      auto fm = is.forward(meet(b1, b2));
      if (fm.first != meet(f1.first, f2.first) ||
          fm.second != meet(f1.second, f2.second)) {
        report.preserves_meet = false;
      }
    }
  }
  return report;
}

std::vector<std::string> default_labels(size_t n) {
  if (n > 26) {
    throw std::invalid_argument("at most 26 single-letter labels available");
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.emplace_back(1, static_cast<char>('a' + i));
  }
  return out;
}

}  // namespace oclat
