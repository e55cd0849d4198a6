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

#include "oclat/variety_bridge.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace oclat {

AntichainContext::AntichainContext(std::vector<Word> words)
    : words_(std::move(words)) {
  labels_.reserve(words_.size());
  for (const Word& w : words_) {
    labels_.push_back(w.str());
    max_length_ = std::max(max_length_, w.length());
  }
}

AntichainContext AntichainContext::certify(std::vector<Word> words) {
  if (auto v = antichain_violation(words)) {
    throw CertificationError("not an anti-chain: " + v->u.str() +
                             " encounters " + v->v.str());
  }
  if (auto v = hypothesis_violation(words)) {
    if (v->content_mismatch) {
      throw CertificationError("hypothesis fails: con(" + v->u.str() +
                               ") != con(" + v->v.str() + ")");
    }
    std::string xs;
    for (Letter a : v->deleted) xs += a.name();
    throw CertificationError("hypothesis fails: deleting {" + xs +
                             "} separates " + v->u.str() + " and " +
                             v->v.str());
  }
  return AntichainContext(std::move(words));
}

AntichainContext AntichainContext::family(int n) {
  return certify(generate_antichain(n));
}

SearchBounds AntichainContext::default_bounds() const {
  return SearchBounds(max_length_, 10 * words_.size(), 1'000'000);
}

VarietyPresentation variety_of_partition(const Partition& beta,
                                         const AntichainContext& context,
                                         GeneratorMode mode) {
  if (beta.universe() != context.labels()) {
    throw std::invalid_argument(
        "partition universe does not match the anti-chain");
  }
  std::vector<Identity> generators;
  const size_t n = context.size();
  if (mode == GeneratorMode::AllPairs) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (beta.same_block(i, j)) {
          generators.emplace_back(context.words()[i], context.words()[j]);
        }
      }
    }
  } else {
    // One chain of generators per block.
    std::vector<std::vector<size_t>> members(beta.block_count());
    for (size_t i = 0; i < n; ++i) members[beta.rgs()[i]].push_back(i);
    for (const auto& block : members) {
      for (size_t t = 1; t < block.size(); ++t) {
        generators.emplace_back(context.words()[block[t - 1]],
                                context.words()[block[t]]);
      }
    }
  }
  return VarietyPresentation{IdentitySystem(std::move(generators)), beta};
}

Partition phi(const VarietyPresentation& presentation,
              const AntichainContext& context, const SearchBounds& bounds) {
  return Partition(context.labels(),
                   theory_restriction(presentation.system, context.words(),
                                      bounds));
}

bool verify_overcommutative(const VarietyPresentation& presentation) {
  return presentation.system.balanced();
}

SurjectivityReport verify_surjectivity(const AntichainContext& context,
                                       const SearchBounds& bounds) {
  const auto all = enumerate_partitions(context.labels());
  SurjectivityReport report;
  report.total = all.size();
  std::vector<std::optional<Partition>> got(all.size());

#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < all.size(); ++i) {
    got[i] = phi(variety_of_partition(all[i], context), context, bounds);
  }

  for (size_t i = 0; i < all.size(); ++i) {
    if (*got[i] == all[i]) continue;
    SurjectivityReport::Failure failure{all[i], *got[i], {}};
    for (size_t a = 0; a < context.size(); ++a) {
      for (size_t b = a + 1; b < context.size(); ++b) {
        if (all[i].same_block(a, b) != got[i]->same_block(a, b)) {
          failure.mismatched_pairs.emplace_back(a, b);
        }
      }
    }
    report.failures.push_back(std::move(failure));
  }
  return report;
}

AntihomReport verify_antihomomorphism(const AntichainContext& context,
                                      const SearchBounds& bounds) {
  const auto all = enumerate_partitions(context.labels());
  AntihomReport report;
  report.pairs = all.size() * all.size();

  // φ of each single-partition presentation, shared across all pairs.
  std::vector<Partition> phis;
  phis.reserve(all.size());
  for (const Partition& beta : all) {
    phis.push_back(phi(variety_of_partition(beta, context), context, bounds));
  }

  struct PairOutcome {
    std::optional<AntihomReport::Failure> union_failure;
    std::optional<AntihomReport::Failure> meet_failure;
  };
  std::vector<PairOutcome> outcomes(report.pairs);

#pragma omp parallel for schedule(dynamic)
  for (size_t k = 0; k < report.pairs; ++k) {
    const Partition& b1 = all[k / all.size()];
    const Partition& b2 = all[k % all.size()];
    // Meet of varieties: presented by the union system; φ must reverse it
    // to the join of the partitions.
    const IdentitySystem unioned =
        variety_of_partition(b1, context)
            .system.merged_with(variety_of_partition(b2, context).system);
    const Partition via_union =
        phi(VarietyPresentation{unioned, std::nullopt}, context, bounds);
    const Partition expected_join = join(b1, b2);
    if (via_union != expected_join) {
      outcomes[k].union_failure =
          AntihomReport::Failure{b1, b2, "union", expected_join, via_union};
    }
    // Join of varieties: theories intersect; restricted to A this is the
    // meet of the two single-system restrictions.
    const Partition common =
        meet(phis[k / all.size()], phis[k % all.size()]);
    const Partition expected_meet = meet(b1, b2);
    if (common != expected_meet) {
      outcomes[k].meet_failure = AntihomReport::Failure{
          b1, b2, "intersection", expected_meet, common};
    }
  }

  for (auto& outcome : outcomes) {
    if (outcome.union_failure) {
      report.failures.push_back(std::move(*outcome.union_failure));
    }
    if (outcome.meet_failure) {
      report.failures.push_back(std::move(*outcome.meet_failure));
    }
  }
  return report;
}

namespace {

GeneratorEvidence build_evidence(const std::string& variable,
                                 const Partition& beta,
                                 const VarietyPresentation& presentation,
                                 const AntichainContext& context,
                                 const SearchBounds& bounds) {
  GeneratorEvidence ev{variable, beta, false, false, {}};
  ev.overcommutative = verify_overcommutative(presentation);
  ev.phi_roundtrip = phi(presentation, context, bounds) == beta;
  for (const Identity& gen : presentation.system.identities()) {
    DeriveResult res = derive(gen.lhs, gen.rhs, presentation.system, bounds);
    if (res.found() && check_certificate(*res.certificate,
                                         presentation.system)) {
      ev.certificates.push_back(std::move(*res.certificate));
    } else {
      ev.phi_roundtrip = false;  // generator failed to replay
    }
  }
  return ev;
}

}  // namespace

FalsifyOutcome falsify_in_oc(const LatticeIdentity& identity,
                             const FalsifyOptions& options) {
  if (is_trivial(identity)) {
    throw TrivialIdentityError("identity " + identity_str(identity) +
                               " holds in every lattice");
  }
  if (options.max_n < 1) {
    throw std::invalid_argument("max_n must be at least 1");
  }

  const auto t0 = std::chrono::steady_clock::now();
  FalsifyOutcome outcome;
  outcome.max_n = options.max_n;
  const LatticeIdentity dual_id = dual(identity);

  for (int n = 1; n <= options.max_n; ++n) {
    std::optional<AntichainContext> certified;
    try {
      certified = AntichainContext::family(n);
    } catch (const CertificationError& e) {
      // Happens at n = 1: yx = xi(xy) under the letter swap, so the family
      // member is not an anti-chain there and carries no witness value.
      outcome.scanned.emplace_back(n,
                                   std::string("certification failed: ") +
                                       e.what());
      continue;
    }
    const AntichainContext& context = *certified;
    const SearchBounds bounds =
        options.bounds ? *options.bounds : context.default_bounds();
    FiniteLattice lattice = FiniteLattice::partition_lattice(context.labels());

    IdentityCheckResult check;
    try {
      check = check_identity(dual_id, lattice, options.budget);
    } catch (const BudgetError&) {
      outcome.scanned.emplace_back(n, "budget exceeded, skipped");
      continue;
    }
    if (check.holds) {
      outcome.scanned.emplace_back(n, "no counterexample");
      continue;
    }

    WitnessReport report;
    report.identity_text = identity_str(identity);
    report.dual_text = identity_str(dual_id);
    report.n = n;
    report.antichain = context.words();
    for (const auto& [var, element] : check.counterexample) {
      report.assignment.emplace(var, lattice.partitions()[element]);
    }
    report.lhs_value = lattice.partitions()[check.lhs_value];
    report.rhs_value = lattice.partitions()[check.rhs_value];
    for (const auto& [var, beta] : report.assignment) {
      VarietyPresentation presentation =
          variety_of_partition(beta, context, options.generator_mode);
      report.evidence.push_back(
          build_evidence(var, beta, presentation, context, bounds));
      report.presentations.emplace(var, std::move(presentation));
    }
    report.level = VerificationLevel::GeneratorLevel;
    if (options.run_antihom &&
        verify_antihomomorphism(context, bounds).pass()) {
      report.level = VerificationLevel::Depth1AntiHom;
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    outcome.scanned.emplace_back(n, "counterexample found");
    outcome.witness = std::move(report);
    return outcome;
  }
  return outcome;
}

}  // namespace oclat
