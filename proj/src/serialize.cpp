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

#include "oclat/serialize.hpp"

namespace oclat {

Json to_json(const Substitution& xi) {
  Json out = Json::object();
  for (const auto& [letter, image] : xi.images()) {
    out[std::string(1, letter.name())] = image.str();
  }
  return out;
}

Json to_json(const Certificate& cert) {
  Json words = Json::array();
  for (const Word& w : cert.words) words.push_back(w.str());
  Json steps = Json::array();
  for (const DerivationStep& step : cert.steps) {
    steps.push_back(Json{
        {"a", step.context_left.str()},
        {"b", step.context_right.str()},
        {"identity_index", step.identity_index},
        {"direction",
         step.direction == StepDirection::Forward ? "forward" : "backward"},
        {"xi", to_json(step.xi)},
    });
  }
  return Json{{"words", words}, {"steps", steps}};
}

Json to_json(const SurjectivityReport& report) {
  Json failures = Json::array();
  for (const auto& failure : report.failures) {
    Json pairs = Json::array();
    for (auto [a, b] : failure.mismatched_pairs) {
      pairs.push_back(Json::array({a, b}));
    }
    failures.push_back(Json{{"beta", failure.beta.str()},
                            {"phi", failure.got.str()},
                            {"mismatched_pairs", pairs}});
  }
  return Json{
      {"partitions", report.total},
      {"failures", failures},
      {"pass", report.pass()},
  };
}

Json to_json(const AntihomReport& report) {
  Json failures = Json::array();
  for (const auto& failure : report.failures) {
    failures.push_back(Json{{"beta1", failure.beta1.str()},
                            {"beta2", failure.beta2.str()},
                            {"check", failure.check},
                            {"expected", failure.expected.str()},
                            {"got", failure.got.str()}});
  }
  return Json{
      {"pairs", report.pairs},
      {"failures", failures},
      {"pass", report.pass()},
  };
}

Json to_json(const IdealCheckReport& report) {
  return Json{
      {"universe_size", report.universe_size},
      {"split", report.split},
      {"ideal_size", report.ideal_size},
      {"product_size", report.product_size},
      {"bijective", report.bijective},
      {"preserves_join", report.preserves_join},
      {"preserves_meet", report.preserves_meet},
      {"inverse_ok", report.inverse_ok},
      {"pass", report.pass()},
  };
}

Json to_json(const WitnessReport& report, bool include_timings) {
  Json antichain = Json::array();
  for (const Word& w : report.antichain) antichain.push_back(w.str());

  Json assignment = Json::object();
  for (const auto& [var, beta] : report.assignment) {
    assignment[var] = beta.str();
  }

  Json presentations = Json::object();
  for (const auto& [var, presentation] : report.presentations) {
    Json ids = Json::array();
    for (const Identity& id : presentation.system.identities()) {
      ids.push_back(id.str());
    }
    presentations[var] = ids;
  }

  Json evidence = Json::array();
  for (const GeneratorEvidence& ev : report.evidence) {
    Json certs = Json::array();
    for (const Certificate& cert : ev.certificates) {
      certs.push_back(to_json(cert));
    }
    evidence.push_back(Json{{"variable", ev.variable},
                            {"partition", ev.beta.str()},
                            {"phi_roundtrip", ev.phi_roundtrip},
                            {"overcommutative", ev.overcommutative},
                            {"certificates", certs}});
  }

  Json out{
      {"identity", report.identity_text},
      {"dual", report.dual_text},
      {"n", report.n},
      {"antichain", antichain},
      {"assignment", assignment},
      {"presentations", presentations},
      {"lhs_value", report.lhs_value ? report.lhs_value->str() : ""},
      {"rhs_value", report.rhs_value ? report.rhs_value->str() : ""},
      {"evidence", evidence},
      {"verification_level",
       report.level == VerificationLevel::Depth1AntiHom ? "depth1-antihom"
                                                        : "generator-level"},
  };
  if (include_timings) {
    out["diagnostics"] = Json{{"wall_ms", report.wall_ms}};
  }
  return out;
}

}  // namespace oclat
