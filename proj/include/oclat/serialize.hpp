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

// Structured (JSON) renderings of certificates, reports and witnesses.
// Key order is fixed so that structured output is byte-stable for fixed
// inputs.

#ifndef OCLAT_SERIALIZE_HPP_
#define OCLAT_SERIALIZE_HPP_

#include <json.hpp>

#include "oclat/deduction.hpp"
#include "oclat/partitions.hpp"
#include "oclat/variety_bridge.hpp"

namespace oclat {

using Json = nlohmann::ordered_json;

Json to_json(const Substitution& xi);
Json to_json(const Certificate& cert);
Json to_json(const SurjectivityReport& report);
Json to_json(const AntihomReport& report);
Json to_json(const IdealCheckReport& report);
Json to_json(const WitnessReport& report, bool include_timings);

}  // namespace oclat

#endif  // OCLAT_SERIALIZE_HPP_
