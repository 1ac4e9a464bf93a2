/*
 * Copyright (c) 2026, the turnstile authors
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

#ifndef TURNSTILE_REPORT_IO_HPP_
#define TURNSTILE_REPORT_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "turnstile/checker.hpp"
#include "turnstile/explorer.hpp"
#include "turnstile/requirements.hpp"

namespace turnstile {

// All renderings are byte-deterministic for identical inputs: machine output
// is nlohmann::ordered_json with fixed insertion order, human output is plain
// assembled text.

nlohmann::ordered_json state_to_json(const WorldState& s);
nlohmann::ordered_json trace_to_json(const Trace& trace);

nlohmann::ordered_json check_report_to_json(const CheckReport& report);
std::string check_report_to_text(const CheckReport& report);

nlohmann::ordered_json exploration_report_to_json(
    const ExplorationReport& report, const ExplorationBounds& bounds,
    ExploreMode mode);
std::string exploration_report_to_text(const ExplorationReport& report,
                                       const ExplorationBounds& bounds,
                                       ExploreMode mode);

/// The requirements traceability document: label, mood, kind, statement
/// text, formal predicate rendering and the checks that assess it.
nlohmann::ordered_json registry_to_json(const std::vector<Requirement>& registry);
std::string registry_to_text(const std::vector<Requirement>& registry);

}  // namespace turnstile

#endif  // TURNSTILE_REPORT_IO_HPP_
