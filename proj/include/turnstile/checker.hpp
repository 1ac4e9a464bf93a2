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

#ifndef TURNSTILE_CHECKER_HPP_
#define TURNSTILE_CHECKER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turnstile/requirements.hpp"
#include "turnstile/trace.hpp"

namespace turnstile {

enum class VerdictStatus { Satisfied, Violated, Pending, NotAssessed };

std::string_view to_string(VerdictStatus s) noexcept;

/// A pending timed-response duty: opened by a trigger event, discharged by a
/// response_kind event strictly inside [opened_at+1, strict_deadline-1],
/// violated by any event or close marker at or past strict_deadline.
struct Obligation {
  std::string requirement_label;
  Timestamp opened_at;
  Timestamp strict_deadline;  // opened_at + deadline_ms
  EventKind response_kind;

  bool operator==(const Obligation&) const = default;
};

/// Outcome for one requirement over one trace.
///
/// position is the index of the first violating event; the index one past the
/// last event stands for the end-of-observation marker. detail and text are
/// diagnostics and are excluded from equality: two reports are equal when
/// they agree verdict-for-verdict on substance.
struct RequirementVerdict {
  std::string label;
  std::string text;
  VerdictStatus status = VerdictStatus::Satisfied;
  std::optional<std::size_t> position;
  std::string detail;
  std::vector<Obligation> open_obligations;  // populated for Pending only

  bool operator==(const RequirementVerdict& other) const {
    return label == other.label && status == other.status &&
           position == other.position &&
           open_obligations == other.open_obligations;
  }
};

struct CheckReport {
  /// False iff some indicative guard failed: the trace is impossible in the
  /// world and cannot indict the machine. Optative requirements without a
  /// violation recorded up to that point are marked NotAssessed.
  bool admissible = true;
  std::optional<std::size_t> inadmissible_position;
  std::vector<RequirementVerdict> verdicts;  // registry order
  WorldState final_state;

  bool operator==(const CheckReport&) const = default;
};

bool any_violation(const CheckReport& report) noexcept;

/// Replays the trace against the registry. Per event, in order: event guards
/// on the pre-state (an indicative failure stops the replay at that event),
/// then deadline crossings and discharges of open obligations, then the event
/// is applied, state invariants are evaluated on the post-state, and timed
/// triggers may open new obligations. At the end, enabledness requirements
/// are evaluated on the final observed state, and open obligations become
/// Violated when closed_at reaches their deadline, Pending otherwise.
///
/// Pure: never mutates the trace or the registry, and identical inputs yield
/// identical reports. Throws IllFormedTrace on ordering violations.
CheckReport check_trace(const Trace& trace,
                        const std::vector<Requirement>& registry);

/// The same verdicts computed the deliberately naive way: every prefix state
/// is rebuilt from scratch, every predicate is re-evaluated on every prefix,
/// and each obligation is resolved by scanning the whole suffix of its
/// trigger. Shares no incremental bookkeeping with check_trace, so the two
/// act as independent checks on each other.
CheckReport oracle_check(const Trace& trace,
                         const std::vector<Requirement>& registry);

}  // namespace turnstile

#endif  // TURNSTILE_CHECKER_HPP_
