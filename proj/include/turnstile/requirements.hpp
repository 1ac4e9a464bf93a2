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

#ifndef TURNSTILE_REQUIREMENTS_HPP_
#define TURNSTILE_REQUIREMENTS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "turnstile/world.hpp"

namespace turnstile {

/// Grammatical mood of a requirement. Indicative statements are laws of the
/// environment that hold regardless of what the machine does; their failure
/// indicts the trace, not the machine. Optative statements are properties the
/// machine must bring about.
enum class Mood { Indicative, Optative };

std::string_view to_string(Mood m) noexcept;

using StatePredicate = std::function<bool(const WorldState&)>;
using TransitionPredicate = std::function<bool(
    const WorldState& pre, const TraceEvent& event, const WorldState& post)>;

/// A timed-response duty: whenever trigger fires on a transition, an event of
/// response_kind must follow strictly later and strictly within the deadline.
struct TimedResponseSpec {
  TransitionPredicate trigger;
  EventKind response_kind;
  std::int64_t strict_deadline_ms;  // > 0
};

/// Holds in every observed state.
struct StateInvariant {
  StatePredicate holds;
};

/// Precondition of events of one kind, evaluated on the pre-state of each
/// matching event.
struct EventGuard {
  EventKind event;
  StatePredicate admits;
};

/// Timed obligation opened by a trigger transition.
struct TimedResponse {
  TimedResponseSpec spec;
};

/// The target event must not be left disabled where the predicate demands
/// it. Assessed on the final observed state: transient disabling while the
/// machine is still reacting is not a violation.
struct Enabledness {
  EventKind target;
  StatePredicate holds;
};

using RequirementBody =
    std::variant<StateInvariant, EventGuard, TimedResponse, Enabledness>;

/// A labeled, mooded, evaluable requirement carrying its natural-language
/// statement for traceability. Predicates are closed values: evaluating one
/// never mutates anything, so registries are freely shareable.
struct Requirement {
  std::string label;
  Mood mood;
  std::string text;    // the statement being traced
  std::string formal;  // rendering of the predicate, for reports
  RequirementBody body;
};

/// state-invariant | event-guard | timed-response | enabledness
std::string_view kind_name(const Requirement& r) noexcept;

/// Strict deadline for locking after the decisive push, in milliseconds.
inline constexpr std::int64_t kLockDeadlineMs = 760;

/// OPT1: entries never exceed payments.
bool opt1_invariant(const WorldState& s);

/// IND2: a push is only possible once unlocked, with no lock since. Built on
/// the turnstile view — barrier-scoped, cannot read `enters`.
bool ind2_guard(const TurnstileView& t);
bool ind2_guard(const WorldState& s);

/// OPT7 antecedent: a push, from an unlocked turnstile, that equalizes the
/// push and coin counts.
bool opt7_trigger(const WorldState& pre, const TraceEvent& e,
                  const WorldState& post);

/// OPT7 consequent: the lock arrives strictly after the push and strictly
/// within the deadline.
bool opt7_response(const TimedResponseSpec& spec, Timestamp trigger_at,
                   Timestamp response_at);

/// The registered precondition of an event kind as a first-class value.
/// Push carries IND2; Enter carries the completion "payment outstanding and
/// (unlocked or a push is already past the point of no return)"; every other
/// kind gets the constant-true predicate.
StatePredicate guard_of(EventKind kind);

/// OPT2: an outstanding payment implies the enter event is not prevented.
bool opt2_enabledness(const WorldState& s);

/// OPT1, IND2, OPT7 and OPT2 with their statement texts.
std::vector<Requirement> standard_registry();

/// Enforces unique labels, OPT*/IND* mood agreement and positive deadlines.
/// Throws std::invalid_argument on violation.
void validate_registry(const std::vector<Requirement>& registry);

}  // namespace turnstile

#endif  // TURNSTILE_REQUIREMENTS_HPP_
