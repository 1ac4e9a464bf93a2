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

#include "turnstile/requirements.hpp"

#include <set>
#include <stdexcept>

namespace turnstile {

std::string_view to_string(Mood m) noexcept {
  return m == Mood::Indicative ? "indicative" : "optative";
}

std::string_view kind_name(const Requirement& r) noexcept {
  if (std::holds_alternative<StateInvariant>(r.body)) return "state-invariant";
  if (std::holds_alternative<EventGuard>(r.body)) return "event-guard";
  if (std::holds_alternative<TimedResponse>(r.body)) return "timed-response";
  return "enabledness";
}

bool opt1_invariant(const WorldState& s) {
  return s.enters.count() <= s.coins.count();
}

bool ind2_guard(const TurnstileView& t) {
  if (t.unlocks.is_empty()) {
    return false;
  }
  // Emptiness conjunct first: the accessor below is only reached when guarded.
  return t.locks.is_empty() || t.unlocks.last() > t.locks.last();
}

bool ind2_guard(const WorldState& s) { return ind2_guard(turnstile_view(s)); }

namespace {

bool opt7_trigger_on_view(const TurnstileView& pre, const TraceEvent& e,
                          const TurnstileView& post) {
  if (e.kind != EventKind::Push) {
    return false;
  }
  // "unlocked before the push" totalized over empty histories via lock_status.
  return lock_status(pre) == LockStatus::Unlocked &&
         post.pushes.count() == post.coins.count();
}

/// A visitor can complete entry when a payment is outstanding and either the
/// barrier is unlocked or a push is already past the point of no return (the
/// mandated lock after the decisive push must not strand that visitor).
bool enter_guard(const WorldState& s) {
  if (s.enters.count() >= s.coins.count()) {
    return false;
  }
  return lock_status(s) == LockStatus::Unlocked ||
         s.pushes.count() > s.enters.count();
}

}  // namespace

bool opt7_trigger(const WorldState& pre, const TraceEvent& e,
                  const WorldState& post) {
  return opt7_trigger_on_view(turnstile_view(pre), e, turnstile_view(post));
}

bool opt7_response(const TimedResponseSpec& spec, Timestamp trigger_at,
                   Timestamp response_at) {
  return response_at > trigger_at &&
         response_at - trigger_at < spec.strict_deadline_ms;
}

StatePredicate guard_of(EventKind kind) {
  switch (kind) {
    case EventKind::Push:
      return [](const WorldState& s) { return ind2_guard(turnstile_view(s)); };
    case EventKind::Enter:
      return [](const WorldState& s) { return enter_guard(s); };
    default:
      return [](const WorldState&) { return true; };
  }
}

bool opt2_enabledness(const WorldState& s) {
  if (s.coins.count() <= s.enters.count()) {
    return true;  // no outstanding payment, nothing to demand
  }
  return guard_of(EventKind::Enter)(s);
}

std::vector<Requirement> standard_registry() {
  std::vector<Requirement> registry;

  registry.push_back(Requirement{
      "OPT1",
      Mood::Optative,
      "Entries should never exceed payments",
      "enters.count <= coins.count",
      StateInvariant{[](const WorldState& s) { return opt1_invariant(s); }}});

  registry.push_back(Requirement{
      "IND2",
      Mood::Indicative,
      "It is impossible to use locked turnstile",
      "not unlocks.is_empty and "
      "((not locks.is_empty) implies (unlocks.last > locks.last))",
      EventGuard{EventKind::Push,
                 [](const WorldState& s) { return ind2_guard(s); }}});

  registry.push_back(Requirement{
      "OPT7",
      Mood::Optative,
      "The machine locks the turnstile timely",
      "(unlocked(pre) and post.pushes.count = post.coins.count) implies "
      "(locks.last > pushes.last and locks.last - pushes.last < 760)",
      TimedResponse{TimedResponseSpec{
          [](const WorldState& pre, const TraceEvent& e, const WorldState& post) {
            return opt7_trigger(pre, e, post);
          },
          EventKind::Lock, kLockDeadlineMs}}});

  registry.push_back(Requirement{
      "OPT2",
      Mood::Optative,
      "The turnstile let people who pay enter",
      "coins.count > enters.count implies guard(enter)",
      Enabledness{EventKind::Enter,
                  [](const WorldState& s) { return opt2_enabledness(s); }}});

  return registry;
}

void validate_registry(const std::vector<Requirement>& registry) {
  std::set<std::string> labels;
  for (const Requirement& r : registry) {
    if (r.label.empty()) {
      throw std::invalid_argument("requirement with empty label");
    }
    if (!labels.insert(r.label).second) {
      throw std::invalid_argument("duplicate requirement label: " + r.label);
    }
    if (r.label.starts_with("OPT") && r.mood != Mood::Optative) {
      throw std::invalid_argument("OPT-labeled requirement " + r.label +
                                  " must be optative");
    }
    if (r.label.starts_with("IND") && r.mood != Mood::Indicative) {
      throw std::invalid_argument("IND-labeled requirement " + r.label +
                                  " must be indicative");
    }
    if (const auto* timed = std::get_if<TimedResponse>(&r.body)) {
      if (timed->spec.strict_deadline_ms <= 0) {
        throw std::invalid_argument("requirement " + r.label +
                                    " has a non-positive deadline");
      }
    }
  }
}

}  // namespace turnstile
