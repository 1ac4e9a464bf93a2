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

#include "turnstile/checker.hpp"

#include <algorithm>

namespace turnstile {

std::string_view to_string(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::Satisfied:
      return "satisfied";
    case VerdictStatus::Violated:
      return "violated";
    case VerdictStatus::Pending:
      return "pending";
    case VerdictStatus::NotAssessed:
      return "not-assessed";
  }
  return "unknown";
}

bool any_violation(const CheckReport& report) noexcept {
  return std::any_of(report.verdicts.begin(), report.verdicts.end(),
                     [](const RequirementVerdict& v) {
                       return v.status == VerdictStatus::Violated;
                     });
}

namespace {

std::string describe(const TraceEvent& e) {
  return std::string(to_string(e.kind)) + "@" + std::to_string(e.at);
}

struct Slot {
  const Requirement* req;
  std::optional<std::size_t> violated_at;
  std::string detail;
  std::vector<Obligation> open;  // timed-response slots only
};

void mark_violation(Slot& slot, std::size_t position, std::string detail) {
  // First violation wins; later evaluations never improve on it.
  if (!slot.violated_at) {
    slot.violated_at = position;
    slot.detail = std::move(detail);
  }
}

}  // namespace

CheckReport check_trace(const Trace& trace,
                        const std::vector<Requirement>& registry) {
  validate_trace(trace);

  const std::size_t end_position = trace.events.size();
  std::vector<Slot> slots;
  slots.reserve(registry.size());
  for (const Requirement& r : registry) {
    slots.push_back(Slot{&r, std::nullopt, {}, {}});
  }

  WorldState state = initial_state();
  bool admissible = true;
  std::optional<std::size_t> inadmissible_position;

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];

    // Guards are preconditions: evaluated on the pre-state. An indicative
    // failure means the event could not have happened in the world; the
    // replay stops there and the event contributes nothing else.
    bool impossible = false;
    for (Slot& slot : slots) {
      const auto* guard = std::get_if<EventGuard>(&slot.req->body);
      if (guard == nullptr || guard->event != e.kind) {
        continue;
      }
      if (guard->admits(state)) {
        continue;
      }
      mark_violation(slot, i,
                     "guard rejects " + describe(e) + " on its pre-state");
      if (slot.req->mood == Mood::Indicative) {
        impossible = true;
      }
    }
    if (impossible) {
      admissible = false;
      inadmissible_position = i;
      break;
    }

    // Open obligations see the event before it is applied: deadline
    // crossings first (strict bound), then discharges.
    for (Slot& slot : slots) {
      if (!std::holds_alternative<TimedResponse>(slot.req->body)) {
        continue;
      }
      for (auto it = slot.open.begin(); it != slot.open.end();) {
        if (e.at >= it->strict_deadline) {
          mark_violation(slot, i,
                         "obligation opened at t=" +
                             std::to_string(it->opened_at) +
                             " still open at " + describe(e) +
                             " (strict deadline " +
                             std::to_string(it->strict_deadline) + ")");
          it = slot.open.erase(it);
        } else if (e.kind == it->response_kind) {
          it = slot.open.erase(it);  // discharged strictly inside the window
        } else {
          ++it;
        }
      }
    }

    const WorldState pre = state;
    state = apply_event(state, e);

    for (Slot& slot : slots) {
      const auto* invariant = std::get_if<StateInvariant>(&slot.req->body);
      if (invariant != nullptr && !invariant->holds(state)) {
        mark_violation(slot, i, "invariant false after " + describe(e));
      }
    }

    for (Slot& slot : slots) {
      const auto* timed = std::get_if<TimedResponse>(&slot.req->body);
      if (timed != nullptr && timed->spec.trigger(pre, e, state)) {
        slot.open.push_back(Obligation{
            slot.req->label, e.at, e.at + timed->spec.strict_deadline_ms,
            timed->spec.response_kind});
      }
    }
  }

  if (admissible) {
    // Enabledness is assessed once the machine has had its say: on the final
    // observed state.
    for (Slot& slot : slots) {
      const auto* enabled = std::get_if<Enabledness>(&slot.req->body);
      if (enabled != nullptr && !enabled->holds(state)) {
        mark_violation(slot, end_position,
                       "required enabledness of " +
                           std::string(to_string(enabled->target)) +
                           " false at end of observation");
      }
    }
    if (trace.closed_at) {
      for (Slot& slot : slots) {
        if (!std::holds_alternative<TimedResponse>(slot.req->body)) {
          continue;
        }
        for (auto it = slot.open.begin(); it != slot.open.end();) {
          if (*trace.closed_at >= it->strict_deadline) {
            mark_violation(slot, end_position,
                           "obligation opened at t=" +
                               std::to_string(it->opened_at) +
                               " undischarged at close " +
                               std::to_string(*trace.closed_at) +
                               " (strict deadline " +
                               std::to_string(it->strict_deadline) + ")");
            it = slot.open.erase(it);
          } else {
            ++it;
          }
        }
      }
    }
  }

  CheckReport report;
  report.admissible = admissible;
  report.inadmissible_position = inadmissible_position;
  report.final_state = state;
  for (Slot& slot : slots) {
    RequirementVerdict verdict;
    verdict.label = slot.req->label;
    verdict.text = slot.req->text;
    if (slot.violated_at) {
      verdict.status = VerdictStatus::Violated;
      verdict.position = slot.violated_at;
      verdict.detail = std::move(slot.detail);
    } else if (!admissible && slot.req->mood == Mood::Optative) {
      verdict.status = VerdictStatus::NotAssessed;
      verdict.detail = "trace inadmissible at position " +
                       std::to_string(*inadmissible_position) +
                       "; the machine is not indicted";
    } else if (!slot.open.empty()) {
      verdict.status = VerdictStatus::Pending;
      verdict.open_obligations = std::move(slot.open);
      verdict.detail = "observation ended before the deadline";
    }
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace turnstile
