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

// Brute-force reference for check_trace: no replay loop, no shared
// bookkeeping. Every prefix state is rebuilt from scratch and every
// obligation is resolved by scanning its full suffix.

#include "turnstile/checker.hpp"

namespace turnstile {

namespace {

// State after the first `prefix_len` events, rebuilt from scratch.
WorldState state_after(const Trace& trace, std::size_t prefix_len) {
  WorldState s = initial_state();
  for (std::size_t i = 0; i < prefix_len; ++i) {
    s = apply_event(s, trace.events[i]);
  }
  return s;
}

std::string describe(const TraceEvent& e) {
  return std::string(to_string(e.kind)) + "@" + std::to_string(e.at);
}

}  // namespace

CheckReport oracle_check(const Trace& trace,
                         const std::vector<Requirement>& registry) {
  validate_trace(trace);

  const std::size_t n = trace.events.size();

  // Position of the first event rejected by an indicative guard; n if none.
  std::size_t cut = n;
  for (std::size_t i = 0; i < n && cut == n; ++i) {
    for (const Requirement& r : registry) {
      if (r.mood != Mood::Indicative) {
        continue;
      }
      const auto* guard = std::get_if<EventGuard>(&r.body);
      if (guard != nullptr && guard->event == trace.events[i].kind &&
          !guard->admits(state_after(trace, i))) {
        cut = i;
        break;
      }
    }
  }
  const bool admissible = (cut == n);

  CheckReport report;
  report.admissible = admissible;
  if (!admissible) {
    report.inadmissible_position = cut;
  }
  report.final_state = state_after(trace, cut);

  for (const Requirement& r : registry) {
    RequirementVerdict verdict;
    verdict.label = r.label;
    verdict.text = r.text;
    std::optional<std::size_t> violated_at;
    std::string detail;
    std::vector<Obligation> open;

    if (const auto* guard = std::get_if<EventGuard>(&r.body)) {
      // Guards are evaluated at every event up to and including the cut.
      const std::size_t limit = std::min(cut + 1, n);
      for (std::size_t i = 0; i < limit; ++i) {
        if (trace.events[i].kind == guard->event &&
            !guard->admits(state_after(trace, i))) {
          violated_at = i;
          detail = "guard rejects " + describe(trace.events[i]) +
                   " on its pre-state";
          break;
        }
      }
    } else if (const auto* invariant = std::get_if<StateInvariant>(&r.body)) {
      for (std::size_t i = 0; i < cut; ++i) {
        if (!invariant->holds(state_after(trace, i + 1))) {
          violated_at = i;
          detail = "invariant false after " + describe(trace.events[i]);
          break;
        }
      }
    } else if (const auto* enabled = std::get_if<Enabledness>(&r.body)) {
      if (admissible && !enabled->holds(state_after(trace, n))) {
        violated_at = n;
        detail = "required enabledness of " +
                 std::string(to_string(enabled->target)) +
                 " false at end of observation";
      }
    } else if (const auto* timed = std::get_if<TimedResponse>(&r.body)) {
      for (std::size_t i = 0; i < cut; ++i) {
        if (!timed->spec.trigger(state_after(trace, i), trace.events[i],
                                 state_after(trace, i + 1))) {
          continue;
        }
        const Timestamp opened = trace.events[i].at;
        const Timestamp deadline = opened + timed->spec.strict_deadline_ms;
        bool resolved = false;
        for (std::size_t j = i + 1; j < cut && !resolved; ++j) {
          const TraceEvent& later = trace.events[j];
          if (later.at >= deadline) {
            if (!violated_at || j < *violated_at) {
              violated_at = j;
              detail = "obligation opened at t=" + std::to_string(opened) +
                       " still open at " + describe(later) +
                       " (strict deadline " + std::to_string(deadline) + ")";
            }
            resolved = true;
          } else if (later.kind == timed->spec.response_kind) {
            resolved = true;  // discharged strictly inside the window
          }
        }
        if (!resolved && admissible && trace.closed_at &&
            *trace.closed_at >= deadline) {
          if (!violated_at || n < *violated_at) {
            violated_at = n;
            detail = "obligation opened at t=" + std::to_string(opened) +
                     " undischarged at close " +
                     std::to_string(*trace.closed_at) + " (strict deadline " +
                     std::to_string(deadline) + ")";
          }
          resolved = true;
        }
        if (!resolved) {
          open.push_back(Obligation{r.label, opened, deadline,
                                    timed->spec.response_kind});
        }
      }
    }

    if (violated_at) {
      verdict.status = VerdictStatus::Violated;
      verdict.position = violated_at;
      verdict.detail = detail;
    } else if (!admissible && r.mood == Mood::Optative) {
      verdict.status = VerdictStatus::NotAssessed;
      verdict.detail = "trace inadmissible at position " +
                       std::to_string(cut) +
                       "; the machine is not indicted";
    } else if (!open.empty()) {
      verdict.status = VerdictStatus::Pending;
      verdict.open_obligations = std::move(open);
      verdict.detail = "observation ended before the deadline";
    }
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace turnstile
