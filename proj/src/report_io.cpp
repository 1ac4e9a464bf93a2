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

#include "turnstile/report_io.hpp"

#include <sstream>

namespace turnstile {

namespace {

using json = nlohmann::ordered_json;

json history_to_json(const EventHistory& h) {
  json items = json::array();
  for (Timestamp t : h.timestamps()) {
    items.push_back(t);
  }
  return items;
}

json obligation_to_json(const Obligation& ob) {
  json out;
  out["requirement"] = ob.requirement_label;
  out["opened_at"] = ob.opened_at;
  out["strict_deadline"] = ob.strict_deadline;
  out["response"] = std::string(to_string(ob.response_kind));
  return out;
}

std::string render_history(const char* name, const EventHistory& h) {
  std::ostringstream out;
  out << name << "=[";
  bool first = true;
  for (Timestamp t : h.timestamps()) {
    if (!first) {
      out << ", ";
    }
    out << t;
    first = false;
  }
  out << "]";
  return out.str();
}

std::vector<std::string> checked_by(const Requirement& r) {
  if (const auto* guard = std::get_if<EventGuard>(&r.body)) {
    const std::string event(to_string(guard->event));
    std::vector<std::string> checks = {
        "check: evaluated on the pre-state of every " + event + " event"};
    if (r.mood == Mood::Indicative) {
      checks.push_back("check: a failure marks the trace inadmissible");
    }
    checks.push_back("simulate/explore: gates " + event +
                     " events at generation time");
    return checks;
  }
  if (std::holds_alternative<StateInvariant>(r.body)) {
    return {"check: evaluated on the state after every event",
            "explore: preservation checked across every transition"};
  }
  if (const auto* timed = std::get_if<TimedResponse>(&r.body)) {
    return {"check: obligation opened on the trigger transition, discharged "
            "by a " +
                std::string(to_string(timed->spec.response_kind)) +
                " strictly inside the deadline window",
            "explore: violations collected as refinement counterexamples"};
  }
  return {"check: evaluated on the final observed state",
          "explore: violations collected as refinement counterexamples"};
}

}  // namespace

json state_to_json(const WorldState& s) {
  json out;
  out["enters"] = history_to_json(s.enters);
  out["coins"] = history_to_json(s.coins);
  out["pushes"] = history_to_json(s.pushes);
  out["locks"] = history_to_json(s.locks);
  out["unlocks"] = history_to_json(s.unlocks);
  return out;
}

json trace_to_json(const Trace& trace) {
  json out;
  json events = json::array();
  for (const TraceEvent& e : trace.events) {
    json record;
    record["event"] = std::string(to_string(e.kind));
    record["t"] = e.at;
    events.push_back(std::move(record));
  }
  out["events"] = std::move(events);
  if (trace.closed_at) {
    out["closed_at"] = *trace.closed_at;
  } else {
    out["closed_at"] = nullptr;
  }
  return out;
}

json check_report_to_json(const CheckReport& report) {
  json out;
  out["admissible"] = report.admissible;
  if (report.inadmissible_position) {
    out["inadmissible_position"] = *report.inadmissible_position;
  } else {
    out["inadmissible_position"] = nullptr;
  }
  json verdicts = json::array();
  for (const RequirementVerdict& v : report.verdicts) {
    json entry;
    entry["label"] = v.label;
    entry["text"] = v.text;
    entry["status"] = std::string(to_string(v.status));
    if (v.position) {
      entry["position"] = *v.position;
    }
    if (!v.detail.empty()) {
      entry["detail"] = v.detail;
    }
    if (!v.open_obligations.empty()) {
      json obligations = json::array();
      for (const Obligation& ob : v.open_obligations) {
        obligations.push_back(obligation_to_json(ob));
      }
      entry["open_obligations"] = std::move(obligations);
    }
    verdicts.push_back(std::move(entry));
  }
  out["verdicts"] = std::move(verdicts);
  out["final_state"] = state_to_json(report.final_state);
  return out;
}

std::string check_report_to_text(const CheckReport& report) {
  std::ostringstream out;
  out << "admissible: " << (report.admissible ? "yes" : "no");
  if (report.inadmissible_position) {
    out << " (indicative law broken at position "
        << *report.inadmissible_position << ")";
  }
  out << "\n";
  for (const RequirementVerdict& v : report.verdicts) {
    out << v.label << ": " << to_string(v.status);
    if (v.position) {
      out << " @ " << *v.position;
    }
    out << "\n    " << v.text << "\n";
    if (!v.detail.empty()) {
      out << "    " << v.detail << "\n";
    }
    for (const Obligation& ob : v.open_obligations) {
      out << "    open obligation: " << to_string(ob.response_kind)
          << " due strictly before t=" << ob.strict_deadline << " (opened at t="
          << ob.opened_at << ")\n";
    }
  }
  out << "final state: " << render_history("enters", report.final_state.enters)
      << " " << render_history("coins", report.final_state.coins) << " "
      << render_history("pushes", report.final_state.pushes) << " "
      << render_history("locks", report.final_state.locks) << " "
      << render_history("unlocks", report.final_state.unlocks) << "\n";
  return out.str();
}

json exploration_report_to_json(const ExplorationReport& report,
                                const ExplorationBounds& bounds,
                                ExploreMode mode) {
  json out;
  out["mode"] = std::string(to_string(mode));
  out["max_events"] = bounds.max_events;
  json grid = json::array();
  for (Timestamp t : bounds.time_grid) {
    grid.push_back(t);
  }
  out["time_grid"] = std::move(grid);
  out["states_visited"] = report.states_visited;
  out["traces_checked"] = report.traces_checked;

  json preservation = json::array();
  for (const PreservationFailure& f : report.invariant_preservation_failures) {
    json entry;
    entry["label"] = f.label;
    json event;
    event["event"] = std::string(to_string(f.event.kind));
    event["t"] = f.event.at;
    entry["event"] = std::move(event);
    entry["state_before"] = state_to_json(f.state_before);
    preservation.push_back(std::move(entry));
  }
  out["invariant_preservation_failures"] = std::move(preservation);

  json unsatisfiable = json::array();
  for (EventKind k : report.unsatisfiable_guards) {
    unsatisfiable.push_back(std::string(to_string(k)));
  }
  out["unsatisfiable_guards"] = std::move(unsatisfiable);

  json refinement = json::array();
  for (const RefinementFailure& f : report.refinement_failures) {
    json entry;
    entry["violated"] = f.violated_labels;
    entry["trace"] = trace_to_json(f.trace);
    refinement.push_back(std::move(entry));
  }
  out["refinement_failures"] = std::move(refinement);
  out["contradiction_found"] = report.contradiction_found;
  return out;
}

std::string exploration_report_to_text(const ExplorationReport& report,
                                       const ExplorationBounds& bounds,
                                       ExploreMode mode) {
  std::ostringstream out;
  out << "exploration mode: " << to_string(mode)
      << ", max events: " << bounds.max_events << ", grid:";
  for (Timestamp t : bounds.time_grid) {
    out << " " << t;
  }
  out << "\n";
  out << "states visited: " << report.states_visited
      << ", closed traces checked: " << report.traces_checked << "\n";
  out << "invariant preservation failures: "
      << report.invariant_preservation_failures.size() << "\n";
  for (const PreservationFailure& f : report.invariant_preservation_failures) {
    out << "  " << f.label << " broken by " << to_string(f.event.kind) << "@"
        << f.event.at << "\n";
  }
  out << "guards never enabled:";
  if (report.unsatisfiable_guards.empty()) {
    out << " none";
  }
  for (EventKind k : report.unsatisfiable_guards) {
    out << " " << to_string(k);
  }
  out << "\n";
  out << "refinement failures: " << report.refinement_failures.size() << "\n";
  for (const RefinementFailure& f : report.refinement_failures) {
    out << "  violates";
    for (const std::string& label : f.violated_labels) {
      out << " " << label;
    }
    out << ":\n";
    // Counterexamples are printed in the trace file format so they can be
    // fed straight back into `check`.
    std::istringstream lines(serialize_trace(f.trace));
    std::string line;
    while (std::getline(lines, line)) {
      out << "    " << line << "\n";
    }
  }
  out << "contradiction found: "
      << (report.contradiction_found ? "yes" : "no") << "\n";
  return out.str();
}

json registry_to_json(const std::vector<Requirement>& registry) {
  json out;
  json entries = json::array();
  for (const Requirement& r : registry) {
    json entry;
    entry["label"] = r.label;
    entry["mood"] = std::string(to_string(r.mood));
    entry["kind"] = std::string(kind_name(r));
    if (const auto* guard = std::get_if<EventGuard>(&r.body)) {
      entry["event"] = std::string(to_string(guard->event));
    }
    if (const auto* timed = std::get_if<TimedResponse>(&r.body)) {
      entry["response"] = std::string(to_string(timed->spec.response_kind));
      entry["deadline_ms"] = timed->spec.strict_deadline_ms;
    }
    if (const auto* enabled = std::get_if<Enabledness>(&r.body)) {
      entry["target"] = std::string(to_string(enabled->target));
    }
    entry["text"] = r.text;
    entry["formal"] = r.formal;
    entry["checked_by"] = checked_by(r);
    entries.push_back(std::move(entry));
  }
  out["requirements"] = std::move(entries);
  return out;
}

std::string registry_to_text(const std::vector<Requirement>& registry) {
  std::ostringstream out;
  out << "requirements traceability (" << registry.size() << " entries)\n";
  for (const Requirement& r : registry) {
    out << "\n" << r.label << " [" << to_string(r.mood) << ", " << kind_name(r)
        << "]\n";
    out << "  statement: " << r.text << "\n";
    out << "  formal:    " << r.formal << "\n";
    if (const auto* timed = std::get_if<TimedResponse>(&r.body)) {
      out << "  response:  " << to_string(timed->spec.response_kind)
          << " strictly within " << timed->spec.strict_deadline_ms << " ms\n";
    }
    for (const std::string& check : checked_by(r)) {
      out << "  checked by: " << check << "\n";
    }
  }
  return out.str();
}

}  // namespace turnstile
