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

#include "turnstile/explorer.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace turnstile {

std::string_view to_string(ExploreMode m) noexcept {
  return m == ExploreMode::World ? "world" : "coupled";
}

std::vector<Timestamp> default_time_grid() {
  return {1, 100, 759, 760, 861, 1520};
}

void validate_bounds(const ExplorationBounds& bounds) {
  if (bounds.max_events < 0) {
    throw std::invalid_argument("max_events must be non-negative");
  }
  if (static_cast<std::size_t>(bounds.max_events) > bounds.time_grid.size()) {
    throw std::invalid_argument(
        "max_events (" + std::to_string(bounds.max_events) +
        ") exceeds the number of grid points (" +
        std::to_string(bounds.time_grid.size()) + ")");
  }
  Timestamp previous = -1;
  for (Timestamp t : bounds.time_grid) {
    if (t < 0 || t <= previous) {
      throw std::invalid_argument(
          "time grid must be non-negative and strictly increasing");
    }
    previous = t;
  }
  if (bounds.node_budget == 0) {
    throw std::invalid_argument("node budget must be positive");
  }
}

BoundsTooLarge::BoundsTooLarge(std::size_t budget_, std::size_t needed_at_least)
    : std::runtime_error("exploration exceeded the node budget of " +
                         std::to_string(budget_) + " traces (needs at least " +
                         std::to_string(needed_at_least) + ")"),
      budget(budget_) {}

namespace {

using NodeFn = std::function<void(const Trace&, const WorldState&)>;
using EdgeFn = std::function<void(const WorldState&, const TraceEvent&,
                                  const WorldState&)>;

class Enumerator {
 public:
  Enumerator(const ExplorationBounds& bounds, ExploreMode mode,
             const ControllerConfig& cfg, NodeFn node, EdgeFn edge)
      : bounds_(bounds),
        mode_(mode),
        cfg_(cfg),
        node_(std::move(node)),
        edge_(std::move(edge)) {
    for (std::size_t i = 0; i < kAllEventKinds.size(); ++i) {
      guards_[i] = guard_of(kAllEventKinds[i]);
    }
  }

  void run() {
    validate_bounds(bounds_);
    validate(cfg_);
    dfs(initial_state(), -1, 0);
  }

 private:
  bool guard_holds(EventKind k, const WorldState& s) const {
    return guards_[static_cast<std::size_t>(k)](s);
  }

  Timestamp close_time() const {
    Timestamp t = bounds_.time_grid.empty() ? 0 : bounds_.time_grid.back();
    if (!events_.empty()) {
      t = std::max(t, events_.back().at);
    }
    return t;
  }

  void visit_node(const WorldState& s) {
    if (nodes_ == bounds_.node_budget) {
      throw BoundsTooLarge(bounds_.node_budget, nodes_ + 1);
    }
    ++nodes_;
    Trace trace;
    trace.events = events_;
    trace.closed_at = close_time();
    node_(trace, s);
  }

  // Successors are tried by timestamp ascending, then kind order, so the
  // depth-first visitation (and thus any counterexample list) is in trace
  // lexicographic order regardless of how callers consume it.
  void dfs(const WorldState& s, Timestamp last, int used) {
    visit_node(s);
    if (used >= bounds_.max_events) {
      return;
    }
    for (Timestamp t : bounds_.time_grid) {
      if (t <= last) {
        continue;
      }
      for (EventKind k : kAllEventKinds) {
        const TraceEvent e{k, t};
        if (mode_ == ExploreMode::World) {
          // World-controlled events only where their guard holds; the
          // machine is unconstrained, so lock/unlock may happen anywhere.
          if (is_world_controlled(k) && !guard_holds(k, s)) {
            continue;
          }
          step_free(s, e, used);
        } else {
          // Machine events occur only as controller reactions.
          if (is_machine_controlled(k) || !guard_holds(k, s)) {
            continue;
          }
          step_coupled(s, e, used);
        }
      }
    }
  }

  void step_free(const WorldState& s, const TraceEvent& e, int used) {
    const WorldState next = apply_event(s, e);
    if (edge_) {
      edge_(s, e, next);
    }
    events_.push_back(e);
    dfs(next, e.at, used + 1);
    events_.pop_back();
  }

  // A world event and its mandated reaction are one atomic step: the coupled
  // system never pauses between a stimulus and the controller's response, so
  // no closed trace may end between them. The step is skipped entirely when
  // the reaction would not fit the event budget.
  void step_coupled(const WorldState& s, const TraceEvent& e, int used) {
    WorldState next = apply_event(s, e);
    const std::vector<TraceEvent> reactions = controller_react(next, e, cfg_);
    if (used + 1 + static_cast<int>(reactions.size()) > bounds_.max_events) {
      return;
    }
    if (edge_) {
      edge_(s, e, next);
    }
    events_.push_back(e);
    for (const TraceEvent& reaction : reactions) {
      const WorldState after = apply_event(next, reaction);
      if (edge_) {
        edge_(next, reaction, after);
      }
      events_.push_back(reaction);
      next = after;
    }
    dfs(next, events_.back().at, used + 1 + static_cast<int>(reactions.size()));
    events_.resize(events_.size() - 1 - reactions.size());
  }

  const ExplorationBounds& bounds_;
  ExploreMode mode_;
  ControllerConfig cfg_;
  NodeFn node_;
  EdgeFn edge_;
  std::array<StatePredicate, kAllEventKinds.size()> guards_;
  std::vector<TraceEvent> events_;
  std::size_t nodes_ = 0;
};

const StatePredicate* state_predicate_of(const Requirement& r) {
  if (const auto* invariant = std::get_if<StateInvariant>(&r.body)) {
    return &invariant->holds;
  }
  if (const auto* guard = std::get_if<EventGuard>(&r.body)) {
    return &guard->admits;
  }
  if (const auto* enabled = std::get_if<Enabledness>(&r.body)) {
    return &enabled->holds;
  }
  return nullptr;
}

}  // namespace

void for_each_closed_trace(
    const ExplorationBounds& bounds, ExploreMode mode,
    const ControllerConfig& cfg,
    const std::function<void(const Trace&, const WorldState&)>& visit) {
  Enumerator(bounds, mode, cfg, visit, nullptr).run();
}

ExplorationReport explore(const ExplorationBounds& bounds, ExploreMode mode,
                          const std::vector<Requirement>& registry,
                          const ControllerConfig& cfg) {
  ExplorationReport report;

  // Pairs sharing a label: candidates for the contradiction scan. A healthy
  // registry has none, which makes the scan vacuously clean.
  std::vector<std::pair<const StatePredicate*, const StatePredicate*>> suspect;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    for (std::size_t j = i + 1; j < registry.size(); ++j) {
      if (registry[i].label != registry[j].label) {
        continue;
      }
      const StatePredicate* a = state_predicate_of(registry[i]);
      const StatePredicate* b = state_predicate_of(registry[j]);
      if (a != nullptr && b != nullptr) {
        suspect.emplace_back(a, b);
      }
    }
  }

  std::unordered_set<WorldState, WorldStateHash> seen;
  std::array<bool, kAllEventKinds.size()> ever_enabled{};
  std::array<StatePredicate, kAllEventKinds.size()> guards;
  for (std::size_t i = 0; i < kAllEventKinds.size(); ++i) {
    guards[i] = guard_of(kAllEventKinds[i]);
  }

  const NodeFn node = [&](const Trace& trace, const WorldState& state) {
    ++report.traces_checked;
    if (seen.insert(state).second) {
      ++report.states_visited;
      for (std::size_t i = 0; i < kAllEventKinds.size(); ++i) {
        if (!ever_enabled[i] && guards[i](state)) {
          ever_enabled[i] = true;
        }
      }
      for (const auto& [a, b] : suspect) {
        if ((*a)(state) != (*b)(state)) {
          report.contradiction_found = true;
        }
      }
    }

    const CheckReport check = check_trace(trace, registry);
    if (!check.admissible) {
      // Enumeration gates events by the same guards the checker evaluates.
      throw std::logic_error("explorer produced an inadmissible trace");
    }
    std::vector<std::string> violated;
    for (const RequirementVerdict& v : check.verdicts) {
      if (v.status == VerdictStatus::Violated) {
        violated.push_back(v.label);
      }
    }
    if (!violated.empty()) {
      report.refinement_failures.push_back(
          RefinementFailure{trace, std::move(violated)});
    }
  };

  const EdgeFn edge = [&](const WorldState& pre, const TraceEvent& e,
                          const WorldState& post) {
    for (const Requirement& r : registry) {
      const auto* invariant = std::get_if<StateInvariant>(&r.body);
      if (invariant != nullptr && invariant->holds(pre) &&
          !invariant->holds(post)) {
        report.invariant_preservation_failures.push_back(
            PreservationFailure{r.label, pre, e});
      }
    }
  };

  Enumerator(bounds, mode, cfg, node, edge).run();

  for (std::size_t i = 0; i < kAllEventKinds.size(); ++i) {
    if (!ever_enabled[i]) {
      report.unsatisfiable_guards.push_back(kAllEventKinds[i]);
    }
  }
  return report;
}

std::vector<WorldState> enumerate_reachable_states(
    const ExplorationBounds& bounds, ExploreMode mode,
    const ControllerConfig& cfg) {
  std::vector<WorldState> states;
  std::unordered_set<WorldState, WorldStateHash> seen;
  const NodeFn node = [&](const Trace&, const WorldState& state) {
    if (seen.insert(state).second) {
      states.push_back(state);
    }
  };
  Enumerator(bounds, mode, cfg, node, nullptr).run();
  return states;
}

}  // namespace turnstile
