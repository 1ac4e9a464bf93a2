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

#ifndef TURNSTILE_EXPLORER_HPP_
#define TURNSTILE_EXPLORER_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turnstile/checker.hpp"
#include "turnstile/controller.hpp"
#include "turnstile/requirements.hpp"
#include "turnstile/trace.hpp"

namespace turnstile {

/// World mode enumerates all five event kinds, with world-controlled kinds
/// gated by their guards and the machine left unconstrained -- it answers
/// "can any machine behaviour break the requirements under the world's
/// laws?". Coupled mode substitutes the reference controller for the
/// unconstrained machine: a world event and its mandated reaction form one
/// atomic step, so coupled traces never end between a stimulus and its
/// response. Refinement holds when coupled exploration finds no failures.
enum class ExploreMode { World, Coupled };

std::string_view to_string(ExploreMode m) noexcept;

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

struct ExplorationBounds {
  int max_events = 0;                  // >= 0, <= time_grid.size() checked at use
  std::vector<Timestamp> time_grid;    // strictly increasing, non-negative
  std::size_t node_budget = kDefaultNodeBudget;
};

/// Grid used by the CLI when none is given. Contains a pair exactly 759 ms
/// apart (1, 760) and one exactly 760 ms apart (760, 1520), so every branch
/// of the strict deadline predicate is exercised, and reaches far enough for
/// the close marker to expire an obligation opened at the low grid points.
std::vector<Timestamp> default_time_grid();

/// Throws std::invalid_argument on invalid bounds (negative max_events,
/// max_events exceeding the grid length, or a grid that is not strictly
/// increasing and non-negative).
void validate_bounds(const ExplorationBounds& bounds);

/// The enumeration outgrew the configured node budget; shrink the grid or
/// max_events (or raise the budget).
struct BoundsTooLarge : std::runtime_error {
  BoundsTooLarge(std::size_t budget_, std::size_t needed_at_least);

  std::size_t budget;
};

/// A state invariant that held before an event and failed after it.
struct PreservationFailure {
  std::string label;
  WorldState state_before;
  TraceEvent event;
};

/// A bounded admissible trace on which some optative requirement is
/// Violated; replayable through check_trace with identical verdicts.
struct RefinementFailure {
  Trace trace;
  std::vector<std::string> violated_labels;  // registry order
};

struct ExplorationReport {
  std::size_t states_visited = 0;  // deduplicated by full value equality
  std::size_t traces_checked = 0;
  std::vector<PreservationFailure> invariant_preservation_failures;
  std::vector<EventKind> unsatisfiable_guards;  // never enabled in any
                                                // reachable state; informational
  std::vector<RefinementFailure> refinement_failures;
  bool contradiction_found = false;

  bool has_failures() const noexcept {
    return contradiction_found || !invariant_preservation_failures.empty() ||
           !refinement_failures.empty();
  }
};

/// Enumerates every bounded admissible closed trace (timestamps drawn in
/// ascending order from the grid; deterministic depth-first order, so
/// counterexamples come out in trace-lexicographic order) and calls visit
/// with each trace and its final state. The empty trace is visited first.
/// closed_at is max(grid maximum, last event time). Throws BoundsTooLarge
/// when more than bounds.node_budget traces would be visited.
void for_each_closed_trace(
    const ExplorationBounds& bounds, ExploreMode mode,
    const ControllerConfig& cfg,
    const std::function<void(const Trace&, const WorldState&)>& visit);

/// Full bounded check: refinement verdicts on every enumerated closed trace,
/// invariant preservation across every event application, guard
/// satisfiability over all reachable states, and a contradiction scan over
/// duplicate-label requirement pairs.
ExplorationReport explore(const ExplorationBounds& bounds, ExploreMode mode,
                          const std::vector<Requirement>& registry,
                          const ControllerConfig& cfg = {});

/// Post-states of all bounded admissible traces, deduplicated, in first-visit
/// (depth-first) order.
std::vector<WorldState> enumerate_reachable_states(
    const ExplorationBounds& bounds, ExploreMode mode,
    const ControllerConfig& cfg = {});

}  // namespace turnstile

#endif  // TURNSTILE_EXPLORER_HPP_
