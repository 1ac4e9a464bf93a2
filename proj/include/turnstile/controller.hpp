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

#ifndef TURNSTILE_CONTROLLER_HPP_
#define TURNSTILE_CONTROLLER_HPP_

#include <cstdint>
#include <vector>

#include "turnstile/trace.hpp"
#include "turnstile/world.hpp"

namespace turnstile {

/// Reference controller settings. The controller is event-triggered: it
/// reacts to each world event after a fixed latency, which must stay strictly
/// inside the lock deadline.
struct ControllerConfig {
  std::int64_t reaction_latency_ms = 1;  // 0 < latency < 760
};

/// Throws std::invalid_argument unless 0 < reaction_latency_ms < 760.
void validate(const ControllerConfig& cfg);

/// Randomized environment: proposes Coin/Push/Enter attempts separated by
/// random gaps. Proposals whose guard fails in the current state are
/// suppressed (the world cannot perform them), not emitted-and-discarded.
struct VisitorModel {
  std::uint64_t seed = 0;
  std::int64_t mean_gap_ms = 40;  // >= 1
  double p_coin = 0.35;
  double p_push = 0.30;
  double p_enter = 0.25;  // remainder of the unit interval is an idle step
};

/// Throws std::invalid_argument unless gaps are positive and the
/// probabilities are non-negative with sum <= 1.
void validate(const VisitorModel& visitor);

/// Machine reaction to the event e that produced state s (e is already
/// applied). Unlocks after a coin when locked with payments ahead of pushes;
/// locks after the push that equalizes pushes and coins from an unlocked
/// turnstile (a push does not move the lock histories, so the post-push
/// reading of lock_status equals the pre-push one). Emits at most one event,
/// timestamped e.at + reaction latency.
std::vector<TraceEvent> controller_react(const WorldState& s,
                                         const TraceEvent& e,
                                         const ControllerConfig& cfg);

/// Runs `steps` visitor steps against the reference controller and returns
/// the closed interleaved trace. Identical (visitor, cfg, steps) inputs
/// reproduce the identical trace, byte for byte: the generator is a seeded
/// std::mt19937_64 consumed through raw draws only.
Trace simulate(const VisitorModel& visitor, const ControllerConfig& cfg,
               int steps);

}  // namespace turnstile

#endif  // TURNSTILE_CONTROLLER_HPP_
