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

#include "turnstile/controller.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "turnstile/requirements.hpp"

namespace turnstile {

void validate(const ControllerConfig& cfg) {
  if (cfg.reaction_latency_ms <= 0 ||
      cfg.reaction_latency_ms >= kLockDeadlineMs) {
    throw std::invalid_argument(
        "reaction latency must lie strictly between 0 and " +
        std::to_string(kLockDeadlineMs) + " ms, got " +
        std::to_string(cfg.reaction_latency_ms));
  }
}

void validate(const VisitorModel& visitor) {
  if (visitor.mean_gap_ms < 1) {
    throw std::invalid_argument("mean inter-event gap must be at least 1 ms");
  }
  if (visitor.p_coin < 0 || visitor.p_push < 0 || visitor.p_enter < 0) {
    throw std::invalid_argument("event probabilities must be non-negative");
  }
  if (visitor.p_coin + visitor.p_push + visitor.p_enter > 1.0) {
    throw std::invalid_argument("event probabilities must sum to at most 1");
  }
}

std::vector<TraceEvent> controller_react(const WorldState& s,
                                         const TraceEvent& e,
                                         const ControllerConfig& cfg) {
  switch (e.kind) {
    case EventKind::Coin:
      if (lock_status(s) == LockStatus::Locked &&
          s.coins.count() > s.pushes.count()) {
        return {TraceEvent{EventKind::Unlock,
                           e.at + cfg.reaction_latency_ms}};
      }
      break;
    case EventKind::Push:
      if (s.pushes.count() == s.coins.count() &&
          lock_status(s) == LockStatus::Unlocked) {
        return {TraceEvent{EventKind::Lock, e.at + cfg.reaction_latency_ms}};
      }
      break;
    default:
      break;  // the controller only reacts to coins and pushes
  }
  return {};
}

namespace {

// Uniform draw in [1, 2*mean-1]; integer, mean-centred. Raw generator output
// is used directly so the mapping is identical on every standard library.
Timestamp draw_gap(std::mt19937_64& rng, std::int64_t mean_gap_ms) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * mean_gap_ms - 1);
  return 1 + static_cast<Timestamp>(rng() % span);
}

// Uniform double in [0, 1) from the top 53 bits.
double draw_unit(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

}  // namespace

Trace simulate(const VisitorModel& visitor, const ControllerConfig& cfg,
               int steps) {
  validate(visitor);
  validate(cfg);
  if (steps < 0) {
    throw std::invalid_argument("steps must be non-negative");
  }

  std::mt19937_64 rng(visitor.seed);
  WorldState state = initial_state();
  Trace trace;
  Timestamp clock = 0;

  for (int step = 0; step < steps; ++step) {
    clock += draw_gap(rng, visitor.mean_gap_ms);
    const double roll = draw_unit(rng);

    EventKind proposal;
    if (roll < visitor.p_coin) {
      proposal = EventKind::Coin;
    } else if (roll < visitor.p_coin + visitor.p_push) {
      proposal = EventKind::Push;
    } else if (roll < visitor.p_coin + visitor.p_push + visitor.p_enter) {
      proposal = EventKind::Enter;
    } else {
      continue;  // idle step; time has still advanced
    }
    if (!guard_of(proposal)(state)) {
      continue;  // the world cannot perform this here; suppressed
    }

    const TraceEvent event{proposal, clock};
    trace.events.push_back(event);
    state = apply_event(state, event);

    for (const TraceEvent& reaction : controller_react(state, event, cfg)) {
      trace.events.push_back(reaction);
      state = apply_event(state, reaction);
      clock = std::max(clock, reaction.at);
    }
  }

  trace.closed_at = trace.events.empty() ? 0 : trace.events.back().at;
  return trace;
}

}  // namespace turnstile
