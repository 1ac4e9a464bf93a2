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

#ifndef TURNSTILE_WORLD_HPP_
#define TURNSTILE_WORLD_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "turnstile/history.hpp"

namespace turnstile {

/// The five observable event kinds of the turnstile installation. Push,
/// Enter and Coin are world-controlled (visitor actions); Lock and Unlock
/// are machine-controlled signals.
enum class EventKind { Push, Enter, Coin, Lock, Unlock };

inline constexpr std::array<EventKind, 5> kAllEventKinds = {
    EventKind::Push, EventKind::Enter, EventKind::Coin, EventKind::Lock,
    EventKind::Unlock};

constexpr bool is_machine_controlled(EventKind k) noexcept {
  return k == EventKind::Lock || k == EventKind::Unlock;
}

constexpr bool is_world_controlled(EventKind k) noexcept {
  return !is_machine_controlled(k);
}

/// Lowercase wire name: push | enter | coin | lock | unlock.
std::string_view to_string(EventKind k) noexcept;

/// Inverse of to_string(EventKind). Empty for unknown names.
std::optional<EventKind> parse_event_kind(std::string_view name) noexcept;

/// One observed event: its kind and the millisecond at which it occurred.
struct TraceEvent {
  EventKind kind;
  Timestamp at;

  bool operator==(const TraceEvent&) const = default;
};

/// Aggregate state of the whole installation: one zoo with one turnstile,
/// which carries one coin slot and one barrier. Each part contributes the
/// history of the events it hosts, so the aggregate *is* the object graph
/// (exactly one of each part, mutually linked, by construction).
struct WorldState {
  EventHistory enters;   // zoo
  EventHistory coins;    // coin slot
  EventHistory pushes;   // barrier
  EventHistory locks;    // turnstile
  EventHistory unlocks;  // turnstile

  bool operator==(const WorldState&) const = default;
};

/// The machine-visible slice of the state: every phenomenon hosted by the
/// turnstile and its parts. Deliberately lacks the zoo's `enters` history —
/// predicates scoped to the turnstile, barrier or coin slot are built
/// against this view and therefore cannot read it.
struct TurnstileView {
  const EventHistory& coins;
  const EventHistory& pushes;
  const EventHistory& locks;
  const EventHistory& unlocks;
};

inline TurnstileView turnstile_view(const WorldState& s) noexcept {
  return TurnstileView{s.coins, s.pushes, s.locks, s.unlocks};
}

/// All five histories empty.
WorldState initial_state();

const EventHistory& history_for(const WorldState& s, EventKind k) noexcept;

/// Extends exactly the history selected by e.kind with e.at; the other four
/// histories are unchanged. Propagates NonMonotoneTimestamp.
[[nodiscard]] WorldState apply_event(const WorldState& s, const TraceEvent& e);

enum class LockStatus { Locked, Unlocked };

/// Unlocked iff an unlock has been received and no lock has arrived since.
/// A turnstile that has never been unlocked is locked.
LockStatus lock_status(const TurnstileView& t) noexcept;

inline LockStatus lock_status(const WorldState& s) noexcept {
  return lock_status(turnstile_view(s));
}

/// Value hash over all five histories, for state deduplication.
struct WorldStateHash {
  std::size_t operator()(const WorldState& s) const noexcept;
};

}  // namespace turnstile

#endif  // TURNSTILE_WORLD_HPP_
