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

#include "turnstile/world.hpp"

namespace turnstile {

std::string_view to_string(EventKind k) noexcept {
  switch (k) {
    case EventKind::Push:
      return "push";
    case EventKind::Enter:
      return "enter";
    case EventKind::Coin:
      return "coin";
    case EventKind::Lock:
      return "lock";
    case EventKind::Unlock:
      return "unlock";
  }
  return "unknown";
}

std::optional<EventKind> parse_event_kind(std::string_view name) noexcept {
  for (EventKind k : kAllEventKinds) {
    if (to_string(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

WorldState initial_state() { return WorldState{}; }

const EventHistory& history_for(const WorldState& s, EventKind k) noexcept {
  switch (k) {
    case EventKind::Push:
      return s.pushes;
    case EventKind::Enter:
      return s.enters;
    case EventKind::Coin:
      return s.coins;
    case EventKind::Lock:
      return s.locks;
    case EventKind::Unlock:
      return s.unlocks;
  }
  return s.pushes;  // unreachable
}

WorldState apply_event(const WorldState& s, const TraceEvent& e) {
  WorldState next = s;
  switch (e.kind) {
    case EventKind::Push:
      next.pushes = s.pushes.record(e.at);
      break;
    case EventKind::Enter:
      next.enters = s.enters.record(e.at);
      break;
    case EventKind::Coin:
      next.coins = s.coins.record(e.at);
      break;
    case EventKind::Lock:
      next.locks = s.locks.record(e.at);
      break;
    case EventKind::Unlock:
      next.unlocks = s.unlocks.record(e.at);
      break;
  }
  return next;
}

LockStatus lock_status(const TurnstileView& t) noexcept {
  if (t.unlocks.is_empty()) {
    return LockStatus::Locked;
  }
  if (t.locks.is_empty() || t.unlocks.last() > t.locks.last()) {
    return LockStatus::Unlocked;
  }
  return LockStatus::Locked;
}

std::size_t WorldStateHash::operator()(const WorldState& s) const noexcept {
  // FNV-1a over the five histories, with a per-history separator.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const EventHistory* eh :
       {&s.enters, &s.coins, &s.pushes, &s.locks, &s.unlocks}) {
    mix(0x9e3779b97f4a7c15ull + eh->count());
    for (Timestamp t : eh->timestamps()) {
      mix(static_cast<std::uint64_t>(t) + 1);
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace turnstile
