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

#ifndef TURNSTILE_HISTORY_HPP_
#define TURNSTILE_HISTORY_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turnstile {

/// Milliseconds since the trace epoch. Never negative.
using Timestamp = std::int64_t;

/// A recorded timestamp failed to advance its history's clock.
struct NonMonotoneTimestamp : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// last()/but_last() was applied to an empty history. The calling predicate
/// is missing an emptiness guard.
struct EmptyHistoryAccess : std::logic_error {
  using std::logic_error::logic_error;
};

/// The strictly increasing sequence of times at which events of one kind
/// occurred.
///
/// Histories are immutable values: record() returns an extended copy, which
/// lets callers keep a pre-state and a post-state side by side when
/// evaluating old/new-style postconditions. Equality is element-wise.
class EventHistory {
 public:
  EventHistory() = default;

  /// Extends the history with one occurrence at time t. Requires t >= 0 and,
  /// unless the history is empty, t > last(). Throws NonMonotoneTimestamp
  /// otherwise: an event that does not advance the clock is ill-formed and is
  /// never silently accepted.
  [[nodiscard]] EventHistory record(Timestamp t) const;

  std::size_t count() const noexcept { return items_.size(); }
  bool is_empty() const noexcept { return items_.empty(); }

  /// Time of the most recent occurrence (also the maximum, by the strictly
  /// increasing invariant). Throws EmptyHistoryAccess on an empty history.
  Timestamp last() const;

  /// Everything but the most recent occurrence. Throws EmptyHistoryAccess on
  /// an empty history.
  [[nodiscard]] EventHistory but_last() const;

  const std::vector<Timestamp>& timestamps() const noexcept { return items_; }

  bool operator==(const EventHistory&) const = default;

 private:
  explicit EventHistory(std::vector<Timestamp> items) : items_(std::move(items)) {}

  std::vector<Timestamp> items_;
};

}  // namespace turnstile

#endif  // TURNSTILE_HISTORY_HPP_
