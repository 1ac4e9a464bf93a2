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

#include "turnstile/history.hpp"

#include <string>

namespace turnstile {

EventHistory EventHistory::record(Timestamp t) const {
  if (t < 0) {
    throw NonMonotoneTimestamp("timestamp " + std::to_string(t) +
                               " lies before the trace epoch");
  }
  if (!items_.empty() && t <= items_.back()) {
    throw NonMonotoneTimestamp("timestamp " + std::to_string(t) +
                               " does not advance the history (last is " +
                               std::to_string(items_.back()) + ")");
  }
  std::vector<Timestamp> extended = items_;
  extended.push_back(t);
  return EventHistory(std::move(extended));
}

Timestamp EventHistory::last() const {
  if (items_.empty()) {
    throw EmptyHistoryAccess("last() on an empty history");
  }
  return items_.back();
}

EventHistory EventHistory::but_last() const {
  if (items_.empty()) {
    throw EmptyHistoryAccess("but_last() on an empty history");
  }
  return EventHistory(std::vector<Timestamp>(items_.begin(), items_.end() - 1));
}

}  // namespace turnstile
