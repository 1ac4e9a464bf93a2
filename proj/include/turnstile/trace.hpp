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

#ifndef TURNSTILE_TRACE_HPP_
#define TURNSTILE_TRACE_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turnstile/world.hpp"

namespace turnstile {

/// A recorded event log. Timestamps are globally strictly increasing across
/// all kinds -- ties between different kinds are rejected, so there is never
/// an ordering ambiguity at equal times. closed_at, when present, marks the
/// end of observation and is >= the last event time.
struct Trace {
  std::vector<TraceEvent> events;
  std::optional<Timestamp> closed_at;

  bool operator==(const Trace&) const = default;
};

/// The trace violates its own ordering invariants.
struct IllFormedTrace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A trace file could not be read. line is 1-based; 0 means the failure was
/// not tied to a specific line (e.g. the file could not be opened).
struct TraceParseError : std::runtime_error {
  TraceParseError(std::size_t line_number, const std::string& message);

  std::size_t line;
};

/// Throws IllFormedTrace unless timestamps are non-negative and globally
/// strictly increasing and closed_at (when present) is >= the last event.
void validate_trace(const Trace& trace);

/// Trace file format: one JSON object per line, either
///   {"event":"coin","t":100}        (event one of push|enter|coin|lock|unlock)
/// or, on the final line only,
///   {"closed_at":1000}
/// Blank lines are ignored. Parse failures carry the offending line number;
/// the parsed trace is validated before being returned.
Trace parse_trace(std::istream& in);
Trace parse_trace(const std::string& text);
Trace read_trace_file(const std::string& path);

/// Inverse of parse_trace; output is byte-deterministic.
std::string serialize_trace(const Trace& trace);
void write_trace_file(const std::string& path, const Trace& trace);

}  // namespace turnstile

#endif  // TURNSTILE_TRACE_HPP_
