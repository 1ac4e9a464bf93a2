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

#include "turnstile/trace.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace turnstile {

namespace {

using json = nlohmann::ordered_json;

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

Timestamp integer_field(const json& object, const char* key, std::size_t line) {
  const json& value = object.at(key);
  if (!value.is_number_integer()) {
    throw TraceParseError(line, std::string("field \"") + key +
                                    "\" must be an integer");
  }
  return value.get<Timestamp>();
}

}  // namespace

TraceParseError::TraceParseError(std::size_t line_number,
                                 const std::string& message)
    : std::runtime_error(line_number == 0
                             ? message
                             : "line " + std::to_string(line_number) + ": " +
                                   message),
      line(line_number) {}

void validate_trace(const Trace& trace) {
  Timestamp previous = -1;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    if (e.at < 0) {
      throw IllFormedTrace("event " + std::to_string(i) +
                           " has a negative timestamp");
    }
    if (e.at <= previous) {
      throw IllFormedTrace("event " + std::to_string(i) + " at t=" +
                           std::to_string(e.at) +
                           " does not advance the trace clock (previous t=" +
                           std::to_string(previous) + ")");
    }
    previous = e.at;
  }
  if (trace.closed_at) {
    if (*trace.closed_at < 0) {
      throw IllFormedTrace("closed_at is negative");
    }
    if (!trace.events.empty() && *trace.closed_at < trace.events.back().at) {
      throw IllFormedTrace("closed_at " + std::to_string(*trace.closed_at) +
                           " precedes the last event at t=" +
                           std::to_string(trace.events.back().at));
    }
  }
}

Trace parse_trace(std::istream& in) {
  Trace trace;
  std::string line;
  std::size_t line_number = 0;
  Timestamp previous = -1;

  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) {
      continue;
    }
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw TraceParseError(line_number, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) {
      throw TraceParseError(line_number, "expected a JSON object");
    }
    if (trace.closed_at) {
      throw TraceParseError(line_number,
                            "record after the closed_at marker");
    }

    if (record.contains("closed_at")) {
      if (record.size() != 1) {
        throw TraceParseError(line_number,
                              "closed_at record must have no other fields");
      }
      const Timestamp closed = integer_field(record, "closed_at", line_number);
      if (closed < 0) {
        throw TraceParseError(line_number, "closed_at must be non-negative");
      }
      if (closed < previous) {
        throw TraceParseError(line_number,
                              "closed_at " + std::to_string(closed) +
                                  " precedes the last event at t=" +
                                  std::to_string(previous));
      }
      trace.closed_at = closed;
      continue;
    }

    if (!record.contains("event") || !record.contains("t") ||
        record.size() != 2) {
      throw TraceParseError(line_number,
                            "event record must have exactly the fields "
                            "\"event\" and \"t\"");
    }
    if (!record.at("event").is_string()) {
      throw TraceParseError(line_number, "field \"event\" must be a string");
    }
    const std::string name = record.at("event").get<std::string>();
    const std::optional<EventKind> kind = parse_event_kind(name);
    if (!kind) {
      throw TraceParseError(line_number, "unknown event \"" + name + "\"");
    }
    const Timestamp t = integer_field(record, "t", line_number);
    if (t < 0) {
      throw TraceParseError(line_number, "timestamp must be non-negative");
    }
    if (t <= previous) {
      throw TraceParseError(line_number,
                            "timestamp " + std::to_string(t) +
                                " does not advance the trace clock "
                                "(previous t=" +
                                std::to_string(previous) + ")");
    }
    previous = t;
    trace.events.push_back(TraceEvent{*kind, t});
  }

  validate_trace(trace);
  return trace;
}

Trace parse_trace(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw TraceParseError(0, "cannot open trace file: " + path);
  }
  return parse_trace(in);
}

std::string serialize_trace(const Trace& trace) {
  std::string out;
  for (const TraceEvent& e : trace.events) {
    json record;
    record["event"] = std::string(to_string(e.kind));
    record["t"] = e.at;
    out += record.dump();
    out += '\n';
  }
  if (trace.closed_at) {
    json record;
    record["closed_at"] = *trace.closed_at;
    out += record.dump();
    out += '\n';
  }
  return out;
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw TraceParseError(0, "cannot open output file: " + path);
  }
  out << serialize_trace(trace);
  if (!out) {
    throw TraceParseError(0, "failed writing trace file: " + path);
  }
}

}  // namespace turnstile
