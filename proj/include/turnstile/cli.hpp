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

#ifndef TURNSTILE_CLI_HPP_
#define TURNSTILE_CLI_HPP_

#include <cstdint>
#include <string>

#include "turnstile/explorer.hpp"

namespace turnstile {

// Exit-code protocol, shared by all subcommands:
//   0  clean (admissible, no violated verdicts / no exploration failures)
//   1  some requirement violated / exploration found failures
//   2  inadmissible trace (an indicative law failed; the machine is not
//      indicted) -- takes precedence over 1
//   3  parse, IO or configuration error
//   4  exploration exceeded the node budget
inline constexpr int kExitClean = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInadmissible = 2;
inline constexpr int kExitError = 3;
inline constexpr int kExitBoundsTooLarge = 4;

enum class OutputFormat { Machine, Human };

enum class Command { Check, Simulate, Explore, Report };

/// Parsed command line. Only the fields of the selected command are used.
struct RunConfig {
  Command command = Command::Check;
  std::string trace_path;
  std::string out_path;  // empty means stdout
  std::uint64_t seed = 0;
  int steps = 0;
  std::int64_t latency_ms = 1;
  int max_events = 0;
  std::string grid_spec;  // comma-separated ms values; empty means default
  ExploreMode mode = ExploreMode::Coupled;
  std::size_t node_budget = kDefaultNodeBudget;
  OutputFormat format = OutputFormat::Machine;
};

/// Checks a trace file against the standard registry and writes the report.
int cmd_check(const std::string& trace_path, const std::string& out_path,
              OutputFormat format);

/// Writes the closed trace produced by `steps` simulation steps.
int cmd_simulate(std::uint64_t seed, int steps, std::int64_t latency_ms,
                 const std::string& out_path);

/// Runs a bounded exhaustive exploration and writes its report. Exit 1 when
/// the report carries preservation or refinement failures (or a registry
/// contradiction).
int cmd_explore(int max_events, const std::string& grid_spec, ExploreMode mode,
                std::int64_t latency_ms, std::size_t node_budget,
                const std::string& out_path, OutputFormat format);

/// Writes the requirements traceability document.
int cmd_report(const std::string& out_path, OutputFormat format);

/// Dispatches to the cmd_* function selected by config.command.
int run(const RunConfig& config);

}  // namespace turnstile

#endif  // TURNSTILE_CLI_HPP_
