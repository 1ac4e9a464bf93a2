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

#include "turnstile/cli.hpp"

#include <fstream>
#include <iostream>

#include "turnstile/report_io.hpp"

namespace turnstile {

namespace {

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing output file: " + out_path);
  }
}

std::string render(const nlohmann::ordered_json& machine,
                   const std::string& human, OutputFormat format) {
  if (format == OutputFormat::Machine) {
    return machine.dump(2) + "\n";
  }
  return human;
}

std::vector<Timestamp> parse_grid_spec(const std::string& grid_spec) {
  if (grid_spec.empty()) {
    return default_time_grid();
  }
  std::vector<Timestamp> grid;
  std::size_t pos = 0;
  while (pos <= grid_spec.size()) {
    const std::size_t comma = grid_spec.find(',', pos);
    const std::string item =
        grid_spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                         : comma - pos);
    std::size_t used = 0;
    Timestamp value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid grid entry: \"" + item + "\"");
    }
    if (used != item.size()) {
      throw std::invalid_argument("invalid grid entry: \"" + item + "\"");
    }
    grid.push_back(value);
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return grid;
}

}  // namespace

int cmd_check(const std::string& trace_path, const std::string& out_path,
              OutputFormat format) {
  try {
    const Trace trace = read_trace_file(trace_path);
    const std::vector<Requirement> registry = standard_registry();
    const CheckReport report = check_trace(trace, registry);
    write_output(out_path, render(check_report_to_json(report),
                                  check_report_to_text(report), format));
    if (!report.admissible) {
      return kExitInadmissible;
    }
    if (any_violation(report)) {
      return kExitViolated;
    }
    return kExitClean;
  } catch (const TraceParseError& e) {
    std::cerr << trace_path << ": " << e.what() << "\n";
    return kExitError;
  } catch (const IllFormedTrace& e) {
    std::cerr << trace_path << ": ill-formed trace: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_simulate(std::uint64_t seed, int steps, std::int64_t latency_ms,
                 const std::string& out_path) {
  try {
    VisitorModel visitor;
    visitor.seed = seed;
    const ControllerConfig cfg{latency_ms};
    const Trace trace = simulate(visitor, cfg, steps);
    if (out_path.empty()) {
      std::cout << serialize_trace(trace);
    } else {
      write_trace_file(out_path, trace);
    }
    return kExitClean;
  } catch (const std::exception& e) {
    std::cerr << "simulate failed: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_explore(int max_events, const std::string& grid_spec, ExploreMode mode,
                std::int64_t latency_ms, std::size_t node_budget,
                const std::string& out_path, OutputFormat format) {
  try {
    ExplorationBounds bounds;
    bounds.max_events = max_events;
    bounds.time_grid = parse_grid_spec(grid_spec);
    bounds.node_budget = node_budget;
    validate_bounds(bounds);
    const ControllerConfig cfg{latency_ms};
    const std::vector<Requirement> registry = standard_registry();
    const ExplorationReport report = explore(bounds, mode, registry, cfg);
    write_output(out_path,
                 render(exploration_report_to_json(report, bounds, mode),
                        exploration_report_to_text(report, bounds, mode),
                        format));
    return report.has_failures() ? kExitViolated : kExitClean;
  } catch (const BoundsTooLarge& e) {
    std::cerr << "explore aborted: " << e.what() << "\n";
    return kExitBoundsTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "explore failed: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_report(const std::string& out_path, OutputFormat format) {
  try {
    const std::vector<Requirement> registry = standard_registry();
    validate_registry(registry);
    write_output(out_path, render(registry_to_json(registry),
                                  registry_to_text(registry), format));
    return kExitClean;
  } catch (const std::exception& e) {
    std::cerr << "report failed: " << e.what() << "\n";
    return kExitError;
  }
}

int run(const RunConfig& config) {
  switch (config.command) {
    case Command::Check:
      return cmd_check(config.trace_path, config.out_path, config.format);
    case Command::Simulate:
      return cmd_simulate(config.seed, config.steps, config.latency_ms,
                          config.out_path);
    case Command::Explore:
      return cmd_explore(config.max_events, config.grid_spec, config.mode,
                         config.latency_ms, config.node_budget,
                         config.out_path, config.format);
    case Command::Report:
      return cmd_report(config.out_path, config.format);
  }
  return kExitError;
}

}  // namespace turnstile
