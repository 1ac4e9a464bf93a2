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

#include <string>

#include "CLI11.hpp"
#include "turnstile/cli.hpp"

int main(int argc, char** argv) {
  using namespace turnstile;

  CLI::App app{"Contract-based checking of zoo-turnstile event traces"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_name = "machine";
  std::string mode_name = "coupled";

  const auto format_check = CLI::IsMember({"machine", "human"});
  const auto mode_check = CLI::IsMember({"world", "coupled"});

  CLI::App* check = app.add_subcommand(
      "check", "Check a trace file against the requirements");
  check->add_option("--trace", config.trace_path, "Trace file to check")
      ->required();
  check->add_option("--out", config.out_path,
                    "Report destination (default: stdout)");
  check->add_option("--format", format_name, "Report format: machine or human")
      ->check(format_check);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Generate a trace from the reference controller");
  simulate->add_option("--seed", config.seed, "Random seed")->required();
  simulate->add_option("--steps", config.steps, "Number of visitor steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--latency-ms", config.latency_ms,
                       "Controller reaction latency (default: 1)");
  simulate->add_option("--out", config.out_path,
                       "Trace destination (default: stdout)");

  CLI::App* explore = app.add_subcommand(
      "explore", "Exhaustively check all bounded traces on a time grid");
  explore
      ->add_option("--max-events", config.max_events,
                   "Maximum events per trace")
      ->required()
      ->check(CLI::NonNegativeNumber);
  explore->add_option("--grid", config.grid_spec,
                      "Comma-separated grid of millisecond timestamps "
                      "(default: 1,100,759,760,861,1520)");
  explore
      ->add_option("--mode", mode_name,
                   "world (unconstrained machine) or coupled (reference "
                   "controller); default coupled")
      ->check(mode_check);
  explore->add_option("--latency-ms", config.latency_ms,
                      "Controller reaction latency in coupled mode");
  explore->add_option("--node-budget", config.node_budget,
                      "Abort when more traces than this would be enumerated");
  explore->add_option("--out", config.out_path,
                      "Report destination (default: stdout)");
  explore
      ->add_option("--format", format_name,
                   "Report format: machine or human")
      ->check(format_check);

  CLI::App* report = app.add_subcommand(
      "report", "Emit the requirements traceability document");
  report->add_option("--out", config.out_path,
                     "Document destination (default: stdout)");
  report
      ->add_option("--format", format_name,
                   "Document format: machine or human")
      ->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }

  config.format = format_name == "human" ? OutputFormat::Human
                                         : OutputFormat::Machine;
  config.mode =
      mode_name == "world" ? ExploreMode::World : ExploreMode::Coupled;

  if (check->parsed()) {
    config.command = Command::Check;
  } else if (simulate->parsed()) {
    config.command = Command::Simulate;
  } else if (explore->parsed()) {
    config.command = Command::Explore;
  } else {
    config.command = Command::Report;
  }
  return run(config);
}
