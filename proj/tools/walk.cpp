// Copyright 2026 The gwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwalk/cli.hpp"

int main(int argc, char** argv) {
  using namespace gwalk::cli;

  CLI::App app{"Grover walks: simulation, perfect state transfer, periods"};
  app.set_version_flag("--version", "walk 0.1.0");

  RunConfig cfg;
  std::string format = "json";
  app.add_option("command", cfg.command, "simulate | pst | scan | period | support | verify-paper")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--graph,-g", cfg.graph,
                 "multipartite:r,m | cycle:n | complete:n | path to an edge list");
  app.add_option("--x", cfg.x, "source vertex (index or label)");
  app.add_option("--y", cfg.y, "target vertex (index or label)");
  app.add_option("--arc", cfg.arc, "start simulate from a single arc");
  app.add_option("--tau", cfg.tau, "time for pst");
  app.add_option("--tau-max", cfg.tau_max, "largest time for scan")->capture_default_str();
  app.add_option("--bound", cfg.bound, "period search bound")->capture_default_str();
  app.add_option("--steps", cfg.steps, "steps for simulate")->capture_default_str();
  app.add_option("--tol", cfg.pst_tol, "PST tolerance on |amplitude|")->capture_default_str();
  app.add_option("--cluster-tol", cfg.cluster_tol, "eigenvalue merge tolerance")
      ->capture_default_str();
  app.add_option("--support-tol", cfg.support_tol, "eigenvalue support tolerance")
      ->capture_default_str();
  app.add_option("--period-tol", cfg.period_tol, "tolerance on ||U^p - I||_max")
      ->capture_default_str();
  app.add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = parse_format(format);
  if (const char* env = std::getenv("WALK_THREADS")) {
    try {
      cfg.threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      std::cerr << "walk: ignoring malformed WALK_THREADS='" << env << "'\n";
    }
  }
  return run(cfg, std::cout, std::cerr);
}
