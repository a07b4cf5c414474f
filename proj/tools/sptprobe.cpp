// Copyright 2026 The sptprobe Authors
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

// Command-line front end: one subcommand per experiment.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sptprobe/harness/config.hpp"
#include "sptprobe/harness/experiments.hpp"
#include "sptprobe/harness/report.hpp"

namespace {

using namespace sptprobe;
using namespace sptprobe::harness;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> shots, runs;
  std::optional<unsigned> L;
  std::optional<std::string> noise, boundary, state;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  sub->add_option("--seed", o.seed, "master seed");
  sub->add_option("--shots", o.shots, "shots per circuit and run");
  sub->add_option("--runs", o.runs, "independent runs (standard error across runs when > 1)");
  sub->add_option("--noise", o.noise, "noise file, or 'none'");
  sub->add_option("--L", o.L, "chain length");
  sub->add_option("--boundary", o.boundary, "open | periodic");
  sub->add_option("--state", o.state, "cluster | trivial");
  sub->add_option("--out", o.out, "output directory (default: $SPTPROBE_OUT_DIR, else stdout)");
  sub->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

ExperimentConfig build_config(const Options& o, Experiment e) {
  ExperimentConfig cfg;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    Json doc = Json::parse(in, nullptr, true, true);
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    if (doc.contains("experiment") && doc["experiment"].get<std::string>() != to_string(e)) {
      throw std::invalid_argument("config describes '" + doc["experiment"].get<std::string>() +
                                  "', not '" + to_string(e) + "'");
    }
    doc["experiment"] = to_string(e);
    const auto dir = std::filesystem::path(o.config).parent_path();
    cfg = parse_config(doc, dir.empty() ? "." : dir.string());
  }
  cfg.experiment = e;
  if (o.seed) cfg.seed = *o.seed;
  if (o.shots) cfg.shots = *o.shots;
  if (o.runs) cfg.runs = *o.runs;
  if (o.L) cfg.L = *o.L;
  if (o.boundary) cfg.boundary = parse_boundary(*o.boundary);
  if (o.state) cfg.state = parse_state_prep(*o.state);
  if (o.noise) cfg.noise = load_noise(*o.noise);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-protected topological order on simulated noisy hardware"};
  app.require_subcommand(1);
  Options opts;
  const std::pair<const char*, Experiment> commands[] = {
      {"entropy", Experiment::entropy},
      {"resolved", Experiment::resolved},
      {"teleport", Experiment::teleport},
      {"classify-noise", Experiment::classify},
      {"oracle", Experiment::oracle},
  };
  const char* help[] = {
      "second Renyi entropy per subsystem size from the swap test",
      "symmetry-resolved moments from the probability, swap and modified swap tests",
      "wire teleportation fidelity sweep with single-qubit tomography",
      "exact symmetry classification of the noise channels",
      "exact entanglement spectrum, Renyi entropies and resolved moments",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) add_common(app.add_subcommand(commands[i].first, help[i]), opts);

  CLI11_PARSE(app, argc, argv);

  try {
    Experiment e{};
    for (const auto& [name, exp] : commands) {
      if (app.got_subcommand(name)) e = exp;
    }
    const ExperimentConfig cfg = build_config(opts, e);
    const Report report = run_experiment(cfg, opts.threads);
    const Format fmt = parse_format(opts.format);

    std::string dir = opts.out;
    if (dir.empty()) {
      if (const char* env = std::getenv("SPTPROBE_OUT_DIR"); env && *env) dir = env;
    }
    if (dir.empty()) {
      std::cout << emit(report, fmt);
    } else {
      std::cerr << "wrote " << write_report(report, fmt, dir) << "\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "sptprobe: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
