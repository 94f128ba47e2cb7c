// Copyright 2026 The cargo-triangles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cargo_bench: run triangle-counting experiments and write per-trial CSV.
//
//   cargo_bench run --graph facebook_combined.txt --mechanism cargo
//       --epsilon 2 --n 500 --trials 20 --seed 7 --output out.csv
//   cargo_bench generate --model social --output standin.txt

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cargo/errors.h"
#include "cargo/generators.h"
#include "cargo/graph.h"
#include "cargo/harness.h"

namespace {

void PrintSummary(const std::vector<cargo::TrialRecord>& records,
                  const cargo::ExperimentConfig& cfg) {
  auto column = [&](auto field, const std::string& method) {
    std::vector<double> v;
    for (const auto& r : records) {
      if (r.method != method) continue;
      double x = field(r);
      if (!std::isnan(x)) v.push_back(x);
    }
    return cargo::Summarize(v);
  };
  auto l2 = [](const cargo::TrialRecord& r) { return r.l2_loss; };
  auto re = [](const cargo::TrialRecord& r) { return r.relative_error; };
  std::cerr << "mechanism=" << cargo::MechanismName(cfg.mechanism)
            << " trials=" << cfg.trials;
  if (!records.empty()) {
    std::cerr << " T_true=" << records.front().t_true
              << " d_max=" << records.front().d_max_true;
  }
  std::cerr << "\n";
  if (cfg.mechanism == cargo::Mechanism::kProjectCompare) {
    for (const char* method : {"project", "random"}) {
      auto s = column(l2, method);
      std::cerr << "  " << method << ": mean l2 over all theta = " << s.mean
                << "\n";
    }
    return;
  }
  auto s_l2 = column(l2, "");
  auto s_re = column(re, "");
  std::cerr << "  l2 loss: mean=" << s_l2.mean << " std=" << s_l2.stddev
            << "\n  relative error: mean=" << s_re.mean
            << " std=" << s_re.stddev << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-server differentially private triangle counting bench"};
  app.require_subcommand(1);

  cargo::ExperimentConfig cfg;
  std::string mechanism = "cargo";
  std::string bit_policy = "and";
  std::optional<size_t> n_limit;
  std::optional<uint64_t> dealer_seed;
  bool no_timing = false;
  bool summary = true;

  CLI::App* run = app.add_subcommand("run", "Run an experiment");
  run->add_option("--graph", cfg.graph_path, "SNAP edge-list file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--mechanism", mechanism)
      ->check(CLI::IsMember({"cargo", "central", "exact", "project-compare"}));
  run->add_option("--epsilon", cfg.epsilon, "Total privacy budget");
  run->add_option("--epsilon-split", cfg.epsilon_split,
                  "Fraction of epsilon spent on the max degree");
  run->add_option("--n", n_limit, "Keep the first N distinct node ids");
  run->add_option("--trials", cfg.trials);
  run->add_option("--seed", cfg.seed, "Master seed");
  run->add_option("--dealer-seed", dealer_seed,
                  "Separate seed for share masks and multiplication groups");
  run->add_option("--theta", cfg.thetas, "Projection bounds (project-compare)")
      ->delimiter(',');
  run->add_option("--bit-policy", bit_policy)
      ->check(CLI::IsMember({"and", "or", "row-owner"}));
  run->add_option("--output", cfg.output_path, "CSV output path")->required();
  run->add_flag("--allow-large", cfg.allow_large,
                "Allow cargo on more than 2000 nodes");
  run->add_flag("--no-timing", no_timing,
                "Write zero phase times for byte-reproducible output");
  run->add_flag("!--no-summary", summary, "Omit mean/std rows");
  run->add_option("--workers", cfg.workers, "Concurrent trials");

  std::string model = "social";
  std::string gen_output;
  size_t gen_n = 100;
  double gen_p = 0.1;
  uint64_t gen_seed = 4039;
  size_t gen_copies = 1;
  CLI::App* gen = app.add_subcommand("generate", "Write a synthetic edge list");
  gen->add_option("--model", model)
      ->check(CLI::IsMember({"social", "er", "planted", "complete"}));
  gen->add_option("--n", gen_n, "Nodes (er, complete)");
  gen->add_option("--p", gen_p, "Edge probability (er)");
  gen->add_option("--copies", gen_copies, "Gadget copies (planted)");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--output", gen_output)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.mechanism = cargo::ParseMechanism(mechanism);
      cfg.bit_policy = cargo::ParseBitPolicy(bit_policy);
      cfg.n_limit = n_limit;
      cfg.dealer_seed = dealer_seed;
      cfg.record_timing = !no_timing;
      const auto records = cargo::RunExperiment(cfg);
      cargo::CsvOptions options;
      options.summary = summary;
      options.projection_columns =
          cfg.mechanism == cargo::Mechanism::kProjectCompare;
      cargo::EmitCsv(records, cfg.output_path, options);
      PrintSummary(records, cfg);
    } else if (*gen) {
      cargo::Graph g;
      if (model == "social") {
        cargo::SocialParams params;
        params.seed = gen_seed;
        g = cargo::SocialStandIn(params);
      } else if (model == "er") {
        g = cargo::ErdosRenyi(gen_n, gen_p, gen_seed);
      } else if (model == "planted") {
        g = cargo::PlantedHomogeneity(gen_copies);
      } else {
        g = cargo::CompleteGraph(gen_n);
      }
      cargo::WriteEdgeList(g, gen_output);
      std::cerr << "wrote n=" << g.num_nodes() << " |E|=" << g.num_edges()
                << " d_max=" << g.MaxDegree() << " to " << gen_output << "\n";
    }
  } catch (const cargo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
