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

// Repeated-trial experiments and CSV reporting.

#ifndef CARGO_HARNESS_H_
#define CARGO_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cargo/graph.h"
#include "cargo/pipeline.h"
#include "cargo/secure_count.h"

namespace cargo {

enum class Mechanism { kCargo, kCentral, kExact, kProjectCompare };

Mechanism ParseMechanism(const std::string& name);
std::string MechanismName(Mechanism m);

// Largest graph the cargo mechanism accepts without allow_large.
inline constexpr size_t kDeskScaleNodes = 2000;

struct ExperimentConfig {
  std::string graph_path;
  Mechanism mechanism = Mechanism::kCargo;
  double epsilon = 2.0;
  double epsilon_split = 0.1;
  std::optional<size_t> n_limit;
  std::vector<int64_t> thetas;  // project-compare only
  int64_t trials = 1;
  uint64_t seed = 0;
  // Overrides the dealer stream only; noise draws still follow `seed`.
  std::optional<uint64_t> dealer_seed;
  BitPolicy bit_policy = BitPolicy::kAnd;
  std::string output_path;
  bool allow_large = false;
  // Off: the time columns are written as 0 so the CSV is reproducible.
  bool record_timing = true;
  unsigned workers = 1;  // trials run concurrently

  void Validate() const;
};

struct TrialRecord {
  int64_t trial = 0;
  uint64_t t_true = 0;
  double t_noisy = 0.0;
  double l2_loss = 0.0;
  double relative_error = 0.0;  // NaN when t_true == 0
  int64_t d_max_true = 0;
  double d_max_noisy = 0.0;  // theta for project-compare rows
  double time_project_s = 0.0;
  double time_count_s = 0.0;
  double time_perturb_s = 0.0;

  // Not part of the standard CSV columns.
  uint64_t t_projected = 0;  // reconstructed pre-noise count (cargo)
  std::string method;        // project-compare: "project" or "random"
  int64_t theta = 0;

  bool operator==(const TrialRecord&) const = default;
};

double L2Loss(double t_true, double t_noisy);
double RelativeError(double t_true, double t_noisy);

// Seeds for trial `trial` of a run with master seed `seed`.
uint64_t TrialSeed(uint64_t seed, int64_t trial, SeedStream stream);

// Loads cfg.graph_path (honoring n_limit) and dispatches on cfg.mechanism.
std::vector<TrialRecord> RunExperiment(const ExperimentConfig& cfg);
std::vector<TrialRecord> RunExperiment(const Graph& g,
                                       const ExperimentConfig& cfg);

std::vector<TrialRecord> RunCargo(const Graph& g, const ExperimentConfig& cfg);
std::vector<TrialRecord> RunCentral(const Graph& g,
                                    const ExperimentConfig& cfg);
std::vector<TrialRecord> RunExact(const Graph& g, const ExperimentConfig& cfg);

// For each theta and trial, one "project" row (similarity projection with the
// true degrees) and one "random" row (random deletion). T_noisy is the
// triangle count of the projected graph under cfg.bit_policy.
std::vector<TrialRecord> RunProjectCompare(const Graph& g,
                                           const ExperimentConfig& cfg);

struct CsvOptions {
  // Appends "mean" and "std" rows.
  bool summary = false;
  // Appends method,theta columns.
  bool projection_columns = false;
};

inline constexpr const char* kCsvHeader =
    "trial,T_true,T_noisy,l2_loss,relative_error,d_max_true,d_max_noisy,"
    "time_project_s,time_count_s,time_perturb_s";

std::string FormatCsv(const std::vector<TrialRecord>& records,
                      const CsvOptions& options = {});

// Throws IoError if the file cannot be written.
void EmitCsv(const std::vector<TrialRecord>& records, const std::string& path,
             const CsvOptions& options = {});

// Parses FormatCsv output; summary rows are skipped. Throws ParseError.
std::vector<TrialRecord> ParseCsv(const std::string& text);

struct ColumnSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

ColumnSummary Summarize(const std::vector<double>& values);

}  // namespace cargo

#endif  // CARGO_HARNESS_H_
