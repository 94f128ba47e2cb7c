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

#include "cargo/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "cargo/baselines.h"
#include "cargo/errors.h"
#include "cargo/projection.h"
#include "cargo/random.h"

namespace cargo {

Mechanism ParseMechanism(const std::string& name) {
  if (name == "cargo") return Mechanism::kCargo;
  if (name == "central") return Mechanism::kCentral;
  if (name == "exact") return Mechanism::kExact;
  if (name == "project-compare") return Mechanism::kProjectCompare;
  throw ParameterError("unknown mechanism '" + name +
                       "' (expected cargo, central, exact, project-compare)");
}

std::string MechanismName(Mechanism m) {
  switch (m) {
    case Mechanism::kCargo:
      return "cargo";
    case Mechanism::kCentral:
      return "central";
    case Mechanism::kExact:
      return "exact";
    case Mechanism::kProjectCompare:
      return "project-compare";
  }
  return "cargo";
}

void ExperimentConfig::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be a finite positive number");
  }
  if (!(epsilon_split > 0.0 && epsilon_split < 1.0)) {
    throw ParameterError("epsilon split must lie strictly between 0 and 1");
  }
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (n_limit && *n_limit == 0) throw ParameterError("--n must be positive");
  if (mechanism == Mechanism::kProjectCompare) {
    if (thetas.empty()) {
      throw ParameterError("project-compare needs at least one theta");
    }
    for (int64_t t : thetas) {
      if (t < 1) throw ParameterError("theta must be >= 1");
    }
  } else if (!thetas.empty()) {
    throw ParameterError("theta is only used by project-compare");
  }
}

double L2Loss(double t_true, double t_noisy) {
  const double d = t_true - t_noisy;
  return d * d;
}

double RelativeError(double t_true, double t_noisy) {
  if (t_true <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::abs(t_true - t_noisy) / t_true;
}

uint64_t TrialSeed(uint64_t seed, int64_t trial, SeedStream stream) {
  return DeriveSeed(seed, static_cast<uint64_t>(trial), stream);
}

namespace {

// Runs fn(0..count-1) on `workers` threads; output order is by index.
std::vector<TrialRecord> RunTrials(
    int64_t count, unsigned workers,
    const std::function<TrialRecord(int64_t)>& fn) {
  std::vector<TrialRecord> out(static_cast<size_t>(count));
  if (workers <= 1 || count == 1) {
    for (int64_t t = 0; t < count; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int64_t t = next++; t < count; t = next++) {
        try {
          out[t] = fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

TrialRecord BaseRecord(int64_t trial, uint64_t t_true, double t_noisy,
                       int64_t d_max) {
  TrialRecord r;
  r.trial = trial;
  r.t_true = t_true;
  r.t_noisy = t_noisy;
  r.l2_loss = L2Loss(static_cast<double>(t_true), t_noisy);
  r.relative_error = RelativeError(static_cast<double>(t_true), t_noisy);
  r.d_max_true = d_max;
  return r;
}

}  // namespace

std::vector<TrialRecord> RunCargo(const Graph& g, const ExperimentConfig& cfg) {
  cfg.Validate();
  if (g.num_nodes() > kDeskScaleNodes && !cfg.allow_large) {
    throw ParameterError("cargo on n=" + std::to_string(g.num_nodes()) +
                         " nodes exceeds the desk-scale limit of " +
                         std::to_string(kDeskScaleNodes) +
                         " (O(n^3) multiplications); pass --allow-large");
  }
  const uint64_t t_true = ExactTriangleCount(g);
  const int64_t d_max = g.MaxDegree();
  CargoParams params{cfg.epsilon, cfg.epsilon_split, cfg.bit_policy, 1};
  return RunTrials(cfg.trials, cfg.workers, [&](int64_t trial) {
    const uint64_t noise_seed = TrialSeed(cfg.seed, trial, SeedStream::kNoise);
    const uint64_t dealer_seed =
        cfg.dealer_seed ? DeriveSeed(*cfg.dealer_seed, trial)
                        : TrialSeed(cfg.seed, trial, SeedStream::kDealer);
    const CargoOutcome o = RunCargoPipeline(g, params, noise_seed, dealer_seed);
    TrialRecord r = BaseRecord(trial, t_true, o.noisy_count, d_max);
    r.d_max_noisy = o.noisy_degrees.max;
    r.t_projected = o.projected_count;
    r.theta = o.theta;
    if (cfg.record_timing) {
      r.time_project_s = o.times.project_s;
      r.time_count_s = o.times.count_s;
      r.time_perturb_s = o.times.perturb_s;
    }
    return r;
  });
}

std::vector<TrialRecord> RunCentral(const Graph& g,
                                    const ExperimentConfig& cfg) {
  cfg.Validate();
  const uint64_t t_true = ExactTriangleCount(g);
  const int64_t d_max = g.MaxDegree();
  return RunTrials(cfg.trials, cfg.workers, [&](int64_t trial) {
    NoiseRng rng(TrialSeed(cfg.seed, trial, SeedStream::kNoise));
    auto start = std::chrono::steady_clock::now();
    const CentralResult c = CentralLap(t_true, d_max, cfg.epsilon, rng);
    auto end = std::chrono::steady_clock::now();
    TrialRecord r = BaseRecord(trial, t_true, c.t_noisy, d_max);
    r.d_max_noisy = static_cast<double>(d_max);
    r.t_projected = t_true;
    if (cfg.record_timing) {
      r.time_perturb_s = std::chrono::duration<double>(end - start).count();
    }
    return r;
  });
}

std::vector<TrialRecord> RunExact(const Graph& g, const ExperimentConfig& cfg) {
  cfg.Validate();
  auto start = std::chrono::steady_clock::now();
  const uint64_t t_true = ExactTriangleCount(g);
  const double count_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const int64_t d_max = g.MaxDegree();
  return RunTrials(cfg.trials, 1, [&](int64_t trial) {
    TrialRecord r =
        BaseRecord(trial, t_true, static_cast<double>(t_true), d_max);
    r.d_max_noisy = static_cast<double>(d_max);
    r.t_projected = t_true;
    if (cfg.record_timing) r.time_count_s = count_s;
    return r;
  });
}

std::vector<TrialRecord> RunProjectCompare(const Graph& g,
                                           const ExperimentConfig& cfg) {
  cfg.Validate();
  const uint64_t t_true = ExactTriangleCount(g);
  const int64_t d_max = g.MaxDegree();
  std::vector<double> true_degrees(g.degrees().begin(), g.degrees().end());

  std::vector<TrialRecord> out;
  int64_t row = 0;
  for (size_t ti = 0; ti < cfg.thetas.size(); ++ti) {
    const int64_t theta = cfg.thetas[ti];
    // Similarity projection is deterministic; compute it once per theta.
    auto start = std::chrono::steady_clock::now();
    const ProjectedGraph sim = Project(g, true_degrees, theta);
    const uint64_t sim_count =
        ExactTriangleCount(EffectiveAdjacency(sim.adjacency, cfg.bit_policy));
    const double sim_s = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    auto randoms = RunTrials(cfg.trials, cfg.workers, [&](int64_t trial) {
      NoiseRng rng(DeriveSeed(TrialSeed(cfg.seed, trial, SeedStream::kProjection),
                              static_cast<uint64_t>(ti)));
      auto t0 = std::chrono::steady_clock::now();
      const ProjectedGraph rnd = ProjectRandom(g, theta, rng);
      const uint64_t count = ExactTriangleCount(
          EffectiveAdjacency(rnd.adjacency, cfg.bit_policy));
      const double s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      TrialRecord r =
          BaseRecord(trial, t_true, static_cast<double>(count), d_max);
      r.t_projected = count;
      if (cfg.record_timing) r.time_project_s = s;
      return r;
    });
    for (int64_t trial = 0; trial < cfg.trials; ++trial) {
      TrialRecord p =
          BaseRecord(row++, t_true, static_cast<double>(sim_count), d_max);
      p.d_max_noisy = static_cast<double>(theta);
      p.t_projected = sim_count;
      p.method = "project";
      p.theta = theta;
      if (cfg.record_timing) p.time_project_s = sim_s;
      out.push_back(std::move(p));

      TrialRecord r = randoms[static_cast<size_t>(trial)];
      r.trial = row++;
      r.d_max_noisy = static_cast<double>(theta);
      r.method = "random";
      r.theta = theta;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<TrialRecord> RunExperiment(const Graph& g,
                                       const ExperimentConfig& cfg) {
  switch (cfg.mechanism) {
    case Mechanism::kCargo:
      return RunCargo(g, cfg);
    case Mechanism::kCentral:
      return RunCentral(g, cfg);
    case Mechanism::kExact:
      return RunExact(g, cfg);
    case Mechanism::kProjectCompare:
      return RunProjectCompare(g, cfg);
  }
  throw ParameterError("unknown mechanism");
}

std::vector<TrialRecord> RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  if (cfg.graph_path.empty()) throw ParameterError("--graph is required");
  const Graph g = LoadEdgeList(cfg.graph_path, cfg.n_limit);
  return RunExperiment(g, cfg);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> NumericFields(const TrialRecord& r) {
  return {static_cast<double>(r.t_true),
          r.t_noisy,
          r.l2_loss,
          r.relative_error,
          static_cast<double>(r.d_max_true),
          r.d_max_noisy,
          r.time_project_s,
          r.time_count_s,
          r.time_perturb_s};
}

void AppendSummary(std::ostringstream& os,
                   const std::vector<const TrialRecord*>& group,
                   const CsvOptions& options) {
  constexpr size_t kColumns = 9;
  std::vector<std::vector<double>> columns(kColumns);
  for (const TrialRecord* r : group) {
    auto f = NumericFields(*r);
    for (size_t c = 0; c < kColumns; ++c) {
      if (!std::isnan(f[c])) columns[c].push_back(f[c]);
    }
  }
  for (const char* label : {"mean", "std"}) {
    os << label;
    for (const auto& col : columns) {
      const ColumnSummary s = Summarize(col);
      os << ',' << FormatDouble(label[0] == 'm' ? s.mean : s.stddev);
    }
    if (options.projection_columns) {
      os << ',' << group.front()->method << ',' << group.front()->theta;
    }
    os << '\n';
  }
}

}  // namespace

ColumnSummary Summarize(const std::vector<double>& values) {
  ColumnSummary s;
  if (values.empty()) {
    s.mean = s.stddev = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return s;
}

std::string FormatCsv(const std::vector<TrialRecord>& records,
                      const CsvOptions& options) {
  std::ostringstream os;
  os << kCsvHeader;
  if (options.projection_columns) os << ",method,theta";
  os << '\n';
  for (const TrialRecord& r : records) {
    os << r.trial << ',' << r.t_true << ',' << FormatDouble(r.t_noisy) << ','
       << FormatDouble(r.l2_loss) << ',' << FormatDouble(r.relative_error)
       << ',' << r.d_max_true << ',' << FormatDouble(r.d_max_noisy) << ','
       << FormatDouble(r.time_project_s) << ','
       << FormatDouble(r.time_count_s) << ','
       << FormatDouble(r.time_perturb_s);
    if (options.projection_columns) os << ',' << r.method << ',' << r.theta;
    os << '\n';
  }
  if (options.summary && !records.empty()) {
    if (!options.projection_columns) {
      std::vector<const TrialRecord*> all;
      for (const auto& r : records) all.push_back(&r);
      AppendSummary(os, all, options);
    } else {
      std::vector<std::pair<std::string, int64_t>> keys;
      for (const auto& r : records) {
        std::pair<std::string, int64_t> key{r.method, r.theta};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
          keys.push_back(key);
        }
      }
      for (const auto& key : keys) {
        std::vector<const TrialRecord*> group;
        for (const auto& r : records) {
          if (r.method == key.first && r.theta == key.second) {
            group.push_back(&r);
          }
        }
        AppendSummary(os, group, options);
      }
    }
  }
  return os.str();
}

void EmitCsv(const std::vector<TrialRecord>& records, const std::string& path,
             const CsvOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << FormatCsv(records, options);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

namespace {

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T ParseInt(const std::string& s, size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("CSV line " + std::to_string(line_no) +
                     ": bad integer '" + s + "'");
  }
  return v;
}

double ParseDouble(const std::string& s, size_t line_no) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError("CSV line " + std::to_string(line_no) +
                     ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<TrialRecord> ParseCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV is empty");
  bool projection_columns = false;
  if (line == std::string(kCsvHeader) + ",method,theta") {
    projection_columns = true;
  } else if (line != kCsvHeader) {
    throw ParseError("unexpected CSV header '" + line + "'");
  }
  const size_t expected = projection_columns ? 12 : 10;
  std::vector<TrialRecord> out;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto cells = SplitCommas(line);
    if (cells.size() != expected) {
      throw ParseError("CSV line " + std::to_string(line_no) + ": expected " +
                       std::to_string(expected) + " fields");
    }
    if (cells[0] == "mean" || cells[0] == "std") continue;
    TrialRecord r;
    r.trial = ParseInt<int64_t>(cells[0], line_no);
    r.t_true = ParseInt<uint64_t>(cells[1], line_no);
    r.t_noisy = ParseDouble(cells[2], line_no);
    r.l2_loss = ParseDouble(cells[3], line_no);
    r.relative_error = ParseDouble(cells[4], line_no);
    r.d_max_true = ParseInt<int64_t>(cells[5], line_no);
    r.d_max_noisy = ParseDouble(cells[6], line_no);
    r.time_project_s = ParseDouble(cells[7], line_no);
    r.time_count_s = ParseDouble(cells[8], line_no);
    r.time_perturb_s = ParseDouble(cells[9], line_no);
    if (projection_columns) {
      r.method = cells[10];
      r.theta = ParseInt<int64_t>(cells[11], line_no);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cargo
