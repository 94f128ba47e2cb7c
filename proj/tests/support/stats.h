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


// Small statistics helpers shared by the test binaries.

#ifndef CARGO_TESTS_SUPPORT_STATS_H_
#define CARGO_TESTS_SUPPORT_STATS_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cargo::testing {

inline double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Unbiased sample variance.
inline double Variance(const std::vector<double>& v) {
  const double m = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

// Standard error of the sample mean.
inline double StandardError(const std::vector<double>& v) {
  return std::sqrt(Variance(v) / static_cast<double>(v.size()));
}

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
inline double KsStatistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

// Asymptotic critical value of the two-sample KS statistic at level alpha.
inline double KsCritical(double alpha, size_t na, size_t nb) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double a = static_cast<double>(na), b = static_cast<double>(nb);
  return c * std::sqrt((a + b) / (a * b));
}

// Pearson statistic of observed bin counts against a uniform expectation.
inline double ChiSquareUniform(const std::vector<uint64_t>& counts) {
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double chi = 0.0;
  for (uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

// Upper critical value of chi-square with df degrees of freedom, by the
// Wilson-Hilferty approximation; z is the standard normal quantile.
inline double ChiSquareCritical(double df, double z) {
  const double t = 2.0 / (9.0 * df);
  return df * std::pow(1.0 - t + z * std::sqrt(t), 3.0);
}

// Relative deviation |actual / expected - 1|.
inline double RelDiff(double actual, double expected) {
  return std::abs(actual / expected - 1.0);
}

}  // namespace cargo::testing

#endif  // CARGO_TESTS_SUPPORT_STATS_H_
