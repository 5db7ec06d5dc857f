// Copyright 2026 The qcss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

namespace qcss {

/// Binary entropy H(x) = x log2(1/x) + (1-x) log2(1/(1-x)), with
/// H(0) = H(1) = 0 by continuity.
double entropy(double x);

/// The unique x in [0, 1/2] with H(x) = y; bisection to 1e-9.
double inverse_entropy(double y);

/// Asymptotic rate bounds for distance-(d1, d2) protection in the two
/// bases. upper_rate is the packing limit, lower_rate the random-coding
/// achievable rate; K/n above upper_rate is impossible, below
/// lower_rate is achievable.
struct RateWindow {
  int n;
  int logical_count;
  int d1, d2;
  double upper_rate;  // 1 - H(d1/2n) - H(d2/2n)
  double lower_rate;  // 1 - H(d1/n) - H(d2/n)
  bool upper_allows;  // K/n <= upper_rate
  bool lower_achieves;  // K/n <= lower_rate
};

RateWindow rate_window(int n, int logical_count, int d1, int d2);

/// Probability that a block survives: F = P(at most x of n qubits
/// defect) with x = floor((d-1)/2), and P = F^T over T correction
/// rounds. Exact values use log-space binomial sums; the erf variants
/// use the normal approximation erf((x - mu) / (sigma sqrt(2))) with mu
/// = np, sigma^2 = np(1-p), clamped to [0, 1].
struct SurvivalReport {
  long long n;
  double p;
  int d;
  long long t;
  long long x;
  double mu;
  double sigma;
  double f_exact;
  double one_minus_f_exact;  // tail sum, accurate when F is near 1
  double f_erf;
  double one_minus_f_erf;
  double p_exact;  // F_exact^T
  double p_erf;    // F_erf^T
};

SurvivalReport survival(long long n, double p, int d, long long t);

/// (p below which error-free computation is achievable, p above which
/// it is impossible) = (H^{-1}(1/2) / 2, H^{-1}(1/2)).
std::pair<double, double> threshold_summary();

/// One row of the asymptotic rate plot at delta = d/n: the packing
/// limit 1 - 2H(delta/2), the achievable rate 1 - 2H(delta), and the
/// one-basis (classical) limit 1 - H(delta/2).
struct RateCurveRow {
  double d_over_n;
  double upper;
  double lower;
  double classical;
};

std::vector<RateCurveRow> emit_rate_curves(const std::vector<double>& grid);

/// Leading terms of the large-z tail expansion of 1 - erf(z); for
/// comparison output only.
double erfc_asymptotic(double z);

}  // namespace qcss
