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

#include "qcss/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qcss {

double entropy(double x) {
  if (x < 0 || x > 1) throw std::invalid_argument("entropy needs x in [0,1]");
  if (x == 0 || x == 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double inverse_entropy(double y) {
  if (y < 0 || y > 1) {
    throw std::invalid_argument("inverse_entropy needs y in [0,1]");
  }
  double lo = 0, hi = 0.5;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RateWindow rate_window(int n, int logical_count, int d1, int d2) {
  if (d1 <= 0 || d2 <= 0 || d1 > n || d2 > n) {
    throw std::invalid_argument("need 0 < d1, d2 <= n");
  }
  RateWindow w{n, logical_count, d1, d2, 0, 0, false, false};
  const double nd = static_cast<double>(n);
  w.upper_rate = 1 - entropy(d1 / (2 * nd)) - entropy(d2 / (2 * nd));
  w.lower_rate = 1 - entropy(d1 / nd) - entropy(d2 / nd);
  const double rate = logical_count / nd;
  w.upper_allows = rate <= w.upper_rate;
  w.lower_achieves = rate <= w.lower_rate;
  return w;
}

namespace {

// log of a sum given the summand logs, stable against underflow.
double log_sum_exp(const std::vector<double>& logs) {
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(logs.begin(), logs.end());
  if (!std::isfinite(m)) return m;
  double acc = 0;
  for (double v : logs) acc += std::exp(v - m);
  return m + std::log(acc);
}

// log of C(n, i) p^i (1-p)^(n-i).
double log_binom_term(long long n, long long i, double log_p,
                      double log_q) {
  const double nd = static_cast<double>(n);
  const double id = static_cast<double>(i);
  return std::lgamma(nd + 1) - std::lgamma(id + 1) - std::lgamma(nd - id + 1) +
         id * log_p + (nd - id) * log_q;
}

}  // namespace

SurvivalReport survival(long long n, double p, int d, long long t) {
  if (n < 1 || p < 0 || p > 1 || d < 1 || d > n || t < 1) {
    throw std::invalid_argument("need n >= 1, p in [0,1], 1 <= d <= n, T >= 1");
  }
  SurvivalReport r{};
  r.n = n;
  r.p = p;
  r.d = d;
  r.t = t;
  r.x = (d - 1) / 2;
  r.mu = n * p;
  r.sigma = std::sqrt(n * p * (1 - p));

  if (p == 0) {
    r.f_exact = 1;
    r.one_minus_f_exact = 0;
    r.f_erf = 1;
    r.one_minus_f_erf = 0;
    r.p_exact = 1;
    r.p_erf = 1;
    return r;
  }
  if (p == 1) {
    const bool survives = r.x >= n;
    r.f_exact = survives ? 1 : 0;
    r.one_minus_f_exact = survives ? 0 : 1;
    r.f_erf = survives ? 1 : 0;
    r.one_minus_f_erf = survives ? 0 : 1;
    r.p_exact = r.f_exact;
    r.p_erf = r.f_erf;
    return r;
  }

  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  std::vector<double> head, tail;
  for (long long i = 0; i <= n; ++i) {
    (i <= r.x ? head : tail).push_back(log_binom_term(n, i, log_p, log_q));
  }
  const double log_f = log_sum_exp(head);
  const double log_tail = log_sum_exp(tail);
  r.f_exact = std::exp(log_f);
  r.one_minus_f_exact = std::exp(log_tail);
  // F^T via the tail so a survival probability near 1 keeps precision.
  r.p_exact = std::exp(t * std::log1p(-r.one_minus_f_exact));

  const double z =
      (static_cast<double>(r.x) - r.mu) / (r.sigma * std::numbers::sqrt2);
  r.one_minus_f_erf = std::min(1.0, std::erfc(z));
  r.f_erf = std::clamp(std::erf(z), 0.0, 1.0);
  r.p_erf = r.f_erf == 0 ? 0 : std::exp(t * std::log1p(-r.one_minus_f_erf));
  return r;
}

std::pair<double, double> threshold_summary() {
  const double h = inverse_entropy(0.5);
  return {0.5 * h, h};
}

std::vector<RateCurveRow> emit_rate_curves(const std::vector<double>& grid) {
  std::vector<RateCurveRow> rows;
  for (double delta : grid) {
    if (delta <= 0 || delta >= 0.5) {
      throw std::invalid_argument("grid values must lie in (0, 1/2)");
    }
    rows.push_back(RateCurveRow{delta, 1 - 2 * entropy(delta / 2),
                                1 - 2 * entropy(delta),
                                1 - entropy(delta / 2)});
  }
  return rows;
}

double erfc_asymptotic(double z) {
  if (z <= 0) throw std::invalid_argument("expansion needs z > 0");
  return std::exp(-z * z) * std::numbers::inv_sqrtpi / z *
         (1 - 1 / (2 * z * z));
}

}  // namespace qcss
