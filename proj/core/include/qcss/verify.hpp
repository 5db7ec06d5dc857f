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

#include <string>
#include <vector>

namespace qcss::verify {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// The eleven verification checks, in their canonical order. Each is
// self-contained and deterministic.
CheckResult check_dual_support();          // 1
CheckResult check_interference_law();      // 2
CheckResult check_encoded_form();          // 3
CheckResult check_phase_error_alpha();     // 4
CheckResult check_purity_amplification();  // 5
CheckResult check_coset_sum_identity();    // 6
CheckResult check_recovery_end_to_end();   // 7
CheckResult check_exhaustive_flips();      // 8
CheckResult check_rate_bounds();           // 9
CheckResult check_survival_example();      // 10
CheckResult check_binomial_oracles();      // 11

std::vector<CheckResult> run_all_checks();

}  // namespace qcss::verify
