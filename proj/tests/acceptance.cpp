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

// Runs the full verification battery and prints one line per check.
// Exits nonzero if any check fails.

#include <cstdio>

#include "qcss/verify.hpp"

int main() {
  const auto results = qcss::verify::run_all_checks();
  int failures = 0;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    std::printf("[%s] %2d %s: %s\n", r.pass ? "PASS" : "FAIL", index,
                r.name.c_str(), r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%d checks passed\n", static_cast<int>(results.size()) -
                                           failures,
              static_cast<int>(results.size()));
  return failures == 0 ? 0 : 1;
}
