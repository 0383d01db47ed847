// Copyright 2025 The alcovekit Authors
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


// The acceptance gate: nine criteria, each reported as one pass/fail line.

#ifndef ALCOVEKIT_TOOLS_ACCEPTANCE_HPP_
#define ALCOVEKIT_TOOLS_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "commands.hpp"

namespace alcovekit::app {

// Pinned tolerances. All arithmetic is exact, so every comparison is
// equality unless a slack is listed here.
struct Tolerances {
  static constexpr std::int64_t kConjugationSlack = 0;   // depth >= bound - 0
  static constexpr int kIterationSlack = 2;               // window/delta + 2
  static constexpr std::int64_t kContractionGain = 1;     // depth grows by >= 1
  static constexpr double kRuntimeBudgetSeconds = 60.0;   // informational
  // The residual A^{-1} X phi_c(A) (BX)^{-1} carries the poles of X^{-1}:
  // (v+p)^{-h} over Z/p^a starts at v^{-h-a+1}, so the residual is known
  // to window - (h + a - 1).
  static constexpr std::int64_t residual_loss(std::int64_t h, int a) {
    return h + a - 1;
  }
};

struct AcceptanceConfig {
  std::string golden_dir;
  std::uint64_t seed = 20250101;  // pinned
  int conjugation_trials = 200;
  int straighten_trials = 100;
  int property_trials = 100;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// ALCOVEKIT_GOLDEN_DIR when set, else the source tree's tests/golden.
std::string default_golden_dir();

CriterionResult criterion_census(const AcceptanceConfig& c);        // 1
CriterionResult criterion_fundamental(const AcceptanceConfig& c);   // 2
CriterionResult criterion_admissible(const AcceptanceConfig& c);    // 3
CriterionResult criterion_weil(const AcceptanceConfig& c);          // 4
CriterionResult criterion_conjugation(const AcceptanceConfig& c);   // 5
CriterionResult criterion_straighten(const AcceptanceConfig& c);    // 6
CriterionResult criterion_congruence(const AcceptanceConfig& c);    // 7
CriterionResult criterion_figures(const AcceptanceConfig& c);       // 8
CriterionResult criterion_properties(const AcceptanceConfig& c);    // 9

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& c);
std::string format_line(const CriterionResult& r);
Json to_json(const CriterionResult& r);

}  // namespace alcovekit::app

#endif  // ALCOVEKIT_TOOLS_ACCEPTANCE_HPP_
