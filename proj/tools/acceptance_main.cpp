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


// Acceptance runner: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "app/acceptance.hpp"

int main(int argc, char** argv) {
  alcovekit::app::AcceptanceConfig cfg;
  cfg.golden_dir = alcovekit::app::default_golden_dir();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--golden-dir") == 0 && i + 1 < argc) {
      cfg.golden_dir = argv[++i];
    } else {
      std::cerr << "usage: alcovekit_acceptance [--golden-dir DIR]\n";
      return 2;
    }
  }
  bool all = true;
  double total = 0;
  for (const auto& r : alcovekit::app::run_acceptance(cfg)) {
    std::cout << alcovekit::app::format_line(r) << std::endl;
    all = all && r.pass;
    total += r.seconds;
  }
  std::printf("acceptance %s in %.2fs (budget %.0fs)\n", all ? "PASS" : "FAIL",
              total, alcovekit::app::Tolerances::kRuntimeBudgetSeconds);
  return all ? 0 : 1;
}
