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

#ifndef ALCOVEKIT_SMITH_HPP_
#define ALCOVEKIT_SMITH_HPP_

#include <string>
#include <vector>

#include "alcovekit/numeric.hpp"

namespace alcovekit {

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
// all nonzero diagonal entries positive.
struct SmithForm {
  IMat U;
  IMat V;
  IMat D;
  std::vector<Int> diagonal;  // min(rows, cols) entries
};

SmithForm smith_normal_form(const IMat& a);

// Finitely generated abelian group Z^free_rank + sum Z/t_i, t_i > 1.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_torsion_free() const { return torsion.empty(); }
  // Order of a finite group; throws when free_rank > 0.
  Int order() const;
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

// Z^n / (column span of gens), gens an n x m matrix.
AbelianGroup cokernel(const IMat& gens);

// Basis (as columns) of the integer kernel of m.
IMat integer_kernel(const IMat& m);

}  // namespace alcovekit

#endif  // ALCOVEKIT_SMITH_HPP_
