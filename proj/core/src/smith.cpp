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

#include "alcovekit/smith.hpp"

#include <sstream>
#include <utility>

namespace alcovekit {
namespace {

Int abs_int(const Int& z) { return z < 0 ? Int(-z) : z; }

void swap_rows(IMat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(IMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}
// row_i += f * row_j
void add_row(IMat& m, int i, int j, const Int& f) {
  for (int c = 0; c < m.cols; ++c) m(i, c) += f * m(j, c);
}
// col_i += f * col_j
void add_col(IMat& m, int i, int j, const Int& f) {
  for (int r = 0; r < m.rows; ++r) m(r, i) += f * m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IMat& a) {
  const int n = a.rows;
  const int m = a.cols;
  IMat d = a;
  IMat u = IMat::identity(n);
  IMat v = IMat::identity(m);
  const int k = std::min(n, m);
  for (int t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      int pr = -1, pc = -1;
      Int best = 0;
      for (int i = t; i < n; ++i)
        for (int j = t; j < m; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs_int(d(i, j)) < best)) {
            pr = i;
            pc = j;
            best = abs_int(d(i, j));
          }
      if (pr < 0) break;
      if (pr != t) {
        swap_rows(d, pr, t);
        swap_rows(u, pr, t);
      }
      if (pc != t) {
        swap_cols(d, pc, t);
        swap_cols(v, pc, t);
      }
      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < m; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Enforce divisibility of the trailing block by the pivot.
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < m; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(d, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (int c = 0; c < m; ++c) d(t, c) = -d(t, c);
      for (int c = 0; c < n; ++c) u(t, c) = -u(t, c);
    }
  }
  SmithForm out;
  out.diagonal.reserve(k);
  for (int t = 0; t < k; ++t) out.diagonal.push_back(d(t, t));
  out.U = std::move(u);
  out.V = std::move(v);
  out.D = std::move(d);
  return out;
}

Int AbelianGroup::order() const {
  if (free_rank > 0) throw std::domain_error("infinite group has no order");
  Int o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroup cokernel(const IMat& gens) {
  AbelianGroup g;
  if (gens.cols == 0) {
    g.free_rank = gens.rows;
    return g;
  }
  SmithForm s = smith_normal_form(gens);
  int nonzero = 0;
  for (const auto& dv : s.diagonal) {
    if (dv == 0) continue;
    ++nonzero;
    if (dv != 1) g.torsion.push_back(dv);
  }
  g.free_rank = gens.rows - nonzero;
  return g;
}

IMat integer_kernel(const IMat& m) {
  SmithForm s = smith_normal_form(m);
  // m V = U^{-1} D, so the columns of V beyond the nonzero pivots span ker m.
  std::vector<int> idx;
  for (int j = 0; j < m.cols; ++j) {
    bool pivot = j < static_cast<int>(s.diagonal.size()) && s.diagonal[j] != 0;
    if (!pivot) idx.push_back(j);
  }
  IMat k(m.cols, static_cast<int>(idx.size()));
  for (int c = 0; c < static_cast<int>(idx.size()); ++c)
    for (int r = 0; r < m.cols; ++r) k(r, c) = s.V(r, idx[c]);
  return k;
}

}  // namespace alcovekit
