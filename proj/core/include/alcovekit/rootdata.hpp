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

// Based root data of type A (GL_n, SL_n, PGL_n and finite products).
//
// Every datum is realized inside an ambient Z^N, N the sum of the factor
// sizes. Roots are e_i - e_j. The cocharacter lattice is Z^n for GL_n, the
// sum-zero sublattice for SL_n and Z^n modulo the diagonal for PGL_n. All
// vectors handed to the public API are in *lattice coordinates* with respect
// to the basis stored in `basis`; `to_ambient` and `from_ambient` convert.

#ifndef ALCOVEKIT_ROOTDATA_HPP_
#define ALCOVEKIT_ROOTDATA_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcovekit/numeric.hpp"
#include "alcovekit/smith.hpp"

namespace alcovekit {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FactorKind { kGL, kSL, kPGL };

struct Factor {
  FactorKind kind;
  int n;
  int ambient_offset;
  int lattice_offset;
  int lattice_rank;
};

struct WeylElement {
  IMat matrix;  // acts on lattice coordinates of cocharacters

  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

WeylElement operator*(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

class RootDatum {
 public:
  std::string label;
  std::vector<Factor> factors;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<IVec> roots;    // dual lattice coordinates
  std::vector<IVec> coroots;  // lattice coordinates
  std::vector<std::pair<int, int>> root_pairs;  // root k is e_i - e_j
  std::vector<int> simple_indices;
  std::vector<int> positive_indices;
  IMat basis;   // ambient_dim x rank, columns are the lattice basis
  IMat coords;  // rank x ambient_dim, coords * basis = identity

  Int pair(int root, const IVec& x) const { return dot(roots.at(root), x); }
  Rational pair(int root, const QVec& x) const {
    return dot(roots.at(root), x);
  }

  IVec to_ambient(const IVec& x) const { return basis * x; }
  QVec to_ambient(const QVec& x) const { return basis * x; }
  // Throws std::domain_error if x does not lie in the lattice (SL factors
  // require sum zero per factor).
  IVec from_ambient(const IVec& x) const;
  QVec from_ambient(const QVec& x) const;

  // Lattice matrix induced by an ambient integer matrix that preserves the
  // lattice (and the diagonal for PGL factors).
  IMat lattice_map(const IMat& ambient) const;

  // sigma[i] is the image of ambient index i; sigma must preserve factors.
  WeylElement weyl_from_permutation(const std::vector<int>& sigma) const;
  // Lattice automorphism induced by an arbitrary ambient permutation (for
  // pinned automorphisms that permute factors).
  IMat permutation_map(const std::vector<int>& sigma) const;
  // Inverse of weyl_from_permutation.
  std::vector<int> permutation_of(const WeylElement& w) const;
  WeylElement reflection(int root) const;
  WeylElement identity() const { return {IMat::identity(rank)}; }

  int coroot_index(const IVec& x) const;  // -1 when absent
  int root_index(const IVec& x) const;    // -1 when absent
  int positive_root_index(int i, int j) const;  // index of e_i - e_j

  bool is_gl_only() const;
};

// Accepts "GL3", "SL2", "PGL3", "GL3xGL3", "Product(GL3,GL3)", "trivial".
// GL_n needs n >= 1; SL_n and PGL_n need n >= 1 (n = 1 is the trivial group).
RootDatum build_root_datum(std::string_view label);

std::vector<WeylElement> weyl_group(const RootDatum& rd,
                                    std::size_t cap = 1'000'000);

// Cycle notation on 1-based ambient indices, e.g. "(123)", "(13)(2)", "1".
// Convention: (123) sends 1 to 2, 2 to 3 and 3 to 1, and the matrix of a
// permutation sigma maps e_i to e_{sigma(i)}.
std::vector<int> parse_cycles(std::string_view text, int n);

AbelianGroup pi1(const RootDatum& rd);

struct GammaData {
  Int p;
  Int e;
  int r = 1;
  Int q;
  IMat psi;      // pinned automorphism, lattice coordinates
  IMat inertia;  // inertial action, lattice coordinates

  bool split() const { return inertia == IMat::identity(inertia.rows); }
};

// Validates the invariants (p prime, p does not divide e, e | q - 1, psi^r
// = 1, inertia^e = 1, both preserve roots, coroots and the base).
GammaData make_gamma(const RootDatum& rd, const Int& p, const Int& e, int r,
                     const IMat& psi, const IMat& inertia);
GammaData make_split_gamma(const RootDatum& rd, const Int& p, const Int& e,
                           int r);
// Smallest r with e | p^r - 1.
int minimal_degree(const Int& p, const Int& e);
bool is_prime(const Int& n);

struct Pi1Coinvariants {
  AbelianGroup group;
  bool torsion_free = false;
};

Pi1Coinvariants pi1_coinvariants(const RootDatum& rd, const GammaData& g);

// X^I / N(X) together with coordinates used to enumerate it.
struct TatePresentation {
  AbelianGroup group;
  IMat fixed_basis;  // rank x k, columns span X^I
  IMat fixed_coords;  // k x rank, left inverse of fixed_basis on X^I
  IMat norm_image;    // k x rank, columns are N(e_i) in fixed coordinates
  SmithForm snf;      // of norm_image
};

TatePresentation tate_presentation(const RootDatum& rd, const GammaData& g);
AbelianGroup tate_h0(const RootDatum& rd, const GammaData& g);

}  // namespace alcovekit

#endif  // ALCOVEKIT_ROOTDATA_HPP_
