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

// Points of the apartment, stored relative to the base point o.
//
// Coordinates are in v-units: the u-apartment vertex u^lambda . o sits at
// o - lambda / e, and root walls of the v-apartment are integral.

#ifndef ALCOVEKIT_APARTMENT_HPP_
#define ALCOVEKIT_APARTMENT_HPP_

#include <string>
#include <vector>

#include "alcovekit/numeric.hpp"
#include "alcovekit/rootdata.hpp"

namespace alcovekit {

struct ApartmentPoint {
  GammaData gamma;
  std::vector<QVec> eta;  // one entry per embedding j = 0..r-1

  bool operator==(const ApartmentPoint& o) const { return eta == o.eta; }
};

// A concave level: a rational value, optionally "plus" (the next jump).
struct Level {
  Rational value = 0;
  bool plus = false;

  static Level zero_plus() { return {0, true}; }
};

struct ValuationPattern {
  int n = 0;
  Int e = 1;
  // Minimal valuation (in v-units, denominator dividing e) per slot.
  std::vector<std::vector<Rational>> lower_bounds;
  Int torus_level = 0;

  // Integer pattern for the v-variable: ceil of each lower bound.
  std::vector<std::vector<Int>> v_pattern() const;
};

ApartmentPoint point_from_type(const RootDatum& rd, const GammaData& g,
                               const std::vector<IVec>& lambda,
                               const std::vector<WeylElement>& w);
// The point with eta equal to x in every slot.
ApartmentPoint constant_point(const GammaData& g, const QVec& eta);

// phi(x)_j = o + p (x_{j-1} - o).
ApartmentPoint frobenius(const ApartmentPoint& x);
ApartmentPoint act_gamma(const ApartmentPoint& x);  // inertial generator
ApartmentPoint act_sigma(const ApartmentPoint& x);  // sigma(x)_j = psi(x_{j-1})
bool is_gamma_fixed(const ApartmentPoint& x);

bool is_d_generic(const RootDatum& rd, const ApartmentPoint& x,
                  const Rational& d);
bool is_lowest_alcove(const RootDatum& rd, const ApartmentPoint& x);
// Largest integer d >= 0 with x d-generic, or -1 if x lies on a wall.
Int genericity(const RootDatum& rd, const ApartmentPoint& x);
// d + 1 < <a, mu_eta> < p - d - 1 for every positive root a.
bool is_deep_lowest_alcove(const RootDatum& rd, const IVec& mu_eta,
                           const Rational& d, const Int& p);

// GL_n only: lower_bounds[i][k] = ceil(-e <e_i - e_k, eta_j> + e f) / e.
ValuationPattern parahoric_pattern(const RootDatum& rd,
                                   const ApartmentPoint& x, const Level& f,
                                   int j);

std::string to_json_string(const ApartmentPoint& x);
ApartmentPoint point_from_json_string(const RootDatum& rd,
                                      const std::string& text);

}  // namespace alcovekit

#endif  // ALCOVEKIT_APARTMENT_HPP_
