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

// Extended affine Weyl group X_* x| W of a split root datum.
//
// An element (nu, w) acts on the apartment by y -> w y + nu. The base
// alcove is {0 < <a, y> < 1 for all positive roots a}. Simple affine
// reflections are numbered globally: the finite simple reflections of a
// factor come first, followed by its affine reflection v^{theta} s_theta.

#ifndef ALCOVEKIT_IWAHORI_WEYL_HPP_
#define ALCOVEKIT_IWAHORI_WEYL_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alcovekit/numeric.hpp"
#include "alcovekit/rootdata.hpp"

namespace alcovekit {

struct AffineWeylElement {
  IVec translation;
  WeylElement finite;

  bool operator==(const AffineWeylElement&) const = default;
  bool operator<(const AffineWeylElement& o) const {
    if (translation != o.translation) return translation < o.translation;
    return finite < o.finite;
  }
};

AffineWeylElement operator*(const AffineWeylElement& a,
                            const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& a);
QVec act(const AffineWeylElement& a, const QVec& y);

struct BaseAlcove {
  std::vector<AffineWeylElement> simple_affine_reflections;
  // One generator per factor with nontrivial fundamental group.
  std::vector<AffineWeylElement> omega_generators;
  std::vector<int> omega_factor;  // factor index of each generator
  QVec interior_point;
};

AffineWeylElement translation_element(const RootDatum& rd, const IVec& nu);
AffineWeylElement finite_element(const RootDatum& rd, const WeylElement& w);

BaseAlcove base_alcove(const RootDatum& rd);

// Number of affine root hyperplanes separating the base alcove from its
// image.
Int length(const RootDatum& rd, const BaseAlcove& base,
           const AffineWeylElement& w);

struct ReducedWord {
  std::vector<int> word;    // 1-based simple affine reflection indices
  AffineWeylElement omega;  // length zero part, w = s_{i_1} ... s_{i_l} omega
};

ReducedWord reduced_word(const RootDatum& rd, const BaseAlcove& base,
                         const AffineWeylElement& w);
AffineWeylElement compose_word(const RootDatum& rd, const BaseAlcove& base,
                               const std::vector<int>& word,
                               const AffineWeylElement& omega);
// Exponents k_f with omega = prod_f t_f^{k_f} (t_f the factor generators).
std::vector<Int> omega_exponents(const RootDatum& rd, const BaseAlcove& base,
                                 const AffineWeylElement& omega);
// "t~", "t~^2", "1", or a product over factors.
std::string omega_name(const RootDatum& rd, const BaseAlcove& base,
                       const AffineWeylElement& omega);
std::string word_name(const ReducedWord& rw, const RootDatum& rd,
                      const BaseAlcove& base);

// Bruhat order through the subword property, memoizing subword products.
class BruhatOrder {
 public:
  BruhatOrder(const RootDatum& rd, const BaseAlcove& base)
      : rd_(rd), base_(base) {}

  bool leq(const AffineWeylElement& a, const AffineWeylElement& b);
  // Elements below b (including b), all with b's omega part.
  const std::set<AffineWeylElement>& lower_set(const AffineWeylElement& b);

 private:
  const RootDatum& rd_;
  const BaseAlcove& base_;
  std::map<AffineWeylElement, std::set<AffineWeylElement>> cache_;
};

struct AdmissibleEntry {
  AffineWeylElement element;
  ReducedWord word;
  Int length;
  bool is_translation = false;
};

// Ordered by (length, word).
std::vector<AdmissibleEntry> admissible_set(const RootDatum& rd,
                                            const BaseAlcove& base,
                                            const IVec& mu,
                                            std::size_t cap = 100'000);

// max over roots of <a, mu>.
Int h_mu(const RootDatum& rd, const IVec& mu);

// All elements of W_aff (omega part trivial) of length at most max_length.
std::vector<AffineWeylElement> elements_up_to_length(const RootDatum& rd,
                                                     const BaseAlcove& base,
                                                     int max_length);

std::string to_string(const RootDatum& rd, const AffineWeylElement& a);

}  // namespace alcovekit

#endif  // ALCOVEKIT_IWAHORI_WEYL_HPP_
