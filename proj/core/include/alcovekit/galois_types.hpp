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

// Galois types given by normalizer elements n_j = w_j^{-1} u^{lambda_j}.
//
// Cocycles live in the slot model: a value is one monomial matrix per
// embedding j = 0..r-1. The inertial generator scales u by omega^{p^{-j}} in
// slot j and sigma sends slot j-1 to slot j through psi. With these
// conventions sigma gamma sigma^{-1} = gamma^p on the coefficient ring.

#ifndef ALCOVEKIT_GALOIS_TYPES_HPP_
#define ALCOVEKIT_GALOIS_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alcovekit/apartment.hpp"
#include "alcovekit/finite_field.hpp"
#include "alcovekit/monomial.hpp"
#include "alcovekit/rootdata.hpp"

namespace alcovekit {

struct GaloisType {
  GammaData gamma;
  std::vector<IVec> lambda;    // per embedding, lattice coordinates
  std::vector<WeylElement> w;  // per embedding

  // lambda and w replicated over all r embeddings.
  static GaloisType constant(const RootDatum& rd, const GammaData& g,
                             const IVec& lambda);
};

using SlotTuple = std::vector<MonomialMatrix>;

// Exponent modulus Q = q - 1 of the symbolic coefficient field.
std::int64_t exponent_modulus(const GammaData& g);
// Ambient permutation realizing psi; throws std::domain_error otherwise.
std::vector<int> psi_permutation(const RootDatum& rd, const GammaData& g);
// Monomial lift of a Weyl element (determinant one on SL factors).
MonomialMatrix lift_weyl(const RootDatum& rd, const WeylElement& w,
                         std::int64_t Q, const Int& p);
MonomialMatrix u_power(const RootDatum& rd, const IVec& lambda,
                       std::int64_t Q);

// Actions of the generators on slot tuples.
SlotTuple act_gamma(const RootDatum& rd, const GammaData& g,
                    const SlotTuple& a);
SlotTuple act_sigma(const RootDatum& rd, const GammaData& g,
                    const SlotTuple& a);
SlotTuple act_sigma_inverse(const RootDatum& rd, const GammaData& g,
                            const SlotTuple& a);
// Frobenius: slot j receives slot j-1 with u -> u^p.
SlotTuple frobenius_slots(const SlotTuple& a, const Int& p);

// Equality in the group: PGL blocks are compared modulo scalars.
bool group_equal(const RootDatum& rd, const MonomialMatrix& a,
                 const MonomialMatrix& b);
bool group_equal(const RootDatum& rd, const SlotTuple& a, const SlotTuple& b);

struct CocycleValues {
  std::int64_t Q = 1;
  SlotTuple n;
  SlotTuple tau_gamma;
  SlotTuple tau_sigma;
};

CocycleValues cocycle_values(const RootDatum& rd, const GaloisType& t);

struct CocycleReport {
  bool u_free = false;         // both values have constant entries
  bool gamma_order = false;    // tau(gamma)^e = 1
  bool conjugation_p = false;  // tau(s) ^s tau(g) tau(s)^{-1} = tau(g)^p
  // Same with exponent q. Informational: the slot model has
  // sigma gamma sigma^{-1} = gamma^p, so this form only holds when
  // (p - 1) lambda vanishes modulo e.
  bool conjugation_q = false;
  bool sigma_norm = false;     // prod_{k<r} sigma^k(tau(sigma)) = 1

  bool all() const {
    return u_free && gamma_order && conjugation_p && sigma_norm;
  }
};

CocycleReport check_cocycle(const RootDatum& rd, const GaloisType& t,
                            const CocycleValues& v);

// A normalizer element v^translation w, acting on v-unit points by
// y -> w y - translation.
struct NormalizerElement {
  IVec translation;
  WeylElement w;
};

QVec act(const NormalizerElement& c, const QVec& y);

struct FrobeniusWitness {
  bool invariant = false;
  std::optional<NormalizerElement> c;  // c . phi(x)_0 = x_0
};

// Requires split inertia and a Gamma-fixed point. Searches w in W (identity
// first) with w(p eta_{r-1}) - eta_0 integral.
FrobeniusWitness frobenius_invariant(const RootDatum& rd,
                                     const ApartmentPoint& x);
FrobeniusWitness frobenius_invariant(const RootDatum& rd,
                                     const GaloisType& t);

struct CensusClass {
  IVec representative;  // lattice coordinates
  std::size_t orbit_size = 0;
  std::optional<bool> invariant;  // empty when undecided
  std::optional<NormalizerElement> witness;
};

struct CensusResult {
  std::vector<CensusClass> classes;
  Int tate_order;
  std::size_t invariant_count = 0;
  bool invariance_decided = false;
};

// Classes of lambda in X^I modulo norms and the Weyl elements commuting with
// psi and inertia. Frobenius invariance is decided for split inertia only.
CensusResult census(const RootDatum& rd, const GammaData& g,
                    std::size_t cap = 2'000'000);

struct CoboundaryChain {
  std::int64_t Q = 1;           // exponent modulus after extension
  int s_extension = 1;
  std::vector<MonomialMatrix> b;  // extended periodically
  std::vector<MonomialMatrix> c;  // c_0 = 1, c_j = c_{j-1} b_j^{-1}
  bool verified = false;          // b_j = c_j^{-1} c_{j-1} for all j
};

// b must be u-free. The returned chain is over F_{q^s} with q = Q + 1.
CoboundaryChain strictify(const std::vector<MonomialMatrix>& b,
                          std::size_t cap = 1'000'000);

struct FqCoboundaryChain {
  int s_extension = 1;
  std::vector<FqMatrix> b;
  std::vector<FqMatrix> c;
  bool verified = false;
};

FqCoboundaryChain strictify(const std::vector<FqMatrix>& b,
                            std::size_t cap = 1'000'000);

struct WeilRestrictionType {
  GaloisType type;
  IVec mu_eta;
  ApartmentPoint x;
  std::vector<NormalizerElement> c;
  bool gamma_fixed = false;
  bool c_phi_x_equals_x = false;
};

// Products of GL_n only, with e = q - 1 and 0 <= mu + eta <= p - 1 where
// eta = (n-1, ..., 1, 0) on each factor.
WeilRestrictionType type_from_s_mu(const RootDatum& rd, const WeylElement& s,
                                   const IVec& mu, const GammaData& g);

// g_j = psi^j(f(sigma^{-j})) with f given on sigma^{-j}, j = 0..r-1. When
// f_gamma (values on gamma sigma^{-j}) is given it must equal gamma . f.
SlotTuple shapiro(const RootDatum& rd, const GammaData& g,
                  const std::vector<MonomialMatrix>& f,
                  const std::optional<std::vector<MonomialMatrix>>& f_gamma =
                      std::nullopt);
std::vector<MonomialMatrix> shapiro_inverse(const RootDatum& rd,
                                            const GammaData& g,
                                            const SlotTuple& tuple);

// tau'(sigma)_j = tau(sigma)_j psi(b_j)^{-1}.
SlotTuple linearize_sigma(const RootDatum& rd, const GammaData& g,
                          const SlotTuple& tau_sigma, const SlotTuple& b);

}  // namespace alcovekit

#endif  // ALCOVEKIT_GALOIS_TYPES_HPP_
