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


#include <memory>
#include <numeric>

#include "alcovekit/galois_types.hpp"
#include "doctest.h"

using namespace alcovekit;

namespace {

std::vector<int> two_factor(const char* a, const char* b) {
  const auto x = parse_cycles(a, 3);
  const auto y = parse_cycles(b, 3);
  return {x[0], x[1], x[2], 3 + y[0], 3 + y[1], 3 + y[2]};
}

}  // namespace

TEST_CASE("SL2 cocycle values") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  const GaloisType t =
      GaloisType::constant(sl2, g, sl2.from_ambient(IVec{-3, 3}));
  const CocycleValues v = cocycle_values(sl2, t);
  const std::int64_t w = v.Q / 24;
  CHECK(v.tau_gamma[0] ==
        MonomialMatrix::diagonal({{(-3 * w % v.Q + v.Q) % v.Q, 0}, {3 * w, 0}},
                                 v.Q));
  CHECK(v.tau_sigma[0].is_identity());
  CHECK(check_cocycle(sl2, t, v).all());

  const GaloisType triv = GaloisType::constant(sl2, g, IVec{0});
  const CocycleValues tv = cocycle_values(sl2, triv);
  for (const auto& m : tv.tau_gamma) CHECK(m.is_identity());
  for (const auto& m : tv.tau_sigma) CHECK(m.is_identity());
}

TEST_CASE("SL2 Frobenius invariance") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  const auto inv = [&](int n) {
    return frobenius_invariant(sl2, GaloisType::constant(sl2, g, IVec{n}));
  };
  const FrobeniusWitness w3 = inv(-3);
  CHECK(w3.invariant);
  REQUIRE(w3.c.has_value());
  CHECK_FALSE(w3.c->w == sl2.identity());
  CHECK_FALSE(inv(2).invariant);
  const FrobeniusWitness w0 = inv(0);
  CHECK(w0.invariant);
  REQUIRE(w0.c.has_value());
  CHECK(w0.c->w == sl2.identity());
  CHECK(is_zero(w0.c->translation));
}

TEST_CASE("census counts") {
  const RootDatum sl2 = build_root_datum("SL2");
  const CensusResult c = census(sl2, make_split_gamma(sl2, 7, 24, 2));
  CHECK(c.classes.size() == 13);
  CHECK(c.invariant_count == 7);
  CHECK(c.tate_order >= Int(c.classes.size()));

  const RootDatum gl1 = build_root_datum("GL1");
  for (auto [p, e] : std::vector<std::pair<int, int>>{{7, 6}, {5, 4}, {13, 12}}) {
    const CensusResult g1 = census(gl1, make_split_gamma(gl1, p, e, 1));
    CHECK(g1.classes.size() == static_cast<std::size_t>(e));
    CHECK(g1.invariant_count == static_cast<std::size_t>(std::gcd(p - 1, e)));
  }
  const RootDatum gl1r2 = build_root_datum("GL1");
  const CensusResult g2 = census(gl1r2, make_split_gamma(gl1r2, 5, 8, 2));
  CHECK(g2.invariant_count == static_cast<std::size_t>(std::gcd(4, 8)));
}

TEST_CASE("census answers do not depend on the representative") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  for (const auto& cl : census(sl2, g).classes) {
    const Int m = cl.representative[0];
    for (const Int& alt : std::vector<Int>{m + 24, -m, -m - 48}) {
      CHECK(frobenius_invariant(sl2, GaloisType::constant(sl2, g, IVec{alt}))
                .invariant == cl.invariant.value());
    }
  }
}

TEST_CASE("ramified inertia is refused for Frobenius invariance") {
  const RootDatum gl3 = build_root_datum("GL3");
  IMat j(3, 3);
  for (int i = 0; i < 3; ++i) j(2 - i, i) = -1;
  const GammaData u3 =
      make_gamma(gl3, 7, 6, 1, IMat::identity(3), gl3.lattice_map(j));
  const CensusResult c = census(gl3, u3);
  CHECK_FALSE(c.invariance_decided);
  CHECK(c.tate_order == 3);
  CHECK_THROWS_AS(
      frobenius_invariant(gl3, constant_point(u3, QVec{0, 0, 0})),
      std::domain_error);
}

TEST_CASE("strictify: SL2 antidiagonal chain") {
  auto f = std::make_shared<const FiniteField>(7, 1);
  const FqMatrix b = FqMatrix::from_ints(f, 2, {0, 1, -1, 0});
  const FqCoboundaryChain ch = strictify(std::vector<FqMatrix>{b, b});
  CHECK(ch.verified);
  CHECK(ch.s_extension == 2);
  REQUIRE(ch.c.size() == 4);
  CHECK(ch.c[0] == FqMatrix::identity(f, 2));
  CHECK(ch.c[1] == FqMatrix::from_ints(f, 2, {0, -1, 1, 0}));
  CHECK(ch.c[2] == FqMatrix::from_ints(f, 2, {-1, 0, 0, -1}));
  CHECK(ch.c[3] == FqMatrix::from_ints(f, 2, {0, 1, -1, 0}));

  const FqCoboundaryChain id =
      strictify(std::vector<FqMatrix>{FqMatrix::identity(f, 2)});
  CHECK(id.s_extension == 1);
  CHECK(id.c[0] == FqMatrix::identity(f, 2));
}

TEST_CASE("strictify: product of order three closes after three turns") {
  auto f = std::make_shared<const FiniteField>(5, 1);
  const FqMatrix b0 = FqMatrix::from_ints(f, 2, {0, -1, 1, -1});
  const FqMatrix b1 = FqMatrix::identity(f, 2);
  const FqCoboundaryChain ch = strictify(std::vector<FqMatrix>{b0, b1});
  CHECK(ch.verified);
  CHECK(ch.s_extension == 3);
  CHECK(ch.c.size() == 6);
}

TEST_CASE("Weil-restriction constructor") {
  const RootDatum rd = build_root_datum("GL3xGL3");
  const Int p = 19;
  const GammaData g =
      make_gamma(rd, p, p * p * p * p - 1, 4,
                 rd.permutation_map({3, 4, 5, 0, 1, 2}), IMat::identity(6));
  const WeilRestrictionType t = type_from_s_mu(
      rd, rd.weyl_from_permutation(two_factor("(123)", "(12)")),
      {16, 11, 7, 4, 2, 1}, g);
  CHECK(t.gamma_fixed);
  CHECK(t.c_phi_x_equals_x);
  CHECK(is_d_generic(rd, t.x, 2));
  CHECK(t.type.w[3] == rd.identity());
  const CocycleValues v = cocycle_values(rd, t.type);
  const MonomialMatrix s = lift_weyl(
      rd, rd.weyl_from_permutation(two_factor("(123)", "(12)")), v.Q, p);
  for (const auto& m : v.tau_sigma) CHECK(m == s);
  const CocycleReport rep = check_cocycle(rd, t.type, v);
  CHECK(rep.all());
}

TEST_CASE("Weil-restriction constructor with s = 1 and mu = 0") {
  const RootDatum rd = build_root_datum("GL2");
  const Int p = 5;
  const GammaData g = make_split_gamma(rd, p, p * p - 1, 2);
  const WeilRestrictionType t = type_from_s_mu(rd, rd.identity(), {0, 0}, g);
  for (int j = 0; j < 2; ++j) {
    CHECK(t.type.lambda[j] == IVec{1 + p, 0});
    CHECK(t.type.w[j] == rd.identity());
  }
  CHECK(t.c_phi_x_equals_x);
}

TEST_CASE("Shapiro correspondence") {
  const RootDatum gl2 = build_root_datum("GL2");
  const GammaData g = make_split_gamma(gl2, 5, 4, 2);
  const std::int64_t Q = exponent_modulus(g);
  const MonomialMatrix id = MonomialMatrix::identity(2, Q);
  for (const auto& m : shapiro(gl2, g, {id, id})) CHECK(m.is_identity());
  const MonomialMatrix a = MonomialMatrix::diagonal({{1, 0}, {2, 0}}, Q);
  const MonomialMatrix b = MonomialMatrix::permutation({1, 0}, Q);
  const SlotTuple tup = shapiro(gl2, g, {a, b});
  CHECK(tup[0] == a);
  CHECK(tup[1] == b);  // psi is trivial here
  CHECK(shapiro_inverse(gl2, g, tup) == std::vector<MonomialMatrix>{a, b});
}

TEST_CASE("census of the trivial group") {
  const RootDatum rd = build_root_datum("trivial");
  const CensusResult c = census(rd, make_split_gamma(rd, 5, 4, 1));
  CHECK(c.classes.size() == 1);
  CHECK(c.invariant_count == 1);
}
