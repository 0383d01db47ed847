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


#include <random>

#include "alcovekit/apartment.hpp"
#include "doctest.h"

using namespace alcovekit;

namespace {

QVec random_eta(std::mt19937_64& rng, int rank, const Int& e) {
  std::uniform_int_distribution<int> d(-40, 40);
  QVec out;
  for (int i = 0; i < rank; ++i) out.push_back(Rational(d(rng)) / Rational(e));
  return out;
}

}  // namespace

TEST_CASE("points from normalizer data") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  const IVec lam = sl2.from_ambient(IVec{-3, 3});
  const ApartmentPoint x =
      point_from_type(sl2, g, {lam, lam}, {sl2.identity(), sl2.identity()});
  CHECK(sl2.to_ambient(x.eta[0]) == QVec{Rational(1, 8), Rational(-1, 8)});
  CHECK(is_gamma_fixed(x));
  CHECK(is_lowest_alcove(sl2, x));

  const ApartmentPoint o = point_from_type(
      sl2, g, {IVec{0}, IVec{0}}, {sl2.reflection(0), sl2.identity()});
  CHECK(o.eta[0] == QVec{0});
  CHECK(o.eta[1] == QVec{0});
}

TEST_CASE("Frobenius scales fixed points by p") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  const ApartmentPoint x = constant_point(g, QVec{Rational(1, 8)});
  const ApartmentPoint fx = frobenius(x);
  CHECK(fx.eta[0] == QVec{Rational(7, 8)});
  CHECK(fx.eta[1] == QVec{Rational(7, 8)});
  CHECK(frobenius(constant_point(g, QVec{0})).eta[0] == QVec{0});
}

TEST_CASE("Frobenius commutes with the Galois action") {
  const RootDatum rd = build_root_datum("GL3xGL3");
  const GammaData g = make_gamma(rd, 5, 24, 2,
                                 rd.permutation_map({3, 4, 5, 0, 1, 2}),
                                 IMat::identity(6));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    ApartmentPoint x;
    x.gamma = g;
    for (int j = 0; j < g.r; ++j) x.eta.push_back(random_eta(rng, 6, g.e));
    CHECK(frobenius(act_gamma(x)) == act_gamma(frobenius(x)));
    CHECK(frobenius(act_sigma(x)) == act_sigma(frobenius(x)));
  }
}

TEST_CASE("genericity predicates") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  const ApartmentPoint o = constant_point(g, QVec{0});
  CHECK_FALSE(is_d_generic(sl2, o, 0));
  CHECK(is_lowest_alcove(sl2, o));
  const ApartmentPoint x = constant_point(g, QVec{Rational(1, 8)});
  // <alpha, eta> = 1/4, so d-genericity needs d/7 < 1/4.
  CHECK(is_d_generic(sl2, x, 1));
  CHECK_FALSE(is_d_generic(sl2, x, Rational(7, 4)));
  CHECK_FALSE(is_d_generic(sl2, x, Rational(7, 2)));
  CHECK_FALSE(is_lowest_alcove(sl2, constant_point(g, QVec{Rational(1, 2)})));

  const RootDatum gl3 = build_root_datum("GL3");
  CHECK(is_deep_lowest_alcove(gl3, IVec{18, 12, 7}, 3, 19));
  CHECK_FALSE(is_deep_lowest_alcove(gl3, IVec{1, 0, 0}, 1, 19));
  CHECK(is_deep_lowest_alcove(gl3, IVec{3, 2, 1}, -1, 19));
}

TEST_CASE("genericity is antitone in d and matches the open alcove") {
  const RootDatum gl3 = build_root_datum("GL3");
  const GammaData g = make_split_gamma(gl3, 19, 36, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const ApartmentPoint x = constant_point(g, random_eta(rng, 3, g.e));
    bool prev = true;
    for (int d = 0; d <= 10; ++d) {
      const bool now = is_d_generic(gl3, x, d);
      if (!prev) CHECK_FALSE(now);
      prev = now;
    }
    bool inside = true;
    for (int a : gl3.positive_indices) {
      const Rational v = gl3.pair(a, x.eta[0]);
      inside = inside && v > 0 && v < 1;
    }
    CHECK((is_d_generic(gl3, x, 0) && is_lowest_alcove(gl3, x)) == inside);
  }
}

TEST_CASE("parahoric patterns") {
  const RootDatum gl3 = build_root_datum("GL3");
  const GammaData g = make_split_gamma(gl3, 7, 6, 1);
  const QVec eta{Rational(1, 18), 0, Rational(-1, 18)};
  const ValuationPattern vp =
      parahoric_pattern(gl3, constant_point(g, eta), {0, false}, 0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (i > k) CHECK(vp.lower_bounds[i][k] > 0);
      if (i <= k) CHECK(vp.lower_bounds[i][k] == 0);
    }

  const ValuationPattern hs = parahoric_pattern(
      gl3, constant_point(g, QVec{0, 0, 0}), {0, false}, 0);
  for (const auto& row : hs.lower_bounds)
    for (const auto& q : row) CHECK(q == 0);

  const RootDatum gl2 = build_root_datum("GL2");
  const GammaData g2 = make_split_gamma(gl2, 7, 6, 1);
  const ApartmentPoint x =
      point_from_type(gl2, g2, {IVec{0, 1}}, {gl2.identity()});
  const auto v = parahoric_pattern(gl2, x, {0, false}, 0).v_pattern();
  CHECK(v == std::vector<std::vector<Int>>{{0, 0}, {1, 0}});
}

TEST_CASE("pattern bounds pair up off u-walls") {
  const RootDatum gl3 = build_root_datum("GL3");
  const GammaData g = make_split_gamma(gl3, 7, 6, 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const ApartmentPoint x = constant_point(g, random_eta(rng, 3, g.e * 7));
    bool on_wall = false;
    for (int a : gl3.positive_indices) {
      const Rational s = g.e * gl3.pair(a, x.eta[0]);
      on_wall = on_wall || s == Rational(floor_q(s));
    }
    if (on_wall) continue;
    const ValuationPattern vp = parahoric_pattern(gl3, x, {0, false}, 0);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        if (i == k) continue;
        const Rational sum =
            (vp.lower_bounds[i][k] + vp.lower_bounds[k][i]) * g.e;
        CHECK((sum == 0 || sum == 1));
      }
  }
}

TEST_CASE("points round-trip through JSON") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  const ApartmentPoint x = constant_point(g, QVec{Rational(1, 8)});
  CHECK(point_from_json_string(sl2, to_json_string(x)) == x);
}
