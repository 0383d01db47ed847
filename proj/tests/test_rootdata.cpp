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


#include <algorithm>
#include <set>

#include "alcovekit/rootdata.hpp"
#include "alcovekit/smith.hpp"
#include "doctest.h"

using namespace alcovekit;

TEST_CASE("standard root data") {
  const RootDatum gl3 = build_root_datum("GL3");
  CHECK(gl3.roots.size() == 6);
  CHECK(gl3.rank == 3);
  REQUIRE(gl3.simple_indices.size() == 2);
  CHECK(gl3.root_pairs[gl3.simple_indices[0]] == std::pair<int, int>{0, 1});
  CHECK(gl3.root_pairs[gl3.simple_indices[1]] == std::pair<int, int>{1, 2});

  const RootDatum sl2 = build_root_datum("SL2");
  CHECK(sl2.roots.size() == 2);
  CHECK(sl2.rank == 1);

  const RootDatum prod = build_root_datum("GL3xGL3");
  CHECK(prod.roots.size() == 12);
  CHECK(prod.rank == 6);
  CHECK(prod.factors.size() == 2);
}

TEST_CASE("unsupported labels are rejected") {
  CHECK_THROWS_AS(build_root_datum("XY3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("GL"), std::invalid_argument);
  CHECK(build_root_datum("").rank == 0);
  CHECK(build_root_datum("trivial").roots.empty());
}

TEST_CASE("Weyl group orders") {
  for (int n = 1; n <= 6; ++n) {
    Int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(Int(weyl_group(build_root_datum("GL" + std::to_string(n))).size()) ==
          fact);
  }
  CHECK(weyl_group(build_root_datum("GL3xGL3")).size() == 36);
  CHECK(weyl_group(build_root_datum("SL2")).size() == 2);
  CHECK(weyl_group(build_root_datum("PGL3")).size() == 6);
}

TEST_CASE("Weyl closure and Cartan integrality") {
  for (const char* label : {"GL3", "SL3", "PGL3", "SL2xGL2"}) {
    const RootDatum rd = build_root_datum(label);
    const std::set<IVec> coroots(rd.coroots.begin(), rd.coroots.end());
    for (const auto& w : weyl_group(rd))
      for (const auto& c : rd.coroots) CHECK(coroots.count(w.matrix * c) == 1);
    for (std::size_t a = 0; a < rd.roots.size(); ++a) {
      CHECK(rd.pair(static_cast<int>(a), rd.coroots[a]) == 2);
      for (const auto& c : rd.coroots) {
        const Int v = rd.pair(static_cast<int>(a), c);
        CHECK((v >= -2 && v <= 2));
      }
    }
  }
}

TEST_CASE("permutation convention M e_i = e_sigma(i)") {
  const RootDatum gl3 = build_root_datum("GL3");
  const WeylElement w = gl3.weyl_from_permutation({1, 2, 0});
  CHECK(w.matrix * IVec{1, 0, 0} == IVec{0, 1, 0});
  CHECK(w.matrix * IVec{0, 0, 1} == IVec{1, 0, 0});
  CHECK(gl3.permutation_of(w) == std::vector<int>{1, 2, 0});
  CHECK(parse_cycles("(123)", 3) == std::vector<int>{1, 2, 0});
  CHECK(parse_cycles("(12)", 3) == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(gl3.weyl_from_permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("fundamental groups") {
  CHECK(pi1(build_root_datum("PGL3")) == AbelianGroup{0, {3}});
  CHECK(pi1(build_root_datum("PGL2")) == AbelianGroup{0, {2}});
  CHECK(pi1(build_root_datum("GL4")) == AbelianGroup{1, {}});
  CHECK(pi1(build_root_datum("SL3")).is_trivial());
  CHECK(pi1(build_root_datum("GL2xPGL3")) == AbelianGroup{1, {3}});
}

TEST_CASE("inertial coinvariants and Tate groups") {
  const RootDatum gl3 = build_root_datum("GL3");
  IMat j(3, 3);
  for (int i = 0; i < 3; ++i) j(2 - i, i) = -1;
  const GammaData u3 =
      make_gamma(gl3, 7, 6, 1, IMat::identity(3), gl3.lattice_map(j));
  CHECK_FALSE(u3.split());
  CHECK(pi1_coinvariants(gl3, u3).group == AbelianGroup{0, {2}});
  CHECK(tate_h0(gl3, u3).order() == 3);

  const GammaData split = make_split_gamma(gl3, 7, 6, 1);
  const Pi1Coinvariants co = pi1_coinvariants(gl3, split);
  CHECK(co.group == AbelianGroup{1, {}});
  CHECK(co.torsion_free);

  const RootDatum sl2 = build_root_datum("SL2");
  CHECK(pi1_coinvariants(sl2, make_split_gamma(sl2, 7, 24, 2)).group
            .is_trivial());
  CHECK(tate_h0(sl2, make_split_gamma(sl2, 7, 24, 2)).order() == 24);
  const RootDatum gl1 = build_root_datum("GL1");
  CHECK(tate_h0(gl1, make_split_gamma(gl1, 11, 5, 1)).order() == 5);
}

TEST_CASE("Tate group with trivial inertia has order e^rank") {
  for (const char* label : {"GL2", "SL3", "PGL3", "GL3"}) {
    const RootDatum rd = build_root_datum(label);
    const GammaData g = make_split_gamma(rd, 5, 4, 1);
    Int expect = 1;
    for (int i = 0; i < rd.rank; ++i) expect *= 4;
    CHECK(tate_h0(rd, g).order() == expect);
  }
}

TEST_CASE("invariants do not depend on the labelling of factors") {
  const RootDatum a = build_root_datum("PGL3xSL2");
  const RootDatum b = build_root_datum("SL2xPGL3");
  CHECK(pi1(a) == pi1(b));
  CHECK(tate_h0(a, make_split_gamma(a, 7, 6, 1)) ==
        tate_h0(b, make_split_gamma(b, 7, 6, 1)));
}

TEST_CASE("make_gamma validation") {
  const RootDatum gl2 = build_root_datum("GL2");
  CHECK_THROWS_AS(make_split_gamma(gl2, 6, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_split_gamma(gl2, 7, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_split_gamma(gl2, 7, 14, 1), std::invalid_argument);
  CHECK(minimal_degree(7, 24) == 2);
  CHECK(minimal_degree(19, 19 * 19 * 19 * 19 - 1) == 4);
  const GammaData g = make_split_gamma(gl2, 7, 24, 2);
  CHECK(g.q == 49);
}

TEST_CASE("Smith normal form") {
  IMat m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 6;
  m(1, 1) = 8;
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Int>{2, 4});
  CHECK(s.U * m * s.V == s.D);
  CHECK(cokernel(m) == AbelianGroup{0, {2, 4}});
}
