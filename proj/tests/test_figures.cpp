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


#include <set>

#include "alcovekit/figures.hpp"
#include "alcovekit/galois_types.hpp"
#include "doctest.h"

using namespace alcovekit;

TEST_CASE("SL2 figure nodes") {
  const Figure f = render(sl2_alcove_spec(7, 24));
  REQUIRE(f.nodes.size() == 25);
  CHECK(f.segments == 24);
  int green = 0, red = 0, white = 0;
  for (const auto& n : f.nodes) {
    if (n.color == NodeColor::kGreen) ++green;
    if (n.color == NodeColor::kRed) ++red;
    if (n.color == NodeColor::kWhite) ++white;
    CHECK(n.in_orbit == (n.n % 2 == 0));
    CHECK(in_orbit_of_o(n.n) == n.in_orbit);
  }
  CHECK(green == 7);
  CHECK(red == 6);
  CHECK(white == 12);
  CHECK(f.nodes[0].n == 0);
  CHECK(f.nodes[0].color == NodeColor::kGreen);
}

TEST_CASE("green nodes are Frobenius invariant") {
  const RootDatum sl2 = build_root_datum("SL2");
  const GammaData g = make_split_gamma(sl2, 7, 24, 2);
  for (const auto& n : render(sl2_alcove_spec(7, 24)).nodes) {
    if (!n.in_orbit) continue;
    const bool inv =
        frobenius_invariant(sl2, GaloisType::constant(sl2, g, n.lambda))
            .invariant;
    CHECK(inv == (n.color == NodeColor::kGreen));
  }
}

TEST_CASE("rendering is deterministic") {
  CHECK(render(sl2_alcove_spec(7, 24)).svg == render(sl2_alcove_spec(7, 24)).svg);
  CHECK(render(genericity_spec(19, 36)).svg ==
        render(genericity_spec(19, 36)).svg);
  CHECK(render(admissible_spec({1, 0, 0})).svg ==
        render(admissible_spec({1, 0, 0})).svg);
}

TEST_CASE("genericity and admissible figures") {
  const Figure gen = render(genericity_spec(19, 36));
  CHECK(gen.shaded_polygons == 7);
  CHECK(gen.svg.rfind("<?xml", 0) == 0);
  CHECK(gen.svg.find("<svg") != std::string::npos);
  const Figure adm = render(admissible_spec({1, 0, 0}));
  CHECK(adm.shaded_alcoves.size() == 7);
  CHECK(std::set<AffineWeylElement>(adm.shaded_alcoves.begin(),
                                    adm.shaded_alcoves.end())
            .size() == 7);
}

TEST_CASE("segment count for large e") {
  FigureSpec s = sl2_alcove_spec(7, 48);
  CHECK(render(s).segments == 48);
  s = sl2_alcove_spec(11, 600);
  CHECK(render(s).segments == 200);
  s = sl2_alcove_spec(13, 1210);
  CHECK(render(s).segments == 121);
}

TEST_CASE("unsupported figures are rejected") {
  CHECK_THROWS_AS(render(admissible_spec({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(render(sl2_alcove_spec(7, 0)), std::invalid_argument);
}
