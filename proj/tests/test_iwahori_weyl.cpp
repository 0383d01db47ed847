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
#include <set>

#include "alcovekit/iwahori_weyl.hpp"
#include "doctest.h"

using namespace alcovekit;

namespace {

struct Gl3 {
  RootDatum rd = build_root_datum("GL3");
  BaseAlcove base = base_alcove(rd);
  AffineWeylElement t = base.omega_generators.at(0);
};

}  // namespace

TEST_CASE("lengths and the rotation") {
  Gl3 g;
  CHECK(length(g.rd, g.base, translation_element(g.rd, {0, 0, 0})) == 0);
  CHECK(g.t == translation_element(g.rd, {1, 0, 0}) *
                   finite_element(g.rd, g.rd.weyl_from_permutation({1, 2, 0})));
  CHECK(length(g.rd, g.base, g.t) == 0);
  CHECK(length(g.rd, g.base, translation_element(g.rd, {1, 0, 0})) == 2);
  CHECK(length(g.rd, g.base, translation_element(g.rd, {1, 1, 1})) == 0);
  CHECK(length(g.rd, g.base, translation_element(g.rd, {2, 0, 0})) == 4);
}

TEST_CASE("reduced words of translations") {
  Gl3 g;
  const ReducedWord a = reduced_word(g.rd, g.base,
                                     translation_element(g.rd, {1, 0, 0}));
  CHECK(a.word == std::vector<int>{3, 2});
  CHECK(a.omega == g.t);
  const ReducedWord b = reduced_word(g.rd, g.base,
                                     translation_element(g.rd, {0, 0, 1}));
  CHECK(b.word == std::vector<int>{2, 1});
  CHECK(b.omega == g.t);
  const ReducedWord c = reduced_word(g.rd, g.base, g.t);
  CHECK(c.word.empty());
  CHECK(word_name(a, g.rd, g.base) == "s~3 s~2 t~");
}

TEST_CASE("reduced words recompose") {
  for (const char* label : {"GL2", "GL3", "SL3", "PGL3"}) {
    const RootDatum rd = build_root_datum(label);
    const BaseAlcove base = base_alcove(rd);
    std::mt19937_64 rng(17);
    const int k = static_cast<int>(base.simple_affine_reflections.size());
    std::uniform_int_distribution<int> pick(1, k);
    std::uniform_int_distribution<int> len(0, 8);
    for (int trial = 0; trial < 250; ++trial) {
      std::vector<int> word(len(rng));
      for (auto& s : word) s = pick(rng);
      AffineWeylElement omega = translation_element(rd, IVec(rd.rank, 0));
      if (!base.omega_generators.empty() && trial % 2 == 1)
        omega = base.omega_generators[0];
      const AffineWeylElement w = compose_word(rd, base, word, omega);
      const ReducedWord rw = reduced_word(rd, base, w);
      CHECK(compose_word(rd, base, rw.word, rw.omega) == w);
      CHECK(Int(rw.word.size()) == length(rd, base, w));
      CHECK(rw.word.size() <= word.size());
    }
  }
}

TEST_CASE("length is subadditive and blind to Omega") {
  Gl3 g;
  const auto elems = elements_up_to_length(g.rd, g.base, 3);
  for (const auto& a : elems)
    for (const auto& b : elems)
      CHECK(length(g.rd, g.base, a * b) <=
            length(g.rd, g.base, a) + length(g.rd, g.base, b));
  for (const auto& a : elems)
    CHECK(length(g.rd, g.base, a * g.t) == length(g.rd, g.base, a));
}

TEST_CASE("Bruhat order examples") {
  Gl3 g;
  BruhatOrder order(g.rd, g.base);
  const auto w = [&](std::vector<int> word) {
    return compose_word(g.rd, g.base, word, g.t);
  };
  CHECK(order.leq(w({2}), w({3, 2})));
  CHECK(order.leq(w({}), w({3, 2})));
  CHECK(order.leq(w({}), w({1, 2, 3, 1})));
  CHECK_FALSE(order.leq(w({1}), w({3, 2})));
  CHECK_FALSE(order.leq(w({3, 2}), w({2})));
}

TEST_CASE("admissible sets") {
  Gl3 g;
  CHECK(admissible_set(g.rd, g.base, {1, 0, 0}).size() == 7);
  const auto zero = admissible_set(g.rd, g.base, {0, 0, 0});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].element == translation_element(g.rd, {0, 0, 0}));

  const RootDatum gl2 = build_root_datum("GL2");
  const BaseAlcove b2 = base_alcove(gl2);
  const auto adm2 = admissible_set(gl2, b2, {1, 0});
  std::set<AffineWeylElement> got;
  for (const auto& a : adm2) got.insert(a.element);
  const std::set<AffineWeylElement> want{
      translation_element(gl2, {1, 0}), translation_element(gl2, {0, 1}),
      translation_element(gl2, {1, 0}) *
          finite_element(gl2, gl2.weyl_from_permutation({1, 0}))};
  CHECK(got == want);
}

TEST_CASE("admissible sets contain the Weyl orbit and are closed") {
  Gl3 g;
  for (const IVec& mu : {IVec{1, 0, 0}, IVec{1, 1, 0}, IVec{2, 1, 0}}) {
    const auto adm = admissible_set(g.rd, g.base, mu);
    std::set<AffineWeylElement> set;
    for (const auto& a : adm) set.insert(a.element);
    for (const auto& w : weyl_group(g.rd))
      CHECK(set.count(translation_element(g.rd, w.matrix * mu)) == 1);
    BruhatOrder order(g.rd, g.base);
    for (const auto& a : set)
      for (const auto& b : order.lower_set(a)) CHECK(set.count(b) == 1);
    for (std::size_t i = 1; i < adm.size(); ++i) {
      const bool ordered =
          adm[i - 1].length < adm[i].length ||
          (adm[i - 1].length == adm[i].length &&
           adm[i - 1].word.word < adm[i].word.word);
      CHECK(ordered);
    }
  }
}

TEST_CASE("height of a cocharacter") {
  CHECK(h_mu(build_root_datum("GL3xGL3"), {1, 0, 0, 1, 0, 0}) == 1);
  CHECK(h_mu(build_root_datum("GL3"), {0, 0, 0}) == 0);
  CHECK(h_mu(build_root_datum("GL3"), {2, 1, 0}) == 2);
}
