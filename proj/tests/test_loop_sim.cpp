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


#include <cstdlib>
#include <random>

#include "alcovekit/loop_sim.hpp"
#include "doctest.h"

using namespace alcovekit;

namespace {

const CoeffRing R9 = CoeffRing::make(3, 2);

TruncSeries poly(const CoeffRing& r, std::int64_t low,
                 std::vector<std::int64_t> c,
                 std::int64_t prec = kExact) {
  return TruncSeries::from_coeffs(r, low, c, prec);
}

bool same_matrix_terms(const LoopElement& x, const LoopElement& y) {
  for (int i = 0; i < x.size(); ++i)
    for (int k = 0; k < x.size(); ++k)
      if (x.at(i, k).terms() != y.at(i, k).terms()) return false;
  return x.size() == y.size();
}

}  // namespace

TEST_CASE("coefficient ring") {
  CHECK(R9.modulus == 9);
  CHECK(R9.reduce(-1) == 8);
  CHECK(R9.inverse(2) == 5);
  CHECK_THROWS(R9.inverse(3));
  CHECK_THROWS(CoeffRing::make(4, 1));
}

TEST_CASE("series arithmetic and precision") {
  const TruncSeries x = poly(R9, 0, {1, 2}, 5);
  const TruncSeries y = poly(R9, 1, {3}, 4);
  CHECK((x + y).precision() == 4);
  const TruncSeries xy = x * y;
  // prec(xy) = min(5 + 1, 4 + 0).
  CHECK(xy.precision() == 4);
  CHECK(xy.terms() == std::map<std::int64_t, std::int64_t>{{1, 3}, {2, 6}});
  CHECK(x.valuation() == 0);
  CHECK(y.valuation() == 1);
  CHECK_THROWS(x.coeff(5));
  CHECK(x.truncated(1).terms() == std::map<std::int64_t, std::int64_t>{{0, 1}});
  CHECK((poly(R9, 0, {3}) * poly(R9, 0, {3})).is_zero());
}

TEST_CASE("inverse of v + p") {
  const TruncSeries inv = inverse(poly(R9, 0, {3, 1}), 6);
  CHECK(inv.terms() == std::map<std::int64_t, std::int64_t>{{-1, 1}, {-2, 6}});
  CHECK((inv * poly(R9, 0, {3, 1})).agrees_with(TruncSeries::constant(R9, 1)));
  const CoeffRing r = CoeffRing::make(5, 3);
  CHECK(inverse(poly(r, 0, {5, 1}), 6).terms() ==
        std::map<std::int64_t, std::int64_t>{{-1, 1}, {-2, 120}, {-3, 25}});
  CHECK_THROWS(inverse(poly(R9, 0, {3}), 6));
}

TEST_CASE("inverse of units round-trips") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> c(0, 8);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::int64_t> cs{1 + 3 * (t % 3) + (t % 2)};
    for (int k = 0; k < 4; ++k) cs.push_back(c(rng));
    const TruncSeries s = poly(R9, t % 3 - 1, cs);
    if (!R9.is_unit(cs[0])) continue;
    const TruncSeries si = inverse(s, 10);
    CHECK((s * si).agrees_with(TruncSeries::constant(R9, 1)));
  }
}

TEST_CASE("Frobenius on series") {
  const TruncSeries x = poly(R9, -1, {1, 2, 0, 4}, 5);
  const TruncSeries fx = phi(x);
  CHECK(fx.terms() ==
        std::map<std::int64_t, std::int64_t>{{-3, 1}, {0, 2}, {6, 4}});
  CHECK(fx.precision() == 15);
  CHECK(x.substitute_power(3).terms() == fx.terms());
}

TEST_CASE("precision soundness: higher precision agrees on the overlap") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> c(0, 8);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::int64_t> a(6), b(6);
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    a[0] = 1;
    const TruncSeries lo = poly(R9, 0, a, 4) * inverse(poly(R9, 0, b, 4) + TruncSeries::constant(R9, 1 - b[0] + 3), 4);
    const TruncSeries hi = poly(R9, 0, a, 8) * inverse(poly(R9, 0, b, 8) + TruncSeries::constant(R9, 1 - b[0] + 3), 8);
    CHECK(lo.agrees_with(hi));
  }
}

TEST_CASE("matrices") {
  const LoopElement e = LoopElement::elementary(R9, 2, 0, 1, 1, 3);
  const LoopElement id = LoopElement::identity(R9, 2);
  CHECK(membership(e, hyperspecial_pattern(2)).depth == 3);
  CHECK(membership(e, hyperspecial_pattern(2)).member);
  CHECK((e * inverse(e, 10)).agrees_with(id));
  const LoopElement d = LoopElement::diagonal_monomial(R9, {1, 1}, {1, 0});
  CHECK_FALSE(membership(d, hyperspecial_pattern(2)).member);
  CHECK(determinant(d).terms() == std::map<std::int64_t, std::int64_t>{{1, 1}});
}

TEST_CASE("Iwahori pattern rejects a unit below the diagonal") {
  const IntPattern iw{{0, 0}, {1, 0}};
  CHECK_FALSE(membership(LoopElement::elementary(R9, 2, 1, 0, 1, 0), iw).member);
  CHECK(membership(LoopElement::elementary(R9, 2, 1, 0, 1, 1), iw).member);
  CHECK(membership(LoopElement::elementary(R9, 2, 0, 1, 1, 0), iw).member);
}

TEST_CASE("phi_c preserves the Iwahori for c = v^(0,-1)") {
  const CoeffRing r = CoeffRing::make(5, 1);
  const LoopElement c = LoopElement::diagonal_monomial(r, {1, 1}, {0, -1});
  const IntPattern iw{{0, 0}, {1, 0}};
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    LoopElement a = random_congruent(r, 2, 1, 3, rng);
    a.at(0, 1) = a.at(0, 1) + TruncSeries::constant(r, 1 + t % 4);
    REQUIRE(membership(a, iw).member);
    CHECK(membership(phi_c(a, c, 40), iw).member);
  }
  const LoopElement one = LoopElement::identity(r, 2);
  CHECK(same_matrix_terms(phi_c(one, one, 10), phi(one)));
}

TEST_CASE("conjugation suite") {
  const ConjugationReport rep = conjugation_suite(3, 5, 1, {1, 0, 0}, 20, 1);
  CHECK(rep.all_ok);
  CHECK(rep.sharp_measured == rep.sharp_expected);
  CHECK(rep.trials.size() == 20);
  CHECK_THROWS(conjugation_suite(4, 5, 1, {1, 0, 0, 0}, 1, 1));
}

TEST_CASE("straightening") {
  const CoeffRing r = CoeffRing::make(7, 1);
  const LoopElement id = LoopElement::identity(r, 2);
  const StraightenParams prm{7, 1, 1, 1, 0, 0};
  const StraightenResult triv = straighten_right(id, id, id, prm);
  CHECK(triv.converged);
  CHECK(triv.a.agrees_with(id));

  std::mt19937_64 rng(derive_seed(42, 0));
  const StraightenInstance inst = random_straighten_instance(prm, rng);
  const StraightenResult res = straighten_right(inst.x, inst.b, inst.c, prm);
  CHECK(res.converged);
  CHECK(res.residual_is_identity);
  CHECK(res.iterations <= res.window / straighten_margin(prm) + 2);
  CHECK(straighten_step(inst, res.a, prm).agrees_with(res.a));

  const StraightenParams bad{3, 2, 1, 1, 0, 0};
  CHECK(straighten_margin(bad) <= 0);
  CHECK(straighten_right(id, id, id, bad).refused);
  StraightenParams zero_f = prm;
  zero_f.f = 0;
  CHECK(straighten_right(id, id, id, zero_f).refused);
}

TEST_CASE("precision window override") {
  CHECK(default_window(7) == 28);
  setenv("ALCOVEKIT_PRECISION", "40", 1);
  CHECK(default_window(7) == 40);
  unsetenv("ALCOVEKIT_PRECISION");
}

TEST_CASE("v versus v + p") {
  const CompareReport a1 = congruence_compare(5, 1, 7);
  CHECK(a1.congruence);
  CHECK(a1.first_division);
  CHECK(a1.second_division);
  const CompareReport r = congruence_compare(7, 2, 3);
  CHECK(r.congruence);
  CHECK(r.first_division);
  CHECK(r.second_division);
  CHECK(r.first_quotient == std::vector<std::int64_t>{3, 1});
  CHECK_THROWS(congruence_compare(1, 2, 3));
}

TEST_CASE("seed derivation is deterministic and spreads") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}
