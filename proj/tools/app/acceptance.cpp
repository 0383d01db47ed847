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


#include "acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "alcovekit/apartment.hpp"
#include "alcovekit/figures.hpp"
#include "alcovekit/galois_types.hpp"
#include "alcovekit/iwahori_weyl.hpp"
#include "alcovekit/loop_sim.hpp"
#include "alcovekit/rootdata.hpp"

#ifndef ALCOVEKIT_DEFAULT_GOLDEN_DIR
#define ALCOVEKIT_DEFAULT_GOLDEN_DIR "tests/golden"
#endif

namespace alcovekit::app {

namespace {

using i64 = std::int64_t;

// Collects failed checks; the first few are kept for the report.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 4) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << total_ - failed_ << "/" << total_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& m : messages_) os << "; FAIL " << m;
    return os.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

CriterionResult finish(int id, const std::string& title, const Checker& ck) {
  return {id, title, ck.ok(), ck.detail(), 0};
}

// Runs a criterion body and turns exceptions into failures.
CriterionResult guarded(int id, const std::string& title,
                        const std::function<void(Checker&)>& body) {
  Checker ck;
  try {
    body(ck);
  } catch (const std::exception& ex) {
    ck.check(false, std::string("exception: ") + ex.what());
  }
  return finish(id, title, ck);
}

Int poly19(int a, int b, int c, int d) {
  const Int p = 19;
  return a + b * p + c * p * p + d * p * p * p;
}

std::vector<int> two_factor_perm(const std::string& first,
                                 const std::string& second) {
  const auto a = parse_cycles(first, 3);
  const auto b = parse_cycles(second, 3);
  return {a[0], a[1], a[2], 3 + b[0], 3 + b[1], 3 + b[2]};
}

std::string vec_text(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

bool same_terms(const TruncSeries& x, const TruncSeries& y) {
  return x.terms() == y.terms() && x.precision() == y.precision();
}

bool same_matrix(const LoopElement& x, const LoopElement& y) {
  if (x.size() != y.size()) return false;
  for (int i = 0; i < x.size(); ++i)
    for (int k = 0; k < x.size(); ++k)
      if (!same_terms(x.at(i, k), y.at(i, k))) return false;
  return true;
}

TruncSeries random_series(const CoeffRing& ring, std::mt19937_64& rng,
                          bool exact) {
  std::uniform_int_distribution<i64> coeff(0, ring.modulus - 1);
  std::uniform_int_distribution<i64> low(-3, 3);
  std::uniform_int_distribution<int> len(1, 6);
  std::vector<i64> cs(len(rng));
  for (auto& c : cs) c = coeff(rng);
  const i64 lo = low(rng);
  const i64 prec = exact ? kExact : lo + static_cast<i64>(cs.size()) + 2;
  return TruncSeries::from_coeffs(ring, lo, cs, prec);
}

// SL2 with lambda = m in lattice coordinates and split inertia: the class
// is Frobenius invariant iff (p - 1) m or (p + 1) m vanishes modulo e.
bool sl2_congruence_oracle(const Int& p, const Int& e, const Int& m) {
  return ((p - 1) * m) % e == 0 || ((p + 1) * m) % e == 0;
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream f(path, std::ios::binary);
  ok = static_cast<bool>(f);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

std::string default_golden_dir() {
  if (const char* env = std::getenv("ALCOVEKIT_GOLDEN_DIR"))
    if (*env) return env;
  return ALCOVEKIT_DEFAULT_GOLDEN_DIR;
}

// ----------------------------------------------------------- criterion 1

CriterionResult criterion_census(const AcceptanceConfig&) {
  return guarded(1, "SL2 census p=7 e=24", [](Checker& ck) {
    const RootDatum rd = build_root_datum("SL2");
    const Int p = 7, e = 24;
    const GammaData g = make_split_gamma(rd, p, e, minimal_degree(p, e));
    ck.check(g.r == 2, "minimal degree r = 2");
    const CensusResult c = census(rd, g);
    ck.check(c.classes.size() == 13,
             "13 classes, got " + std::to_string(c.classes.size()));
    ck.check(c.invariance_decided, "invariance decided");
    ck.check(c.invariant_count == 7,
             "7 invariant, got " + std::to_string(c.invariant_count));
    bool found = false;
    for (const auto& cl : c.classes) {
      const Int m = cl.representative.at(0);
      ck.check(cl.invariant.has_value() &&
                   *cl.invariant == sl2_congruence_oracle(p, e, m),
               "class " + to_string(m) + " agrees with the congruence rule");
      if (mod_floor(m, e) == 3 || mod_floor(m, e) == 21) {
        found = true;
        ck.check(cl.invariant.value_or(false), "class of -3 invariant");
        ck.check(cl.witness && !(cl.witness->w == rd.identity()),
                 "class of -3 needs the nontrivial Weyl element");
      }
    }
    ck.check(found, "class of -3 present");
    ck.check(((p + 1) * Int(-3)) % e == 0 && ((p - 1) * Int(-3)) % e != 0,
             "(p+1)(-3) = 0 mod e and (p-1)(-3) != 0 mod e");
  });
}

// ----------------------------------------------------------- criterion 2

CriterionResult criterion_fundamental(const AcceptanceConfig&) {
  return guarded(2, "fundamental groups and U3 Tate count", [](Checker& ck) {
    ck.check(pi1(build_root_datum("PGL3")) == AbelianGroup{0, {3}},
             "pi1(PGL3) = Z/3");
    for (int n = 1; n <= 4; ++n)
      ck.check(pi1(build_root_datum("GL" + std::to_string(n))) ==
                   AbelianGroup{1, {}},
               "pi1(GL" + std::to_string(n) + ") = Z");
    for (int n = 2; n <= 4; ++n)
      ck.check(pi1(build_root_datum("SL" + std::to_string(n))).is_trivial(),
               "pi1(SL" + std::to_string(n) + ") = 0");
    const RootDatum gl3 = build_root_datum("GL3");
    IMat j(3, 3);
    for (int i = 0; i < 3; ++i) j(2 - i, i) = -1;
    const GammaData g =
        make_gamma(gl3, 7, 6, 1, IMat::identity(3), gl3.lattice_map(j));
    const AbelianGroup co = pi1_coinvariants(gl3, g).group;
    ck.check(co == AbelianGroup{0, {2}}, "U3 coinvariants Z/2, got " +
                                             co.to_string());
    const AbelianGroup tate = tate_h0(gl3, g);
    ck.check(tate.free_rank == 0 && tate.order() == g.e / 2,
             "Tate H0 of order e/2 = 3, got " + tate.to_string());
  });
}

// ----------------------------------------------------------- criterion 3

CriterionResult criterion_admissible(const AcceptanceConfig&) {
  return guarded(3, "Adm(1,0,0) in GL3", [](Checker& ck) {
    const RootDatum rd = build_root_datum("GL3");
    const BaseAlcove base = base_alcove(rd);
    const IVec mu{1, 0, 0};
    const auto adm = admissible_set(rd, base, mu);
    ck.check(adm.size() == 7, "7 elements, got " + std::to_string(adm.size()));
    const AffineWeylElement t = base.omega_generators.at(0);
    const std::vector<std::vector<int>> words{{},     {1},    {2},   {3},
                                              {3, 2}, {2, 1}, {1, 3}};
    std::map<AffineWeylElement, std::vector<int>> expected;
    for (const auto& w : words) expected[compose_word(rd, base, w, t)] = w;
    std::set<AffineWeylElement> got;
    for (const auto& a : adm) {
      got.insert(a.element);
      auto it = expected.find(a.element);
      ck.check(it != expected.end(),
               "unexpected element " + to_string(rd, a.element));
      if (it != expected.end())
        ck.check(a.word.word == it->second && a.word.omega == t,
                 "word of " + to_string(rd, a.element));
      ck.check(a.length == Int(a.word.word.size()), "length equals word size");
    }
    ck.check(got.size() == expected.size(), "set equality");
    // Translations v^mu', v^{s13 mu'}, v^{s12 mu'} and their words.
    const std::vector<std::pair<IVec, std::vector<int>>> translations{
        {{1, 0, 0}, {3, 2}}, {{0, 0, 1}, {2, 1}}, {{0, 1, 0}, {1, 3}}};
    for (const auto& [nu, w] : translations)
      ck.check(translation_element(rd, nu) == compose_word(rd, base, w, t),
               "v^" + vec_text(nu) + " word");
    // Downward closure of the translations.
    BruhatOrder order(rd, base);
    std::set<AffineWeylElement> closure;
    for (const auto& [nu, w] : translations) {
      const auto& lower = order.lower_set(translation_element(rd, nu));
      closure.insert(lower.begin(), lower.end());
    }
    ck.check(closure == got, "Bruhat downward closure equals Adm");
    const Figure fig = render(admissible_spec(mu));
    const std::set<AffineWeylElement> shaded(fig.shaded_alcoves.begin(),
                                             fig.shaded_alcoves.end());
    ck.check(shaded == got && fig.shaded_alcoves.size() == 7,
             "figure shading equals Adm");
  });
}

// ----------------------------------------------------------- criterion 4

CriterionResult criterion_weil(const AcceptanceConfig&) {
  return guarded(4, "Weil-restriction type at p=19", [](Checker& ck) {
    const RootDatum rd = build_root_datum("GL3xGL3");
    const Int p = 19;
    const Int e = p * p * p * p - 1;
    const GammaData g = make_gamma(
        rd, p, e, 4, rd.permutation_map({3, 4, 5, 0, 1, 2}),
        IMat::identity(6));
    const WeylElement s =
        rd.weyl_from_permutation(two_factor_perm("(123)", "(12)"));
    const WeilRestrictionType t = type_from_s_mu(rd, s, {16, 11, 7, 4, 2, 1}, g);
    ck.check(t.mu_eta == IVec{18, 12, 7, 6, 3, 1}, "mu + eta");

    const Int A = poly19(18, 3, 7, 1), B = poly19(12, 6, 12, 6),
              C = poly19(7, 1, 18, 3), D = poly19(6, 12, 6, 12),
              E = poly19(3, 7, 1, 18), F = poly19(1, 18, 3, 7);
    const std::vector<IVec> lambda{{A, B, C, D, E, F},
                                   {F, D, E, B, A, C},
                                   {C, B, A, D, F, E},
                                   {E, D, F, B, C, A}};
    const std::vector<WeylElement> w{
        rd.weyl_from_permutation(two_factor_perm("(123)", "(12)")),
        rd.weyl_from_permutation(two_factor_perm("(13)", "(23)")),
        rd.weyl_from_permutation(two_factor_perm("(12)", "(321)")),
        rd.identity()};
    const IVec winv02{B, C, A, E, D, F};
    const IVec winv13{E, D, F, B, C, A};
    const WeylElement c02 =
        rd.weyl_from_permutation(two_factor_perm("(321)", "(12)"));
    const WeylElement c13 =
        rd.weyl_from_permutation(two_factor_perm("(12)", "(321)"));
    const IVec nu02{-18, -12, -7, -6, -3, -1};
    const IVec nu13{-6, -3, -1, -18, -12, -7};

    for (int j = 0; j < 4; ++j) {
      const std::string tag = "j=" + std::to_string(j);
      ck.check(t.type.lambda.at(j) == lambda[j], "lambda " + tag);
      ck.check(t.type.w.at(j) == w[j], "w " + tag);
      const IVec winv = j % 2 == 0 ? winv02 : winv13;
      ck.check(inverse(w[j]).matrix * lambda[j] == winv, "w^-1 lambda " + tag);
      ck.check(t.x.eta.at(j) == scale(Rational(-1) / Rational(e),
                                      to_rational(winv)),
               "x " + tag);
      const WeylElement cw = j % 2 == 0 ? c02 : c13;
      const IVec cnu = j % 2 == 0 ? nu02 : nu13;
      ck.check(t.c.at(j).w == cw, "c Weyl part " + tag);
      ck.check(t.c.at(j).translation == cw.matrix * cnu,
               "c translation " + tag);
    }
    ck.check(t.gamma_fixed && is_gamma_fixed(t.x), "x is Gamma-fixed");
    ck.check(t.c_phi_x_equals_x, "constructor reports c phi(x) = x");
    const ApartmentPoint fx = frobenius(t.x);
    bool fixed = true;
    for (int j = 0; j < 4; ++j) fixed = fixed && act(t.c[j], fx.eta[j]) == t.x.eta[j];
    ck.check(fixed, "c phi(x) = x recomputed slotwise");
    ck.check(is_d_generic(rd, t.x, 2), "x is 2-generic");
    ck.note("genericity " + to_string(genericity(rd, t.x)));
  });
}

// ----------------------------------------------------------- criterion 5

CriterionResult criterion_conjugation(const AcceptanceConfig& cfg) {
  return guarded(5, "h_mu and conjugation depth bound", [&](Checker& ck) {
    ck.check(h_mu(build_root_datum("GL3xGL3"), {1, 0, 0, 1, 0, 0}) == 1,
             "h_mu((1,0,0),(1,0,0)) = 1");
    struct Combo {
      int size;
      std::vector<i64> mu;
      i64 p;
      int a;
    };
    std::vector<Combo> combos;
    for (i64 p : {3, 5, 7})
      for (int a : {1, 2}) {
        combos.push_back({2, {1, 0}, p, a});
        combos.push_back({3, {2, 1, 0}, p, a});
      }
    const int n = static_cast<int>(combos.size());
    int total = 0;
    i64 min_slack = kExact;
    for (int k = 0; k < n; ++k) {
      const Combo& cb = combos[k];
      const int trials =
          cfg.conjugation_trials / n + (k < cfg.conjugation_trials % n ? 1 : 0);
      const ConjugationReport rep = conjugation_suite(
          cb.size, cb.p, cb.a, cb.mu, trials, derive_seed(cfg.seed, 500 + k));
      total += static_cast<int>(rep.trials.size());
      for (const auto& t : rep.trials) {
        min_slack = std::min(min_slack, t.measured - t.bound);
        ck.check(t.measured >= t.bound - Tolerances::kConjugationSlack,
                 "GL" + std::to_string(cb.size) + " p=" + std::to_string(cb.p) +
                     " a=" + std::to_string(cb.a) + " n=" +
                     std::to_string(t.n) + " depth " +
                     std::to_string(t.measured) + " < " +
                     std::to_string(t.bound));
      }
      if (cb.a == 1)
        ck.check(rep.sharp_measured == rep.sharp_expected,
                 "sharpness at a=1, GL" + std::to_string(cb.size) +
                     " p=" + std::to_string(cb.p));
      else
        ck.check(rep.sharp_measured >= rep.sharp_expected - 2 * cb.a + 2,
                 "monomial instance respects the bound at a=2");
    }
    ck.check(total == cfg.conjugation_trials, "trial count");
    ck.note(std::to_string(total) + " trials, min slack " +
            std::to_string(min_slack));
  });
}

// ----------------------------------------------------------- criterion 6

CriterionResult criterion_straighten(const AcceptanceConfig& cfg) {
  return guarded(6, "straightening fixed point", [&](Checker& ck) {
    const std::vector<StraightenParams> cases{{7, 1, 1, 1, 0, 0},
                                              {5, 2, 2, 1, 0, 0}};
    int max_iter = 0;
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
      const StraightenParams& prm = cases[ci];
      const std::string tag = "(p,a,f,h)=(" + std::to_string(prm.p) + "," +
                              std::to_string(prm.a) + "," +
                              std::to_string(prm.f) + "," +
                              std::to_string(prm.h_mu) + ")";
      ck.check(straighten_margin(prm) > 0, tag + " margin positive");
      for (int t = 0; t < cfg.straighten_trials; ++t) {
        std::mt19937_64 rng(derive_seed(cfg.seed, 1000 * (ci + 1) + t));
        const StraightenInstance inst = random_straighten_instance(prm, rng);
        const StraightenResult r1 = straighten_right(inst.x, inst.b, inst.c, prm);
        const LoopElement start =
            random_congruent(inst.x.ring(), 2, prm.f, 3, rng);
        const StraightenResult r2 =
            straighten_right(inst.x, inst.b, inst.c, prm, start);
        const std::string id = tag + " trial " + std::to_string(t);
        ck.check(!r1.refused && r1.converged && r2.converged,
                 id + " converged");
        ck.check(r1.residual_is_identity && r2.residual_is_identity,
                 id + " residual is identity");
        ck.check(r1.residual_precision >=
                     r1.window - Tolerances::residual_loss(prm.h_mu, prm.a),
                 id + " residual precision");
        ck.check(r1.a.agrees_with(r2.a), id + " unique fixed point");
        const i64 bound = r1.window / straighten_margin(prm) +
                          Tolerances::kIterationSlack;
        ck.check(r1.iterations <= bound && r2.iterations <= bound,
                 id + " iteration bound");
        max_iter = std::max({max_iter, r1.iterations, r2.iterations});
      }
    }
    StraightenParams bad{3, 2, 1, 1, 0, 0};
    const StraightenResult refused =
        straighten_right(LoopElement(), LoopElement(), LoopElement(), bad);
    ck.check(refused.refused, "non-contracting parameters are refused");
    ck.note("max iterations " + std::to_string(max_iter));
  });
}

// ----------------------------------------------------------- criterion 7

CriterionResult criterion_congruence(const AcceptanceConfig&) {
  return guarded(7, "v versus v+p congruences", [](Checker& ck) {
    {
      const CoeffRing r = CoeffRing::make(3, 2);
      const TruncSeries vp = TruncSeries::from_coeffs(r, 0, {3, 1});
      ck.check(same_terms(vp * vp * vp, TruncSeries::monomial(r, 1, 3)),
               "(v+3)^3 = v^3 mod 9");
      ck.check(congruence_compare(3, 2, 3).congruence, "compare (3,2)");
    }
    for (auto [p, a, n] : std::vector<std::tuple<i64, int, i64>>{
             {3, 2, 7}, {5, 3, 9}}) {
      const std::string tag = "(p,a,n)=(" + std::to_string(p) + "," +
                              std::to_string(a) + "," + std::to_string(n) +
                              ")";
      const CompareReport rep = congruence_compare(n, a, p);
      ck.check(rep.congruence, tag + " congruence");
      ck.check(rep.first_division && rep.second_division, tag + " divisions");
      const CoeffRing r = CoeffRing::make(p, a);
      // Binomial oracle: (v+p)^n = v^{n-a+1} sum_j C(n, a-1-j) p^{a-1-j} v^j.
      std::vector<i64> expect(a);
      for (int j = 0; j < a; ++j) {
        const int k = a - 1 - j;
        Int binom = 1;
        for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        Int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        expect[j] = to_i64(mod_floor(binom * pk, Int(r.modulus)));
      }
      std::vector<i64> got = rep.first_quotient;
      got.resize(std::max<std::size_t>(got.size(), a), 0);
      ck.check(got == expect, tag + " first quotient");
      TruncSeries vpow = TruncSeries::constant(r, 1);
      const TruncSeries vp = TruncSeries::from_coeffs(r, 0, {p, 1});
      for (i64 i = 0; i < n - a + 1; ++i) vpow = vpow * vp;
      ck.check(same_terms(vpow * TruncSeries::from_coeffs(
                                     r, 0, rep.second_quotient),
                          TruncSeries::monomial(r, 1, n)),
               tag + " second quotient times (v+p)^{n-a+1} = v^n");
    }
    // (v+p)^{-1} = v^{-1} sum_k (-p)^k v^{-k}, zero from k = a on.
    for (auto [p, a] : std::vector<std::pair<i64, int>>{{3, 2}, {5, 3}}) {
      const CoeffRing r = CoeffRing::make(p, a);
      const TruncSeries vp = TruncSeries::from_coeffs(r, 0, {p, 1});
      const TruncSeries inv = inverse(vp, 8);
      std::map<i64, i64> expect;
      i64 c = 1;
      for (int k = 0; k < a; ++k) {
        expect[-1 - k] = r.reduce(c);
        c *= -p;
      }
      ck.check(inv.terms() == expect,
               "inverse of v+" + std::to_string(p) + " mod " +
                   std::to_string(r.modulus));
      ck.check(inv.precision() >= 8, "inverse precision");
    }
    {
      const CoeffRing r = CoeffRing::make(3, 2);
      const auto terms =
          inverse(TruncSeries::from_coeffs(r, 0, {3, 1}), 8).terms();
      ck.check(terms == std::map<i64, i64>{{-1, 1}, {-2, 6}},
               "(v+3)^{-1} = v^-1 + 6 v^-2 mod 9");
      const CoeffRing r5 = CoeffRing::make(5, 3);
      const auto t5 =
          inverse(TruncSeries::from_coeffs(r5, 0, {5, 1}), 8).terms();
      ck.check(t5 == std::map<i64, i64>{{-1, 1}, {-2, 120}, {-3, 25}},
               "(v+5)^{-1} = v^-1 - 5 v^-2 + 25 v^-3 mod 125");
    }
  });
}

// ----------------------------------------------------------- criterion 8

CriterionResult criterion_figures(const AcceptanceConfig& cfg) {
  return guarded(8, "figure goldens and node colors", [&](Checker& ck) {
    const Figure sl2 = render(sl2_alcove_spec(7, 24));
    const Figure gen = render(genericity_spec(19, 36));
    const Figure adm = render(admissible_spec({1, 0, 0}));
    const std::vector<std::pair<std::string, const Figure*>> files{
        {"sl2_alcove.svg", &sl2},
        {"alcove_genericity.svg", &gen},
        {"admissible_set.svg", &adm}};
    for (const auto& [name, fig] : files) {
      bool ok = false;
      const std::string golden = read_file(cfg.golden_dir + "/" + name, ok);
      ck.check(ok, "golden " + name + " readable in " + cfg.golden_dir);
      if (ok) ck.check(golden == fig->svg, "golden " + name + " byte match");
    }
    ck.check(render(sl2_alcove_spec(7, 24)).svg == sl2.svg,
             "rendering is deterministic");
    ck.check(gen.shaded_polygons == 19 / 3 + 1,
             "genericity shading polygons k = 0..6");

    const RootDatum rd = build_root_datum("SL2");
    const Int p = 7, e = 24;
    const GammaData g = make_split_gamma(rd, p, e, 2);
    const CensusResult c = census(rd, g);
    int green = 0, red = 0, white = 0;
    std::set<Int> classes;
    for (const auto& node : sl2.nodes) {
      const std::string tag = "node " + std::to_string(node.n);
      if (node.color == NodeColor::kWhite) {
        ++white;
        ck.check(!node.in_orbit && !in_orbit_of_o(node.n),
                 tag + " white outside the orbit");
        continue;
      }
      ck.check(node.in_orbit, tag + " colored inside the orbit");
      const Int m = node.lambda.at(0);
      classes.insert(mod_floor(m, e) <= e / 2 ? mod_floor(m, e)
                                              : e - mod_floor(m, e));
      const bool inv =
          frobenius_invariant(rd, GaloisType::constant(rd, g, node.lambda))
              .invariant;
      const bool oracle = sl2_congruence_oracle(p, e, m);
      if (node.color == NodeColor::kGreen) {
        ++green;
        ck.check(inv && oracle, tag + " green is invariant");
      } else {
        ++red;
        ck.check(!inv && !oracle, tag + " red is not invariant");
      }
    }
    ck.check(classes.size() == c.classes.size(),
             "colored nodes meet every census class");
    std::size_t green_classes = 0;
    for (const auto& m : classes)
      if (sl2_congruence_oracle(p, e, m)) ++green_classes;
    ck.check(green_classes == c.invariant_count,
             "green classes equal census invariant count");
    ck.note("nodes green " + std::to_string(green) + " red " +
            std::to_string(red) + " white " + std::to_string(white));
  });
}

// ----------------------------------------------------------- criterion 9

CriterionResult criterion_properties(const AcceptanceConfig& cfg) {
  return guarded(9, "property suites", [&](Checker& ck) {
    // Cocycle relations on census representatives.
    int reps = 0, q_form = 0;
    for (const std::string label : {"SL2", "GL2", "GL3"})
      for (auto [p, e] : std::vector<std::pair<int, int>>{{7, 24}, {5, 4},
                                                          {3, 8}}) {
        const RootDatum rd = build_root_datum(label);
        const GammaData g = make_split_gamma(rd, p, e, minimal_degree(p, e));
        const CensusResult c = census(rd, g);
        ck.check(c.tate_order >= Int(c.classes.size()),
                 label + " census within the Tate bound");
        for (const auto& cl : c.classes) {
          const GaloisType t = GaloisType::constant(rd, g, cl.representative);
          const CocycleReport rep = check_cocycle(rd, t, cocycle_values(rd, t));
          ++reps;
          if (rep.conjugation_q) ++q_form;
          ck.check(rep.all(), label + " cocycle at " +
                                  vec_text(cl.representative) + " p=" +
                                  std::to_string(p) + " e=" +
                                  std::to_string(e));
        }
      }
    ck.note(std::to_string(reps) + " representatives, gamma^q form holds on " +
            std::to_string(q_form));

    // Bruhat order axioms on short elements.
    for (const std::string label : {"GL2", "GL3"}) {
      const RootDatum rd = build_root_datum(label);
      const BaseAlcove base = base_alcove(rd);
      const auto elems = elements_up_to_length(rd, base, 4);
      BruhatOrder order(rd, base);
      std::vector<Int> len;
      for (const auto& x : elems) len.push_back(length(rd, base, x));
      const std::size_t n = elems.size();
      std::vector<std::vector<char>> leq(n, std::vector<char>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          leq[i][j] = order.leq(elems[i], elems[j]);
      bool refl = true, anti = true, trans = true, graded = true;
      for (std::size_t i = 0; i < n; ++i) {
        refl = refl && leq[i][i];
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && leq[i][j]) {
            anti = anti && !leq[j][i];
            graded = graded && len[i] < len[j];
          }
          if (!leq[i][j]) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (leq[j][k]) trans = trans && leq[i][k];
        }
      }
      ck.check(refl, label + " Bruhat reflexive");
      ck.check(anti, label + " Bruhat antisymmetric");
      ck.check(trans, label + " Bruhat transitive");
      ck.check(graded, label + " Bruhat strictly increases length");
      ck.note(label + " " + std::to_string(n) + " elements of length <= 4");
    }

    // Frobenius is a ring homomorphism.
    for (int t = 0; t < cfg.property_trials; ++t) {
      std::mt19937_64 rng(derive_seed(cfg.seed, 5000 + t));
      const i64 p = std::array<i64, 3>{3, 5, 7}[t % 3];
      const CoeffRing r = CoeffRing::make(p, 1 + t % 2);
      const bool exact = t % 4 < 2;
      const TruncSeries x = random_series(r, rng, exact);
      const TruncSeries y = random_series(r, rng, exact);
      ck.check(same_terms(phi(x * y), phi(x) * phi(y)),
               "phi(xy) = phi(x) phi(y), trial " + std::to_string(t));
      ck.check(same_terms(phi(x + y), phi(x) + phi(y)),
               "phi(x+y) = phi(x) + phi(y), trial " + std::to_string(t));
      const LoopElement a = random_congruent(r, 2, 1, 3, rng);
      const LoopElement b = random_congruent(r, 2, 1, 3, rng);
      ck.check(same_matrix(phi(a * b), phi(a) * phi(b)),
               "phi on matrices, trial " + std::to_string(t));
    }

    // Contraction: phi raises depth by the factor p; the straightening map
    // raises the distance between two points by the margin.
    const StraightenParams prm{7, 1, 1, 1, 0, 0};
    const i64 window = default_window(prm.p);
    const i64 target = window + 2 * (prm.h_mu + prm.a) * 2 + 4;
    i64 min_gain = kExact;
    for (int t = 0; t < cfg.property_trials; ++t) {
      std::mt19937_64 rng(derive_seed(cfg.seed, 7000 + t));
      const CoeffRing r = CoeffRing::make(prm.p, prm.a);
      const i64 depth = 1 + t % 3;
      const LoopElement a = random_congruent(r, 2, depth, 3, rng);
      const i64 d0 = membership(a, hyperspecial_pattern(2)).depth;
      const i64 d1 = membership(phi(a), hyperspecial_pattern(2)).depth;
      ck.check(d0 >= depth && d1 >= prm.p * d0,
               "phi depth trial " + std::to_string(t));

      const StraightenInstance inst = random_straighten_instance(prm, rng);
      const LoopElement a1 = random_congruent(r, 2, prm.f, 3, rng);
      const LoopElement a2 = random_congruent(r, 2, prm.f, 3, rng);
      const i64 before = relative_depth(a1.truncated(window),
                                        a2.truncated(window), target);
      const i64 after = relative_depth(straighten_step(inst, a1, prm),
                                       straighten_step(inst, a2, prm), target);
      const i64 want = std::min(before + straighten_margin(prm), window);
      min_gain = std::min(min_gain, after - before);
      ck.check(after >= want && after >= std::min(before + Tolerances::kContractionGain, window),
               "contraction trial " + std::to_string(t) + ": " +
                   std::to_string(before) + " -> " + std::to_string(after));
    }
    ck.note("min contraction gain " + std::to_string(min_gain));
  });
}

// ----------------------------------------------------------------- runner

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& c) {
  using Fn = CriterionResult (*)(const AcceptanceConfig&);
  const Fn fns[] = {criterion_census,      criterion_fundamental,
                    criterion_admissible,  criterion_weil,
                    criterion_conjugation, criterion_straighten,
                    criterion_congruence,  criterion_figures,
                    criterion_properties};
  std::vector<CriterionResult> out;
  for (Fn f : fns) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = f(c);
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char t[32];
  std::snprintf(t, sizeof(t), "%.2fs", r.seconds);
  return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") +
         " [" + r.title + "] " + r.detail + " (" + t + ")";
}

Json to_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace alcovekit::app
