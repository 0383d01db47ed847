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

// Truncated Laurent series and matrices over Z/p^a((v)).
//
// A series stores the coefficients of v^low, ..., v^{low+k-1} and a
// precision N: every coefficient at an exponent >= N is unknown. Exact
// series carry N = kExact. Precision follows the ultrametric rule
// prec(xy) = min(prec(x) + val(y), prec(y) + val(x)).

#ifndef ALCOVEKIT_LOOP_SIM_HPP_
#define ALCOVEKIT_LOOP_SIM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcovekit/apartment.hpp"

namespace alcovekit {

inline constexpr std::int64_t kExact = std::int64_t{1} << 60;

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoeffRing {
  std::int64_t p = 2;
  int a = 1;
  std::int64_t modulus = 2;  // p^a

  static CoeffRing make(std::int64_t p, int a);
  std::int64_t reduce(std::int64_t x) const;
  bool is_unit(std::int64_t x) const { return reduce(x) % p != 0; }
  std::int64_t inverse(std::int64_t x) const;  // throws on non-units
  bool operator==(const CoeffRing&) const = default;
};

class TruncSeries {
 public:
  explicit TruncSeries(const CoeffRing& ring, std::int64_t precision = kExact);

  static TruncSeries monomial(const CoeffRing& ring, std::int64_t coeff,
                              std::int64_t exponent,
                              std::int64_t precision = kExact);
  static TruncSeries constant(const CoeffRing& ring, std::int64_t c) {
    return monomial(ring, c, 0);
  }
  // coeffs[i] is the coefficient of v^{low + i}.
  static TruncSeries from_coeffs(const CoeffRing& ring, std::int64_t low,
                                 const std::vector<std::int64_t>& coeffs,
                                 std::int64_t precision = kExact);

  const CoeffRing& ring() const { return ring_; }
  std::int64_t low() const { return low_; }
  // Coefficients of v^low, v^{low+1}, ...; trailing zeros are trimmed.
  const std::vector<std::int64_t>& dense() const { return c_; }
  std::int64_t precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  // Lowest exponent with a nonzero coefficient; the precision when every
  // known coefficient vanishes.
  std::int64_t valuation() const;
  std::int64_t coeff(std::int64_t k) const;  // throws beyond the precision
  bool is_zero() const { return c_.empty(); }  // no known nonzero terms
  std::map<std::int64_t, std::int64_t> terms() const;

  // Drops terms at exponents >= n and lowers the precision to n.
  TruncSeries truncated(std::int64_t n) const;
  // v -> v^k on exponents (k > 0); precision scales by k.
  TruncSeries substitute_power(std::int64_t k) const;
  TruncSeries scaled(std::int64_t c) const;
  TruncSeries shifted(std::int64_t k) const;  // multiply by v^k

  // Equal on all exponents below the smaller precision.
  bool agrees_with(const TruncSeries& o) const;
  std::string to_string() const;

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y);
  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);
  TruncSeries operator-() const { return scaled(-1); }

 private:
  void normalize();

  CoeffRing ring_;
  std::int64_t low_ = 0;
  std::vector<std::int64_t> c_;
  std::int64_t prec_ = kExact;
};

// Inverse of s, computed to absolute precision at most `target`. Needs a
// unit coefficient at some exponent k below the precision such that all
// lower coefficients are divisible by p.
TruncSeries inverse(const TruncSeries& s, std::int64_t target);
TruncSeries phi(const TruncSeries& s);  // v -> v^p

class LoopElement {
 public:
  LoopElement() : LoopElement(CoeffRing{}, 0) {}
  LoopElement(const CoeffRing& ring, int n);  // zero matrix

  static LoopElement identity(const CoeffRing& ring, int n);
  // Diagonal matrix of monomials c_i v^{k_i}.
  static LoopElement diagonal_monomial(const CoeffRing& ring,
                                       const std::vector<std::int64_t>& c,
                                       const std::vector<std::int64_t>& k);
  // 1 + c v^k E_{ij}.
  static LoopElement elementary(const CoeffRing& ring, int n, int i, int j,
                                std::int64_t c, std::int64_t k);

  int size() const { return n_; }
  const CoeffRing& ring() const { return ring_; }
  TruncSeries& at(int i, int j) { return a_[i * n_ + j]; }
  const TruncSeries& at(int i, int j) const { return a_[i * n_ + j]; }

  std::int64_t precision() const;  // minimum over entries
  std::int64_t valuation() const;  // minimum over entries
  LoopElement truncated(std::int64_t n) const;
  bool agrees_with(const LoopElement& o) const;
  bool is_identity_within_precision() const;
  std::string to_string() const;

  friend LoopElement operator*(const LoopElement& x, const LoopElement& y);
  friend LoopElement operator+(const LoopElement& x, const LoopElement& y);
  friend LoopElement operator-(const LoopElement& x, const LoopElement& y);

 private:
  CoeffRing ring_;
  int n_;
  std::vector<TruncSeries> a_;
};

TruncSeries determinant(const LoopElement& m);
// Adjugate over determinant, for n <= 3.
LoopElement inverse(const LoopElement& m, std::int64_t target);
LoopElement phi(const LoopElement& m);
// c phi(a) c^{-1}.
LoopElement phi_c(const LoopElement& a, const LoopElement& c,
                  std::int64_t target);

// Integer valuation pattern: entry (i, k) must have valuation >= lb[i][k].
using IntPattern = std::vector<std::vector<std::int64_t>>;

IntPattern hyperspecial_pattern(int n);
// ceil of each lower bound, for elements written in the v-variable.
IntPattern v_pattern(const ValuationPattern& pattern);
// e times each lower bound, for elements written in the u-variable.
IntPattern u_pattern(const ValuationPattern& pattern);

struct Membership {
  bool member = false;
  std::int64_t depth = 0;  // largest m with the element at level m
};

// Off-diagonal entries need valuation >= lb + m, diagonal entries minus one
// need valuation >= m; membership also asks for a unit determinant.
Membership membership(const LoopElement& a, const IntPattern& lb);

struct ConjugationTrial {
  std::int64_t n = 0;
  std::int64_t measured = 0;
  std::int64_t bound = 0;
  bool ok = false;
};

struct ConjugationReport {
  std::vector<ConjugationTrial> trials;
  bool all_ok = false;
  std::int64_t sharp_measured = 0;  // X = v^mu, A = 1 + v^n E_{ba}
  std::int64_t sharp_expected = 0;  // n - h_mu
};

// Random X = U (v+p)^{w mu} V and A = 1 + c v^n E_{ij}; checks the depth of
// X A X^{-1} against n - h_mu - 2a + 2.
ConjugationReport conjugation_suite(int size, std::int64_t p, int a,
                                    const std::vector<std::int64_t>& mu,
                                    int trials, std::uint64_t seed);

struct StraightenParams {
  std::int64_t p = 7;
  int a = 1;
  std::int64_t f = 1;
  std::int64_t h_mu = 1;
  std::int64_t d = 0;  // genericity contribution to the bound
  std::int64_t window = 0;  // 0: use 4p or ALCOVEKIT_PRECISION
};

std::int64_t straighten_margin(const StraightenParams& params);
std::int64_t default_window(std::int64_t p);

struct StraightenResult {
  bool refused = false;
  std::string reason;
  bool converged = false;
  int iterations = 0;
  int iteration_bound = 0;
  std::int64_t window = 0;
  LoopElement a;
  bool residual_is_identity = false;
  std::int64_t residual_precision = 0;
  std::vector<std::int64_t> trace;  // depth of A_{k+1} A_k^{-1} - 1
};

// Solves A^{-1} X phi_c(A) = B X by iterating A -> X phi_c(A) X^{-1} B^{-1}.
StraightenResult straighten_right(const LoopElement& x, const LoopElement& b,
                                  const LoopElement& c,
                                  const StraightenParams& params,
                                  const std::optional<LoopElement>& start =
                                      std::nullopt);

struct StraightenInstance {
  LoopElement x;
  LoopElement b;
  LoopElement c;
};

// GL2 data: X = U diag((v+p)^{h_mu}, 1) V with unipotent U, V, and B
// random at depth f.
StraightenInstance random_straighten_instance(const StraightenParams& params,
                                              std::mt19937_64& rng);
// One step A -> X phi_c(A) X^{-1} B^{-1}, truncated to the window.
LoopElement straighten_step(const StraightenInstance& inst,
                            const LoopElement& a,
                            const StraightenParams& params);
// Congruence depth of a^{-1} b at the hyperspecial vertex.
std::int64_t relative_depth(const LoopElement& a, const LoopElement& b,
                            std::int64_t target);
// Random element congruent to 1 modulo v^depth, exact polynomial entries.
LoopElement random_congruent(const CoeffRing& ring, int n,
                             std::int64_t depth, std::int64_t degree,
                             std::mt19937_64& rng);

struct CompareReport {
  bool congruence = false;  // (v+p)^{p^{a-1}} = v^{p^{a-1}} mod p^a
  bool first_division = false;   // (v+p)^n in v^{n-a+1} R[v]
  bool second_division = false;  // v^n in (v+p)^{n-a+1} R[v]
  std::vector<std::int64_t> first_quotient;   // ascending coefficients
  std::vector<std::int64_t> second_quotient;  // in powers of v
};

CompareReport congruence_compare(std::int64_t n, int a, std::int64_t p);

// Seed for trial k derived from a base seed (SplitMix64 step).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k);

}  // namespace alcovekit

#endif  // ALCOVEKIT_LOOP_SIM_HPP_
