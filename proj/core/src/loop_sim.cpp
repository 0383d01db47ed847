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

#include "alcovekit/loop_sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

namespace alcovekit {
namespace {

using i64 = std::int64_t;

i64 sat_add(i64 a, i64 b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

i64 mulmod(i64 x, i64 y, i64 m) { return (x * y) % m; }

// Dense Laurent polynomial without precision, used inside the inverse.
struct Poly {
  i64 low = 0;
  std::vector<i64> c;
};

Poly mul_trunc(const Poly& x, const Poly& y, i64 bound, i64 m) {
  Poly out;
  if (x.c.empty() || y.c.empty()) return out;
  out.low = x.low + y.low;
  const i64 top = std::min<i64>(
      static_cast<i64>(x.c.size() + y.c.size()) - 1, bound - out.low);
  if (top <= 0) return Poly{};
  out.c.assign(top, 0);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (size_t j = 0; j < y.c.size() && static_cast<i64>(i + j) < top; ++j)
      out.c[i + j] = (out.c[i + j] + mulmod(x.c[i], y.c[j], m)) % m;
  }
  size_t lead = 0;
  while (lead < out.c.size() && out.c[lead] == 0) ++lead;
  out.c.erase(out.c.begin(), out.c.begin() + lead);
  out.low += static_cast<i64>(lead);
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

void add_into(Poly& acc, const Poly& x, i64 m) {
  if (x.c.empty()) return;
  if (acc.c.empty()) {
    acc = x;
    return;
  }
  const i64 lo = std::min(acc.low, x.low);
  const i64 hi = std::max(acc.low + static_cast<i64>(acc.c.size()),
                          x.low + static_cast<i64>(x.c.size()));
  std::vector<i64> c(hi - lo, 0);
  for (size_t i = 0; i < acc.c.size(); ++i) c[acc.low - lo + i] = acc.c[i];
  for (size_t i = 0; i < x.c.size(); ++i)
    c[x.low - lo + i] = (c[x.low - lo + i] + x.c[i]) % m;
  acc.low = lo;
  acc.c = std::move(c);
}

i64 ipow(i64 b, i64 e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- CoeffRing

CoeffRing CoeffRing::make(std::int64_t p, int a) {
  if (p < 2 || a < 1) throw std::invalid_argument("need p >= 2 and a >= 1");
  for (i64 k = 2; k * k <= p; ++k)
    if (p % k == 0) throw std::invalid_argument("p must be prime");
  CoeffRing r;
  r.p = p;
  r.a = a;
  r.modulus = 1;
  for (int i = 0; i < a; ++i) {
    r.modulus *= p;
    if (r.modulus >= (i64{1} << 31))
      throw std::invalid_argument("p^a must stay below 2^31");
  }
  return r;
}

std::int64_t CoeffRing::reduce(std::int64_t x) const {
  i64 r = x % modulus;
  return r < 0 ? r + modulus : r;
}

std::int64_t CoeffRing::inverse(std::int64_t x) const {
  i64 a = reduce(x), m = modulus;
  i64 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw std::domain_error("coefficient is not a unit");
  return reduce(old_s);
}

// -------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(const CoeffRing& ring, std::int64_t precision)
    : ring_(ring), prec_(std::min(precision, kExact)) {}

TruncSeries TruncSeries::monomial(const CoeffRing& ring, std::int64_t coeff,
                                  std::int64_t exponent,
                                  std::int64_t precision) {
  return from_coeffs(ring, exponent, {coeff}, precision);
}

TruncSeries TruncSeries::from_coeffs(const CoeffRing& ring, std::int64_t low,
                                     const std::vector<std::int64_t>& coeffs,
                                     std::int64_t precision) {
  TruncSeries s(ring, precision);
  s.low_ = low;
  s.c_ = coeffs;
  s.normalize();
  return s;
}

void TruncSeries::normalize() {
  for (auto& x : c_) x = ring_.reduce(x);
  if (!is_exact()) {
    i64 keep = prec_ - low_;
    if (keep <= 0) {
      c_.clear();
    } else if (static_cast<i64>(c_.size()) > keep) {
      c_.resize(keep);
    }
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  c_.erase(c_.begin(), c_.begin() + lead);
  low_ = c_.empty() ? 0 : low_ + static_cast<i64>(lead);
}

std::int64_t TruncSeries::valuation() const {
  return c_.empty() ? prec_ : low_;
}

std::int64_t TruncSeries::coeff(std::int64_t k) const {
  if (k >= prec_) throw PrecisionExhausted("coefficient beyond precision");
  if (k < low_ || k >= low_ + static_cast<i64>(c_.size())) return 0;
  return c_[k - low_];
}

std::map<std::int64_t, std::int64_t> TruncSeries::terms() const {
  std::map<i64, i64> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out[low_ + static_cast<i64>(i)] = c_[i];
  return out;
}

TruncSeries TruncSeries::truncated(std::int64_t n) const {
  TruncSeries s = *this;
  s.prec_ = std::min(prec_, n);
  s.normalize();
  return s;
}

TruncSeries TruncSeries::substitute_power(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("power must be positive");
  TruncSeries s(ring_, is_exact() ? kExact : prec_ * k);
  if (c_.empty()) return s;
  s.low_ = low_ * k;
  s.c_.assign((c_.size() - 1) * k + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i * k] = c_[i];
  s.normalize();
  return s;
}

TruncSeries TruncSeries::scaled(std::int64_t c) const {
  TruncSeries s = *this;
  const i64 cr = ring_.reduce(c);
  for (auto& x : s.c_) x = mulmod(x, cr, ring_.modulus);
  s.normalize();
  return s;
}

TruncSeries TruncSeries::shifted(std::int64_t k) const {
  TruncSeries s = *this;
  s.low_ += k;
  s.prec_ = is_exact() ? kExact : prec_ + k;
  s.normalize();
  return s;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
  const i64 n = std::min(prec_, o.prec_);
  return (truncated(n) - o.truncated(n)).is_zero();
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k != 0) os << "v^" << k;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(v^" << prec_ << ")";
  return os.str();
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
  if (!(x.ring_ == y.ring_)) throw std::invalid_argument("ring mismatch");
  TruncSeries s(x.ring_, std::min(x.prec_, y.prec_));
  if (x.c_.empty() && y.c_.empty()) return s;
  Poly acc{x.low_, x.c_};
  add_into(acc, Poly{y.low_, y.c_}, x.ring_.modulus);
  s.low_ = acc.low;
  s.c_ = std::move(acc.c);
  s.normalize();
  return s;
}

TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
  return x + (-y);
}

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
  if (!(x.ring_ == y.ring_)) throw std::invalid_argument("ring mismatch");
  const i64 prec = std::min(sat_add(x.prec_, y.valuation()),
                            sat_add(y.prec_, x.valuation()));
  TruncSeries s(x.ring_, prec);
  Poly r = mul_trunc(Poly{x.low_, x.c_}, Poly{y.low_, y.c_},
                     prec >= kExact ? kExact : prec, x.ring_.modulus);
  s.low_ = r.low;
  s.c_ = std::move(r.c);
  s.normalize();
  return s;
}

// Write s = c v^k (1 + y) with k the lowest unit exponent. Every term of y
// below v^0 has a coefficient divisible by p, so a product of more than
// a - 1 of them vanishes; this bounds both the number of geometric-series
// terms and the precision lost to unknown coefficients.
TruncSeries inverse(const TruncSeries& s, std::int64_t target) {
  const CoeffRing& ring = s.ring();
  const i64 m = ring.modulus;
  i64 k = 0;
  bool found = false;
  for (size_t i = 0; i < s.dense().size(); ++i)
    if (ring.is_unit(s.dense()[i])) {
      k = s.low() + static_cast<i64>(i);
      found = true;
      break;
    }
  if (!found) {
    if (s.is_exact()) throw std::domain_error("series is not invertible");
    throw PrecisionExhausted("no unit coefficient within precision");
  }
  const i64 ck_inv = ring.inverse(s.coeff(k));
  const i64 pole = std::max<i64>(0, k - s.low());
  TruncSeries y = s.shifted(-k).scaled(ck_inv) - TruncSeries::constant(ring, 1);
  const i64 yprec = y.precision();

  if (y.is_zero()) {
    i64 rel = yprec >= kExact ? kExact : yprec;
    if (rel < kExact) rel -= (ring.a - 1) * pole;
    return TruncSeries::monomial(ring, ck_inv, -k,
                                 rel >= kExact ? kExact : rel - k)
        .truncated(target);
  }
  if (target >= kExact / 2)
    throw std::invalid_argument("inverse of a non-monomial needs a target");

  const i64 rel_target = target + k;
  const i64 bound = rel_target + (ring.a - 1) * pole;
  const i64 terms = std::max<i64>(0, bound + (ring.a - 1) * (pole + 1) + 1);
  Poly neg_y{y.low(), y.dense()};
  for (auto& c : neg_y.c) c = (m - c) % m;
  Poly sum{0, {1}}, power{0, {1}};
  for (i64 n = 1; n <= terms; ++n) {
    power = mul_trunc(power, neg_y, bound, m);
    if (power.c.empty()) break;
    add_into(sum, power, m);
  }
  i64 rel = rel_target;
  if (yprec < kExact) rel = std::min(rel, yprec - (ring.a - 1) * pole);
  TruncSeries z = TruncSeries::from_coeffs(ring, sum.low, sum.c, rel);
  return z.shifted(-k).scaled(ck_inv);
}

TruncSeries phi(const TruncSeries& s) {
  return s.substitute_power(s.ring().p);
}

// -------------------------------------------------------------- LoopElement

LoopElement::LoopElement(const CoeffRing& ring, int n)
    : ring_(ring), n_(n), a_(static_cast<size_t>(n) * n, TruncSeries(ring)) {}

LoopElement LoopElement::identity(const CoeffRing& ring, int n) {
  LoopElement m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = TruncSeries::constant(ring, 1);
  return m;
}

LoopElement LoopElement::diagonal_monomial(const CoeffRing& ring,
                                           const std::vector<std::int64_t>& c,
                                           const std::vector<std::int64_t>& k) {
  if (c.size() != k.size()) throw std::invalid_argument("size mismatch");
  LoopElement m(ring, static_cast<int>(c.size()));
  for (size_t i = 0; i < c.size(); ++i)
    m.at(i, i) = TruncSeries::monomial(ring, c[i], k[i]);
  return m;
}

LoopElement LoopElement::elementary(const CoeffRing& ring, int n, int i, int j,
                                    std::int64_t c, std::int64_t k) {
  LoopElement m = identity(ring, n);
  m.at(i, j) = m.at(i, j) + TruncSeries::monomial(ring, c, k);
  return m;
}

std::int64_t LoopElement::precision() const {
  i64 p = kExact;
  for (const auto& s : a_) p = std::min(p, s.precision());
  return p;
}

std::int64_t LoopElement::valuation() const {
  i64 v = kExact;
  for (const auto& s : a_) v = std::min(v, s.valuation());
  return v;
}

LoopElement LoopElement::truncated(std::int64_t n) const {
  LoopElement m = *this;
  for (auto& s : m.a_) s = s.truncated(n);
  return m;
}

bool LoopElement::agrees_with(const LoopElement& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].agrees_with(o.a_[i])) return false;
  return true;
}

bool LoopElement::is_identity_within_precision() const {
  LoopElement d = *this - identity(ring_, n_);
  return std::all_of(d.a_.begin(), d.a_.end(),
                     [](const TruncSeries& s) { return s.is_zero(); });
}

std::string LoopElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

LoopElement operator*(const LoopElement& x, const LoopElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("size mismatch");
  LoopElement m(x.ring_, x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int k = 0; k < x.n_; ++k) {
      TruncSeries acc(x.ring_);
      for (int j = 0; j < x.n_; ++j) acc = acc + x.at(i, j) * y.at(j, k);
      m.at(i, k) = acc;
    }
  return m;
}

LoopElement operator+(const LoopElement& x, const LoopElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("size mismatch");
  LoopElement m(x.ring_, x.n_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
  return m;
}

LoopElement operator-(const LoopElement& x, const LoopElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("size mismatch");
  LoopElement m(x.ring_, x.n_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
  return m;
}

TruncSeries determinant(const LoopElement& m) {
  const int n = m.size();
  auto e = [&](int i, int j) -> const TruncSeries& { return m.at(i, j); };
  switch (n) {
    case 1:
      return e(0, 0);
    case 2:
      return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    case 3:
      return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
             e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
             e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    default:
      throw std::invalid_argument("determinant implemented for n <= 3");
  }
}

LoopElement inverse(const LoopElement& m, std::int64_t target) {
  const int n = m.size();
  const CoeffRing& ring = m.ring();
  LoopElement adj(ring, n);
  auto e = [&](int i, int j) -> const TruncSeries& { return m.at(i, j); };
  if (n == 1) {
    adj.at(0, 0) = TruncSeries::constant(ring, 1);
  } else if (n == 2) {
    adj.at(0, 0) = e(1, 1);
    adj.at(0, 1) = -e(0, 1);
    adj.at(1, 0) = -e(1, 0);
    adj.at(1, 1) = e(0, 0);
  } else if (n == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        adj.at(i, j) = e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0);
      }
  } else {
    throw std::invalid_argument("inverse implemented for n <= 3");
  }
  const i64 adj_val = adj.valuation();
  const i64 slack = adj_val < 0 ? -adj_val : 0;
  const TruncSeries dinv =
      inverse(determinant(m), target >= kExact / 2 ? target : target + slack);
  LoopElement out(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = adj.at(i, j) * dinv;
  return target >= kExact / 2 ? out : out.truncated(target);
}

LoopElement phi(const LoopElement& m) {
  LoopElement out(m.ring(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.at(i, j) = phi(m.at(i, j));
  return out;
}

LoopElement phi_c(const LoopElement& a, const LoopElement& c,
                  std::int64_t target) {
  return c * phi(a) * inverse(c, target);
}

// --------------------------------------------------------------- membership

IntPattern hyperspecial_pattern(int n) {
  return IntPattern(n, std::vector<i64>(n, 0));
}

IntPattern v_pattern(const ValuationPattern& pattern) {
  IntPattern out(pattern.n, std::vector<i64>(pattern.n, 0));
  for (int i = 0; i < pattern.n; ++i)
    for (int k = 0; k < pattern.n; ++k)
      out[i][k] = to_i64(ceil_q(pattern.lower_bounds[i][k]));
  return out;
}

IntPattern u_pattern(const ValuationPattern& pattern) {
  IntPattern out(pattern.n, std::vector<i64>(pattern.n, 0));
  for (int i = 0; i < pattern.n; ++i)
    for (int k = 0; k < pattern.n; ++k)
      out[i][k] = to_i64(
          floor_q(pattern.lower_bounds[i][k] * Rational(pattern.e)));
  return out;
}

Membership membership(const LoopElement& a, const IntPattern& lb) {
  const int n = a.size();
  if (static_cast<int>(lb.size()) != n)
    throw std::invalid_argument("pattern size mismatch");
  Membership out;
  bool entries_ok = true;
  i64 depth = kExact;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k) {
        const TruncSeries& d = a.at(i, i);
        entries_ok = entries_ok && d.valuation() >= 0;
        TruncSeries dm = d - TruncSeries::constant(a.ring(), 1);
        depth = std::min(depth, dm.valuation());
      } else {
        const i64 v = a.at(i, k).valuation();
        entries_ok = entries_ok && v >= lb[i][k];
        depth = std::min(depth, v >= kExact ? kExact : v - lb[i][k]);
      }
    }
  bool det_unit = false;
  if (entries_ok) {
    const TruncSeries det = determinant(a);
    det_unit = det.valuation() >= 0 && det.precision() > 0 &&
               a.ring().is_unit(det.coeff(0));
  }
  out.member = entries_ok && det_unit;
  out.depth = depth;
  return out;
}

// ------------------------------------------------------- conjugation suite

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  std::uint64_t z = base + (k + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

i64 uniform(std::mt19937_64& rng, i64 lo, i64 hi) {
  return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

i64 random_unit(const CoeffRing& ring, std::mt19937_64& rng) {
  for (;;) {
    i64 c = uniform(rng, 1, ring.modulus - 1);
    if (ring.is_unit(c)) return c;
  }
}

// Product of a few elementary unipotents and their exact inverse.
std::pair<LoopElement, LoopElement> random_unipotent(const CoeffRing& ring,
                                                     int n, int factors,
                                                     i64 max_degree,
                                                     std::mt19937_64& rng) {
  LoopElement u = LoopElement::identity(ring, n);
  LoopElement ui = LoopElement::identity(ring, n);
  for (int t = 0; t < factors; ++t) {
    int i = static_cast<int>(uniform(rng, 0, n - 1));
    int j = static_cast<int>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    const i64 c = uniform(rng, 0, ring.modulus - 1);
    const i64 k = uniform(rng, 0, max_degree);
    u = u * LoopElement::elementary(ring, n, i, j, c, k);
    ui = LoopElement::elementary(ring, n, i, j, -c, k) * ui;
  }
  return {u, ui};
}

TruncSeries v_plus_p_power(const CoeffRing& ring, i64 k, i64 target) {
  TruncSeries base =
      TruncSeries::from_coeffs(ring, 0, {ring.p % ring.modulus, 1});
  TruncSeries acc = TruncSeries::constant(ring, 1);
  for (i64 i = 0; i < std::abs(k); ++i) acc = acc * base;
  return k >= 0 ? acc : inverse(acc, target);
}

}  // namespace

ConjugationReport conjugation_suite(int size, std::int64_t p, int a,
                                    const std::vector<std::int64_t>& mu,
                                    int trials, std::uint64_t seed) {
  if (static_cast<int>(mu.size()) != size)
    throw std::invalid_argument("mu has wrong length");
  if (size < 2 || size > 3) throw std::invalid_argument("size must be 2 or 3");
  const CoeffRing ring = CoeffRing::make(p, a);
  const i64 h = *std::max_element(mu.begin(), mu.end()) -
                *std::min_element(mu.begin(), mu.end());
  ConjugationReport rep;
  rep.all_ok = true;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const i64 n = uniform(rng, h + 2 * a - 2, h + 2 * a + 3);
    const i64 target = n + 4 * (h + a) + 8;
    std::vector<i64> nu = mu;
    std::shuffle(nu.begin(), nu.end(), rng);
    LoopElement d(ring, size), di(ring, size);
    for (int i = 0; i < size; ++i) {
      d.at(i, i) = v_plus_p_power(ring, nu[i], target);
      di.at(i, i) = v_plus_p_power(ring, -nu[i], target);
    }
    auto [u, ui] = random_unipotent(ring, size, 2, 2, rng);
    auto [w, wi] = random_unipotent(ring, size, 2, 2, rng);
    const LoopElement x = u * d * w;
    const LoopElement xi = wi * di * ui;
    int i = static_cast<int>(uniform(rng, 0, size - 1));
    int j = static_cast<int>(uniform(rng, 0, size - 1));
    LoopElement amat =
        i == j ? LoopElement::identity(ring, size)
               : LoopElement::elementary(ring, size, i, j,
                                         random_unit(ring, rng), n);
    if (i == j)
      amat.at(i, i) =
          amat.at(i, i) +
          TruncSeries::monomial(ring, uniform(rng, 1, ring.modulus - 1), n);
    const LoopElement y = (x * amat * xi).truncated(target);
    ConjugationTrial tr;
    tr.n = n;
    tr.measured = membership(y, hyperspecial_pattern(size)).depth;
    tr.bound = n - h - 2 * a + 2;
    tr.ok = tr.measured >= tr.bound;
    rep.all_ok = rep.all_ok && tr.ok;
    rep.trials.push_back(tr);
  }
  // Sharpness: the root e_i - e_k with <e_i - e_k, mu> = -h.
  const int imin = static_cast<int>(
      std::min_element(mu.begin(), mu.end()) - mu.begin());
  const int imax = static_cast<int>(
      std::max_element(mu.begin(), mu.end()) - mu.begin());
  const i64 n = h + 2 * a + 1;
  std::vector<i64> ones(size, 1), neg(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
  const LoopElement x = LoopElement::diagonal_monomial(ring, ones, mu);
  const LoopElement xi = LoopElement::diagonal_monomial(ring, ones, neg);
  const LoopElement amat =
      imin == imax ? LoopElement::identity(ring, size)
                   : LoopElement::elementary(ring, size, imin, imax, 1, n);
  rep.sharp_measured = membership(x * amat * xi, hyperspecial_pattern(size))
                           .depth;
  rep.sharp_expected = n - h;
  return rep;
}

// ------------------------------------------------------------- straightening

std::int64_t straighten_margin(const StraightenParams& params) {
  return (params.p - 1) * params.f + params.d - params.h_mu - 2 * params.a + 2;
}

std::int64_t default_window(std::int64_t p) {
  if (const char* env = std::getenv("ALCOVEKIT_PRECISION")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 4 * p;
}

StraightenResult straighten_right(const LoopElement& x, const LoopElement& b,
                                  const LoopElement& c,
                                  const StraightenParams& params,
                                  const std::optional<LoopElement>& start) {
  StraightenResult res;
  const i64 delta = straighten_margin(params);
  if (delta <= 0) {
    res.refused = true;
    res.reason = "contraction bound (p-1)f + d - h_mu - 2a + 2 > 0 fails";
    return res;
  }
  if (params.f < 1) {
    res.refused = true;
    res.reason = "B must lie at level f >= 1";
    return res;
  }
  const CoeffRing& ring = x.ring();
  const int n = x.size();
  const i64 window = params.window > 0 ? params.window : default_window(params.p);
  res.window = window;
  res.iteration_bound = static_cast<int>(window / delta + 2);
  const i64 target = window + 2 * (params.h_mu + params.a) * n + 4;
  const LoopElement xi = inverse(x, target);
  const LoopElement bi = inverse(b, target);
  const LoopElement right = xi * bi;

  auto psi = [&](const LoopElement& a) {
    LoopElement next = x * phi_c(a, c, target) * right;
    if (next.precision() < window)
      throw PrecisionExhausted("iteration lost precision below the window");
    return next.truncated(window);
  };

  LoopElement a = start ? start->truncated(window)
                        : LoopElement::identity(ring, n).truncated(window);
  for (int k = 1; k <= res.iteration_bound; ++k) {
    LoopElement next = psi(a);
    const i64 dv = (next - a).valuation();
    res.trace.push_back(std::min(dv, window));
    a = next;
    res.iterations = k;
    if (dv >= window) {
      res.converged = true;
      break;
    }
  }
  res.a = a;
  const LoopElement ai = inverse(a, target);
  const LoopElement bx_inv = xi * bi;
  const LoopElement residual = ai * x * phi_c(a, c, target) * bx_inv;
  res.residual_precision = residual.precision();
  res.residual_is_identity = residual.is_identity_within_precision();
  return res;
}

LoopElement random_congruent(const CoeffRing& ring, int n, std::int64_t depth,
                             std::int64_t degree, std::mt19937_64& rng) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  LoopElement m = LoopElement::identity(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<i64> cs(std::max<i64>(degree, 1));
      for (auto& x : cs) x = uniform(rng, 0, ring.modulus - 1);
      m.at(i, j) = m.at(i, j) + TruncSeries::from_coeffs(ring, depth, cs);
    }
  return m;
}

StraightenInstance random_straighten_instance(const StraightenParams& params,
                                              std::mt19937_64& rng) {
  const CoeffRing ring = CoeffRing::make(params.p, params.a);
  auto [u, ui] = random_unipotent(ring, 2, 2, 1, rng);
  auto [w, wi] = random_unipotent(ring, 2, 2, 1, rng);
  LoopElement d = LoopElement::identity(ring, 2);
  d.at(0, 0) = v_plus_p_power(ring, params.h_mu, kExact);
  StraightenInstance inst{u * d * w,
                          random_congruent(ring, 2, params.f, 3, rng),
                          LoopElement::identity(ring, 2)};
  return inst;
}

LoopElement straighten_step(const StraightenInstance& inst,
                            const LoopElement& a,
                            const StraightenParams& params) {
  const i64 window =
      params.window > 0 ? params.window : default_window(params.p);
  const i64 target = window + 2 * (params.h_mu + params.a) * inst.x.size() + 4;
  LoopElement next = inst.x * phi_c(a, inst.c, target) *
                     inverse(inst.x, target) * inverse(inst.b, target);
  return next.truncated(window);
}

std::int64_t relative_depth(const LoopElement& a, const LoopElement& b,
                            std::int64_t target) {
  return membership(inverse(a, target) * b, hyperspecial_pattern(a.size()))
      .depth;
}

// ------------------------------------------------------------- comparisons

CompareReport congruence_compare(std::int64_t n, int a, std::int64_t p) {
  if (n < a) throw std::invalid_argument("need n >= a");
  const CoeffRing ring = CoeffRing::make(p, a);
  const i64 m = ring.modulus;
  CompareReport rep;
  const TruncSeries vp = TruncSeries::from_coeffs(ring, 0, {p % m, 1});
  auto power = [&](const TruncSeries& s, i64 k) {
    TruncSeries acc = TruncSeries::constant(ring, 1);
    for (i64 i = 0; i < k; ++i) acc = acc * s;
    return acc;
  };
  const i64 q = ipow(p, a - 1);
  rep.congruence =
      (power(vp, q) - TruncSeries::monomial(ring, 1, q)).is_zero();

  const i64 shift = n - a + 1;
  const TruncSeries first = power(vp, n);
  rep.first_division = first.valuation() >= shift;
  if (rep.first_division) {
    const TruncSeries quo = first.shifted(-shift);
    rep.first_quotient.assign(n - shift + 1, 0);
    for (const auto& [k, c] : quo.terms()) rep.first_quotient[k] = c;
  }

  // Long division of v^n by the monic (v+p)^shift.
  std::vector<i64> rem(n + 1, 0);
  rem[n] = 1;
  const TruncSeries div = power(vp, shift);
  std::vector<i64> dc(shift + 1, 0);
  for (const auto& [k, c] : div.terms()) dc[k] = c;
  std::vector<i64> quo(n - shift + 1, 0);
  for (i64 k = n; k >= shift; --k) {
    const i64 lead = rem[k];
    if (lead == 0) continue;
    quo[k - shift] = lead;
    for (i64 i = 0; i <= shift; ++i)
      rem[k - shift + i] = ring.reduce(rem[k - shift + i] - lead * dc[i]);
  }
  rep.second_division =
      std::all_of(rem.begin(), rem.end(), [](i64 x) { return x == 0; });
  if (rep.second_division) rep.second_quotient = quo;
  return rep;
}

}  // namespace alcovekit
