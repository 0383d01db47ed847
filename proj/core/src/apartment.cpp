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

#include "alcovekit/apartment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace alcovekit {
namespace {

const QVec& slot(const ApartmentPoint& x, int j) {
  const int r = static_cast<int>(x.eta.size());
  return x.eta[((j % r) + r) % r];
}

Rational frac(const Rational& t) { return t - Rational(floor_q(t)); }

}  // namespace

std::vector<std::vector<Int>> ValuationPattern::v_pattern() const {
  std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out[i][k] = ceil_q(lower_bounds[i][k]);
  return out;
}

ApartmentPoint point_from_type(const RootDatum& rd, const GammaData& g,
                               const std::vector<IVec>& lambda,
                               const std::vector<WeylElement>& w) {
  if (lambda.empty() || w.empty())
    throw std::invalid_argument("lambda and w must be non-empty");
  ApartmentPoint x;
  x.gamma = g;
  const Rational inv_e = Rational(1) / Rational(g.e);
  for (int j = 0; j < g.r; ++j) {
    const IVec& lam = lambda.size() == 1 ? lambda[0] : lambda.at(j);
    const WeylElement& wj = w.size() == 1 ? w[0] : w.at(j);
    if (static_cast<int>(lam.size()) != rd.rank)
      throw std::invalid_argument("lambda has wrong length");
    IVec wl = inverse(wj).matrix * lam;
    x.eta.push_back(scale(-inv_e, to_rational(wl)));
  }
  return x;
}

ApartmentPoint constant_point(const GammaData& g, const QVec& eta) {
  ApartmentPoint x;
  x.gamma = g;
  x.eta.assign(g.r, eta);
  return x;
}

ApartmentPoint frobenius(const ApartmentPoint& x) {
  ApartmentPoint y;
  y.gamma = x.gamma;
  const Rational p(x.gamma.p);
  for (int j = 0; j < static_cast<int>(x.eta.size()); ++j)
    y.eta.push_back(scale(p, slot(x, j - 1)));
  return y;
}

ApartmentPoint act_gamma(const ApartmentPoint& x) {
  ApartmentPoint y;
  y.gamma = x.gamma;
  for (const auto& v : x.eta) y.eta.push_back(x.gamma.inertia * v);
  return y;
}

ApartmentPoint act_sigma(const ApartmentPoint& x) {
  ApartmentPoint y;
  y.gamma = x.gamma;
  for (int j = 0; j < static_cast<int>(x.eta.size()); ++j)
    y.eta.push_back(x.gamma.psi * slot(x, j - 1));
  return y;
}

bool is_gamma_fixed(const ApartmentPoint& x) {
  return act_gamma(x) == x && act_sigma(x) == x;
}

bool is_d_generic(const RootDatum& rd, const ApartmentPoint& x,
                  const Rational& d) {
  const Rational shift = d / Rational(x.gamma.p);
  for (const auto& eta : x.eta) {
    for (int a : rd.positive_indices) {
      Rational t = rd.pair(a, eta);
      // Candidates n with n + shift < t < n + 1 - shift.
      Int lo = floor_q(t - 1 + shift) - 1;
      Int hi = floor_q(t - shift) + 1;
      bool ok = false;
      for (Int n = lo; n <= hi && !ok; ++n) {
        Rational nq(n);
        ok = nq + shift < t && t < nq + 1 - shift;
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool is_lowest_alcove(const RootDatum& rd, const ApartmentPoint& x) {
  for (const auto& eta : x.eta)
    for (int a : rd.positive_indices) {
      Rational t = rd.pair(a, eta);
      if (t < 0 || t >= 1) return false;
    }
  return true;
}

Int genericity(const RootDatum& rd, const ApartmentPoint& x) {
  if (rd.positive_indices.empty())
    throw std::domain_error("genericity is unbounded without roots");
  const Rational p(x.gamma.p);
  Int best = -1;
  bool first = true;
  for (const auto& eta : x.eta)
    for (int a : rd.positive_indices) {
      Rational f = frac(rd.pair(a, eta));
      if (f == 0) return -1;
      Rational m = std::min(f, Rational(1) - f);
      Int d = ceil_q(p * m) - 1;
      if (first || d < best) best = d;
      first = false;
    }
  return best;
}

bool is_deep_lowest_alcove(const RootDatum& rd, const IVec& mu_eta,
                           const Rational& d, const Int& p) {
  if (static_cast<int>(mu_eta.size()) != rd.rank)
    throw std::invalid_argument("mu + eta has wrong length");
  for (int a : rd.positive_indices) {
    Rational t(rd.pair(a, mu_eta));
    if (!(d + 1 < t && t < Rational(p) - d - 1)) return false;
  }
  return true;
}

ValuationPattern parahoric_pattern(const RootDatum& rd,
                                   const ApartmentPoint& x, const Level& f,
                                   int j) {
  if (rd.factors.size() != 1 || rd.factors[0].kind != FactorKind::kGL)
    throw std::domain_error("parahoric patterns are defined for GL_n only");
  if (j < 0 || j >= static_cast<int>(x.eta.size()))
    throw std::out_of_range("embedding index out of range");
  if (f.value < 0) throw std::invalid_argument("level must be nonnegative");
  const int n = rd.factors[0].n;
  const Rational e(x.gamma.e);
  ValuationPattern pat;
  pat.n = n;
  pat.e = x.gamma.e;
  pat.lower_bounds.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      Rational t = -e * rd.pair(rd.positive_root_index(i, k), x.eta[j]) +
                   e * f.value;
      Int c = f.plus ? floor_q(t) + 1 : ceil_q(t);
      pat.lower_bounds[i][k] = Rational(c) / e;
    }
  pat.torus_level = f.plus ? floor_q(f.value) + 1 : ceil_q(f.value);
  return pat;
}

std::string to_json_string(const ApartmentPoint& x) {
  nlohmann::json j;
  auto num = [](const Int& z) -> nlohmann::json {
    if (z <= Int(std::numeric_limits<std::int64_t>::max()))
      return static_cast<std::int64_t>(z);
    return z.str();
  };
  j["e"] = num(x.gamma.e);
  j["p"] = num(x.gamma.p);
  j["r"] = x.gamma.r;
  nlohmann::json eta = nlohmann::json::array();
  for (const auto& v : x.eta) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& q : v) row.push_back(to_string(q));
    eta.push_back(row);
  }
  j["eta"] = eta;
  return j.dump();
}

ApartmentPoint point_from_json_string(const RootDatum& rd,
                                      const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto get = [&](const char* key) -> Int {
    const auto& v = j.at(key);
    if (v.is_string()) return Int(v.get<std::string>());
    return Int(v.get<std::int64_t>());
  };
  ApartmentPoint x;
  x.gamma = make_split_gamma(rd, get("p"), get("e"), j.at("r").get<int>());
  for (const auto& row : j.at("eta")) {
    QVec v;
    for (const auto& q : row) v.push_back(parse_rational(q.get<std::string>()));
    if (static_cast<int>(v.size()) != rd.rank)
      throw std::invalid_argument("eta entry has wrong length");
    x.eta.push_back(v);
  }
  if (static_cast<int>(x.eta.size()) != x.gamma.r)
    throw std::invalid_argument("eta must have r entries");
  return x;
}

}  // namespace alcovekit
