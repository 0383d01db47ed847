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

#include "alcovekit/iwahori_weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace alcovekit {
namespace {

IVec unit_vector(const RootDatum& rd, int ambient_index) {
  IVec amb(rd.ambient_dim, Int(0));
  amb[ambient_index] = 1;
  return rd.coords * amb;
}

std::string cycles_string(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::ostringstream os;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i] || sigma[i] == static_cast<int>(i)) continue;
    os << "(";
    for (size_t k = i; !seen[k]; k = sigma[k]) {
      seen[k] = true;
      os << k + 1;
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

}  // namespace

AffineWeylElement operator*(const AffineWeylElement& a,
                            const AffineWeylElement& b) {
  return {a.translation + a.finite.matrix * b.translation,
          a.finite * b.finite};
}

AffineWeylElement inverse(const AffineWeylElement& a) {
  WeylElement wi = inverse(a.finite);
  return {-(wi.matrix * a.translation), wi};
}

QVec act(const AffineWeylElement& a, const QVec& y) {
  return a.finite.matrix * y + to_rational(a.translation);
}

AffineWeylElement translation_element(const RootDatum& rd, const IVec& nu) {
  if (static_cast<int>(nu.size()) != rd.rank)
    throw std::invalid_argument("translation has wrong length");
  return {nu, rd.identity()};
}

AffineWeylElement finite_element(const RootDatum& rd, const WeylElement& w) {
  return {IVec(rd.rank, Int(0)), w};
}

BaseAlcove base_alcove(const RootDatum& rd) {
  BaseAlcove base;
  QVec amb(rd.ambient_dim, Rational(0));
  for (const auto& f : rd.factors) {
    Rational mean = 0;
    for (int i = 0; i < f.n; ++i) {
      amb[f.ambient_offset + i] = Rational(f.n - 1 - i, f.n);
      mean += amb[f.ambient_offset + i];
    }
    if (f.kind == FactorKind::kSL) {
      mean /= f.n;
      for (int i = 0; i < f.n; ++i) amb[f.ambient_offset + i] -= mean;
    }
  }
  base.interior_point = rd.from_ambient(amb);
  const IVec zero(rd.rank, Int(0));
  for (const auto& f : rd.factors) {
    if (f.n < 2) continue;
    const int o = f.ambient_offset;
    for (int i = 0; i + 1 < f.n; ++i) {
      int k = rd.positive_root_index(o + i, o + i + 1);
      base.simple_affine_reflections.push_back({zero, rd.reflection(k)});
    }
    int theta = rd.positive_root_index(o, o + f.n - 1);
    base.simple_affine_reflections.push_back(
        {rd.coroots[theta], rd.reflection(theta)});
  }
  const auto weyl = weyl_group(rd);
  for (size_t fi = 0; fi < rd.factors.size(); ++fi) {
    const auto& f = rd.factors[fi];
    if (f.kind == FactorKind::kSL) continue;
    IVec nu = unit_vector(rd, f.ambient_offset);
    bool found = false;
    for (const auto& w : weyl) {
      AffineWeylElement cand{nu, w};
      if (length(rd, base, cand) == 0) {
        base.omega_generators.push_back(cand);
        base.omega_factor.push_back(static_cast<int>(fi));
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no alcove-stabilizing element");
  }
  return base;
}

Int length(const RootDatum& rd, const BaseAlcove& base,
           const AffineWeylElement& w) {
  QVec y = act(w, base.interior_point);
  Int total = 0;
  for (int a : rd.positive_indices) total += abs(floor_q(rd.pair(a, y)));
  return total;
}

ReducedWord reduced_word(const RootDatum& rd, const BaseAlcove& base,
                         const AffineWeylElement& w) {
  ReducedWord out;
  AffineWeylElement cur = w;
  Int len = length(rd, base, cur);
  while (len > 0) {
    bool moved = false;
    for (size_t i = 0; i < base.simple_affine_reflections.size(); ++i) {
      AffineWeylElement next = base.simple_affine_reflections[i] * cur;
      Int l = length(rd, base, next);
      if (l < len) {
        out.word.push_back(static_cast<int>(i) + 1);
        cur = next;
        len = l;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("no descent found");
  }
  out.omega = cur;
  return out;
}

AffineWeylElement compose_word(const RootDatum& rd, const BaseAlcove& base,
                               const std::vector<int>& word,
                               const AffineWeylElement& omega) {
  AffineWeylElement acc = finite_element(rd, rd.identity());
  for (int i : word) {
    if (i < 1 || i > static_cast<int>(base.simple_affine_reflections.size()))
      throw std::out_of_range("reflection index out of range");
    acc = acc * base.simple_affine_reflections[i - 1];
  }
  return acc * omega;
}

std::vector<Int> omega_exponents(const RootDatum& rd, const BaseAlcove& base,
                                 const AffineWeylElement& omega) {
  IVec amb = rd.to_ambient(omega.translation);
  std::vector<Int> out;
  for (int fi : base.omega_factor) {
    const auto& f = rd.factors[fi];
    Int s = 0;
    for (int i = 0; i < f.n; ++i) s += amb[f.ambient_offset + i];
    if (f.kind == FactorKind::kPGL) s = mod_floor(s, Int(f.n));
    out.push_back(s);
  }
  return out;
}

std::string omega_name(const RootDatum& rd, const BaseAlcove& base,
                       const AffineWeylElement& omega) {
  auto k = omega_exponents(rd, base, omega);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << "t~";
    if (k.size() > 1) os << "_" << base.omega_factor[i] + 1;
    if (k[i] != 1) os << "^" << k[i];
  }
  return any ? os.str() : "1";
}

std::string word_name(const ReducedWord& rw, const RootDatum& rd,
                      const BaseAlcove& base) {
  std::ostringstream os;
  for (int i : rw.word) os << "s~" << i << " ";
  os << omega_name(rd, base, rw.omega);
  return os.str();
}

const std::set<AffineWeylElement>& BruhatOrder::lower_set(
    const AffineWeylElement& b) {
  auto it = cache_.find(b);
  if (it != cache_.end()) return it->second;
  ReducedWord rw = reduced_word(rd_, base_, b);
  if (rw.word.size() > 24) throw CapExceeded("element too long for subwords");
  std::set<AffineWeylElement> prods{rw.omega};
  for (auto k = rw.word.rbegin(); k != rw.word.rend(); ++k) {
    const auto& s = base_.simple_affine_reflections[*k - 1];
    std::vector<AffineWeylElement> add;
    for (const auto& x : prods) add.push_back(s * x);
    prods.insert(add.begin(), add.end());
  }
  return cache_.emplace(b, std::move(prods)).first->second;
}

bool BruhatOrder::leq(const AffineWeylElement& a, const AffineWeylElement& b) {
  return lower_set(b).count(a) > 0;
}

std::vector<AdmissibleEntry> admissible_set(const RootDatum& rd,
                                            const BaseAlcove& base,
                                            const IVec& mu, std::size_t cap) {
  BruhatOrder order(rd, base);
  std::set<AffineWeylElement> all;
  for (const auto& w : weyl_group(rd)) {
    AffineWeylElement t = translation_element(rd, w.matrix * mu);
    const auto& low = order.lower_set(t);
    all.insert(low.begin(), low.end());
    if (all.size() > cap) throw CapExceeded("admissible set too large");
  }
  std::vector<AdmissibleEntry> out;
  for (const auto& x : all) {
    AdmissibleEntry e;
    e.element = x;
    e.word = reduced_word(rd, base, x);
    e.length = static_cast<long>(e.word.word.size());
    e.is_translation = x.finite == rd.identity();
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const AdmissibleEntry& a, const AdmissibleEntry& b) {
              if (a.length != b.length) return a.length < b.length;
              if (a.word.word != b.word.word) return a.word.word < b.word.word;
              return a.element < b.element;
            });
  return out;
}

Int h_mu(const RootDatum& rd, const IVec& mu) {
  if (static_cast<int>(mu.size()) != rd.rank)
    throw std::invalid_argument("mu has wrong length");
  Int best = 0;
  for (size_t a = 0; a < rd.roots.size(); ++a)
    best = std::max(best, rd.pair(static_cast<int>(a), mu));
  return best;
}

std::vector<AffineWeylElement> elements_up_to_length(const RootDatum& rd,
                                                     const BaseAlcove& base,
                                                     int max_length) {
  AffineWeylElement id = finite_element(rd, rd.identity());
  std::set<AffineWeylElement> seen{id};
  std::vector<AffineWeylElement> out{id}, frontier{id};
  for (int l = 1; l <= max_length; ++l) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : frontier)
      for (const auto& s : base.simple_affine_reflections) {
        AffineWeylElement y = s * x;
        if (seen.count(y) || length(rd, base, y) != l) continue;
        seen.insert(y);
        next.push_back(y);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string to_string(const RootDatum& rd, const AffineWeylElement& a) {
  IVec amb = rd.to_ambient(a.translation);
  std::ostringstream os;
  os << "v^(";
  for (size_t i = 0; i < amb.size(); ++i) os << (i ? "," : "") << amb[i];
  os << ") s_" << cycles_string(rd.permutation_of(a.finite));
  return os.str();
}

}  // namespace alcovekit
