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

#include "alcovekit/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace alcovekit {

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return {a.matrix * b.matrix};
}

WeylElement inverse(const WeylElement& w) {
  return {inverse_unimodular(w.matrix)};
}

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_product(std::string_view label) {
  std::string s = trim(label);
  if (s.rfind("Product(", 0) == 0 && !s.empty() && s.back() == ')') {
    s = s.substr(8, s.size() - 9);
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(trim(item));
    return parts;
  }
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == 'x' || s[i] == '*') {
      parts.push_back(trim(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

Factor parse_factor(const std::string& name) {
  auto number = [&](size_t from) {
    if (from >= name.size()) throw std::invalid_argument("missing rank");
    for (size_t i = from; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw std::invalid_argument("unsupported label: " + name);
    int n = std::stoi(name.substr(from));
    if (n < 1 || n > 64) throw std::invalid_argument("unsupported size");
    return n;
  };
  if (name.rfind("PGL", 0) == 0) return {FactorKind::kPGL, number(3), 0, 0, 0};
  if (name.rfind("GL", 0) == 0) return {FactorKind::kGL, number(2), 0, 0, 0};
  if (name.rfind("SL", 0) == 0) return {FactorKind::kSL, number(2), 0, 0, 0};
  throw std::invalid_argument("unsupported label: " + name);
}

std::string factor_name(const Factor& f) {
  switch (f.kind) {
    case FactorKind::kGL:
      return "GL" + std::to_string(f.n);
    case FactorKind::kSL:
      return "SL" + std::to_string(f.n);
    case FactorKind::kPGL:
      return "PGL" + std::to_string(f.n);
  }
  return "?";
}

IMat power(const IMat& m, const Int& k) {
  IMat result = IMat::identity(m.rows);
  IMat base = m;
  Int e = k;
  while (e > 0) {
    if (e % 2 == 1) result = result * base;
    base = base * base;
    e /= 2;
  }
  return result;
}

// Order of a finite-order integer matrix, or 0 if it exceeds the bound.
long long matrix_order(const IMat& m, long long bound) {
  IMat id = IMat::identity(m.rows);
  IMat acc = m;
  for (long long k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * m;
  }
  return 0;
}

// Image of a dual (row) vector under the contragredient of m.
IVec dual_image(const IMat& m_inv, const IVec& alpha) {
  IVec out(alpha.size());
  for (int j = 0; j < m_inv.cols; ++j)
    for (int i = 0; i < m_inv.rows; ++i) out[j] += alpha[i] * m_inv(i, j);
  return out;
}

void check_preserves(const RootDatum& rd, const IMat& m, const char* what) {
  if (m.rows != rd.rank || m.cols != rd.rank)
    throw std::invalid_argument(std::string(what) + ": wrong matrix size");
  IMat inv = inverse_unimodular(m);
  std::set<int> simple(rd.simple_indices.begin(), rd.simple_indices.end());
  for (size_t k = 0; k < rd.roots.size(); ++k) {
    int c = rd.coroot_index(m * rd.coroots[k]);
    int r = rd.root_index(dual_image(inv, rd.roots[k]));
    if (c < 0 || r < 0 || c != r)
      throw std::invalid_argument(std::string(what) +
                                  " does not preserve the root datum");
    if (simple.count(static_cast<int>(k)) && !simple.count(r))
      throw std::invalid_argument(std::string(what) +
                                  " does not preserve the base");
  }
}

}  // namespace

IVec RootDatum::from_ambient(const IVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim)
    throw std::invalid_argument("ambient vector has wrong length");
  for (const auto& f : factors) {
    if (f.kind != FactorKind::kSL) continue;
    Int s = 0;
    for (int i = 0; i < f.n; ++i) s += x[f.ambient_offset + i];
    if (s != 0) throw std::domain_error("vector is not in the SL lattice");
  }
  return coords * x;
}

QVec RootDatum::from_ambient(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim)
    throw std::invalid_argument("ambient vector has wrong length");
  for (const auto& f : factors) {
    if (f.kind != FactorKind::kSL) continue;
    Rational s = 0;
    for (int i = 0; i < f.n; ++i) s += x[f.ambient_offset + i];
    if (s != 0) throw std::domain_error("vector is not in the SL space");
  }
  return coords * x;
}

IMat RootDatum::lattice_map(const IMat& ambient) const {
  return coords * ambient * basis;
}

WeylElement RootDatum::weyl_from_permutation(
    const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != ambient_dim)
    throw std::invalid_argument("permutation has wrong length");
  for (const auto& f : factors)
    for (int i = 0; i < f.n; ++i) {
      int t = sigma[f.ambient_offset + i];
      if (t < f.ambient_offset || t >= f.ambient_offset + f.n)
        throw std::invalid_argument("permutation mixes factors");
    }
  std::vector<bool> seen(ambient_dim, false);
  for (int t : sigma) {
    if (seen[t]) throw std::invalid_argument("not a permutation");
    seen[t] = true;
  }
  IMat m(ambient_dim, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) m(sigma[i], i) = 1;
  return {lattice_map(m)};
}

IMat RootDatum::permutation_map(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != ambient_dim)
    throw std::invalid_argument("permutation has wrong length");
  IMat m(ambient_dim, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) m(sigma.at(i), i) = 1;
  return lattice_map(m);
}

std::vector<int> RootDatum::permutation_of(const WeylElement& w) const {
  std::vector<int> sigma(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) sigma[i] = i;
  for (const auto& f : factors) {
    if (f.n < 2) continue;
    const int o = f.ambient_offset;
    for (int i = 0; i < f.n; ++i) {
      std::map<int, int> first;
      for (int j = 0; j < f.n; ++j) {
        if (j == i) continue;
        int k = positive_root_index(o + i, o + j);
        IVec img = w.matrix * coroots[k];
        int c = coroot_index(img);
        if (c < 0) throw std::domain_error("matrix is not a Weyl element");
        ++first[root_pairs[c].first];
      }
      int target = -1;
      for (auto [t, cnt] : first)
        if (cnt == f.n - 1) target = t;
      if (target < 0) throw std::domain_error("matrix is not a permutation");
      sigma[o + i] = target;
    }
  }
  return sigma;
}

WeylElement RootDatum::reflection(int root) const {
  IMat m = IMat::identity(rank);
  const IVec& a = roots.at(root);
  const IVec& c = coroots.at(root);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m(i, j) -= c[i] * a[j];
  return {m};
}

int RootDatum::coroot_index(const IVec& x) const {
  for (size_t k = 0; k < coroots.size(); ++k)
    if (coroots[k] == x) return static_cast<int>(k);
  return -1;
}

int RootDatum::root_index(const IVec& x) const {
  for (size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == x) return static_cast<int>(k);
  return -1;
}

int RootDatum::positive_root_index(int i, int j) const {
  for (size_t k = 0; k < root_pairs.size(); ++k)
    if (root_pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
  return -1;
}

bool RootDatum::is_gl_only() const {
  for (const auto& f : factors)
    if (f.kind != FactorKind::kGL) return false;
  return true;
}

RootDatum build_root_datum(std::string_view label) {
  RootDatum rd;
  std::string t = trim(label);
  std::vector<std::string> names;
  if (t == "trivial" || t.empty()) {
    names.push_back("SL1");
  } else {
    names = split_product(t);
  }
  if (names.empty()) throw std::invalid_argument("empty label");
  int amb = 0, lat = 0;
  for (const auto& name : names) {
    Factor f = parse_factor(name);
    f.ambient_offset = amb;
    f.lattice_offset = lat;
    f.lattice_rank = f.kind == FactorKind::kGL ? f.n : f.n - 1;
    amb += f.n;
    lat += f.lattice_rank;
    rd.factors.push_back(f);
  }
  rd.ambient_dim = amb;
  rd.rank = lat;
  {
    std::string joined;
    for (size_t i = 0; i < rd.factors.size(); ++i)
      joined += (i ? "x" : "") + factor_name(rd.factors[i]);
    rd.label = joined;
  }
  rd.basis = IMat(amb, lat);
  rd.coords = IMat(lat, amb);
  for (const auto& f : rd.factors) {
    const int ao = f.ambient_offset, lo = f.lattice_offset;
    switch (f.kind) {
      case FactorKind::kGL:
        for (int i = 0; i < f.n; ++i) {
          rd.basis(ao + i, lo + i) = 1;
          rd.coords(lo + i, ao + i) = 1;
        }
        break;
      case FactorKind::kSL:
        for (int k = 0; k + 1 < f.n; ++k) {
          rd.basis(ao + k, lo + k) = 1;
          rd.basis(ao + k + 1, lo + k) = -1;
          for (int i = 0; i <= k; ++i) rd.coords(lo + k, ao + i) = 1;
        }
        break;
      case FactorKind::kPGL:
        for (int k = 0; k + 1 < f.n; ++k) {
          rd.basis(ao + k, lo + k) = 1;
          rd.coords(lo + k, ao + k) = 1;
          rd.coords(lo + k, ao + f.n - 1) = -1;
        }
        break;
    }
  }
  auto add_root = [&](int i, int j) {
    IVec amb_cor(amb);
    amb_cor[i] = 1;
    amb_cor[j] = -1;
    IVec dual(lat);
    for (int k = 0; k < lat; ++k) dual[k] = rd.basis(i, k) - rd.basis(j, k);
    rd.roots.push_back(dual);
    rd.coroots.push_back(rd.coords * amb_cor);
    rd.root_pairs.emplace_back(i, j);
  };
  for (const auto& f : rd.factors) {
    const int o = f.ambient_offset;
    for (int i = 0; i < f.n; ++i)
      for (int j = i + 1; j < f.n; ++j) {
        rd.positive_indices.push_back(static_cast<int>(rd.roots.size()));
        if (j == i + 1)
          rd.simple_indices.push_back(static_cast<int>(rd.roots.size()));
        add_root(o + i, o + j);
      }
    for (int i = 0; i < f.n; ++i)
      for (int j = i + 1; j < f.n; ++j) add_root(o + j, o + i);
  }
  return rd;
}

std::vector<WeylElement> weyl_group(const RootDatum& rd, std::size_t cap) {
  std::vector<WeylElement> gens;
  for (int k : rd.simple_indices) gens.push_back(rd.reflection(k));
  std::vector<WeylElement> out{rd.identity()};
  std::set<IMat> seen{out[0].matrix};
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t idx = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElement next{out[idx].matrix * s.matrix};
      if (seen.insert(next.matrix).second) {
        if (out.size() >= cap)
          throw CapExceeded("Weyl group exceeds cap of " +
                            std::to_string(cap) + " elements");
        out.push_back(next);
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

std::vector<int> parse_cycles(std::string_view text, int n) {
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  std::string s = trim(text);
  if (s.empty() || s == "1" || s == "()" || s == "id") return sigma;
  std::vector<bool> touched(n, false);
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::invalid_argument("bad cycle notation: " + s);
    size_t close = s.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced cycle notation: " + s);
    std::vector<int> cyc;
    std::string body = s.substr(i + 1, close - i - 1);
    bool has_sep = body.find_first_of(", ") != std::string::npos;
    if (has_sep) {
      std::string tok;
      std::stringstream ss(body);
      while (std::getline(ss, tok, body.find(',') != std::string::npos ? ',' : ' ')) {
        tok = trim(tok);
        if (!tok.empty()) cyc.push_back(std::stoi(tok) - 1);
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("bad cycle entry in " + s);
        cyc.push_back(ch - '1');
      }
    }
    // Cycles are applied right to left.
    std::vector<int> c(n);
    for (int k = 0; k < n; ++k) c[k] = k;
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("cycle entry out of range in " + s);
      c[a] = b;
    }
    std::vector<int> composed(n);
    for (int k = 0; k < n; ++k) composed[k] = sigma[c[k]];
    sigma = composed;
    i = close + 1;
  }
  std::vector<bool> hit(n, false);
  for (int v : sigma) {
    if (hit[v]) throw std::invalid_argument("not a permutation: " + s);
    hit[v] = true;
  }
  return sigma;
}

AbelianGroup pi1(const RootDatum& rd) {
  IMat m(rd.rank, static_cast<int>(rd.coroots.size()));
  for (size_t k = 0; k < rd.coroots.size(); ++k)
    for (int i = 0; i < rd.rank; ++i) m(i, static_cast<int>(k)) = rd.coroots[k][i];
  return cokernel(m);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int minimal_degree(const Int& p, const Int& e) {
  if (e <= 0 || p < 2 || e % p == 0)
    throw std::invalid_argument("need e > 0 prime to p");
  Int acc = p % e;
  for (int r = 1; r <= 4096; ++r) {
    if (e == 1 || acc == 1) return r;
    acc = (acc * p) % e;
  }
  throw std::invalid_argument("p has no finite order modulo e");
}

GammaData make_gamma(const RootDatum& rd, const Int& p, const Int& e, int r,
                     const IMat& psi, const IMat& inertia) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e <= 0 || e % p == 0)
    throw std::invalid_argument("e must be positive and prime to p");
  if (r <= 0) throw std::invalid_argument("r must be positive");
  GammaData g;
  g.p = p;
  g.e = e;
  g.r = r;
  g.q = boost::multiprecision::pow(p, static_cast<unsigned>(r));
  if ((g.q - 1) % e != 0)
    throw std::invalid_argument("e must divide q - 1");
  check_preserves(rd, psi, "pinned automorphism");
  check_preserves(rd, inertia, "inertial action");
  if (power(psi, r) != IMat::identity(rd.rank))
    throw std::invalid_argument("pinned automorphism order must divide r");
  if (power(inertia, e) != IMat::identity(rd.rank))
    throw std::invalid_argument("inertial action order must divide e");
  g.psi = psi;
  g.inertia = inertia;
  return g;
}

GammaData make_split_gamma(const RootDatum& rd, const Int& p, const Int& e,
                           int r) {
  return make_gamma(rd, p, e, r, IMat::identity(rd.rank),
                    IMat::identity(rd.rank));
}

Pi1Coinvariants pi1_coinvariants(const RootDatum& rd, const GammaData& g) {
  const int nc = static_cast<int>(rd.coroots.size());
  IMat m(rd.rank, nc + rd.rank);
  for (int k = 0; k < nc; ++k)
    for (int i = 0; i < rd.rank; ++i) m(i, k) = rd.coroots[k][i];
  for (int j = 0; j < rd.rank; ++j)
    for (int i = 0; i < rd.rank; ++i)
      m(i, nc + j) = g.inertia(i, j) - (i == j ? 1 : 0);
  Pi1Coinvariants out;
  out.group = cokernel(m);
  out.torsion_free = out.group.is_torsion_free();
  return out;
}

TatePresentation tate_presentation(const RootDatum& rd, const GammaData& g) {
  const int n = rd.rank;
  TatePresentation t;
  IMat gm1 = g.inertia;
  for (int i = 0; i < n; ++i) gm1(i, i) -= 1;
  SmithForm s = smith_normal_form(gm1);
  IMat vinv = inverse_unimodular(s.V);
  std::vector<int> idx;
  for (int j = 0; j < n; ++j) {
    bool pivot = j < static_cast<int>(s.diagonal.size()) && s.diagonal[j] != 0;
    if (!pivot) idx.push_back(j);
  }
  const int k = static_cast<int>(idx.size());
  t.fixed_basis = IMat(n, k);
  t.fixed_coords = IMat(k, n);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < n; ++r) t.fixed_basis(r, c) = s.V(r, idx[c]);
    for (int r = 0; r < n; ++r) t.fixed_coords(c, r) = vinv(idx[c], r);
  }
  // Norm map: N = (e / o) * sum_{i < o} g^i with o the order of g.
  long long o = matrix_order(g.inertia, 1'000'000);
  if (o == 0) throw std::invalid_argument("inertial action of infinite order");
  IMat sum(n, n);
  IMat acc = IMat::identity(n);
  for (long long i = 0; i < o; ++i) {
    for (size_t a = 0; a < sum.a.size(); ++a) sum.a[a] += acc.a[a];
    acc = acc * g.inertia;
  }
  Int mult = g.e / o;
  for (auto& v : sum.a) v *= mult;
  t.norm_image = t.fixed_coords * sum;
  t.snf = smith_normal_form(t.norm_image);
  t.group = cokernel(t.norm_image);
  return t;
}

AbelianGroup tate_h0(const RootDatum& rd, const GammaData& g) {
  return tate_presentation(rd, g).group;
}

}  // namespace alcovekit
