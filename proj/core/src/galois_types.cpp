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

#include "alcovekit/galois_types.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace alcovekit {
namespace {

std::int64_t md(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1 % m, x = md(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

int slot_index(int j, int r) { return ((j % r) + r) % r; }

// Exponent of omega^{p^{-j}} as a power of the field generator.
std::int64_t gamma_exponent(const GammaData& g, int j, std::int64_t Q) {
  const std::int64_t e = to_i64(g.e), p = to_i64(g.p);
  const std::int64_t k = powmod(p, slot_index(g.r - j, g.r), Q);
  return static_cast<std::int64_t>(static_cast<__int128>(Q / e) * k % Q);
}

void require_slots(const GammaData& g, std::size_t n, const char* what) {
  if (static_cast<int>(n) != g.r)
    throw std::invalid_argument(std::string(what) + " needs r entries");
}

bool is_identity_matrix(const IMat& m) { return m == IMat::identity(m.rows); }

std::vector<WeylElement> stabilizing_weyl(const RootDatum& rd,
                                          const GammaData& g) {
  std::vector<WeylElement> out;
  for (const auto& w : weyl_group(rd))
    if (w.matrix * g.psi == g.psi * w.matrix &&
        w.matrix * g.inertia == g.inertia * w.matrix)
      out.push_back(w);
  return out;
}

IVec reduce_mod(const IVec& v, const Int& e) {
  // Representative in (-e, 0].
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Int m = mod_floor(v[i], e);
    out[i] = m == 0 ? Int(0) : m - e;
  }
  return out;
}

template <typename M>
struct ChainResult {
  int s = 1;
  std::vector<M> b;
  std::vector<M> c;
  bool verified = false;
};

// c_0 = 1, c_j = c_{j-1} b_j^{-1}; extend b periodically until c closes up.
template <typename M, typename Eq>
ChainResult<M> build_chain(const std::vector<M>& b, const M& one,
                           std::size_t cap, Eq eq) {
  if (b.empty()) throw std::invalid_argument("empty coboundary chain");
  const std::size_t r = b.size();
  ChainResult<M> out;
  std::vector<M> c{one};
  M cur = one;
  std::size_t periods = 0;
  while (true) {
    for (std::size_t j = 1; j <= r; ++j) cur = cur * inverse(b[j % r]);
    ++periods;
    if (eq(cur, one)) break;
    if (periods * r > cap)
      throw CapExceeded("coboundary chain does not close within the cap");
  }
  out.s = static_cast<int>(periods);
  const std::size_t len = periods * r;
  for (std::size_t j = 0; j < len; ++j) out.b.push_back(b[j % r]);
  cur = one;
  out.c.push_back(one);
  for (std::size_t j = 1; j < len; ++j) {
    cur = cur * inverse(out.b[j]);
    out.c.push_back(cur);
  }
  out.verified = true;
  for (std::size_t j = 0; j < len; ++j) {
    const M& prev = out.c[(j + len - 1) % len];
    if (!eq(inverse(out.c[j]) * prev, out.b[j])) out.verified = false;
  }
  return out;
}

}  // namespace

GaloisType GaloisType::constant(const RootDatum& rd, const GammaData& g,
                                const IVec& lambda) {
  if (static_cast<int>(lambda.size()) != rd.rank)
    throw std::invalid_argument("lambda has wrong length");
  GaloisType t;
  t.gamma = g;
  t.lambda.assign(g.r, lambda);
  t.w.assign(g.r, rd.identity());
  return t;
}

std::int64_t exponent_modulus(const GammaData& g) {
  if (g.q > Int(std::int64_t{1} << 62))
    throw CapExceeded("residue field too large for symbolic exponents");
  return to_i64(g.q) - 1;
}

std::vector<int> psi_permutation(const RootDatum& rd, const GammaData& g) {
  std::vector<int> sigma(rd.ambient_dim);
  for (int i = 0; i < rd.ambient_dim; ++i) sigma[i] = i;
  if (is_identity_matrix(g.psi)) return sigma;
  if (!rd.is_gl_only())
    throw std::domain_error("psi must be a permutation of GL coordinates");
  for (int c = 0; c < g.psi.cols; ++c) {
    int row = -1;
    for (int r = 0; r < g.psi.rows; ++r) {
      if (g.psi(r, c) == 0) continue;
      if (g.psi(r, c) != 1 || row >= 0)
        throw std::domain_error("psi is not a permutation matrix");
      row = r;
    }
    if (row < 0) throw std::domain_error("psi is singular");
    sigma[c] = row;
  }
  return sigma;
}

MonomialMatrix lift_weyl(const RootDatum& rd, const WeylElement& w,
                         std::int64_t Q, const Int& p) {
  std::vector<int> sigma = rd.permutation_of(w);
  MonomialMatrix m = MonomialMatrix::permutation(sigma, Q);
  const std::int64_t minus_one = sign_exponent(to_i64(p), Q);
  for (const auto& f : rd.factors) {
    if (f.kind != FactorKind::kSL) continue;
    // Parity by counting cycles of even length.
    std::vector<bool> seen(f.n, false);
    int odd = 0;
    for (int i = 0; i < f.n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int k = i; !seen[k]; k = sigma[f.ambient_offset + k] - f.ambient_offset) {
        seen[k] = true;
        ++len;
      }
      if (len % 2 == 0) odd ^= 1;
    }
    if (odd) {
      auto& z = m.d[f.ambient_offset].z;
      z = md(z + minus_one, Q);
    }
  }
  return m;
}

MonomialMatrix u_power(const RootDatum& rd, const IVec& lambda,
                       std::int64_t Q) {
  IVec amb = rd.to_ambient(lambda);
  std::vector<MonoEntry> d;
  for (const auto& x : amb) d.push_back({0, to_i64(x)});
  return MonomialMatrix::diagonal(d, Q);
}

SlotTuple act_gamma(const RootDatum&, const GammaData& g, const SlotTuple& a) {
  require_slots(g, a.size(), "gamma action");
  if (!g.split())
    throw std::domain_error("only split inertia acts on slot tuples");
  SlotTuple out;
  for (int j = 0; j < g.r; ++j)
    out.push_back(scale_u(a[j], gamma_exponent(g, j, a[j].Q)));
  return out;
}

SlotTuple act_sigma(const RootDatum& rd, const GammaData& g,
                    const SlotTuple& a) {
  require_slots(g, a.size(), "sigma action");
  const auto tau = psi_permutation(rd, g);
  SlotTuple out;
  for (int j = 0; j < g.r; ++j)
    out.push_back(conjugate_by_permutation(a[slot_index(j - 1, g.r)], tau));
  return out;
}

SlotTuple act_sigma_inverse(const RootDatum& rd, const GammaData& g,
                            const SlotTuple& a) {
  require_slots(g, a.size(), "sigma action");
  auto tau = psi_permutation(rd, g);
  std::vector<int> inv(tau.size());
  for (size_t i = 0; i < tau.size(); ++i) inv[tau[i]] = static_cast<int>(i);
  SlotTuple out;
  for (int j = 0; j < g.r; ++j)
    out.push_back(conjugate_by_permutation(a[slot_index(j + 1, g.r)], inv));
  return out;
}

SlotTuple frobenius_slots(const SlotTuple& a, const Int& p) {
  const int r = static_cast<int>(a.size());
  const std::int64_t pp = to_i64(p);
  SlotTuple out;
  for (int j = 0; j < r; ++j) {
    MonomialMatrix m = a[slot_index(j - 1, r)];
    for (auto& e : m.d) e.m *= pp;
    out.push_back(m);
  }
  return out;
}

bool group_equal(const RootDatum& rd, const MonomialMatrix& a,
                 const MonomialMatrix& b) {
  MonomialMatrix q = a * inverse(b);
  if (!q.is_diagonal()) return false;
  for (const auto& f : rd.factors) {
    const int o = f.ambient_offset;
    for (int i = 0; i < f.n; ++i) {
      const MonoEntry& e = q.d[o + i];
      if (f.kind == FactorKind::kPGL) {
        if (!(e == q.d[o])) return false;
      } else if (e.z != 0 || e.m != 0) {
        return false;
      }
    }
  }
  return true;
}

bool group_equal(const RootDatum& rd, const SlotTuple& a, const SlotTuple& b) {
  if (a.size() != b.size()) return false;
  for (size_t j = 0; j < a.size(); ++j)
    if (!group_equal(rd, a[j], b[j])) return false;
  return true;
}

CocycleValues cocycle_values(const RootDatum& rd, const GaloisType& t) {
  const GammaData& g = t.gamma;
  require_slots(g, t.lambda.size(), "lambda");
  require_slots(g, t.w.size(), "w");
  if (!g.split())
    throw std::domain_error("cocycle values need split inertia");
  for (const auto& l : t.lambda)
    if (static_cast<int>(l.size()) != rd.rank)
      throw std::invalid_argument("lambda has wrong length");
  CocycleValues v;
  v.Q = exponent_modulus(g);
  for (int j = 0; j < g.r; ++j)
    v.n.push_back(inverse(lift_weyl(rd, t.w[j], v.Q, g.p)) *
                  u_power(rd, t.lambda[j], v.Q));
  SlotTuple gn = act_gamma(rd, g, v.n);
  SlotTuple sn = act_sigma(rd, g, v.n);
  for (int j = 0; j < g.r; ++j) {
    MonomialMatrix ninv = inverse(v.n[j]);
    v.tau_gamma.push_back(ninv * gn[j]);
    v.tau_sigma.push_back(ninv * sn[j]);
  }
  return v;
}

CocycleReport check_cocycle(const RootDatum& rd, const GaloisType& t,
                            const CocycleValues& v) {
  const GammaData& g = t.gamma;
  CocycleReport rep;
  rep.u_free = true;
  for (int j = 0; j < g.r; ++j)
    rep.u_free = rep.u_free && v.tau_gamma[j].is_u_free() &&
                 v.tau_sigma[j].is_u_free();
  const std::int64_t e = to_i64(g.e);
  SlotTuple one(g.r, MonomialMatrix::identity(rd.ambient_dim, v.Q));
  SlotTuple ge, gp, gq;
  for (int j = 0; j < g.r; ++j) {
    ge.push_back(power(v.tau_gamma[j], e));
    gp.push_back(power(v.tau_gamma[j], to_i64(g.p)));
    // q is only needed modulo the order of tau(gamma), which divides e.
    gq.push_back(power(v.tau_gamma[j], to_i64(mod_floor(g.q, g.e))));
  }
  rep.gamma_order = group_equal(rd, ge, one);
  SlotTuple sg = act_sigma(rd, g, v.tau_gamma);
  SlotTuple lhs;
  for (int j = 0; j < g.r; ++j)
    lhs.push_back(v.tau_sigma[j] * sg[j] * inverse(v.tau_sigma[j]));
  rep.conjugation_p = group_equal(rd, lhs, gp);
  rep.conjugation_q = group_equal(rd, lhs, gq);
  // tau(sigma^r) = tau(sigma) . sigma(tau(sigma)) ... sigma^{r-1}(tau(sigma)).
  SlotTuple acc = one, term = v.tau_sigma;
  for (int k = 0; k < g.r; ++k) {
    for (int j = 0; j < g.r; ++j) acc[j] = acc[j] * term[j];
    term = act_sigma(rd, g, term);
  }
  rep.sigma_norm = group_equal(rd, acc, one);
  return rep;
}

QVec act(const NormalizerElement& c, const QVec& y) {
  return c.w.matrix * y - to_rational(c.translation);
}

FrobeniusWitness frobenius_invariant(const RootDatum& rd,
                                     const ApartmentPoint& x) {
  const GammaData& g = x.gamma;
  if (!g.split())
    throw std::domain_error(
        "Frobenius invariance is not decided for ramified inertia");
  require_slots(g, x.eta.size(), "eta");
  if (!is_gamma_fixed(x))
    throw std::invalid_argument("point is not Gamma-fixed");
  const QVec target = scale(Rational(g.p), x.eta[g.r - 1]);
  FrobeniusWitness out;
  for (const auto& w : weyl_group(rd)) {
    QVec diff = w.matrix * target - x.eta[0];
    if (!is_integral(diff)) continue;
    out.invariant = true;
    out.c = NormalizerElement{to_integral(diff), w};
    return out;
  }
  return out;
}

FrobeniusWitness frobenius_invariant(const RootDatum& rd,
                                     const GaloisType& t) {
  return frobenius_invariant(rd,
                             point_from_type(rd, t.gamma, t.lambda, t.w));
}

CensusResult census(const RootDatum& rd, const GammaData& g,
                    std::size_t cap) {
  if (rd.rank > 3) throw CapExceeded("census is limited to rank 3");
  if (g.e > 10000) throw CapExceeded("census is limited to e <= 10^4");
  CensusResult out;
  const auto wstar = stabilizing_weyl(rd, g);
  if (rd.rank == 0) {
    out.tate_order = 1;
    CensusClass c{IVec{}, 1, std::nullopt, std::nullopt};
    if (g.split()) {
      auto fw = frobenius_invariant(rd, GaloisType::constant(rd, g, {}));
      c.invariant = fw.invariant;
      c.witness = fw.c;
      out.invariance_decided = true;
      out.invariant_count = fw.invariant ? 1 : 0;
    }
    out.classes.push_back(c);
    return out;
  }
  if (g.split()) {
    const std::int64_t e = to_i64(g.e);
    Int total = 1;
    for (int i = 0; i < rd.rank; ++i) total *= g.e;
    out.tate_order = total;
    if (total > Int(cap)) throw CapExceeded("census enumeration too large");
    const std::int64_t n = to_i64(total);
    // Index of a representative with coordinates in (-e, 0]; index 0 is 0
    // and indices run through the coordinates in descending lexicographic
    // order, so the first member of each orbit met is its lexicographic max.
    auto decode = [&](std::int64_t idx) {
      IVec v(rd.rank);
      for (int i = rd.rank - 1; i >= 0; --i) {
        v[i] = -(idx % e);
        idx /= e;
      }
      return v;
    };
    auto encode = [&](const IVec& v) {
      std::int64_t idx = 0;
      for (int i = 0; i < rd.rank; ++i) idx = idx * e + to_i64(-v[i]);
      return idx;
    };
    std::vector<bool> seen(n, false);
    for (std::int64_t idx = 0; idx < n; ++idx) {
      if (seen[idx]) continue;
      IVec lam = decode(idx);
      std::size_t orbit = 0;
      for (const auto& w : wstar) {
        std::int64_t k = encode(reduce_mod(w.matrix * lam, g.e));
        if (!seen[k]) {
          seen[k] = true;
          ++orbit;
        }
      }
      CensusClass c;
      c.representative = lam;
      c.orbit_size = orbit;
      if (is_identity_matrix(g.psi) || g.psi * lam == lam) {
        auto fw = frobenius_invariant(rd, GaloisType::constant(rd, g, lam));
        c.invariant = fw.invariant;
        c.witness = fw.c;
        if (fw.invariant) ++out.invariant_count;
      }
      out.classes.push_back(c);
    }
    out.invariance_decided = true;
    for (const auto& c : out.classes)
      if (!c.invariant) out.invariance_decided = false;
    return out;
  }
  // Ramified inertia: enumerate X^I / N(X) through Smith coordinates.
  TatePresentation tp = tate_presentation(rd, g);
  out.tate_order = tp.group.order();
  if (out.tate_order > Int(cap)) throw CapExceeded("census enumeration too large");
  const int k = tp.fixed_basis.cols;
  std::vector<Int> mods(k, Int(1));
  for (int i = 0; i < k && i < static_cast<int>(tp.snf.diagonal.size()); ++i)
    mods[i] = tp.snf.diagonal[i] == 0 ? Int(1) : tp.snf.diagonal[i];
  IMat uinv = inverse_unimodular(tp.snf.U);
  auto key = [&](const IVec& lam) {
    IVec t = tp.snf.U * (tp.fixed_coords * lam);
    for (int i = 0; i < k; ++i) t[i] = mod_floor(t[i], mods[i]);
    return t;
  };
  std::set<IVec> seen;
  IVec t(k, Int(0));
  while (true) {
    if (!seen.count(t)) {
      IVec lam = tp.fixed_basis * (uinv * t);
      CensusClass c;
      c.representative = lam;
      for (const auto& w : wstar)
        if (seen.insert(key(w.matrix * lam)).second) ++c.orbit_size;
      out.classes.push_back(c);
    }
    int i = k - 1;
    while (i >= 0) {
      t[i] += 1;
      if (t[i] < mods[i]) break;
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

CoboundaryChain strictify(const std::vector<MonomialMatrix>& b,
                          std::size_t cap) {
  if (b.empty()) throw std::invalid_argument("empty coboundary chain");
  for (const auto& m : b)
    if (!m.is_u_free())
      throw std::invalid_argument("coboundary entries must be constants");
  const std::int64_t Q = b[0].Q;
  auto res = build_chain(b, MonomialMatrix::identity(b[0].size(), Q), cap,
                         [](const MonomialMatrix& x, const MonomialMatrix& y) {
                           return x == y;
                         });
  CoboundaryChain out;
  out.s_extension = res.s;
  Int q = Int(Q) + 1, qs = 1;
  for (int i = 0; i < res.s; ++i) qs *= q;
  if (qs > Int(std::int64_t{1} << 62))
    throw CapExceeded("extended residue field too large");
  out.Q = to_i64(qs) - 1;
  for (const auto& m : res.b) out.b.push_back(reembed(m, out.Q));
  for (const auto& m : res.c) out.c.push_back(reembed(m, out.Q));
  out.verified = res.verified;
  return out;
}

FqCoboundaryChain strictify(const std::vector<FqMatrix>& b, std::size_t cap) {
  if (b.empty()) throw std::invalid_argument("empty coboundary chain");
  auto res = build_chain(b, FqMatrix::identity(b[0].field, b[0].n), cap,
                         [](const FqMatrix& x, const FqMatrix& y) {
                           return x == y;
                         });
  return {res.s, res.b, res.c, res.verified};
}

WeilRestrictionType type_from_s_mu(const RootDatum& rd, const WeylElement& s,
                                   const IVec& mu, const GammaData& g) {
  if (!rd.is_gl_only())
    throw std::domain_error("type_from_s_mu needs a product of GL_n");
  if (g.e != g.q - 1) throw std::invalid_argument("need e = q - 1");
  if (!g.split()) throw std::domain_error("need split inertia");
  if (static_cast<int>(mu.size()) != rd.rank)
    throw std::invalid_argument("mu has wrong length");
  WeilRestrictionType out;
  out.mu_eta = mu;
  for (const auto& f : rd.factors)
    for (int i = 0; i < f.n; ++i) out.mu_eta[f.ambient_offset + i] += f.n - 1 - i;
  for (const auto& x : out.mu_eta)
    if (x < 0 || x > g.p - 1)
      throw std::invalid_argument("mu + eta must lie in [0, p - 1]");
  const IMat& psi = g.psi;
  const IMat psi_inv = inverse_unimodular(psi);
  const IMat sp = s.matrix * psi;
  const IMat sp_inv = inverse_unimodular(sp);
  IMat acc = IMat::identity(rd.rank);
  for (int i = 0; i < g.r; ++i) acc = acc * sp;
  if (!is_identity_matrix(acc))
    throw std::invalid_argument("(s psi)^r must be the identity");
  const int r = g.r;
  // lambda_0 = sum_k p^k (s psi)^{-k} (mu + eta).
  IVec lam0(rd.rank, Int(0));
  IVec term = out.mu_eta;
  Int pk = 1;
  for (int k = 0; k < r; ++k) {
    lam0 = lam0 + scale(pk, term);
    term = sp_inv * term;
    pk *= g.p;
  }
  GaloisType& t = out.type;
  t.gamma = g;
  t.lambda.push_back(lam0);
  for (int j = 1; j < r; ++j) t.lambda.push_back(sp * t.lambda[j - 1]);
  // w_j = s psi w_{j-1} psi^{-1}, closed by w_{r-1} = 1.
  std::vector<WeylElement> w(r);
  w[r - 1] = rd.identity();
  for (int j = 0; j < r - 1; ++j) {
    const WeylElement& prev = w[slot_index(j - 1, r)];
    w[j] = WeylElement{s.matrix * psi * prev.matrix * psi_inv};
  }
  const WeylElement closing{s.matrix * psi * w[slot_index(r - 2, r)].matrix *
                            psi_inv};
  if (!(closing == w[r - 1]))
    throw std::invalid_argument("Weyl recursion does not close");
  t.w = w;
  out.x = point_from_type(rd, g, t.lambda, t.w);
  out.gamma_fixed = is_gamma_fixed(out.x);
  // c_j = psi^j (s^{-1} v^{-(mu + eta)}) = v^{-psi^j s^{-1}(mu+eta)} psi^j s^{-1} psi^{-j}.
  const IMat s_inv = inverse_unimodular(s.matrix);
  IMat pj = IMat::identity(rd.rank), pj_inv = IMat::identity(rd.rank);
  ApartmentPoint phx = frobenius(out.x);
  out.c_phi_x_equals_x = true;
  for (int j = 0; j < r; ++j) {
    NormalizerElement c{-(pj * (s_inv * out.mu_eta)),
                        WeylElement{pj * s_inv * pj_inv}};
    if (act(c, phx.eta[j]) != out.x.eta[j]) out.c_phi_x_equals_x = false;
    out.c.push_back(c);
    pj = psi * pj;
    pj_inv = pj_inv * psi_inv;
  }
  return out;
}

SlotTuple shapiro(const RootDatum& rd, const GammaData& g,
                  const std::vector<MonomialMatrix>& f,
                  const std::optional<std::vector<MonomialMatrix>>& f_gamma) {
  require_slots(g, f.size(), "shapiro input");
  const auto tau = psi_permutation(rd, g);
  if (f_gamma) {
    require_slots(g, f_gamma->size(), "shapiro gamma values");
    for (int j = 0; j < g.r; ++j) {
      MonomialMatrix expect = scale_u(f[j], gamma_exponent(g, 0, f[j].Q));
      if (!((*f_gamma)[j] == expect))
        throw std::invalid_argument("f is not inertia-equivariant");
    }
  }
  SlotTuple out;
  for (int j = 0; j < g.r; ++j) {
    MonomialMatrix m = f[j];
    for (int k = 0; k < j; ++k) m = conjugate_by_permutation(m, tau);
    out.push_back(m);
  }
  return out;
}

std::vector<MonomialMatrix> shapiro_inverse(const RootDatum& rd,
                                            const GammaData& g,
                                            const SlotTuple& tuple) {
  require_slots(g, tuple.size(), "shapiro tuple");
  auto tau = psi_permutation(rd, g);
  std::vector<int> inv(tau.size());
  for (size_t i = 0; i < tau.size(); ++i) inv[tau[i]] = static_cast<int>(i);
  std::vector<MonomialMatrix> f;
  for (int j = 0; j < g.r; ++j) {
    MonomialMatrix m = tuple[j];
    for (int k = 0; k < j; ++k) m = conjugate_by_permutation(m, inv);
    f.push_back(m);
  }
  return f;
}

SlotTuple linearize_sigma(const RootDatum& rd, const GammaData& g,
                          const SlotTuple& tau_sigma, const SlotTuple& b) {
  require_slots(g, tau_sigma.size(), "tau(sigma)");
  require_slots(g, b.size(), "b");
  const auto tau = psi_permutation(rd, g);
  SlotTuple out;
  for (int j = 0; j < g.r; ++j)
    out.push_back(tau_sigma[j] *
                  inverse(conjugate_by_permutation(b[j], tau)));
  return out;
}

}  // namespace alcovekit
