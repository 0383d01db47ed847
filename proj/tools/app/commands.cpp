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


#include "commands.hpp"

#include <fstream>
#include <sstream>
#include <string_view>

#include "alcovekit/apartment.hpp"
#include "alcovekit/figures.hpp"
#include "alcovekit/iwahori_weyl.hpp"
#include "alcovekit/rootdata.hpp"

namespace alcovekit::app {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw UsageError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw UsageError("bad integer: " + s);
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw UsageError("bad integer: " + s);
  return Int(s);
}

RootDatum datum(const std::string& label) {
  try {
    return build_root_datum(label);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

IMat ambient_permutation(const std::vector<int>& sigma, bool negate) {
  const int n = static_cast<int>(sigma.size());
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m(sigma[i], i) = negate ? -1 : 1;
  return m;
}

Json pattern_json(const ValuationPattern& vp) {
  Json rows = Json::array();
  for (const auto& row : vp.lower_bounds) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::kOk:
      return "ok";
    case Status::kRefused:
      return "refused";
    case Status::kError:
      return "error";
  }
  return "error";
}

int exit_code(Status s) { return s == Status::kOk ? 0 : 1; }

Json envelope(const std::string& command, const CommandResult& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["status"] = status_name(r.status);
  j["result"] = r.payload;
  if (!r.trace.empty()) j["trace"] = r.trace;
  return j;
}

// ----------------------------------------------------------------- parsing

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : split(text, ',')) {
    const Int z = parse_int(s);
    try {
      out.push_back(to_i64(z));
    } catch (const std::overflow_error&) {
      throw UsageError("integer out of range: " + s);
    }
  }
  return out;
}

IVec parse_ivec(const std::string& text) {
  IVec out;
  for (const auto& s : split(text, ',')) out.push_back(parse_int(s));
  return out;
}

QVec parse_qvec(const std::string& text) {
  QVec out;
  for (const auto& s : split(text, ',')) {
    try {
      out.push_back(parse_rational(s));
    } catch (const std::exception&) {
      throw UsageError("bad rational: " + s);
    }
  }
  return out;
}

std::vector<int> parse_permutation(const std::string& text, int n) {
  try {
    if (!text.empty() && text[0] == '(') return parse_cycles(text, n);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  std::vector<int> sigma;
  for (auto x : parse_int_list(text)) sigma.push_back(static_cast<int>(x));
  if (static_cast<int>(sigma.size()) != n)
    throw UsageError("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (int x : sigma) {
    if (x < 0 || x >= n || seen[x]) throw UsageError("not a permutation");
    seen[x] = true;
  }
  return sigma;
}

// ------------------------------------------------------------ JSON helpers

Json to_json(const Int& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() &&
      z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return to_string(z);
}

Json to_json(const IVec& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const AbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = to_json(IVec(g.torsion.begin(), g.torsion.end()));
  j["text"] = g.to_string();
  return j;
}

Json to_json(const TruncSeries& s) {
  Json j;
  Json terms = Json::object();
  for (const auto& [k, c] : s.terms()) terms[std::to_string(k)] = c;
  j["terms"] = terms;
  if (s.is_exact())
    j["precision"] = "exact";
  else
    j["precision"] = s.precision();
  return j;
}

Json to_json(const LoopElement& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json permutation_json(const RootDatum& rd, const WeylElement& w) {
  Json a = Json::array();
  for (int x : rd.permutation_of(w)) a.push_back(x);
  return a;
}

Json to_json(const RootDatum& rd, const NormalizerElement& c) {
  Json j;
  j["translation"] = to_json(c.translation);
  j["w"] = permutation_json(rd, c.w);
  return j;
}

// --------------------------------------------------------------- commands

GammaData build_gamma(const RootDatum& rd, const GammaOptions& o) {
  const Int p = parse_int(o.p);
  const Int e = parse_int(o.e);
  try {
    const int r = o.r > 0 ? o.r : minimal_degree(p, e);
    IMat psi = IMat::identity(rd.rank);
    if (!o.psi.empty())
      psi = rd.permutation_map(parse_permutation(o.psi, rd.ambient_dim));
    IMat inertia = IMat::identity(rd.rank);
    if (!o.inertia_perm.empty() || o.inertia_negate) {
      std::vector<int> sigma(rd.ambient_dim);
      for (int i = 0; i < rd.ambient_dim; ++i) sigma[i] = i;
      if (!o.inertia_perm.empty())
        sigma = parse_permutation(o.inertia_perm, rd.ambient_dim);
      inertia = rd.lattice_map(ambient_permutation(sigma, o.inertia_negate));
    }
    return make_gamma(rd, p, e, r, psi, inertia);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  } catch (const std::domain_error& ex) {
    throw UsageError(ex.what());
  }
}

CommandResult run_census(const CensusOptions& o) {
  const RootDatum rd = datum(o.gamma.group);
  const GammaData g = build_gamma(rd, o.gamma);
  const CensusResult c = census(rd, g, o.cap);
  CommandResult out;
  Json& j = out.payload;
  j["group"] = rd.label;
  j["p"] = to_json(g.p);
  j["e"] = to_json(g.e);
  j["r"] = g.r;
  j["pi1"] = to_json(pi1(rd));
  j["pi1_coinvariants"] = to_json(pi1_coinvariants(rd, g).group);
  j["tate_order"] = to_json(c.tate_order);
  j["class_count"] = c.classes.size();
  j["invariance_decided"] = c.invariance_decided;
  if (c.invariance_decided) j["invariant_count"] = c.invariant_count;
  Json rows = Json::array();
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    const CensusClass& cl = c.classes[k];
    Json row;
    row["class"] = k;
    row["representative"] = to_json(cl.representative);
    row["orbit_size"] = cl.orbit_size;
    if (cl.invariant)
      row["invariant"] = *cl.invariant;
    else
      row["invariant"] = nullptr;
    row["witness"] = cl.witness ? to_json(rd, *cl.witness) : Json(nullptr);
    rows.push_back(row);
  }
  j["classes"] = rows;
  return out;
}

CommandResult run_frobinv(const FrobinvOptions& o) {
  const RootDatum rd = datum(o.gamma.group);
  const GammaData g = build_gamma(rd, o.gamma);
  const IVec lambda = parse_ivec(o.lambda);
  if (static_cast<int>(lambda.size()) != rd.rank)
    throw UsageError("lambda has wrong length");
  CommandResult out;
  FrobeniusWitness w;
  try {
    w = frobenius_invariant(rd, GaloisType::constant(rd, g, lambda));
  } catch (const std::domain_error& ex) {
    out.status = Status::kRefused;
    out.payload["reason"] = ex.what();
    return out;
  }
  out.payload["lambda"] = to_json(lambda);
  out.payload["invariant"] = w.invariant;
  out.payload["witness"] = w.c ? to_json(rd, *w.c) : Json(nullptr);
  return out;
}

CommandResult run_generic(const GenericOptions& o) {
  const RootDatum rd = datum(o.gamma.group);
  const GammaData g = build_gamma(rd, o.gamma);
  const Rational d = parse_qvec(o.d).at(0);
  CommandResult out;
  Json& j = out.payload;
  ApartmentPoint x;
  if (!o.s.empty()) {
    if (!rd.is_gl_only()) throw UsageError("--s needs a product of GL_n");
    const auto parts = split(o.s, ';');
    if (parts.size() != rd.factors.size())
      throw UsageError("--s needs one permutation per factor");
    std::vector<int> sigma(rd.ambient_dim);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const Factor& f = rd.factors[k];
      const auto local = parse_permutation(parts[k], f.n);
      for (int i = 0; i < f.n; ++i)
        sigma[f.ambient_offset + i] = f.ambient_offset + local[i];
    }
    const IVec mu = parse_ivec(o.mu);
    WeilRestrictionType t;
    try {
      t = type_from_s_mu(rd, rd.weyl_from_permutation(sigma), mu, g);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    x = t.x;
    j["mu_eta"] = to_json(t.mu_eta);
    Json lam = Json::array(), ws = Json::array(), cs = Json::array();
    for (int k = 0; k < g.r; ++k) {
      lam.push_back(to_json(t.type.lambda[k]));
      ws.push_back(permutation_json(rd, t.type.w[k]));
      cs.push_back(to_json(rd, t.c[k]));
    }
    j["lambda"] = lam;
    j["w"] = ws;
    j["c"] = cs;
    j["gamma_fixed"] = t.gamma_fixed;
    j["c_phi_x_equals_x"] = t.c_phi_x_equals_x;
  } else {
    const QVec eta = parse_qvec(o.eta);
    if (static_cast<int>(eta.size()) != rd.rank)
      throw UsageError("eta has wrong length");
    x = constant_point(g, eta);
  }
  Json etas = Json::array();
  for (const auto& e : x.eta) etas.push_back(to_json(e));
  j["eta"] = etas;
  j["genericity"] = to_json(genericity(rd, x));
  j["d"] = to_string(d);
  j["is_d_generic"] = is_d_generic(rd, x, d);
  j["lowest_alcove"] = is_lowest_alcove(rd, x);
  return out;
}

CommandResult run_adm(const AdmOptions& o) {
  const RootDatum rd = datum(o.group);
  const IVec mu = parse_ivec(o.mu);
  if (static_cast<int>(mu.size()) != rd.rank)
    throw UsageError("mu has wrong length");
  const BaseAlcove base = base_alcove(rd);
  const auto adm = admissible_set(rd, base, mu);
  CommandResult out;
  Json rows = Json::array();
  for (const auto& a : adm) {
    Json row;
    row["translation"] = to_json(a.element.translation);
    row["permutation"] = permutation_json(rd, a.element.finite);
    row["length"] = to_json(a.length);
    Json word = Json::array();
    for (int s : a.word.word) word.push_back(s);
    row["word"] = word;
    row["omega"] = omega_name(rd, base, a.word.omega);
    row["name"] = word_name(a.word, rd, base);
    row["text"] = to_string(rd, a.element);
    row["is_translation"] = a.is_translation;
    rows.push_back(row);
  }
  out.payload["group"] = rd.label;
  out.payload["mu"] = to_json(mu);
  out.payload["count"] = adm.size();
  out.payload["elements"] = rows;
  return out;
}

CommandResult run_hmu(const HmuOptions& o) {
  const RootDatum rd = datum(o.group);
  const IVec mu = parse_ivec(o.mu);
  if (static_cast<int>(mu.size()) != rd.rank)
    throw UsageError("mu has wrong length");
  CommandResult out;
  out.payload["group"] = rd.label;
  out.payload["mu"] = to_json(mu);
  out.payload["h_mu"] = to_json(h_mu(rd, mu));
  return out;
}

CommandResult run_pattern(const PatternOptions& o) {
  const RootDatum rd = datum(o.gamma.group);
  const GammaData g = build_gamma(rd, o.gamma);
  const QVec eta = parse_qvec(o.eta);
  if (static_cast<int>(eta.size()) != rd.rank)
    throw UsageError("eta has wrong length");
  if (o.slot < 0 || o.slot >= g.r) throw UsageError("slot out of range");
  const Level level{parse_qvec(o.level).at(0), o.plus};
  ValuationPattern vp;
  try {
    vp = parahoric_pattern(rd, constant_point(g, eta), level, o.slot);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  CommandResult out;
  out.payload["n"] = vp.n;
  out.payload["e"] = to_json(vp.e);
  out.payload["lower_bounds"] = pattern_json(vp);
  Json vrows = Json::array();
  for (const auto& row : vp.v_pattern()) vrows.push_back(to_json(row));
  out.payload["v_pattern"] = vrows;
  out.payload["torus_level"] = to_json(vp.torus_level);
  return out;
}

CommandResult run_straighten(const StraightenOptions& o) {
  const StraightenParams& params = o.params;
  if (params.p < 2 || !is_prime(Int(params.p)))
    throw UsageError("p must be prime");
  if (params.a < 1) throw UsageError("a must be positive");
  CommandResult out;
  Json& j = out.payload;
  j["p"] = params.p;
  j["a"] = params.a;
  j["f"] = params.f;
  j["h_mu"] = params.h_mu;
  j["d"] = params.d;
  j["seed"] = o.seed;
  j["margin"] = straighten_margin(params);
  std::mt19937_64 rng(derive_seed(o.seed, 0));
  StraightenInstance inst;
  StraightenResult res;
  if (straighten_margin(params) > 0 && params.f >= 1) {
    inst = random_straighten_instance(params, rng);
    res = straighten_right(inst.x, inst.b, inst.c, params);
  } else {
    res = straighten_right(LoopElement(), LoopElement(), LoopElement(), params);
  }
  if (res.refused) {
    out.status = Status::kRefused;
    j["reason"] = res.reason;
    return out;
  }
  j["window"] = res.window;
  j["iterations"] = res.iterations;
  j["iteration_bound"] = res.iteration_bound;
  j["converged"] = res.converged;
  j["trace"] = res.trace;
  j["residual_is_identity"] = res.residual_is_identity;
  j["residual_precision"] = res.residual_precision;
  j["X"] = to_json(inst.x);
  j["B"] = to_json(inst.b);
  j["A"] = to_json(res.a);
  std::ostringstream log;
  for (std::size_t k = 0; k < res.trace.size(); ++k)
    log << "step " << k + 1 << ": val(A_next - A) = " << res.trace[k] << "\n";
  log << "residual: "
      << (res.residual_is_identity ? "identity" : "not identity")
      << " to precision " << res.residual_precision << "\n";
  out.trace = log.str();
  if (!res.converged || !res.residual_is_identity) out.status = Status::kError;
  return out;
}

CommandResult run_compare(const CompareOptions& o) {
  if (o.p < 2 || !is_prime(Int(o.p))) throw UsageError("p must be prime");
  if (o.a < 1) throw UsageError("a must be positive");
  if (o.n < o.a) throw UsageError("n must be at least a");
  const CompareReport rep = congruence_compare(o.n, o.a, o.p);
  CommandResult out;
  Json& j = out.payload;
  j["n"] = o.n;
  j["a"] = o.a;
  j["p"] = o.p;
  j["congruence"] = rep.congruence;
  j["first_division"] = rep.first_division;
  j["second_division"] = rep.second_division;
  j["first_quotient"] = rep.first_quotient;
  j["second_quotient"] = rep.second_quotient;
  const CoeffRing ring = CoeffRing::make(o.p, o.a);
  j["inverse_v_plus_p"] =
      to_json(inverse(TruncSeries::from_coeffs(ring, 0, {o.p, 1}), 0));
  if (!rep.congruence || !rep.first_division || !rep.second_division)
    out.status = Status::kError;
  return out;
}

CommandResult run_figure(const FigureOptions& o) {
  FigureSpec spec;
  if (o.kind == "sl2") {
    spec = sl2_alcove_spec(parse_int(o.p.empty() ? "7" : o.p),
                           parse_int(o.e.empty() ? "24" : o.e));
  } else if (o.kind == "genericity") {
    spec = genericity_spec(parse_int(o.p.empty() ? "19" : o.p),
                           parse_int(o.e.empty() ? "36" : o.e));
  } else if (o.kind == "admissible") {
    spec = admissible_spec(parse_ivec(o.mu));
  } else {
    throw UsageError("unknown figure kind: " + o.kind);
  }
  Figure fig;
  try {
    fig = render(spec);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  CommandResult out;
  Json& j = out.payload;
  j["kind"] = o.kind;
  j["segments"] = fig.segments;
  if (!fig.nodes.empty()) {
    Json nodes = Json::array();
    for (const auto& n : fig.nodes) {
      Json row;
      row["n"] = n.n;
      row["color"] = color_name(n.color);
      if (n.in_orbit) row["lambda"] = to_json(n.lambda);
      nodes.push_back(row);
    }
    j["nodes"] = nodes;
  }
  if (o.kind == "genericity") j["shaded_polygons"] = fig.shaded_polygons;
  if (o.kind == "admissible") j["shaded_alcoves"] = fig.shaded_alcoves.size();
  if (o.out.empty()) {
    j["svg"] = fig.svg;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << fig.svg;
    if (!f) {
      out.status = Status::kError;
      j["reason"] = "cannot write " + o.out;
      return out;
    }
    j["out"] = o.out;
  }
  return out;
}

}  // namespace alcovekit::app
