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


// Command line front end: one subcommand per operation, JSON or text output.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "app/acceptance.hpp"
#include "app/commands.hpp"

namespace {

using alcovekit::app::CommandResult;
using alcovekit::app::Json;
using alcovekit::app::Status;

void print_text(const Json& j, const std::string& indent, std::ostream& os) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      print_text(value, indent + "  ", os);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << indent << key << ":\n";
      for (const auto& row : value) os << indent << "  - " << row.dump() << "\n";
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void add_gamma(CLI::App* sub, alcovekit::app::GammaOptions& g) {
  sub->add_option("--group", g.group, "Root datum label, e.g. SL2, GL3xGL3")
      ->capture_default_str();
  sub->add_option("--p", g.p, "Residue characteristic")->capture_default_str();
  sub->add_option("--e", g.e, "Tame ramification index")->capture_default_str();
  sub->add_option("--r", g.r, "Unramified degree (0: minimal)");
  sub->add_option("--psi", g.psi,
                  "Pinned automorphism as an ambient permutation");
  sub->add_option("--inertia-perm", g.inertia_perm,
                  "Inertial action as an ambient permutation");
  sub->add_flag("--inertia-negate", g.inertia_negate,
                "Compose the inertial action with -1");
}

}  // namespace

int main(int argc, char** argv) {
  namespace app = alcovekit::app;
  CLI::App cli{"alcovekit: exact Bruhat-Tits combinatorics"};
  cli.require_subcommand(1);
  cli.fallthrough();
  std::string emit = "json";
  std::uint64_t seed = 1;
  cli.add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  app::CensusOptions census;
  auto* c_census = cli.add_subcommand("census", "Classes of Galois types");
  add_gamma(c_census, census.gamma);
  c_census->add_option("--cap", census.cap, "Enumeration cap");

  app::FrobinvOptions frob;
  auto* c_frob = cli.add_subcommand("frobinv", "Frobenius invariance of a type");
  add_gamma(c_frob, frob.gamma);
  c_frob->add_option("--lambda", frob.lambda, "Lattice coordinates")
      ->required();

  app::GenericOptions gen;
  auto* c_gen = cli.add_subcommand("generic", "Genericity of a point");
  add_gamma(c_gen, gen.gamma);
  c_gen->add_option("--eta", gen.eta, "Point in lattice coordinates");
  c_gen->add_option("--s", gen.s, "Cycles per GL factor, separated by ';'");
  c_gen->add_option("--mu", gen.mu, "Cocharacter for --s");
  c_gen->add_option("--d", gen.d, "Genericity threshold")->capture_default_str();

  app::AdmOptions adm;
  auto* c_adm = cli.add_subcommand("adm", "Admissible set");
  c_adm->add_option("--group", adm.group)->capture_default_str();
  c_adm->add_option("--mu", adm.mu)->capture_default_str();

  app::HmuOptions hmu;
  auto* c_hmu = cli.add_subcommand("hmu", "Height of a cocharacter");
  c_hmu->add_option("--group", hmu.group)->capture_default_str();
  c_hmu->add_option("--mu", hmu.mu)->capture_default_str();

  app::PatternOptions pat;
  auto* c_pat = cli.add_subcommand("pattern", "Parahoric valuation pattern");
  add_gamma(c_pat, pat.gamma);
  c_pat->add_option("--eta", pat.eta, "Point in lattice coordinates")
      ->required();
  c_pat->add_option("--level", pat.level, "Level f")->capture_default_str();
  c_pat->add_flag("--plus", pat.plus, "Use the level f+");
  c_pat->add_option("--slot", pat.slot, "Embedding index");

  app::StraightenOptions str;
  auto* c_str = cli.add_subcommand("straighten", "Straightening iteration");
  c_str->add_option("--p", str.params.p)->capture_default_str();
  c_str->add_option("--a", str.params.a)->capture_default_str();
  c_str->add_option("--f", str.params.f)->capture_default_str();
  c_str->add_option("--hmu", str.params.h_mu)->capture_default_str();
  c_str->add_option("--d", str.params.d)->capture_default_str();
  c_str->add_option("--window", str.params.window,
                    "Precision window (0: 4p or ALCOVEKIT_PRECISION)");
  c_str->add_option("--seed", seed, "Random seed")->capture_default_str();

  app::CompareOptions cmp;
  auto* c_cmp = cli.add_subcommand("compare", "Compare v and v+p powers");
  c_cmp->add_option("--n", cmp.n)->capture_default_str();
  c_cmp->add_option("--a", cmp.a)->capture_default_str();
  c_cmp->add_option("--p", cmp.p)->capture_default_str();

  app::FigureOptions fig;
  auto* c_fig = cli.add_subcommand("figure", "Render an SVG figure");
  c_fig->add_option("--kind", fig.kind)
      ->check(CLI::IsMember({"sl2", "genericity", "admissible"}))
      ->capture_default_str();
  c_fig->add_option("--p", fig.p);
  c_fig->add_option("--e", fig.e);
  c_fig->add_option("--mu", fig.mu)->capture_default_str();
  c_fig->add_option("--out", fig.out, "Output file");

  app::AcceptanceConfig acc;
  acc.golden_dir = app::default_golden_dir();
  auto* c_ver = cli.add_subcommand("verify", "Run the acceptance suite");
  c_ver->add_option("--golden-dir", acc.golden_dir)->capture_default_str();
  c_ver->add_option("--seed", acc.seed, "Pinned seed")->capture_default_str();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = cli.exit(ex);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = cli.get_subcommands().front();
  const std::string name = sub->get_name();
  CommandResult result;
  try {
    if (name == "census") {
      result = app::run_census(census);
    } else if (name == "frobinv") {
      result = app::run_frobinv(frob);
    } else if (name == "generic") {
      if (gen.eta.empty() == gen.s.empty())
        throw app::UsageError("give exactly one of --eta and --s");
      result = app::run_generic(gen);
    } else if (name == "adm") {
      result = app::run_adm(adm);
    } else if (name == "hmu") {
      result = app::run_hmu(hmu);
    } else if (name == "pattern") {
      result = app::run_pattern(pat);
    } else if (name == "straighten") {
      str.seed = seed;
      result = app::run_straighten(str);
    } else if (name == "compare") {
      result = app::run_compare(cmp);
    } else if (name == "figure") {
      result = app::run_figure(fig);
    } else if (name == "verify") {
      const auto rows = app::run_acceptance(acc);
      Json list = Json::array();
      bool all = true;
      std::string log;
      for (const auto& r : rows) {
        list.push_back(app::to_json(r));
        all = all && r.pass;
        log += app::format_line(r) + "\n";
      }
      result.payload["criteria"] = list;
      result.payload["passed"] = all;
      result.trace = log;
      if (!all) result.status = Status::kError;
    }
  } catch (const app::UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    if (emit == "json") {
      CommandResult err;
      err.status = Status::kError;
      err.payload["reason"] = ex.what();
      std::cout << app::envelope(name, err).dump(2) << "\n";
    }
    return 2;
  } catch (const std::exception& ex) {
    result = CommandResult{};
    result.status = Status::kError;
    result.payload["reason"] = ex.what();
  }

  if (emit == "json") {
    std::cout << app::envelope(name, result).dump(2) << "\n";
  } else if (name == "figure" && fig.out.empty() &&
             result.payload.contains("svg")) {
    std::cout << result.payload["svg"].get<std::string>();
  } else {
    std::cout << "command: " << name << "\nstatus: "
              << app::status_name(result.status) << "\n";
    if (name == "verify") {
      std::cout << result.trace;
    } else {
      print_text(result.payload, "", std::cout);
      if (!result.trace.empty()) std::cout << result.trace;
    }
  }
  return app::exit_code(result.status);
}
