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


#include "app/acceptance.hpp"
#include "app/commands.hpp"
#include "doctest.h"

using namespace alcovekit;
using namespace alcovekit::app;

TEST_CASE("envelope carries the schema version") {
  CommandResult r;
  r.payload["x"] = 1;
  const Json j = envelope("hmu", r);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "hmu");
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["x"] == 1);
  CHECK(exit_code(Status::kOk) == 0);
  CHECK(exit_code(Status::kRefused) == 1);
  CHECK(exit_code(Status::kError) == 1);
}

TEST_CASE("parsing helpers") {
  CHECK(parse_int_list("1, 0,-2") == std::vector<std::int64_t>{1, 0, -2});
  CHECK(parse_qvec("1/2,-3") == QVec{Rational(1, 2), Rational(-3)});
  CHECK(parse_permutation("(123)", 3) == std::vector<int>{1, 2, 0});
  CHECK(parse_permutation("2,0,1", 3) == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(parse_permutation("0,0,1", 3), UsageError);
  CHECK_THROWS_AS(parse_int_list("1,x"), UsageError);
}

TEST_CASE("hmu and adm commands") {
  HmuOptions h;
  h.group = "GL3xGL3";
  h.mu = "1,0,0,1,0,0";
  CHECK(run_hmu(h).payload["h_mu"] == 1);
  AdmOptions a;
  const CommandResult adm = run_adm(a);
  CHECK(adm.payload["count"] == 7);
  CHECK(adm.payload["elements"][6]["name"] == "s~3 s~2 t~");
  h.group = "XY2";
  CHECK_THROWS_AS(run_hmu(h), UsageError);
}

TEST_CASE("census command") {
  CensusOptions c;
  const CommandResult r = run_census(c);
  CHECK(r.payload["class_count"] == 13);
  CHECK(r.payload["invariant_count"] == 7);
  CHECK(r.payload["r"] == 2);
}

TEST_CASE("generic command builds the Weil-restriction point") {
  GenericOptions g;
  g.gamma.group = "GL3xGL3";
  g.gamma.p = "19";
  g.gamma.e = "130320";
  g.gamma.r = 4;
  g.gamma.psi = "3,4,5,0,1,2";
  g.s = "(123);(12)";
  g.mu = "16,11,7,4,2,1";
  const CommandResult r = run_generic(g);
  CHECK(r.payload["is_d_generic"] == true);
  CHECK(r.payload["c_phi_x_equals_x"] == true);
  CHECK(r.payload["mu_eta"] == Json::parse("[18,12,7,6,3,1]"));
}

TEST_CASE("straighten command statuses") {
  StraightenOptions s;
  const CommandResult ok = run_straighten(s);
  CHECK(ok.status == Status::kOk);
  CHECK(ok.payload["residual_is_identity"] == true);
  s.params = {3, 2, 1, 1, 0, 0};
  CHECK(run_straighten(s).status == Status::kRefused);
}

TEST_CASE("compare command") {
  CompareOptions c;
  const CommandResult r = run_compare(c);
  CHECK(r.status == Status::kOk);
  CHECK(r.payload["inverse_v_plus_p"]["terms"] == Json::parse(R"({"-2":6,"-1":1})"));
  c.n = 1;
  CHECK_THROWS_AS(run_compare(c), UsageError);
}

TEST_CASE("figure command") {
  FigureOptions f;
  const CommandResult r = run_figure(f);
  CHECK(r.payload["segments"] == 24);
  CHECK(r.payload["svg"].get<std::string>().find("<svg") != std::string::npos);
  f.kind = "cube";
  CHECK_THROWS_AS(run_figure(f), UsageError);
}
