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


// Subcommand implementations shared by the CLI and the acceptance runner.

#ifndef ALCOVEKIT_TOOLS_COMMANDS_HPP_
#define ALCOVEKIT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcovekit/galois_types.hpp"
#include "alcovekit/loop_sim.hpp"
#include "json.hpp"

namespace alcovekit::app {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Status { kOk, kRefused, kError };

struct CommandResult {
  Status status = Status::kOk;
  Json payload = Json::object();
  std::string trace;  // optional text log
};

// Bad option values; the CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string status_name(Status s);
int exit_code(Status s);
// {"schema": 1, "command", "status", "result"}.
Json envelope(const std::string& command, const CommandResult& r);

// ----------------------------------------------------------------- parsing

std::vector<std::int64_t> parse_int_list(const std::string& text);
IVec parse_ivec(const std::string& text);
QVec parse_qvec(const std::string& text);
// Image list "3,4,5,0,1,2" or cycle notation "(123)" over 1-based indices.
std::vector<int> parse_permutation(const std::string& text, int n);

// ------------------------------------------------------------ JSON helpers

Json to_json(const Int& z);
Json to_json(const IVec& v);
Json to_json(const QVec& v);
Json to_json(const AbelianGroup& g);
Json to_json(const TruncSeries& s);  // exponent -> coefficient map
Json to_json(const LoopElement& m);
Json permutation_json(const RootDatum& rd, const WeylElement& w);
Json to_json(const RootDatum& rd, const NormalizerElement& c);

// --------------------------------------------------------------- commands

struct GammaOptions {
  std::string group = "SL2";
  std::string p = "7";
  std::string e = "24";
  int r = 0;                  // 0: minimal degree with e | p^r - 1
  std::string psi;            // ambient permutation, identity when empty
  std::string inertia_perm;   // ambient permutation, identity when empty
  bool inertia_negate = false;
};

GammaData build_gamma(const RootDatum& rd, const GammaOptions& o);

struct CensusOptions {
  GammaOptions gamma;
  std::size_t cap = 2'000'000;
};
CommandResult run_census(const CensusOptions& o);

struct FrobinvOptions {
  GammaOptions gamma;
  std::string lambda;  // lattice coordinates, constant over embeddings
};
CommandResult run_frobinv(const FrobinvOptions& o);

struct GenericOptions {
  GammaOptions gamma;
  std::string eta;        // lattice coordinates, constant over embeddings
  std::string s;          // cycles per GL factor separated by ';'
  std::string mu;         // with s: builds the type from (s, mu)
  std::string d = "2";
};
CommandResult run_generic(const GenericOptions& o);

struct AdmOptions {
  std::string group = "GL3";
  std::string mu = "1,0,0";
};
CommandResult run_adm(const AdmOptions& o);

struct HmuOptions {
  std::string group = "GL3";
  std::string mu = "1,0,0";
};
CommandResult run_hmu(const HmuOptions& o);

struct PatternOptions {
  GammaOptions gamma;
  std::string eta;
  std::string level = "0";
  bool plus = false;
  int slot = 0;
};
CommandResult run_pattern(const PatternOptions& o);

struct StraightenOptions {
  StraightenParams params;
  std::uint64_t seed = 1;
};
CommandResult run_straighten(const StraightenOptions& o);

struct CompareOptions {
  std::int64_t n = 7;
  int a = 2;
  std::int64_t p = 3;
};
CommandResult run_compare(const CompareOptions& o);

struct FigureOptions {
  std::string kind = "sl2";  // sl2 | genericity | admissible
  std::string p;  // empty: 7 for sl2, 19 for genericity
  std::string e;  // empty: 24 for sl2, 36 for genericity
  std::string mu = "1,0,0";
  std::string out;  // empty: SVG goes into the payload
};
CommandResult run_figure(const FigureOptions& o);

}  // namespace alcovekit::app

#endif  // ALCOVEKIT_TOOLS_COMMANDS_HPP_
