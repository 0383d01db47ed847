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

// Deterministic SVG pictures of rank-one and A2 apartments.

#ifndef ALCOVEKIT_FIGURES_HPP_
#define ALCOVEKIT_FIGURES_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcovekit/iwahori_weyl.hpp"
#include "alcovekit/numeric.hpp"

namespace alcovekit {

enum class FigureKind {
  kRank1Line,      // SL2 base alcove with u-vertices colored by type
  kRank2A2,        // GL3 alcoves with u-subdivision and genericity shading
  kAdmissibleA2,   // GL3 alcoves with Adm(mu) shaded
};

struct FigureMark {
  QVec point;  // GL3 ambient coordinates, relative to o
  std::string label;
};

struct FigureSpec {
  FigureKind kind = FigureKind::kRank1Line;
  Int p = 7;
  Int e = 24;
  std::vector<FigureMark> marks;
  int shading_depth = 0;  // polygons k = 0..shading_depth
  int segments = 0;       // 0: e, or a divisor of e within the cap
  int segment_cap = 200;
  IVec mu;                // admissible figures: defaults to (1,0,0)
  std::optional<std::set<AffineWeylElement>> highlight;
};

enum class NodeColor { kWhite, kGreen, kRed };

struct FigureNode {
  int n = 0;  // node n sits at <alpha, x - o> = n/e
  NodeColor color = NodeColor::kWhite;
  bool in_orbit = false;  // e (x - o) lies in the cocharacter lattice
  IVec lambda;            // type of the node when in_orbit
};

struct Figure {
  std::string svg;
  std::vector<FigureNode> nodes;   // rank-one pictures
  int segments = 0;                // subdivision actually drawn
  int shaded_polygons = 0;         // per tile
  std::vector<AffineWeylElement> shaded_alcoves;
};

// Throws std::invalid_argument for unsupported parameters.
Figure render(const FigureSpec& spec);

FigureSpec sl2_alcove_spec(const Int& p, const Int& e);
FigureSpec genericity_spec(const Int& p, const Int& e);
FigureSpec admissible_spec(const IVec& mu);

// Same rule the rank-one picture uses.
bool in_orbit_of_o(const Int& n);

std::string color_name(NodeColor c);

}  // namespace alcovekit

#endif  // ALCOVEKIT_FIGURES_HPP_
