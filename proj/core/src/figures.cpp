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

#include "alcovekit/figures.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "alcovekit/galois_types.hpp"
#include "alcovekit/rootdata.hpp"

namespace alcovekit {
namespace {

// Layout constants. Geometry follows the usual TikZ sources for these
// pictures: an equilateral alcove of side 1 and height 0.866 (side 2 and
// height 1.732 for the admissible set), with the same clip rectangles.
struct Layout {
  static constexpr double kHeight = 0.866;
  static constexpr double kAdmHeight = 1.732;
  static constexpr double kPxLine = 500.0;   // px per unit, rank one
  static constexpr double kPxA2 = 500.0;     // px per unit, A2 subdivision
  static constexpr double kPxAdm = 100.0;    // px per unit, admissible set
  static constexpr double kSmallNode = 4.0;
  static constexpr double kLargeNode = 7.0;
  static constexpr double kMarkNode = 3.0;
  static constexpr double kVertexDot = 2.5;
  static constexpr double kThinLine = 0.4;
  static constexpr double kThickLine = 1.6;
  static constexpr double kShadeOpacity = 0.15;
  static constexpr double kAdmOpacity = 0.09;
  static constexpr const char* kGreen = "#00ff00";
  static constexpr const char* kRed = "#ff0000";
  static constexpr const char* kWhite = "#ffffff";
  static constexpr const char* kGray = "#808080";
  static constexpr const char* kS1 = "rgb(0,0,240)";
  static constexpr const char* kS2 = "rgb(240,0,240)";
  static constexpr const char* kS3 = "rgb(240,0,0)";
};

struct Pt {
  double x = 0, y = 0;
};

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double to_double(const Rational& q) {
  return static_cast<double>(boost::multiprecision::numerator(q)) /
         static_cast<double>(boost::multiprecision::denominator(q));
}

class Svg {
 public:
  Svg(double width, double height) : w_(width), h_(height) {}

  void clip(double x, double y, double w, double h) {
    defs_ << "<clipPath id=\"frame\"><rect x=\"" << num(x) << "\" y=\""
          << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
          << "\"/></clipPath>";
  }
  void line(Pt a, Pt b, const std::string& color, double width) {
    body_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
          << num(b.x) << "\" y2=\"" << num(b.y) << "\" stroke=\"" << color
          << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }
  void polygon(const std::vector<Pt>& pts, const std::string& fill,
               double opacity) {
    body_ << "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i)
      body_ << (i ? " " : "") << num(pts[i].x) << "," << num(pts[i].y);
    body_ << "\" fill=\"" << fill << "\" fill-opacity=\"" << num(opacity)
          << "\" stroke=\"none\"/>\n";
  }
  void circle(Pt c, double r, const std::string& fill, bool outline) {
    body_ << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
          << "\" r=\"" << num(r) << "\" fill=\"" << fill << "\"";
    if (outline) body_ << " stroke=\"#000000\" stroke-width=\"1.00\"";
    body_ << "/>\n";
  }
  void text(Pt at, const std::string& s, double size) {
    body_ << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y)
          << "\" font-family=\"serif\" font-size=\"" << num(size)
          << "\" text-anchor=\"middle\">" << s << "</text>\n";
  }
  void begin_group(bool clipped) {
    body_ << (clipped ? "<g clip-path=\"url(#frame)\">\n" : "<g>\n");
  }
  void end_group() { body_ << "</g>\n"; }

  std::string str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w_)
       << "\" height=\"" << num(h_) << "\" viewBox=\"0 0 " << num(w_) << " "
       << num(h_) << "\">\n";
    if (!defs_.str().empty()) os << "<defs>" << defs_.str() << "</defs>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  double w_, h_;
  std::ostringstream defs_, body_;
};

int choose_segments(const FigureSpec& spec) {
  if (spec.segments > 0) return spec.segments;
  if (spec.e <= spec.segment_cap) return static_cast<int>(to_i64(spec.e));
  for (int s = spec.segment_cap; s >= 1; --s)
    if (spec.e % s == 0) return s;
  return 1;
}

// ------------------------------------------------------------- rank one

Figure render_rank1(const FigureSpec& spec) {
  const RootDatum rd = build_root_datum("SL2");
  const int e = static_cast<int>(to_i64(spec.e));
  if (e < 1) throw std::invalid_argument("e must be positive");
  const GammaData g =
      make_split_gamma(rd, spec.p, spec.e, minimal_degree(spec.p, spec.e));
  Figure fig;
  fig.segments = choose_segments(spec);
  const int step = e / fig.segments;
  const double S = Layout::kPxLine;
  auto at = [&](double t) { return Pt{S * (t + 0.2), S * 0.2}; };
  Svg svg(S * 1.4, S * 0.4);
  svg.line(at(0), at(1), "#000000", Layout::kThinLine * 2);

  auto classify = [&](int n) {
    FigureNode node;
    node.n = n;
    node.in_orbit = in_orbit_of_o(Int(n));
    if (!node.in_orbit) return node;
    IVec amb{Int(n / 2), Int(-(n / 2))};
    node.lambda = rd.from_ambient(amb);
    auto fw = frobenius_invariant(rd, GaloisType::constant(rd, g, node.lambda));
    node.color = fw.invariant ? NodeColor::kGreen : NodeColor::kRed;
    return node;
  };
  auto fill = [](NodeColor c) {
    return c == NodeColor::kGreen ? Layout::kGreen
           : c == NodeColor::kRed ? Layout::kRed
                                  : Layout::kWhite;
  };
  for (int n = step; n <= e; n += step) {
    FigureNode node = classify(n);
    svg.circle(at(static_cast<double>(n) / e), Layout::kSmallNode,
               fill(node.color), true);
    fig.nodes.push_back(node);
  }
  const FigureNode origin = classify(0);
  const FigureNode last = classify(e);
  svg.circle(at(0), Layout::kLargeNode, fill(origin.color), true);
  svg.circle(at(1), Layout::kLargeNode, fill(last.color), true);
  svg.text(Pt{at(0).x, at(0).y - 14}, "o", 16);
  svg.text(Pt{at(1).x, at(1).y - 14}, "o + (1/2,-1/2)", 16);
  fig.nodes.insert(fig.nodes.begin(), origin);
  fig.svg = svg.str();
  return fig;
}

// ----------------------------------------------------------------- A2

// Drawing-frame position of y (GL3 ambient, relative to o): o at
// (0.5, 0.866), o + (1,0,0) at (0,0), o + (1,1,0) at (1,0).
Pt frame_point(const QVec& y) {
  const double a = to_double(y[0] - y[1]);
  const double b = to_double(y[1] - y[2]);
  return {0.5 - 0.5 * a + 0.5 * b, Layout::kHeight * (1 - a - b)};
}

Figure render_rank2(const FigureSpec& spec) {
  if (spec.e < 1 || spec.p < 2) throw std::invalid_argument("bad p or e");
  Figure fig;
  fig.segments = choose_segments(spec);
  const double S = Layout::kPxA2;
  const double H = Layout::kHeight;
  // The picture is rotated by 180 degrees; the clip rectangle
  // [-0.2, 1.2] x [-0.173, 1.039] rotates with it.
  auto px = [&](Pt f) { return Pt{S * (1.2 - f.x), S * (0.173 + f.y)}; };
  Svg svg(S * 1.4, S * (1.039 + 0.173));
  svg.clip(0, 0, S * 1.4, S * (1.039 + 0.173));
  svg.begin_group(true);

  const double p = static_cast<double>(to_i64(spec.p));
  std::vector<std::pair<Pt, bool>> tiles;  // shift, reflected
  for (Pt s : {Pt{-0.5, -H}, Pt{0.5, -H}, Pt{-1, 0}, Pt{0, 0}, Pt{1, 0},
               Pt{-0.5, H}, Pt{0.5, H}})
    tiles.push_back({s, false});
  for (Pt s : {Pt{-0.5, -H}, Pt{0.5, -H}, Pt{-1, 0}, Pt{0, 0}, Pt{1, 0},
               Pt{0, -2 * H}})
    tiles.push_back({s, true});

  int polygons = 0;
  for (int k = 0; k <= spec.shading_depth; ++k)
    if (1 - 3.0 * k / p > 0) ++polygons;
  fig.shaded_polygons = polygons;

  const int N = fig.segments;
  for (const auto& [shift, reflected] : tiles) {
    auto map = [&, shift = shift, reflected = reflected](Pt l) {
      Pt f{l.x + shift.x, l.y + shift.y};
      if (reflected) f.y = -f.y;
      return px(f);
    };
    for (int k = 0; k < polygons; ++k) {
      const double xi = 1.5 * k / p, yi = H * k / p;
      const double xii = 1 - 1.5 * k / p, yiii = H * (1 - 2.0 * k / p);
      svg.polygon({map({xi, yi}), map({xii, yi}), map({0.5, yiii})},
                  Layout::kRed, Layout::kShadeOpacity);
    }
    const Pt A{0, 0}, B{1, 0}, C{0.5, H};
    auto lerp = [](Pt u, Pt v, double t) {
      return Pt{u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)};
    };
    for (int i = 0; i <= N; ++i) {
      const double t = static_cast<double>(i) / N;
      const Pt P = lerp(A, B, t), Q = lerp(A, C, t), R = lerp(B, C, t),
               Sx = lerp(C, B, t);
      svg.line(map(P), map(Q), Layout::kGray, Layout::kThinLine);
      svg.line(map(P), map(Sx), Layout::kGray, Layout::kThinLine);
      svg.line(map(Q), map(R), Layout::kGray, Layout::kThinLine);
    }
    svg.line(map(A), map(B), "#000000", Layout::kThickLine);
    svg.line(map(B), map(C), "#000000", Layout::kThickLine);
    svg.line(map(C), map(A), "#000000", Layout::kThickLine);
  }
  svg.end_group();

  for (const auto& m : spec.marks) {
    if (m.point.size() != 3) throw std::invalid_argument("marks need GL3 points");
    Pt c = px(frame_point(m.point));
    svg.circle(c, Layout::kMarkNode, "#000000", false);
    svg.text(Pt{c.x, c.y - 8}, m.label, 14);
  }
  const std::array<std::pair<QVec, const char*>, 3> named{{
      {QVec{0, 0, 0}, "o"},
      {QVec{1, 0, 0}, "o + (1,0,0)"},
      {QVec{1, 1, 0}, "o + (1,1,0)"},
  }};
  for (const auto& [y, label] : named) {
    Pt c = px(frame_point(y));
    svg.circle(c, Layout::kVertexDot * 2, "#000000", false);
    svg.text(Pt{c.x, c.y - 12}, label, 16);
  }
  fig.svg = svg.str();
  return fig;
}

// ------------------------------------------------------- admissible set

// The base alcove is drawn below o, so y is placed at the position of -y
// in the frame where o - (1,0,0) sits at (-1, -1.732).
Pt adm_point(const QVec& y) {
  const double a = to_double(y[0] - y[1]);
  const double b = to_double(y[1] - y[2]);
  return {-a + b, -Layout::kAdmHeight * (a + b)};
}

Figure render_admissible(const FigureSpec& spec) {
  const RootDatum rd = build_root_datum("GL3");
  const BaseAlcove base = base_alcove(rd);
  const IVec mu = spec.mu.empty() ? IVec{1, 0, 0} : spec.mu;
  if (mu.size() != 3) throw std::invalid_argument("mu must have 3 entries");
  Figure fig;
  std::vector<AdmissibleEntry> adm;
  if (spec.highlight) {
    for (const auto& w : *spec.highlight)
      adm.push_back({w, reduced_word(rd, base, w), 0, false});
  } else {
    adm = admissible_set(rd, base, mu);
  }

  const double S = Layout::kPxAdm;
  const double h = Layout::kAdmHeight;
  auto px = [&](Pt f) { return Pt{S * (f.x + 3), S * (1.5 * h - f.y)}; };
  Svg svg(S * 7, S * 4 * h);
  svg.clip(0, 0, S * 7, S * 4 * h);
  svg.begin_group(true);

  auto vertex = [](long a, long b) {
    return QVec{Rational(a + b), Rational(b), Rational(0)};
  };
  const std::array<const char*, 3> edge_color{Layout::kS3, Layout::kS1,
                                              Layout::kS2};
  auto type_of = [](long a, long b) { return ((a + 2 * b) % 3 + 3) % 3; };

  for (const auto& entry : adm) {
    std::vector<Pt> pts;
    Pt bary{0, 0};
    for (const QVec& v : {vertex(0, 0), vertex(1, 0), vertex(0, 1)}) {
      Pt f = adm_point(act(entry.element, rd.from_ambient(v)));
      bary.x += f.x / 3;
      bary.y += f.y / 3;
      pts.push_back(px(f));
    }
    svg.polygon(pts, "#000000", Layout::kAdmOpacity);
    fig.shaded_alcoves.push_back(entry.element);
  }

  // Edges of the triangular lattice, colored by the type of the opposite
  // vertex.
  std::map<std::pair<std::pair<long, long>, std::pair<long, long>>, int> edges;
  auto add_tri = [&](std::array<std::pair<long, long>, 3> t) {
    for (int i = 0; i < 3; ++i) {
      auto u = t[(i + 1) % 3], v = t[(i + 2) % 3];
      if (v < u) std::swap(u, v);
      edges[{u, v}] = type_of(t[i].first, t[i].second);
    }
  };
  const long R = 6;
  for (long a = -R; a <= R; ++a)
    for (long b = -R; b <= R; ++b) {
      add_tri({{{a, b}, {a + 1, b}, {a, b + 1}}});
      add_tri({{{a + 1, b}, {a, b + 1}, {a + 1, b + 1}}});
    }
  auto visible = [&](Pt f) {
    return f.x >= -3.5 && f.x <= 4.5 && f.y >= -2.5 * h - 0.5 &&
           f.y <= 1.5 * h + 0.5;
  };
  for (const auto& [key, type] : edges) {
    Pt u = adm_point(vertex(key.first.first, key.first.second));
    Pt v = adm_point(vertex(key.second.first, key.second.second));
    if (!visible(u) && !visible(v)) continue;
    svg.line(px(u), px(v), edge_color[type], Layout::kThickLine);
  }
  for (long a = -R; a <= R; ++a)
    for (long b = -R; b <= R; ++b) {
      Pt f = adm_point(vertex(a, b));
      if (visible(f)) svg.circle(px(f), Layout::kVertexDot, "#000000", false);
    }
  for (const auto& entry : adm) {
    Pt bary{0, 0};
    for (const QVec& v : {vertex(0, 0), vertex(1, 0), vertex(0, 1)}) {
      Pt f = adm_point(act(entry.element, rd.from_ambient(v)));
      bary.x += f.x / 3;
      bary.y += f.y / 3;
    }
    std::ostringstream label;
    for (int i : entry.word.word) label << "s~" << i << " ";
    label << "C";
    Pt c = px(bary);
    svg.text(Pt{c.x, c.y + 4}, label.str(), 11);
  }
  svg.end_group();
  const std::array<std::pair<QVec, const char*>, 3> named{{
      {QVec{0, 0, 0}, "o"},
      {QVec{1, 0, 0}, "o + (1,0,0)"},
      {QVec{1, 1, 0}, "o + (1,1,0)"},
  }};
  for (const auto& [y, label] : named) {
    Pt c = px(adm_point(y));
    svg.circle(c, Layout::kVertexDot, "#000000", false);
    svg.text(Pt{c.x, c.y - 8}, label, 12);
  }
  fig.svg = svg.str();
  return fig;
}

}  // namespace

bool in_orbit_of_o(const Int& n) {
  // e (x - o) = (n/2, -n/2) must be a cocharacter of SL2.
  static const RootDatum rd = build_root_datum("SL2");
  QVec amb{Rational(n) / 2, Rational(-n) / 2};
  if (!is_integral(amb)) return false;
  try {
    rd.from_ambient(to_integral(amb));
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

std::string color_name(NodeColor c) {
  switch (c) {
    case NodeColor::kGreen:
      return "green";
    case NodeColor::kRed:
      return "red";
    default:
      return "white";
  }
}

Figure render(const FigureSpec& spec) {
  switch (spec.kind) {
    case FigureKind::kRank1Line:
      return render_rank1(spec);
    case FigureKind::kRank2A2:
      return render_rank2(spec);
    case FigureKind::kAdmissibleA2:
      return render_admissible(spec);
  }
  throw std::invalid_argument("unsupported figure kind");
}

FigureSpec sl2_alcove_spec(const Int& p, const Int& e) {
  FigureSpec s;
  s.kind = FigureKind::kRank1Line;
  s.p = p;
  s.e = e;
  return s;
}

FigureSpec genericity_spec(const Int& p, const Int& e) {
  FigureSpec s;
  s.kind = FigureKind::kRank2A2;
  s.p = p;
  s.e = e;
  s.shading_depth = static_cast<int>(to_i64(p / 3));
  s.marks.push_back({QVec{Rational(27, 36), Rational(7, 36), Rational(0)},
                     "x"});
  return s;
}

FigureSpec admissible_spec(const IVec& mu) {
  FigureSpec s;
  s.kind = FigureKind::kAdmissibleA2;
  s.mu = mu;
  return s;
}

}  // namespace alcovekit
