#pragma once

// Text encodings: PD (`X(a,b,c,d) ... O k`), signed Gauss codes, the JSON
// mirror of PD, and an SVG rendering of the shadow.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "diagram.hpp"

namespace aalt {

// ---------------------------------------------------------------- PD text

inline Diagram parse_pd(const std::string& text) {
  static const std::regex token(R"(\s*(?:X\s*[\(\[]\s*([^\)\]]*)[\)\]]|O\s+(\d+))\s*,?)");
  std::vector<std::array<int, 4>> rows;
  int circles = 0;
  std::string rest = text;
  // Optional PD[ ... ] wrapper.
  static const std::regex wrapper(R"(^\s*PD\s*\[(.*)\]\s*$)");
  std::smatch w;
  if (std::regex_match(rest, w, wrapper)) rest = w[1].str();
  auto it = rest.cbegin();
  std::smatch m;
  while (it != rest.cend()) {
    if (std::all_of(it, rest.cend(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) break;
    if (!std::regex_search(it, rest.cend(), m, token, std::regex_constants::match_continuous))
      throw ParseError("unexpected PD text near '" + std::string(it, std::min(it + 16, rest.cend())) + "'");
    if (m[1].matched) {
      std::array<int, 4> row{};
      std::stringstream ss(m[1].str());
      std::string item;
      int k = 0;
      while (std::getline(ss, item, ',')) {
        if (k == 4) throw ParseError("crossing with more than 4 labels");
        static const std::regex label(R"(^\s*(\d+)\s*$)");
        std::smatch lm;
        if (!std::regex_match(item, lm, label)) throw ParseError("bad arc label '" + item + "'");
        long v = std::stol(lm[1].str());
        if (v <= 0 || v > 1'000'000'000) throw ParseError("arc labels must be positive integers");
        row[k++] = static_cast<int>(v);
      }
      if (k != 4) throw ParseError("crossing needs exactly 4 labels");
      rows.push_back(row);
    } else {
      circles += std::stoi(m[2].str());
    }
    it = m[0].second;
  }
  if (rows.empty() && circles == 0) throw ParseError("empty diagram");
  return build_diagram(rows, circles);
}

// PD rows of d as stored (slot 0 rotated to the incoming understrand).
inline std::vector<std::array<int, 4>> pd_rows(const Diagram& d) {
  std::vector<std::array<int, 4>> rows;
  for (int c = 0; c < d.crossing_count(); ++c) {
    int u = 0;
    for (int k = 0; k < 4; ++k) {
      int p = map::position(c, k);
      if (d.incoming(p) && !d.is_over(p)) u = k;
    }
    std::array<int, 4> row{};
    for (int k = 0; k < 4; ++k) row[k] = d.arc_of(map::position(c, u + k));
    rows.push_back(row);
  }
  return rows;
}

inline std::string rows_to_pd(const std::vector<std::array<int, 4>>& rows, int circles) {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : rows) {
    if (!first) os << ' ';
    os << "X(" << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ')';
    first = false;
  }
  if (circles > 0) {
    if (!first) os << ' ';
    os << "O " << circles;
  }
  return os.str();
}

/// Canonical PD text: identical for isomorphic diagrams.
inline std::string emit_pd(const Diagram& d) {
  Diagram c = canonical_diagram(d);
  return rows_to_pd(pd_rows(c), c.circle_count());
}

// PD text of d without relabelling crossings.
inline std::string raw_pd(const Diagram& d) { return rows_to_pd(pd_rows(d), d.circle_count()); }

// ---------------------------------------------------------------- JSON

inline nlohmann::json to_json(const Diagram& d) {
  Diagram c = canonical_diagram(d);
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& r : pd_rows(c)) j["crossings"].push_back(r);
  j["circles"] = c.circle_count();
  return j;
}

inline Diagram from_json(const nlohmann::json& j) {
  try {
    std::vector<std::array<int, 4>> rows;
    for (const auto& r : j.at("crossings")) {
      if (r.size() != 4) throw ParseError("crossing needs exactly 4 labels");
      std::array<int, 4> row{};
      for (int k = 0; k < 4; ++k) {
        row[k] = r.at(k).get<int>();
        if (row[k] <= 0) throw ParseError("arc labels must be positive integers");
      }
      rows.push_back(row);
    }
    int circles = j.value("circles", 0);
    if (rows.empty() && circles == 0) throw ParseError("empty diagram");
    return build_diagram(rows, circles);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  }
}

inline Diagram parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return from_json(j);
}

// ---------------------------------------------------------------- Gauss codes

struct GaussPassage {
  int crossing = 0;
  bool over = false;
  int sign = 1;
  friend bool operator==(const GaussPassage&, const GaussPassage&) = default;
};

struct SignedGaussCode {
  std::vector<std::vector<GaussPassage>> components;
  int circles = 0;
};

/// One component per line (or separated by '|'); tokens `O3+`, `U1-`;
/// a line `circles k` adds free circles.
inline SignedGaussCode parse_gauss_code(const std::string& text) {
  SignedGaussCode code;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '|', '\n');
  std::istringstream lines(normalized);
  std::string line;
  static const std::regex circles_re(R"(^\s*circles\s+(\d+)\s*$)");
  static const std::regex tok(R"(\s*([OoUu])\s*(\d+)\s*([+-])\s*,?)");
  while (std::getline(lines, line)) {
    if (std::all_of(line.begin(), line.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }))
      continue;
    std::smatch m;
    if (std::regex_match(line, m, circles_re)) {
      code.circles += std::stoi(m[1].str());
      continue;
    }
    std::vector<GaussPassage> comp;
    auto it = line.cbegin();
    while (it != line.cend()) {
      if (std::all_of(it, line.cend(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) break;
      if (!std::regex_search(it, line.cend(), m, tok, std::regex_constants::match_continuous))
        throw ParseError("bad Gauss token near '" + std::string(it, std::min(it + 8, line.cend())) + "'");
      GaussPassage g;
      g.over = (m[1].str() == "O" || m[1].str() == "o");
      g.crossing = std::stoi(m[2].str());
      g.sign = m[3].str() == "+" ? 1 : -1;
      comp.push_back(g);
      it = m[0].second;
    }
    code.components.push_back(std::move(comp));
  }
  return code;
}

/// Realizes a signed Gauss code. The sign and the over/under flags fix the
/// rotation at every crossing, so realizability is the Euler check of that
/// rotation system.
inline Diagram diagram_from_gauss(const SignedGaussCode& code) {
  struct Info {
    int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    int seen_over = 0, seen_under = 0, sign = 0;
  };
  std::map<int, Info> info;
  int arc = 1;
  for (const auto& comp : code.components) {
    const int len = static_cast<int>(comp.size());
    if (len == 0) throw ParseError("empty Gauss component");
    const int first = arc;
    for (int i = 0; i < len; ++i) {
      const auto& g = comp[i];
      Info& in = info[g.crossing];
      int arc_in = first + i;
      int arc_out = first + (i + 1) % len;
      if (in.sign != 0 && in.sign != g.sign) throw ParseError("crossing " + std::to_string(g.crossing) + " has two signs");
      in.sign = g.sign;
      if (g.over) {
        ++in.seen_over;
        in.over_in = arc_in;
        in.over_out = arc_out;
      } else {
        ++in.seen_under;
        in.under_in = arc_in;
        in.under_out = arc_out;
      }
    }
    arc += len;
  }
  std::vector<std::array<int, 4>> rows;
  for (const auto& [id, in] : info) {
    if (in.seen_over != 1 || in.seen_under != 1)
      throw ParseError("crossing " + std::to_string(id) + " must appear once over and once under");
    if (in.sign > 0)
      rows.push_back({in.under_in, in.over_out, in.under_out, in.over_in});
    else
      rows.push_back({in.under_in, in.over_in, in.under_out, in.over_out});
  }
  try {
    return build_diagram(rows, code.circles);
  } catch (const NonPlanar&) {
    throw NotRealizable("signed Gauss code has no planar realization");
  }
}

inline Diagram parse_gauss(const std::string& text) {
  auto code = parse_gauss_code(text);
  if (code.components.empty() && code.circles == 0) throw ParseError("empty diagram");
  return diagram_from_gauss(code);
}

inline SignedGaussCode gauss_code(const Diagram& d) {
  SignedGaussCode code;
  code.circles = d.circle_count();
  for (const auto& strand : d.strands()) {
    std::vector<GaussPassage> comp;
    for (int p : strand) {
      int c = map::vertex_of(p);
      comp.push_back({c + 1, d.is_over(p), d.sign(c)});
    }
    code.components.push_back(std::move(comp));
  }
  return code;
}

inline std::string emit_gauss(const Diagram& d) {
  auto code = gauss_code(canonical_diagram(d));
  std::ostringstream os;
  for (const auto& comp : code.components) {
    bool first = true;
    for (const auto& g : comp) {
      if (!first) os << ' ';
      os << (g.over ? 'O' : 'U') << g.crossing << (g.sign > 0 ? '+' : '-');
      first = false;
    }
    os << '\n';
  }
  if (code.circles > 0) os << "circles " << code.circles << '\n';
  return os.str();
}

// ---------------------------------------------------------------- SVG

namespace detail {

struct Point {
  double x = 0, y = 0;
};

// Tutte embedding: the largest face of each component is pinned to a circle
// and the remaining crossings are placed at the barycentre of their
// neighbours.
inline std::vector<Point> tutte_layout(const Diagram& d, double radius) {
  const int n = d.crossing_count();
  std::vector<Point> pos(n);
  std::vector<char> pinned(n, 0);
  const int ncomp = d.shadow_components() - d.circle_count();
  for (int comp = 0; comp < ncomp; ++comp) {
    double cx = (comp % 4) * 2.6 * radius, cy = (comp / 4) * 2.6 * radius;
    int best = -1;
    for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
      const auto& b = d.faces()[f].boundary;
      if (b.empty() || d.shadow_component_of()[b.front().crossing] != comp) continue;
      if (best == -1 || b.size() > d.faces()[best].boundary.size()) best = f;
    }
    std::vector<int> outer;
    for (auto c : d.faces()[best].boundary)
      if (std::find(outer.begin(), outer.end(), c.crossing) == outer.end()) outer.push_back(c.crossing);
    for (std::size_t i = 0; i < outer.size(); ++i) {
      double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(outer.size());
      pos[outer[i]] = {cx + radius * std::cos(t), cy + radius * std::sin(t)};
      pinned[outer[i]] = 1;
    }
    for (int c = 0; c < n; ++c)
      if (d.shadow_component_of()[c] == comp && !pinned[c]) pos[c] = {cx, cy};
  }
  for (int iter = 0; iter < 500; ++iter) {
    for (int c = 0; c < n; ++c) {
      if (pinned[c]) continue;
      Point s;
      int k = 0;
      for (int j = 0; j < 4; ++j) {
        int w = map::vertex_of(d.mate(map::position(c, j)));
        if (w == c) continue;
        s.x += pos[w].x;
        s.y += pos[w].y;
        ++k;
      }
      if (k > 0) pos[c] = {s.x / k, s.y / k};
    }
  }
  return pos;
}

}  // namespace detail

/// SVG drawing: arcs as quadratic curves between crossings, the
/// understrand gapped at each crossing, listed crossings highlighted with
/// class "dealternator".
inline std::string emit_svg(const Diagram& d, const std::vector<CrossingId>& highlighted = {}) {
  const double radius = 200.0, gap = 10.0;
  auto pos = detail::tutte_layout(d, radius);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  const int ncomp = std::max(1, d.shadow_components());
  double width = std::min(ncomp, 4) * 2.6 * radius, height = ((ncomp + 3) / 4) * 2.6 * radius;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -1.3 * radius << ' ' << -1.3 * radius << ' '
     << width << ' ' << height << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"3\">\n";
  // Direction of the stub leaving position p, spread by slot.
  auto stub = [&](int p) {
    int c = map::vertex_of(p);
    int q = d.mate(p);
    detail::Point a = pos[c], b = pos[map::vertex_of(q)];
    double ang = std::atan2(b.y - a.y, b.x - a.x);
    if (map::vertex_of(q) == c) ang = 0;
    ang += (map::slot_of(p) - 1.5) * 0.35;
    double r = d.is_over(p) ? 2.0 : gap;
    return detail::Point{a.x + r * std::cos(ang), a.y + r * std::sin(ang)};
  };
  for (int p = 0; p < 4 * d.crossing_count(); ++p) {
    int q = d.mate(p);
    if (q < p) continue;
    detail::Point a = stub(p), b = stub(q);
    detail::Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    double dx = b.x - a.x, dy = b.y - a.y;
    double bend = 0.25 + 0.1 * map::slot_of(p);
    detail::Point ctl{mid.x - dy * bend, mid.y + dx * bend};
    if (map::vertex_of(p) == map::vertex_of(q)) ctl = {mid.x + 60, mid.y + 60};
    os << "<path class=\"arc\" d=\"M " << a.x << ' ' << a.y << " Q " << ctl.x << ' ' << ctl.y << ' ' << b.x << ' '
       << b.y << "\"/>\n";
  }
  for (int i = 0; i < d.circle_count(); ++i) {
    int slot = d.shadow_components() - d.circle_count() + i;
    double cx = (slot % 4) * 2.6 * radius, cy = (slot / 4) * 2.6 * radius;
    os << "<circle class=\"free-circle\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius / 2 << "\"/>\n";
  }
  os << "</g>\n";
  std::set<CrossingId> hi(highlighted.begin(), highlighted.end());
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (!hi.count(c)) continue;
    os << "<circle class=\"dealternator\" cx=\"" << pos[c].x << "\" cy=\"" << pos[c].y
       << "\" r=\"14\" fill=\"none\" stroke=\"red\" stroke-width=\"3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aalt
