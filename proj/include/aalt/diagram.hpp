#pragma once

// Link diagrams on S^2 as oriented 4-valent rotation systems with
// over/under data. Crossing c owns positions 4c..4c+3 (counterclockwise);
// over_axis says which diagonal (0: slots 0-2, 1: slots 1-3) is the
// overstrand. Free circles (components without crossings) are counted
// separately since a PD code cannot express them.

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "map.hpp"

namespace aalt {

using CrossingId = int;

struct Crossing {
  std::array<int, 4> slots{};  // arc labels, counterclockwise
  int over_axis = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A corner (crossing, k) sits between slots k and k+1.
struct Corner {
  CrossingId crossing = 0;
  int index = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Face {
  std::vector<Corner> boundary;
  int degree() const { return static_cast<int>(boundary.size()); }
};

// Raw, editable form of a diagram. `tag` follows every position through
// local moves so link components can be tracked back to the input.
struct MapData {
  std::vector<int> mate;
  std::vector<int> over_axis;
  std::vector<char> incoming;
  std::vector<int> tag;
  std::vector<int> circle_tags;
};

class Diagram {
 public:
  Diagram() = default;

  // Validates the map; throws NonPlanar or ParseError.
  static Diagram from_map(MapData m) {
    const int np = static_cast<int>(m.mate.size());
    if (np % 4 != 0 || static_cast<int>(m.over_axis.size()) * 4 != np ||
        static_cast<int>(m.incoming.size()) != np)
      throw ParseError("malformed crossing data");
    if (!map::is_valid_involution(m.mate)) throw ParseError("arc endpoints do not pair up");
    for (int a : m.over_axis)
      if (a != 0 && a != 1) throw ParseError("over_axis must be 0 or 1");
    for (int p = 0; p < np; ++p) {
      if (m.incoming[p] == m.incoming[map::opp(p)] || m.incoming[p] == m.incoming[m.mate[p]])
        throw ParseError("inconsistent strand orientation");
    }
    if (!map::is_spherical(m.mate)) throw NonPlanar("rotation system is not realizable on S^2");
    const bool fresh_tags = static_cast<int>(m.tag.size()) != np;
    if (fresh_tags) m.tag.clear();
    if (!m.circle_tags.empty() && fresh_tags) m.circle_tags.assign(m.circle_tags.size(), 0);
    Diagram d;
    d.m_ = std::move(m);
    d.derive(fresh_tags);
    return d;
  }

  static Diagram unlink(int circles) {
    MapData m;
    m.circle_tags.resize(circles);
    for (int i = 0; i < circles; ++i) m.circle_tags[i] = i;
    return from_map(std::move(m));
  }

  int crossing_count() const { return static_cast<int>(m_.over_axis.size()); }
  int circle_count() const { return static_cast<int>(m_.circle_tags.size()); }
  bool empty() const { return crossing_count() == 0 && circle_count() == 0; }

  const MapData& data() const { return m_; }
  std::span<const int> mates() const { return m_.mate; }
  int mate(int p) const { return m_.mate[p]; }
  bool incoming(int p) const { return m_.incoming[p] != 0; }
  int over_axis(CrossingId c) const { return m_.over_axis[c]; }
  bool is_over(int p) const { return (map::slot_of(p) & 1) == m_.over_axis[map::vertex_of(p)]; }
  int tag(int p) const { return m_.tag[p]; }
  const std::vector<int>& circle_tags() const { return m_.circle_tags; }

  // 1-based canonical label of the arc through position p.
  int arc_of(int p) const { return arc_label_[incoming(p) ? p : mate(p)]; }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  // Faces of every connected shadow component on its own sphere; a free
  // circle contributes two faces of degree 0.
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<int>& face_of_corner() const { return face_of_corner_; }

  int shadow_components() const { return shadow_components_ + circle_count(); }
  std::span<const int> shadow_component_of() const { return shadow_comp_; }
  int link_components() const { return static_cast<int>(strands_.size()) + circle_count(); }

  // Each link component through crossings as its incoming positions in order.
  const std::vector<std::vector<int>>& strands() const { return strands_; }
  int strand_of(int p) const { return strand_of_[p]; }

  // Local writhe: +1 when the overstrand passes from right to left.
  int sign(CrossingId c) const {
    int under_in = -1, over_in = -1;
    for (int k = 0; k < 4; ++k) {
      int p = map::position(c, k);
      if (!incoming(p)) continue;
      (is_over(p) ? over_in : under_in) = k;
    }
    return over_in == ((under_in + 3) & 3) ? 1 : -1;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.m_.mate == b.m_.mate && a.m_.over_axis == b.m_.over_axis && a.m_.incoming == b.m_.incoming &&
           a.circle_count() == b.circle_count();
  }

 private:
  void derive(bool fresh_tags) {
    const int n = crossing_count();
    const int np = 4 * n;
    strand_of_.assign(np, -1);
    arc_label_.assign(np, 0);
    int next_label = 1;
    for (int s = 0; s < np; ++s) {
      if (!incoming(s) || strand_of_[s] != -1) continue;
      std::vector<int> seq;
      int id = static_cast<int>(strands_.size());
      for (int p = s; strand_of_[p] == -1; p = mate(map::opp(p))) {
        strand_of_[p] = id;
        strand_of_[map::opp(p)] = id;
        arc_label_[p] = next_label++;
        seq.push_back(p);
      }
      strands_.push_back(std::move(seq));
    }
    if (fresh_tags) {
      m_.tag.resize(np);
      for (int p = 0; p < np; ++p) m_.tag[p] = strand_of_[p];
      for (int i = 0; i < circle_count(); ++i) m_.circle_tags[i] = static_cast<int>(strands_.size()) + i;
    }
    crossings_.resize(n);
    for (int c = 0; c < n; ++c) {
      crossings_[c].over_axis = m_.over_axis[c];
      for (int k = 0; k < 4; ++k) crossings_[c].slots[k] = arc_of(map::position(c, k));
    }
    shadow_comp_ = map::vertex_components(m_.mate, &shadow_components_);
    auto raw = map::trace_faces(m_.mate);
    face_of_corner_.assign(np, -1);
    for (auto& f : raw) {
      Face face;
      for (int c : f) {
        face_of_corner_[c] = static_cast<int>(faces_.size());
        face.boundary.push_back({map::vertex_of(c), map::slot_of(c)});
      }
      faces_.push_back(std::move(face));
    }
    for (int i = 0; i < circle_count(); ++i) {
      faces_.emplace_back();
      faces_.emplace_back();
    }
  }

  MapData m_;
  std::vector<Crossing> crossings_;
  std::vector<Face> faces_;
  std::vector<int> face_of_corner_;
  std::vector<int> shadow_comp_;
  int shadow_components_ = 0;
  std::vector<std::vector<int>> strands_;
  std::vector<int> strand_of_;
  std::vector<int> arc_label_;
};

/// Builds a diagram from PD rows (slot 0 = incoming understrand,
/// counterclockwise) plus a number of free circles. Arc labels are arbitrary
/// integers and are canonicalized.
inline Diagram build_diagram(const std::vector<std::array<int, 4>>& table, int circles = 0) {
  if (circles < 0) throw ParseError("negative circle count");
  const int n = static_cast<int>(table.size());
  std::map<int, std::vector<int>> uses;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) uses[table[c][k]].push_back(map::position(c, k));
  MapData m;
  m.mate.assign(4 * n, -1);
  for (const auto& [label, ps] : uses) {
    if (ps.size() != 2)
      throw ArcCountError("arc " + std::to_string(label) + " used " + std::to_string(ps.size()) + " times");
    m.mate[ps[0]] = ps[1];
    m.mate[ps[1]] = ps[0];
  }
  m.over_axis.assign(n, 1);

  // Orientation: slot 0 in, slot 2 out; propagate along strands and arcs.
  std::vector<int> dir(4 * n, -1);
  std::vector<int> stack;
  auto assign = [&](int p, int v) {
    if (dir[p] == -1) {
      dir[p] = v;
      stack.push_back(p);
    } else if (dir[p] != v) {
      throw ParseError("inconsistent strand orientation in PD code");
    }
  };
  auto drain = [&] {
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      assign(map::opp(p), 1 - dir[p]);
      assign(m.mate[p], 1 - dir[p]);
    }
  };
  for (int c = 0; c < n; ++c) {
    assign(map::position(c, 0), 1);
    assign(map::position(c, 2), 0);
  }
  drain();
  for (int p = 0; p < 4 * n; ++p) {
    if (dir[p] != -1) continue;
    assign(p, 1);
    drain();
  }
  m.incoming.assign(dir.begin(), dir.end());
  m.circle_tags.resize(circles);
  for (int i = 0; i < circles; ++i) m.circle_tags[i] = i;
  m.tag.clear();
  return Diagram::from_map(std::move(m));
}

inline Diagram crossing_change(const Diagram& d, CrossingId c) {
  if (c < 0 || c >= d.crossing_count()) throw UnknownCrossing("no crossing " + std::to_string(c));
  MapData m = d.data();
  m.over_axis[c] ^= 1;
  return Diagram::from_map(std::move(m));
}

// Every crossing changed.
inline Diagram mirror(const Diagram& d) {
  MapData m = d.data();
  for (int& a : m.over_axis) a ^= 1;
  return Diagram::from_map(std::move(m));
}

// Orientation of the sphere reversed; crossings keep their over strand.
inline Diagram reflect(const Diagram& d) {
  MapData m = d.data();
  const int np = static_cast<int>(m.mate.size());
  m.mate = map::reflect_mate(d.data().mate);
  for (int p = 0; p < np; ++p) {
    m.incoming[map::reflect_position(p)] = d.data().incoming[p];
    m.tag[map::reflect_position(p)] = d.data().tag[p];
  }
  return Diagram::from_map(std::move(m));
}

// With keep_tags the tags of b are not shifted, so shared tags mark the same
// link component.
inline Diagram disjoint_union(const Diagram& a, const Diagram& b, bool keep_tags = false) {
  MapData m = a.data();
  const MapData& o = b.data();
  const int off = static_cast<int>(m.mate.size());
  int tag_off = 0;
  if (!keep_tags) {
    for (int t : m.tag) tag_off = std::max(tag_off, t + 1);
    for (int t : m.circle_tags) tag_off = std::max(tag_off, t + 1);
  }
  for (int q : o.mate) m.mate.push_back(q + off);
  m.over_axis.insert(m.over_axis.end(), o.over_axis.begin(), o.over_axis.end());
  m.incoming.insert(m.incoming.end(), o.incoming.begin(), o.incoming.end());
  for (int t : o.tag) m.tag.push_back(t + tag_off);
  for (int t : o.circle_tags) m.circle_tags.push_back(t + tag_off);
  return Diagram::from_map(std::move(m));
}

inline int writhe(const Diagram& d) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.sign(c);
  return w;
}

}  // namespace aalt
