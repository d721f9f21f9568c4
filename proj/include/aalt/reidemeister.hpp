#pragma once

// Reidemeister moves on the combinatorial map. Every move checks its own
// precondition (InvalidMove) and the result is re-validated on S^2.
//
// Edges are named by a position s: the directed edge s -> mate(s), which
// has the face of corner rot_inv(s) on its right.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "diagram.hpp"

namespace aalt {

/// Deletes a set of crossings, joining every strand straight through them.
/// Strands that close up inside the set become free circles.
inline Diagram bypass_crossings(const Diagram& d, const std::set<CrossingId>& removed) {
  const int n = d.crossing_count();
  for (int c : removed)
    if (c < 0 || c >= n) throw UnknownCrossing("no crossing " + std::to_string(c));
  std::vector<int> new_id(n, -1);
  int kept = 0;
  for (int c = 0; c < n; ++c)
    if (!removed.count(c)) new_id[c] = kept++;
  auto gone = [&](int p) { return new_id[map::vertex_of(p)] == -1; };
  auto moved = [&](int p) { return map::position(new_id[map::vertex_of(p)], map::slot_of(p)); };
  const MapData& o = d.data();
  MapData m;
  m.mate.assign(4 * kept, -1);
  m.incoming.assign(4 * kept, 0);
  m.tag.assign(4 * kept, 0);
  m.over_axis.assign(kept, 1);
  m.circle_tags = o.circle_tags;
  std::vector<char> visited(4 * n, 0);
  for (int p = 0; p < 4 * n; ++p) {
    if (gone(p)) continue;
    int q = o.mate[p];
    while (gone(q)) {
      visited[q] = visited[map::opp(q)] = 1;
      q = o.mate[map::opp(q)];
    }
    m.mate[moved(p)] = moved(q);
    m.incoming[moved(p)] = o.incoming[p];
    m.tag[moved(p)] = o.tag[p];
    m.over_axis[new_id[map::vertex_of(p)]] = o.over_axis[map::vertex_of(p)];
  }
  for (int p = 0; p < 4 * n; ++p) {
    if (!gone(p) || visited[p]) continue;
    int q = p;
    do {
      visited[q] = visited[map::opp(q)] = 1;
      q = o.mate[map::opp(q)];
    } while (q != p);
    m.circle_tags.push_back(o.tag[p]);
  }
  return Diagram::from_map(std::move(m));
}

// Slot pairs (k, k+1) of c joined by a loop edge, or -1.
inline int kink_slot(const Diagram& d, CrossingId c) {
  for (int k = 0; k < 4; ++k)
    if (d.mate(map::position(c, k)) == map::position(c, k + 1)) return k;
  return -1;
}

inline Diagram r1_remove(const Diagram& d, CrossingId c) {
  if (c < 0 || c >= d.crossing_count()) throw UnknownCrossing("no crossing " + std::to_string(c));
  if (kink_slot(d, c) < 0) throw InvalidMove("crossing " + std::to_string(c) + " is not a kink");
  return bypass_crossings(d, {c});
}

/// Adds a kink on the edge s -> mate(s). `left` puts the loop on the left
/// of the edge; `over_first` makes the first passage the overpass.
inline Diagram r1_add(const Diagram& d, int s, bool left, bool over_first) {
  if (s < 0 || s >= 4 * d.crossing_count()) throw InvalidMove("no such edge");
  MapData m = d.data();
  const int k = d.crossing_count();
  const int t = m.mate[s];
  const char in_s = m.incoming[s];
  const int tg = m.tag[s];
  for (int j = 0; j < 4; ++j) {
    m.mate.push_back(-1);
    m.incoming.push_back(0);
    m.tag.push_back(tg);
  }
  m.over_axis.push_back(over_first ? 1 : 0);
  auto P = [&](int j) { return map::position(k, j); };
  auto link = [&](int a, int b) {
    m.mate[a] = b;
    m.mate[b] = a;
  };
  // The strand runs s -> first -> opp(first) -> loop -> last -> t.
  int first = left ? 3 : 1;
  int loop_a = left ? 1 : 3;
  link(s, P(first));
  link(P(loop_a), P(2));
  link(P(0), t);
  m.incoming[P(first)] = !in_s;
  m.incoming[P(first + 2)] = in_s;
  m.incoming[P(2)] = !in_s;
  m.incoming[P(0)] = in_s;
  return Diagram::from_map(std::move(m));
}

// The two edges joining a and b around a bigon face f, as positions at a.
inline std::array<int, 2> bigon_positions(const Diagram& d, int f) {
  const auto& b = d.faces()[f].boundary;
  // Corner (c, k) starts at slot k and leaves along slot k+1.
  int p0 = map::position(b[0].crossing, b[0].index);
  int p1 = map::position(b[1].crossing, b[1].index);
  return {map::rot(p0), map::rot(p1)};
}

/// Removes the two crossings of a bigon face when one strand passes over
/// at both.
inline Diagram r2_remove(const Diagram& d, int face) {
  if (face < 0 || face >= static_cast<int>(d.faces().size())) throw InvalidMove("no such face");
  const auto& b = d.faces()[face].boundary;
  if (b.size() != 2 || b[0].crossing == b[1].crossing) throw InvalidMove("face is not a bigon between two crossings");
  for (int p : bigon_positions(d, face)) {
    if (d.is_over(p) != d.is_over(d.mate(p))) throw InvalidMove("bigon is not an R2 configuration");
  }
  return bypass_crossings(d, {b[0].crossing, b[1].crossing});
}

/// Pushes edge s1 over (or under) edge s2 across the face both have on
/// their right, creating a bigon.
inline Diagram r2_add(const Diagram& d, int s1, int s2, bool first_over) {
  const int np = 4 * d.crossing_count();
  if (s1 < 0 || s1 >= np || s2 < 0 || s2 >= np) throw InvalidMove("no such edge");
  if (s1 == s2 || s1 == d.mate(s2)) throw InvalidMove("edges must differ");
  const auto& fc = d.face_of_corner();
  if (fc[map::rot_inv(s1)] != fc[map::rot_inv(s2)]) throw InvalidMove("edges do not share a face");
  MapData m = d.data();
  const int u = d.crossing_count(), w = u + 1;
  const int t1 = m.mate[s1], t2 = m.mate[s2];
  const char in1 = m.incoming[s1], in2 = m.incoming[s2];
  for (int j = 0; j < 8; ++j) {
    m.mate.push_back(-1);
    m.incoming.push_back(0);
    m.tag.push_back(0);
  }
  m.over_axis.push_back(first_over ? 1 : 0);
  m.over_axis.push_back(first_over ? 1 : 0);
  auto U = [&](int j) { return map::position(u, j); };
  auto W = [&](int j) { return map::position(w, j); };
  auto link = [&](int a, int b) {
    m.mate[a] = b;
    m.mate[b] = a;
  };
  link(U(0), W(2));
  link(U(1), s1);
  link(U(2), t2);
  link(U(3), W(3));
  link(W(0), s2);
  link(W(1), t1);
  // Strand 1: s1 -> u1 -> u3 -> w3 -> w1 -> t1; strand 2: s2 -> w0 -> w2 -> u0 -> u2 -> t2.
  for (int p : {U(1), W(3)}) m.incoming[p] = !in1;
  for (int p : {U(3), W(1)}) m.incoming[p] = in1;
  for (int p : {W(0), U(0)}) m.incoming[p] = !in2;
  for (int p : {W(2), U(2)}) m.incoming[p] = in2;
  for (int p : {U(1), U(3), W(1), W(3)}) m.tag[p] = d.tag(s1);
  for (int p : {U(0), U(2), W(0), W(2)}) m.tag[p] = d.tag(s2);
  return Diagram::from_map(std::move(m));
}

// Triangle face with three distinct crossings on which an R3 move is legal:
// some edge of the triangle is over at both of its ends.
inline bool r3_applicable(const Diagram& d, int face) {
  if (face < 0 || face >= static_cast<int>(d.faces().size())) return false;
  const auto& b = d.faces()[face].boundary;
  if (b.size() != 3) return false;
  std::set<int> cs{b[0].crossing, b[1].crossing, b[2].crossing};
  if (cs.size() != 3) return false;
  for (const auto& c : b) {
    int p = map::rot(map::position(c.crossing, c.index));
    if (d.is_over(p) && d.is_over(d.mate(p))) return true;
  }
  return false;
}

/// Slides the strand over (or under) both others across the triangle.
inline Diagram r3(const Diagram& d, int face) {
  if (!r3_applicable(d, face)) throw InvalidMove("face is not an R3 triangle");
  const auto& b = d.faces()[face].boundary;
  std::vector<int> inner;  // triangle-edge positions
  for (const auto& c : b) {
    int p = map::rot(map::position(c.crossing, c.index));
    inner.push_back(p);
    inner.push_back(d.mate(p));
  }
  std::vector<int> phi(4 * d.crossing_count(), -1);
  std::set<int> exterior;
  for (int p : inner) {
    phi[map::opp(p)] = d.mate(p);
    exterior.insert(map::opp(p));
  }
  MapData m = d.data();
  for (int p : inner) {
    int pe = map::opp(p), qe = map::opp(d.mate(p));
    m.mate[pe] = qe;
    m.mate[qe] = pe;
  }
  for (int s : exterior) {
    int t = d.mate(s);
    if (exterior.count(t)) {
      m.mate[phi[s]] = phi[t];
    } else {
      m.mate[phi[s]] = t;
      m.mate[t] = phi[s];
    }
  }
  return Diagram::from_map(std::move(m));
}

}  // namespace aalt
