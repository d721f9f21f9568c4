#pragma once

// Alternation, dealternators, primeness and connected sums.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "diagram.hpp"

namespace aalt {

// Face criterion: around every face all corners have the same type, where a
// corner (c, k) has type A when slot k is over.
inline bool is_alternating(const Diagram& d) {
  for (const auto& f : d.faces()) {
    int type = -1;
    for (const auto& c : f.boundary) {
      int t = d.is_over(map::position(c.crossing, c.index)) ? 1 : 0;
      if (type == -1) type = t;
      if (t != type) return false;
    }
  }
  return true;
}

// Arcs whose two ends are both over or both under, as positions p < mate(p).
inline std::vector<int> non_alternating_arcs(const Diagram& d) {
  std::vector<int> out;
  for (int p = 0; p < 4 * d.crossing_count(); ++p)
    if (p < d.mate(p) && d.is_over(p) == d.is_over(d.mate(p))) out.push_back(p);
  return out;
}

inline std::vector<CrossingId> dealternators(const Diagram& d) {
  std::vector<CrossingId> out;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (is_alternating(crossing_change(d, c))) out.push_back(c);
  return out;
}

struct AlternationReport {
  bool is_alternating = false;
  std::vector<CrossingId> dealternators;
  bool is_almost_alternating = false;
};

inline void require_connected(const Diagram& d) {
  if (d.shadow_components() > 1) throw Disconnected("diagram has " + std::to_string(d.shadow_components()) + " pieces");
}

inline AlternationReport alternation_report(const Diagram& d) {
  require_connected(d);
  AlternationReport r;
  r.is_alternating = is_alternating(d);
  if (!r.is_alternating) r.dealternators = dealternators(d);
  r.is_almost_alternating = !r.is_alternating && !r.dealternators.empty();
  return r;
}

/// The 2-crossing Hopf diagram with one crossing changed.
inline Diagram changed_hopf_diagram() {
  return crossing_change(build_diagram({{4, 1, 3, 2}, {2, 3, 1, 4}}), 0);
}

inline bool hopf_degeneracy_check(const Diagram& d) {
  return isomorphic_up_to_mirror(d, changed_hopf_diagram());
}

// ---------------------------------------------------------------- primeness

// A pair of edges (named by one position each) that together bound the same
// two faces and separate the crossings into two nonempty sides.
struct Cut {
  int e1 = -1, e2 = -1;
  std::vector<char> side;  // side[c] = 0 or 1
};

namespace detail {

// Faces left and right of the edge through p, unordered.
inline std::pair<int, int> edge_faces(const Diagram& d, int p) {
  int right = d.face_of_corner()[map::rot_inv(p)];
  int left = d.face_of_corner()[p];
  return {std::min(left, right), std::max(left, right)};
}

inline std::optional<Cut> try_cut(const Diagram& d, int e1, int e2) {
  const int n = d.crossing_count();
  std::set<int> blocked{e1, d.mate(e1), e2, d.mate(e2)};
  std::vector<char> side(n, 2);
  std::vector<int> stack{map::vertex_of(e1)};
  side[map::vertex_of(e1)] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < 4; ++j) {
      int p = map::position(v, j);
      if (blocked.count(p)) continue;
      int w = map::vertex_of(d.mate(p));
      if (side[w] == 2) {
        side[w] = 0;
        stack.push_back(w);
      }
    }
  }
  int other = std::count(side.begin(), side.end(), 2);
  if (other == 0) return std::nullopt;
  for (auto& s : side)
    if (s == 2) s = 1;
  return Cut{e1, e2, std::move(side)};
}

}  // namespace detail

inline std::optional<Cut> find_prime_cut(const Diagram& d) {
  std::map<std::pair<int, int>, std::vector<int>> by_faces;
  for (int p = 0; p < 4 * d.crossing_count(); ++p) {
    if (p > d.mate(p)) continue;
    auto f = detail::edge_faces(d, p);
    if (f.first != f.second) by_faces[f].push_back(p);
  }
  for (const auto& [key, edges] : by_faces)
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (auto cut = detail::try_cut(d, edges[i], edges[j])) return cut;
  return std::nullopt;
}

inline bool is_prime(const Diagram& d) {
  if (d.crossing_count() == 0) throw NoCrossings("primeness needs at least one crossing");
  require_connected(d);
  return !find_prime_cut(d).has_value();
}

/// Splits a diagram into its connected shadow pieces; each free circle
/// becomes its own 0-crossing piece.
inline std::vector<Diagram> split_pieces(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<Diagram> out;
  const int ncomp = d.shadow_components() - d.circle_count();
  for (int comp = 0; comp < ncomp; ++comp) {
    std::vector<int> new_id(n, -1);
    int k = 0;
    for (int c = 0; c < n; ++c)
      if (d.shadow_component_of()[c] == comp) new_id[c] = k++;
    MapData m;
    m.mate.assign(4 * k, -1);
    m.incoming.assign(4 * k, 0);
    m.tag.assign(4 * k, 0);
    m.over_axis.assign(k, 1);
    for (int p = 0; p < 4 * n; ++p) {
      int c = map::vertex_of(p);
      if (new_id[c] == -1) continue;
      int np = map::position(new_id[c], map::slot_of(p));
      int q = d.mate(p);
      m.mate[np] = map::position(new_id[map::vertex_of(q)], map::slot_of(q));
      m.incoming[np] = d.incoming(p);
      m.tag[np] = d.tag(p);
      m.over_axis[new_id[c]] = d.over_axis(c);
    }
    out.push_back(Diagram::from_map(std::move(m)));
  }
  for (int t : d.circle_tags()) {
    MapData m;
    m.circle_tags = {t};
    out.push_back(Diagram::from_map(std::move(m)));
  }
  return out;
}

/// Cuts along a prime cut and recloses each side with one arc.
inline std::pair<Diagram, Diagram> cut_along(const Diagram& d, const Cut& cut) {
  MapData m = d.data();
  int a1 = cut.e1, b1 = d.mate(cut.e1), a2 = cut.e2, b2 = d.mate(cut.e2);
  if (cut.side[map::vertex_of(a1)] != 0) std::swap(a1, b1);
  if (cut.side[map::vertex_of(a2)] != 0) std::swap(a2, b2);
  m.mate[a1] = a2;
  m.mate[a2] = a1;
  m.mate[b1] = b2;
  m.mate[b2] = b1;
  auto whole = Diagram::from_map(std::move(m));
  auto pieces = split_pieces(whole);
  return {pieces.at(0), pieces.at(1)};
}

/// Prime factors with respect to connected sum, sorted by canonical form.
/// Circles of d are not part of any factor.
inline std::vector<Diagram> connected_sum_factors(const Diagram& d) {
  if (d.crossing_count() == 0) throw NoCrossings("factorization needs at least one crossing");
  require_connected(d);
  std::vector<Diagram> done, todo{d};
  while (!todo.empty()) {
    Diagram x = std::move(todo.back());
    todo.pop_back();
    auto cut = find_prime_cut(x);
    if (!cut) {
      done.push_back(std::move(x));
      continue;
    }
    auto [a, b] = cut_along(x, *cut);
    todo.push_back(std::move(a));
    todo.push_back(std::move(b));
  }
  std::sort(done.begin(), done.end(),
            [](const Diagram& a, const Diagram& b) { return canonical_form(a) < canonical_form(b); });
  return done;
}

/// Joins two diagrams along the edge through position 0 of each (a 0-crossing
/// piece is absorbed).
inline Diagram connected_sum(const Diagram& a, const Diagram& b, int pa = 0, int pb = 0) {
  if (a.crossing_count() == 0) return b;
  if (b.crossing_count() == 0) return a;
  Diagram u = disjoint_union(a, b);
  MapData m = u.data();
  const int off = 4 * a.crossing_count();
  // p -> q in a, r -> t in b, both directed along the strand.
  int p = pa, q = m.mate[pa];
  if (m.incoming[p]) std::swap(p, q);
  int r = pb + off, t = m.mate[pb + off];
  if (m.incoming[r]) std::swap(r, t);
  m.mate[p] = t;
  m.mate[t] = p;
  m.mate[r] = q;
  m.mate[q] = r;
  m.tag.clear();
  return Diagram::from_map(std::move(m));
}

}  // namespace aalt
