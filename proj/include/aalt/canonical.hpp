#pragma once

// Canonical relabelling of diagrams up to orientation-preserving
// homeomorphism of S^2. Link orientation is ignored; the canonical diagram
// orients each component so that its least position is incoming.

#include <algorithm>
#include <vector>

#include "diagram.hpp"

namespace aalt {

struct CanonicalForm {
  std::vector<std::vector<int>> components;  // sorted BFS codes
  int circles = 0;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

struct ComponentBest {
  map::BfsLabelling labelling;
};

inline std::vector<ComponentBest> best_labellings(const Diagram& d) {
  const int n = d.crossing_count();
  const int ncomp = d.shadow_components() - d.circle_count();
  std::vector<ComponentBest> best(ncomp);
  std::vector<char> have(ncomp, 0);
  auto over = [&](int p) { return d.is_over(p) ? 1 : 0; };
  auto zero = [](int) { return 0; };
  for (int s = 0; s < 4 * n; ++s) {
    int comp = d.shadow_component_of()[map::vertex_of(s)];
    auto lab = map::bfs_code(d.mates(), s, zero, over);
    if (!have[comp] || lab.code < best[comp].labelling.code) {
      best[comp].labelling = std::move(lab);
      have[comp] = 1;
    }
  }
  std::sort(best.begin(), best.end(),
            [](const ComponentBest& a, const ComponentBest& b) { return a.labelling.code < b.labelling.code; });
  return best;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Diagram& d) {
  CanonicalForm f;
  f.circles = d.circle_count();
  for (auto& b : detail::best_labellings(d)) f.components.push_back(std::move(b.labelling.code));
  return f;
}

/// The canonical representative of d's isomorphism class. Tags follow
/// their positions.
inline Diagram canonical_diagram(const Diagram& d) {
  const int n = d.crossing_count();
  auto best = detail::best_labellings(d);
  std::vector<int> new_pos(4 * n, -1);
  std::vector<int> old_of_new_crossing;
  for (const auto& b : best) {
    for (int v : b.labelling.order) {
      int nc = static_cast<int>(old_of_new_crossing.size());
      old_of_new_crossing.push_back(v);
      for (int k = 0; k < 4; ++k) new_pos[map::position(v, k)] = map::position(nc, k - b.labelling.entry[v]);
    }
  }
  MapData m;
  m.mate.assign(4 * n, -1);
  m.incoming.assign(4 * n, 0);
  m.tag.assign(4 * n, 0);
  m.over_axis.assign(n, 1);
  for (int p = 0; p < 4 * n; ++p) {
    m.mate[new_pos[p]] = new_pos[d.mate(p)];
    m.incoming[new_pos[p]] = d.incoming(p) ? 1 : 0;
    m.tag[new_pos[p]] = d.tag(p);
    if (d.is_over(p)) m.over_axis[map::vertex_of(new_pos[p])] = map::slot_of(new_pos[p]) & 1;
  }
  m.circle_tags = d.circle_tags();
  // Reorient each strand so its least position is incoming.
  std::vector<char> done(4 * n, 0);
  for (int s = 0; s < 4 * n; ++s) {
    if (done[s]) continue;
    std::vector<int> members;
    int p = s;
    do {
      members.push_back(p);
      members.push_back(map::opp(p));
      done[p] = done[map::opp(p)] = 1;
      p = m.mate[map::opp(p)];
    } while (p != s);
    if (!m.incoming[s])
      for (int q : members) m.incoming[q] ^= 1;
  }
  return Diagram::from_map(std::move(m));
}

inline bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.circle_count() != b.circle_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// Isomorphic to b or to one of its mirror images (all crossings changed,
// sphere reflected, or both).
inline bool isomorphic_up_to_mirror(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.circle_count() != b.circle_count()) return false;
  auto fa = canonical_form(a);
  for (const Diagram& x : {b, mirror(b), reflect(b), reflect(mirror(b))})
    if (fa == canonical_form(x)) return true;
  return false;
}

}  // namespace aalt
