#pragma once

// Diagram corpora: alternating diagrams on every shadow, their single
// crossing changes, and random diagrams.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "canonical.hpp"
#include "classify.hpp"
#include "diagram.hpp"
#include "planemap.hpp"

namespace aalt {

// Orients every strand of a map (each from its least unvisited position).
inline std::vector<char> orient_strands(const std::vector<int>& mate) {
  std::vector<char> in(mate.size(), 0);
  std::vector<char> seen(mate.size(), 0);
  for (int s = 0; s < static_cast<int>(mate.size()); ++s) {
    if (seen[s]) continue;
    int p = s;
    do {
      seen[p] = seen[map::opp(p)] = 1;
      in[p] = 1;
      in[map::opp(p)] = 0;
      p = mate[map::opp(p)];
    } while (p != s);
  }
  return in;
}

inline Diagram diagram_from_map(const std::vector<int>& mate, const std::vector<int>& over_axis, int circles = 0) {
  MapData m;
  m.mate = mate;
  m.over_axis = over_axis;
  m.incoming = orient_strands(mate);
  m.circle_tags.resize(circles);
  return Diagram::from_map(std::move(m));
}

/// The alternating over/under choice on a connected map with crossing 0 on
/// axis `first`.
inline std::vector<int> alternating_axes(const std::vector<int>& mate, int first = 1) {
  const int n = static_cast<int>(mate.size()) / 4;
  std::vector<int> axis(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (axis[s] != -1) continue;
    axis[s] = s == 0 ? first : 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < 4; ++j) {
        int p = map::position(v, j), q = mate[p];
        int w = map::vertex_of(q);
        bool over_p = (j & 1) == axis[v];
        // q must be over exactly when p is under.
        int want = over_p ? 1 - (map::slot_of(q) & 1) : (map::slot_of(q) & 1);
        if (axis[w] == -1) {
          axis[w] = want;
          stack.push_back(w);
        } else if (axis[w] != want) {
          throw InvalidGraph("map has no alternating assignment");
        }
      }
    }
  }
  return axis;
}

inline std::vector<Diagram> dedupe(std::vector<Diagram> in) {
  std::set<CanonicalForm> seen;
  std::vector<Diagram> out;
  for (auto& d : in)
    if (seen.insert(canonical_form(d)).second) out.push_back(std::move(d));
  return out;
}

/// Every connected alternating diagram with 1..max_crossings crossings, up
/// to isomorphism.
inline std::vector<Diagram> alternating_corpus(int max_crossings, int min_crossings = 1) {
  std::vector<Diagram> out;
  for (int n = std::max(1, min_crossings); n <= max_crossings; ++n)
    for (const auto& m : enumerate_plane_maps(n))
      for (int first : {0, 1}) out.push_back(diagram_from_map(m, alternating_axes(m, first)));
  return dedupe(std::move(out));
}

/// Single crossing changes of the alternating corpus, up to isomorphism.
inline std::vector<Diagram> almost_alternating_corpus(int max_crossings, int min_crossings = 1) {
  std::vector<Diagram> out;
  for (const auto& d : alternating_corpus(max_crossings, min_crossings))
    for (int c = 0; c < d.crossing_count(); ++c) {
      Diagram e = crossing_change(d, c);
      if (!is_alternating(e)) out.push_back(std::move(e));
    }
  return dedupe(std::move(out));
}

template <class Rng>
Diagram random_diagram(int crossings, Rng& rng) {
  auto m = random_plane_map(crossings, rng);
  std::vector<int> axis(crossings);
  std::bernoulli_distribution coin(0.5);
  for (int& a : axis) a = coin(rng) ? 1 : 0;
  return diagram_from_map(m, axis);
}

template <class Rng>
Diagram random_alternating(int crossings, Rng& rng) {
  auto m = random_plane_map(crossings, rng);
  std::bernoulli_distribution coin(0.5);
  return diagram_from_map(m, alternating_axes(m, coin(rng) ? 1 : 0));
}

/// A random alternating diagram with one random crossing changed; retried
/// until the change breaks alternation.
template <class Rng>
Diagram random_almost_alternating(int crossings, Rng& rng) {
  for (;;) {
    Diagram a = random_alternating(crossings, rng);
    int c = std::uniform_int_distribution<int>(0, crossings - 1)(rng);
    Diagram d = crossing_change(a, c);
    if (!is_alternating(d)) return d;
  }
}

}  // namespace aalt
