#pragma once

// Connected 4-regular maps on the sphere (loops and multiple edges
// allowed): exhaustive generation in breadth-first canonical order, and a
// random generator built on the same growth step.
//
// A partial map is grown dart by dart in numeric order. An open dart is
// either attached to a fresh vertex (at that vertex's slot 0) or joined to a
// later open dart on the same face of the partial map, open darts acting as
// stubs. Joining within a face keeps the map spherical, and every rooted
// map arises exactly once.

#include <functional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "map.hpp"

namespace aalt {

namespace detail {

class MapGrower {
 public:
  explicit MapGrower(int vertices) : target_(vertices), mate_(4 * vertices, -1) {}

  int vertices() const { return nv_; }
  const std::vector<int>& mate() const { return mate_; }

  // First open dart at or after p among discovered vertices, or -1.
  int next_open(int p) const {
    for (; p < 4 * nv_; ++p)
      if (mate_[p] == -1) return p;
    return -1;
  }

  int open_count() const {
    int k = 0;
    for (int p = 0; p < 4 * nv_; ++p) k += mate_[p] == -1;
    return k;
  }

  // Open darts q > p on p's face.
  std::vector<int> partners(int p) const {
    std::vector<int> out;
    int c = p;
    do {
      int r = map::rot(c);
      c = mate_[r] == -1 ? r : mate_[r];
      if (c > p && mate_[c] == -1 && c != p) out.push_back(c);
    } while (c != p);
    return out;
  }

  bool can_add_vertex() const { return nv_ < target_; }

  void add_vertex(int p) {
    int v = nv_++;
    join(p, map::position(v, 0));
  }
  void remove_vertex(int p) {
    unjoin(p);
    --nv_;
  }
  void join(int p, int q) {
    mate_[p] = q;
    mate_[q] = p;
  }
  void unjoin(int p) {
    int q = mate_[p];
    mate_[p] = -1;
    mate_[q] = -1;
  }

  void start() { nv_ = 1; }

 private:
  int target_;
  int nv_ = 0;
  std::vector<int> mate_;
};

inline void grow_all(MapGrower& g, int from, int target, const std::function<void(const std::vector<int>&)>& emit) {
  int p = g.next_open(from);
  if (p == -1) {
    if (g.vertices() == target) emit(g.mate());
    return;
  }
  if (g.can_add_vertex()) {
    g.add_vertex(p);
    grow_all(g, p + 1, target, emit);
    g.remove_vertex(p);
  }
  // Closing the last two open darts early would leave too few vertices.
  int open = g.open_count();
  if (open == 2 && g.vertices() < target) return;
  for (int q : g.partners(p)) {
    g.join(p, q);
    grow_all(g, p + 1, target, emit);
    g.unjoin(p);
  }
}

// Is the breadth-first code from dart 0 the least over all starting darts?
// Codes are compared incrementally so most starts are rejected early.
inline bool is_root_canonical(const std::vector<int>& mate, const std::vector<int>& vertex_label = {}) {
  const int nv = static_cast<int>(mate.size()) / 4;
  auto label_of = [&](int v) { return vertex_label.empty() ? 0 : vertex_label[v]; };
  auto root = map::bfs_code(mate, 0, label_of, [](int) { return 0; }).code;
  std::vector<int> label(nv), entry(nv), order;
  order.reserve(nv);
  for (int s = 1; s < 4 * nv; ++s) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[map::vertex_of(s)] = 0;
    entry[map::vertex_of(s)] = map::slot_of(s);
    order.push_back(map::vertex_of(s));
    std::size_t k = 0;
    int cmp = 0;
    auto push = [&](int x) {
      if (cmp == 0) cmp = x < root[k] ? -1 : (x > root[k] ? 1 : 0);
      ++k;
    };
    for (std::size_t i = 0; i < order.size() && cmp == 0; ++i) {
      int v = order[i];
      push(label_of(v));
      for (int j = 0; j < 4 && cmp == 0; ++j) {
        int q = mate[map::position(v, entry[v] + j)];
        int w = map::vertex_of(q);
        if (label[w] == -1) {
          label[w] = static_cast<int>(order.size());
          entry[w] = map::slot_of(q);
          order.push_back(w);
        }
        push(label[w]);
        push((map::slot_of(q) - entry[w] + 4) & 3);
        push(0);
      }
    }
    if (cmp < 0) return false;
  }
  return true;
}

}  // namespace detail

/// Calls `emit` once per rooted map with `vertices` vertices.
inline void for_each_rooted_map(int vertices, const std::function<void(const std::vector<int>&)>& emit) {
  if (vertices <= 0) return;
  detail::MapGrower g(vertices);
  g.start();
  detail::grow_all(g, 0, vertices, emit);
}

inline long long count_rooted_maps(int vertices) {
  long long n = 0;
  for_each_rooted_map(vertices, [&](const std::vector<int>&) { ++n; });
  return n;
}

/// One representative per orientation-preserving isomorphism class.
inline std::vector<std::vector<int>> enumerate_plane_maps(int vertices) {
  std::vector<std::vector<int>> out;
  for_each_rooted_map(vertices, [&](const std::vector<int>& m) {
    if (detail::is_root_canonical(m)) out.push_back(m);
  });
  return out;
}

/// A random connected 4-regular spherical map; dead ends restart.
template <class Rng>
std::vector<int> random_plane_map(int vertices, Rng& rng) {
  if (vertices <= 0) throw InvalidGraph("a map needs at least one vertex");
  for (;;) {
    detail::MapGrower g(vertices);
    g.start();
    int p = 0;
    bool stuck = false;
    while ((p = g.next_open(p)) != -1) {
      auto opts = g.partners(p);
      if (g.open_count() == 2 && g.vertices() < vertices) opts.clear();
      int choices = static_cast<int>(opts.size()) + (g.can_add_vertex() ? 1 : 0);
      if (choices == 0) {
        stuck = true;
        break;
      }
      int pick = std::uniform_int_distribution<int>(0, choices - 1)(rng);
      if (pick < static_cast<int>(opts.size()))
        g.join(p, opts[pick]);
      else
        g.add_vertex(p);
      ++p;
    }
    if (!stuck && g.vertices() == vertices) return g.mate();
  }
}

}  // namespace aalt
