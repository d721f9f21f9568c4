#pragma once

// Rotation systems for 4-valent maps on the sphere.
//
// Vertex v owns the four positions 4v..4v+3, listed counterclockwise.
// mate[p] is the position at the other end of the edge leaving p.
// A corner is named by the position that starts it: corner p lies between
// position p and rot(p).

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace aalt::map {

inline int vertex_of(int p) { return p >> 2; }
inline int slot_of(int p) { return p & 3; }
inline int position(int v, int slot) { return 4 * v + (slot & 3); }
inline int rot(int p) { return (p & ~3) | ((p + 1) & 3); }
inline int rot_inv(int p) { return (p & ~3) | ((p + 3) & 3); }
inline int opp(int p) { return (p & ~3) | ((p + 2) & 3); }

inline int vertex_count(std::span<const int> mate) { return static_cast<int>(mate.size()) / 4; }

// Corner following `corner` along the boundary of its face.
inline int next_corner(std::span<const int> mate, int corner) { return mate[rot(corner)]; }

// Every mate entry in range, an involution without fixed points.
inline bool is_valid_involution(std::span<const int> mate) {
  const int n = static_cast<int>(mate.size());
  if (n % 4 != 0) return false;
  for (int p = 0; p < n; ++p) {
    int q = mate[p];
    if (q < 0 || q >= n || q == p || mate[q] != p) return false;
  }
  return true;
}

// Faces as cyclic corner lists, ordered by their smallest corner.
inline std::vector<std::vector<int>> trace_faces(std::span<const int> mate) {
  const int n = static_cast<int>(mate.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> faces;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> face;
    for (int c = s; !seen[c]; c = next_corner(mate, c)) {
      seen[c] = 1;
      face.push_back(c);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

// face_of[corner] for the faces returned by trace_faces.
inline std::vector<int> face_index(std::span<const int> mate, const std::vector<std::vector<int>>& faces) {
  std::vector<int> idx(mate.size(), -1);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int c : faces[f]) idx[c] = f;
  return idx;
}

// Connected components of the underlying graph, labelled in order of first vertex.
inline std::vector<int> vertex_components(std::span<const int> mate, int* count = nullptr) {
  const int nv = vertex_count(mate);
  std::vector<int> comp(nv, -1);
  int k = 0;
  std::vector<int> stack;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = k;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < 4; ++j) {
        int w = vertex_of(mate[position(v, j)]);
        if (comp[w] == -1) {
          comp[w] = k;
          stack.push_back(w);
        }
      }
    }
    ++k;
  }
  if (count) *count = k;
  return comp;
}

// V - E + F == 2 on every connected component.
inline bool is_spherical(std::span<const int> mate) {
  int ncomp = 0;
  auto comp = vertex_components(mate, &ncomp);
  std::vector<int> v(ncomp, 0), f(ncomp, 0);
  for (int x : comp) ++v[x];
  for (const auto& face : trace_faces(mate)) ++f[comp[vertex_of(face.front())]];
  for (int i = 0; i < ncomp; ++i)
    if (v[i] - 2 * v[i] + f[i] != 2) return false;
  return true;
}

/// Breadth-first relabelling of the component containing `start`.
///
/// Vertices are numbered in discovery order; each vertex is read
/// counterclockwise from its entry position (the start position for the
/// root, the position first reached otherwise). The code records, for every
/// position in that order, the neighbour label, the neighbour's slot relative
/// to its entry, and `dart_label(p)`; `vertex_label(v)` is emitted once per
/// vertex. Two rooted maps are isomorphic (orientation preserving, labels
/// respected) iff their codes are equal.
struct BfsLabelling {
  std::vector<int> code;
  std::vector<int> order;  // order[i] = original vertex with new label i
  std::vector<int> entry;  // entry slot of original vertex, -1 if unreached
};

template <class VertexLabel, class DartLabel>
BfsLabelling bfs_code(std::span<const int> mate, int start, VertexLabel&& vertex_label, DartLabel&& dart_label) {
  const int nv = vertex_count(mate);
  BfsLabelling out;
  std::vector<int> label(nv, -1);
  out.entry.assign(nv, -1);
  int root = vertex_of(start);
  label[root] = 0;
  out.entry[root] = slot_of(start);
  out.order.push_back(root);
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    int v = out.order[i];
    out.code.push_back(vertex_label(v));
    for (int j = 0; j < 4; ++j) {
      int p = position(v, out.entry[v] + j);
      int q = mate[p];
      int w = vertex_of(q);
      if (label[w] == -1) {
        label[w] = static_cast<int>(out.order.size());
        out.entry[w] = slot_of(q);
        out.order.push_back(w);
      }
      out.code.push_back(label[w]);
      out.code.push_back((slot_of(q) - out.entry[w] + 4) & 3);
      out.code.push_back(dart_label(p));
    }
  }
  return out;
}

// Position map for reflecting the sphere: slot k becomes slot -k.
inline int reflect_position(int p) { return position(vertex_of(p), (4 - slot_of(p)) & 3); }

inline std::vector<int> reflect_mate(std::span<const int> mate) {
  std::vector<int> out(mate.size());
  for (int p = 0; p < static_cast<int>(mate.size()); ++p) out[reflect_position(p)] = reflect_position(mate[p]);
  return out;
}

}  // namespace aalt::map
