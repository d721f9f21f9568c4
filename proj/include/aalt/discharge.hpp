#pragma once

// Charge bookkeeping on intersection graphs: 4-regular plane graphs whose
// vertices are saddles, coloured black on the dealternator's bubble.
// Mechanizes the necessary conditions only; the case analysis that rules
// out the remaining T and U blocks is not modelled.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "map.hpp"
#include "planemap.hpp"

namespace aalt {

class PlaneGraph4 {
 public:
  PlaneGraph4() = default;

  // bubble[v] == -1 means unknown; black vertices all sit on one bubble.
  static PlaneGraph4 make(std::vector<int> mate, std::vector<char> black, std::vector<int> bubble = {}) {
    PlaneGraph4 g;
    const int n = static_cast<int>(mate.size()) / 4;
    if (mate.size() % 4 != 0 || static_cast<int>(black.size()) != n)
      throw InvalidGraph("every vertex needs four darts and a colour");
    if (bubble.empty()) bubble.assign(n, -1);
    if (static_cast<int>(bubble.size()) != n) throw InvalidGraph("bubble labels do not match the vertices");
    if (!map::is_valid_involution(mate)) throw InvalidGraph("darts do not pair up");
    if (n > 0) {
      int comps = 0;
      map::vertex_components(mate, &comps);
      if (comps != 1) throw InvalidGraph("graph is disconnected");
      if (!map::is_spherical(mate)) throw InvalidGraph("rotation system is not planar");
    }
    g.mate_ = std::move(mate);
    g.black_ = std::move(black);
    g.bubble_ = std::move(bubble);
    g.faces_ = map::trace_faces(g.mate_);
    g.face_of_corner_ = map::face_index(g.mate_, g.faces_);
    return g;
  }

  int vertices() const { return static_cast<int>(black_.size()); }
  int edges() const { return static_cast<int>(mate_.size()) / 2; }
  const std::vector<int>& mate() const { return mate_; }
  bool is_black(int v) const { return black_[v] != 0; }
  int bubble(int v) const { return bubble_[v]; }
  const std::vector<char>& colours() const { return black_; }
  // Corner lists; corner p lies between slot p and the next slot.
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_of_corner(int p) const { return face_of_corner_[p]; }
  int degree(int f) const { return static_cast<int>(faces_[f].size()); }
  // The two faces along the edge at dart p.
  std::pair<int, int> faces_at_edge(int p) const { return {face_of_corner_[p], face_of_corner_[map::rot_inv(p)]}; }

 private:
  std::vector<int> mate_;
  std::vector<char> black_;
  std::vector<int> bubble_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_corner_;
};

struct FaceCensus {
  std::map<int, int> count;  // degree -> number of faces
  int faces() const {
    int k = 0;
    for (auto [i, c] : count) k += c;
    return k;
  }
  int degree_sum() const {
    int k = 0;
    for (auto [i, c] : count) k += i * c;
    return k;
  }
  int charge() const {
    int k = 0;
    for (auto [i, c] : count) k += (i - 4) * c;
    return k;
  }
};

inline FaceCensus face_census(const PlaneGraph4& g) {
  FaceCensus c;
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) ++c.count[g.degree(f)];
  return c;
}

inline bool verify_euler_identity(const PlaneGraph4& g) {
  if (g.vertices() == 0) throw InvalidGraph("empty graph");
  FaceCensus c = face_census(g);
  if (g.vertices() - g.edges() + c.faces() != 2 || c.degree_sum() != 4 * g.vertices())
    throw InvalidGraph("face tracing is inconsistent");
  return c.charge() == -8;
}

// ---------------------------------------------------------------- constraints

enum class ViolationKind {
  BlackCount,        // (a) a face meets the black bubble other than once
  AdjacentBigons,    // (b)
  BigonsAtWhite,     // (c)
  SideParity,        // (d) the curve cannot alternate sides consistently
  RepeatedBubble,    // a curve meets a labelled bubble twice
  BlockZ44,          // a Z_{4,4} block
  NoNegativeBlock,   // every block weight >= 0 against a total of -8
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::BlackCount: return "a:black-count";
    case ViolationKind::AdjacentBigons: return "b:adjacent-bigons";
    case ViolationKind::BigonsAtWhite: return "c:bigons-at-white-vertex";
    case ViolationKind::SideParity: return "d:side-parity";
    case ViolationKind::RepeatedBubble: return "d:repeated-bubble";
    case ViolationKind::BlockZ44: return "block:Z44";
    case ViolationKind::NoNegativeBlock: return "weight:no-negative-block";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  int face = -1;
  int other = -1;  // second face, or the vertex for (c)
  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::vector<Violation> validate_intersection_constraints(const PlaneGraph4& g) {
  std::vector<Violation> out;
  const int nf = static_cast<int>(g.faces().size());
  for (int f = 0; f < nf; ++f) {
    const auto& corners = g.faces()[f];
    int black = 0;
    for (int p : corners) black += g.is_black(map::vertex_of(p));
    if (black != 1) out.push_back({ViolationKind::BlackCount, f});
    // Sides flip between consecutive white bubbles and hold next to the
    // black one; a closed curve needs an even number of flips and length > 1.
    const int k = static_cast<int>(corners.size());
    int flips = 0;
    for (int i = 0; i < k; ++i) {
      bool a = g.is_black(map::vertex_of(corners[i])), b = g.is_black(map::vertex_of(corners[(i + 1) % k]));
      flips += !(a || b);
    }
    if (k < 2 || flips % 2 != 0) out.push_back({ViolationKind::SideParity, f});
    std::set<int> seen_vertex, seen_bubble;
    for (int p : corners) {
      int v = map::vertex_of(p);
      if (g.is_black(v)) continue;
      bool repeat = !seen_vertex.insert(v).second;
      if (!repeat && g.bubble(v) >= 0) repeat = !seen_bubble.insert(g.bubble(v)).second;
      if (repeat) {
        out.push_back({ViolationKind::RepeatedBubble, f});
        break;
      }
    }
  }
  std::set<std::pair<int, int>> adjacent;
  for (int p = 0; p < 2 * g.edges(); ++p) {
    auto [f1, f2] = g.faces_at_edge(p);
    if (f1 != f2 && g.degree(f1) == 2 && g.degree(f2) == 2) adjacent.insert(std::minmax(f1, f2));
  }
  for (auto [f1, f2] : adjacent) out.push_back({ViolationKind::AdjacentBigons, f1, f2});
  for (int v = 0; v < g.vertices(); ++v) {
    if (g.is_black(v)) continue;
    std::set<int> bigons;
    for (int j = 0; j < 4; ++j) {
      int f = g.face_of_corner(map::position(v, j));
      if (g.degree(f) == 2) bigons.insert(f);
    }
    if (bigons.size() >= 2) out.push_back({ViolationKind::BigonsAtWhite, *bigons.begin(), v});
  }
  return out;
}

// ---------------------------------------------------------------- blocks

enum class BlockKind { Face, TPrime, UPrime, X, Y, Z, T, U };

inline const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Face: return "f";
    case BlockKind::TPrime: return "T'";
    case BlockKind::UPrime: return "U'";
    case BlockKind::X: return "X";
    case BlockKind::Y: return "Y";
    case BlockKind::Z: return "Z";
    case BlockKind::T: return "T";
    case BlockKind::U: return "U";
  }
  return "?";
}

inline int block_weight_formula(BlockKind k, int i = 0, int j = 0) {
  switch (k) {
    case BlockKind::Face: return i - 4;
    case BlockKind::TPrime: return -2;
    case BlockKind::UPrime: return -4;
    case BlockKind::X: return i - 4;
    case BlockKind::Y: return i + j - 10;
    case BlockKind::Z: return i + j - 12;
    case BlockKind::T: return -2;
    case BlockKind::U: return -2;
  }
  return 0;
}

struct Block {
  BlockKind kind = BlockKind::Face;
  std::vector<int> faces;
  int i = 0, j = 0;  // degrees of the flanking faces, i >= j
  int weight = 0;

  std::string name() const {
    switch (kind) {
      case BlockKind::X: return "X_" + std::to_string(i);
      case BlockKind::Y: return "Y_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      case BlockKind::Z: return "Z_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      case BlockKind::Face: return "f_" + std::to_string(i);
      default: return to_string(kind);
    }
  }
};

inline Block make_block(BlockKind k, std::vector<int> faces, int i = 0, int j = 0) {
  if (i < j) std::swap(i, j);
  if (k == BlockKind::Y && i == 4 && j == 4) k = BlockKind::T;
  if (k == BlockKind::Z && i == 6 && j == 4) k = BlockKind::U;
  return {k, std::move(faces), i, j, block_weight_formula(k, i, j)};
}

/// Groups degree-2 faces into T' (alone) or U' (two at a black vertex),
/// adds the two flanking faces to form Y or Z, and leaves the rest as X.
inline std::vector<Block> block_decomposition(const PlaneGraph4& g) {
  const int nf = static_cast<int>(g.faces().size());
  std::vector<int> owner(nf, -1);
  std::vector<std::vector<int>> cores;
  for (int v = 0; v < g.vertices(); ++v) {
    if (!g.is_black(v)) continue;
    std::vector<int> bigons;
    for (int j = 0; j < 4; ++j) {
      int f = g.face_of_corner(map::position(v, j));
      if (g.degree(f) == 2 && std::find(bigons.begin(), bigons.end(), f) == bigons.end()) bigons.push_back(f);
    }
    if (bigons.size() > 2) throw UngroupableFace("more than two bigons at a black vertex");
    if (bigons.size() == 2) {
      for (int f : bigons)
        if (owner[f] != -1) throw UngroupableFace("bigon paired at two black vertices");
      for (int f : bigons) owner[f] = static_cast<int>(cores.size());
      cores.push_back(bigons);
    }
  }
  for (int f = 0; f < nf; ++f)
    if (g.degree(f) == 2 && owner[f] == -1) {
      owner[f] = static_cast<int>(cores.size());
      cores.push_back({f});
    }
  std::vector<Block> out;
  for (int b = 0; b < static_cast<int>(cores.size()); ++b) {
    std::set<int> flank;
    for (int f : cores[b])
      for (int p : g.faces()[f]) {
        // Both edges at a corner bound the face.
        for (int e : {p, map::rot(p)}) {
          auto [f1, f2] = g.faces_at_edge(e);
          for (int h : {f1, f2})
            if (owner[h] != b) flank.insert(h);
        }
      }
    if (flank.size() != 2) throw UngroupableFace("a bigon block needs two distinct flanking faces");
    std::vector<int> members = cores[b];
    std::vector<int> degs;
    for (int h : flank) {
      if (g.degree(h) < 4) throw UngroupableFace("bigon block flanked by a face of degree < 4");
      if (owner[h] != -1) throw UngroupableFace("face flanks two bigon blocks");
      owner[h] = b;
      members.push_back(h);
      degs.push_back(g.degree(h));
    }
    out.push_back(make_block(cores[b].size() == 1 ? BlockKind::Y : BlockKind::Z, members, degs[0], degs[1]));
  }
  for (int f = 0; f < nf; ++f) {
    if (owner[f] != -1) continue;
    if (g.degree(f) < 4) throw UngroupableFace("face of degree " + std::to_string(g.degree(f)) + " outside any block");
    out.push_back(make_block(BlockKind::X, {f}, g.degree(f)));
  }
  return out;
}

// ---------------------------------------------------------------- ledger

struct Transfer {
  int from = 0, to = 0;
  int amount = 0;
  friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct ChargeLedger {
  std::vector<int> face_weight;
  std::vector<Block> blocks;
  std::vector<int> weight;  // current per-block weights
  std::vector<Transfer> log;

  int total() const {
    int t = 0;
    for (int w : weight) t += w;
    return t;
  }
  bool all_nonnegative() const {
    return std::all_of(weight.begin(), weight.end(), [](int w) { return w >= 0; });
  }
  // Non-negative blocks cannot add up to the Euler total of -8.
  bool contradiction() const { return all_nonnegative(); }
};

/// Each face starts as its own block with weight degree - 4.
inline ChargeLedger initial_charge(const PlaneGraph4& g) {
  ChargeLedger l;
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
    l.face_weight.push_back(g.degree(f) - 4);
    l.blocks.push_back(make_block(BlockKind::Face, {f}, g.degree(f)));
    l.weight.push_back(g.degree(f) - 4);
  }
  return l;
}

/// Regroups the face charges into blocks; each block weight is recomputed
/// from its faces and must equal its formula.
inline ChargeLedger grouped(const ChargeLedger& l, std::vector<Block> blocks) {
  ChargeLedger out;
  out.face_weight = l.face_weight;
  std::vector<int> used(l.face_weight.size(), 0);
  for (const auto& b : blocks) {
    int w = 0;
    for (int f : b.faces) {
      if (f < 0 || f >= static_cast<int>(used.size()) || used[f]++) throw UngroupableFace("blocks do not partition the faces");
      w += l.face_weight[f];
    }
    if (w != b.weight) throw UngroupableFace(b.name() + " weight disagrees with its faces");
    out.weight.push_back(w);
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) throw UngroupableFace("blocks do not cover the faces");
  out.blocks = std::move(blocks);
  return out;
}

inline ChargeLedger discharge(ChargeLedger l, const std::vector<Transfer>& transfers) {
  const int n = static_cast<int>(l.weight.size());
  for (const auto& t : transfers) {
    if (t.from < 0 || t.from >= n || t.to < 0 || t.to >= n)
      throw UnknownBlock("transfer between blocks " + std::to_string(t.from) + " and " + std::to_string(t.to));
    l.weight[t.from] -= t.amount;
    l.weight[t.to] += t.amount;
    l.log.push_back(t);
  }
  return l;
}

// ---------------------------------------------------------------- search

inline constexpr int kDefaultVertexBound = 8;

struct CandidateReport {
  PlaneGraph4 graph;
  FaceCensus census;
  std::vector<Violation> violations;
  std::vector<Block> blocks;  // empty unless the graph could be grouped
  bool ungroupable = false;  // passes the constraints but has no block structure
  bool compliant() const { return violations.empty(); }
};

inline CandidateReport examine(const PlaneGraph4& g) {
  CandidateReport r{g, face_census(g), validate_intersection_constraints(g), {}, false};
  if (!r.violations.empty()) return r;
  try {
    r.blocks = block_decomposition(g);
  } catch (const UngroupableFace&) {
    r.ungroupable = true;
    return r;
  }
  bool negative = false;
  for (int b = 0; b < static_cast<int>(r.blocks.size()); ++b) {
    const Block& blk = r.blocks[b];
    if (blk.kind == BlockKind::Z && blk.i == 4 && blk.j == 4) r.violations.push_back({ViolationKind::BlockZ44, blk.faces[0]});
    negative |= blk.weight < 0;
  }
  if (!negative) r.violations.push_back({ViolationKind::NoNegativeBlock});
  return r;
}

namespace detail {

// Vertex permutations induced by orientation-preserving automorphisms.
inline std::vector<std::vector<int>> automorphisms(const std::vector<int>& mate) {
  auto zero = [](int) { return 0; };
  auto base = map::bfs_code(mate, 0, zero, zero);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < static_cast<int>(mate.size()); ++s) {
    auto other = map::bfs_code(mate, s, zero, zero);
    if (other.code != base.code) continue;
    std::vector<int> perm(base.order.size());
    for (std::size_t k = 0; k < base.order.size(); ++k) perm[base.order[k]] = other.order[k];
    out.push_back(std::move(perm));
  }
  return out;
}

}  // namespace detail

/// Every connected 4-regular plane graph with 1..max_vertices vertices and
/// every non-empty black set, up to orientation-preserving isomorphism.
inline void enumerate_candidates(int max_vertices, const std::function<void(const CandidateReport&)>& emit,
                                 int bound = kDefaultVertexBound) {
  if (max_vertices > bound)
    throw BoundExceeded("max_vertices " + std::to_string(max_vertices) + " exceeds " + std::to_string(bound));
  for (int n = 1; n <= max_vertices; ++n)
    for (const auto& mate : enumerate_plane_maps(n)) {
      auto autos = detail::automorphisms(mate);
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool least = true;
        for (const auto& perm : autos) {
          unsigned image = 0;
          for (int v = 0; v < n; ++v)
            if (mask >> v & 1) image |= 1u << perm[v];
          if (image < mask) {
            least = false;
            break;
          }
        }
        if (!least) continue;
        std::vector<char> black(n);
        for (int v = 0; v < n; ++v) black[v] = mask >> v & 1;
        emit(examine(PlaneGraph4::make(mate, black)));
      }
    }
}

inline std::vector<CandidateReport> enumerate_candidates(int max_vertices, int bound = kDefaultVertexBound) {
  std::vector<CandidateReport> out;
  enumerate_candidates(max_vertices, [&](const CandidateReport& r) { out.push_back(r); }, bound);
  return out;
}

template <class Rng>
PlaneGraph4 random_plane_graph(int vertices, Rng& rng) {
  auto mate = random_plane_map(vertices, rng);
  std::vector<char> black(vertices);
  std::bernoulli_distribution coin(0.25);
  for (auto& b : black) b = coin(rng);
  return PlaneGraph4::make(std::move(mate), std::move(black));
}

inline nlohmann::json to_json(const CandidateReport& r) {
  const PlaneGraph4& g = r.graph;
  nlohmann::json edges = nlohmann::json::array(), rot = nlohmann::json::array(), census = nlohmann::json::object();
  for (int p = 0; p < 4 * g.vertices(); ++p)
    if (p < g.mate()[p]) edges.push_back({map::vertex_of(p), map::vertex_of(g.mate()[p])});
  for (int v = 0; v < g.vertices(); ++v) {
    nlohmann::json darts = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) darts.push_back(g.mate()[map::position(v, j)]);
    rot.push_back(darts);
  }
  for (auto [i, c] : r.census.count) census[std::to_string(i)] = c;
  nlohmann::json blocks = nlohmann::json::array(), viol = nlohmann::json::array();
  for (const auto& b : r.blocks) blocks.push_back({{"kind", b.name()}, {"faces", b.faces}, {"weight", b.weight}});
  for (const auto& v : r.violations) viol.push_back({{"kind", to_string(v.kind)}, {"face", v.face}, {"other", v.other}});
  nlohmann::json black = nlohmann::json::array();
  for (int v = 0; v < g.vertices(); ++v)
    if (g.is_black(v)) black.push_back(v);
  return {{"graph", {{"vertices", g.vertices()}, {"edges", edges}, {"rotations", rot}, {"black", black}}},
          {"census", census},
          {"blocks", blocks},
          {"violations", viol},
          {"ungroupable", r.ungroupable},
          {"compliant", r.compliant()}};
}

}  // namespace aalt
