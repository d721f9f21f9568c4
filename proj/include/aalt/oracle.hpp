#pragma once

// Link invariants used to check rewrites and verdicts: Kauffman bracket
// (state sum), writhe, linking numbers.

#include <bit>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace aalt {

inline constexpr int kMaxBracketCrossings = 20;

namespace detail {

// Number of loops after smoothing: bit c of `state` set means the B
// smoothing at crossing c.
inline int count_loops(const Diagram& d, unsigned long state, std::vector<int>& next) {
  const int np = 4 * d.crossing_count();
  // next[p]: the position reached from p through its crossing's smoothing.
  for (int c = 0; c < d.crossing_count(); ++c) {
    int ov = d.over_axis(c);  // an over slot
    bool b = (state >> c) & 1UL;
    int s = b ? ov : ov + 1;  // A joins (ov+1, ov+2), (ov+3, ov)
    int p0 = map::position(c, s), p1 = map::position(c, s + 1);
    int p2 = map::position(c, s + 2), p3 = map::position(c, s + 3);
    next[p0] = p1;
    next[p1] = p0;
    next[p2] = p3;
    next[p3] = p2;
  }
  std::vector<char> seen(np, 0);
  int loops = 0;
  for (int s = 0; s < np; ++s) {
    if (seen[s]) continue;
    ++loops;
    int p = s;
    do {
      seen[p] = 1;
      int q = next[p];
      seen[q] = 1;
      p = d.mate(q);
    } while (p != s);
  }
  return loops;
}

}  // namespace detail

/// <D> = sum over states of A^(a-b) d^(loops-1), d = -A^2 - A^-2.
inline LaurentPolynomial kauffman_bracket(const Diagram& d) {
  const int n = d.crossing_count();
  if (n > kMaxBracketCrossings)
    throw TooLarge("bracket state sum limited to " + std::to_string(kMaxBracketCrossings) + " crossings");
  const int loop_max = 2 * n + d.circle_count() + 1;
  std::vector<LaurentPolynomial> delta_pow(loop_max + 1);
  delta_pow[0] = LaurentPolynomial(1);
  for (int i = 1; i <= loop_max; ++i) delta_pow[i] = delta_pow[i - 1] * LaurentPolynomial::delta();
  // Tally (a - b, loops) first, multiply out once.
  std::map<std::pair<int, int>, std::int64_t> tally;
  std::vector<int> next(4 * n);
  const unsigned long states = 1UL << n;
  for (unsigned long s = 0; s < states; ++s) {
    int b = std::popcount(s);
    int loops = (n == 0 ? 0 : detail::count_loops(d, s, next)) + d.circle_count();
    ++tally[{(n - b) - b, loops}];
  }
  LaurentPolynomial out;
  for (auto [key, count] : tally) {
    auto [e, loops] = key;
    out = out + LaurentPolynomial::monomial(static_cast<LaurentPolynomial::Coeff>(count), e) * delta_pow[loops - 1];
  }
  return out;
}

// Unnormalized Jones-type invariant (-A^3)^(-w) <D>, invariant under all
// three Reidemeister moves.
inline LaurentPolynomial normalized_bracket(const Diagram& d) {
  int w = writhe(d);
  LaurentPolynomial f = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return f * kauffman_bracket(d);
}

struct LinkingMatrix {
  std::vector<std::vector<int>> entries;
  int size() const { return static_cast<int>(entries.size()); }
  int operator()(int i, int j) const { return entries[i][j]; }
  bool is_zero() const {
    for (const auto& r : entries)
      for (int x : r)
        if (x != 0) return false;
    return true;
  }
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

/// Indexed by d.strands() then the free circles.
inline LinkingMatrix linking_matrix(const Diagram& d) {
  const int k = d.link_components();
  std::vector<std::vector<int>> twice(k, std::vector<int>(k, 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    int a = d.strand_of(map::position(c, 0)), b = d.strand_of(map::position(c, 1));
    if (a == b) continue;
    twice[a][b] += d.sign(c);
    twice[b][a] += d.sign(c);
  }
  LinkingMatrix m;
  m.entries.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.entries[i][j] = twice[i][j] / 2;
  return m;
}

/// Linking numbers keyed by component tag pairs (smaller tag first); only
/// nonzero entries.
inline std::map<std::pair<int, int>, int> tag_linking(const Diagram& d) {
  std::map<std::pair<int, int>, int> twice;
  for (int c = 0; c < d.crossing_count(); ++c) {
    int a = d.tag(map::position(c, 0)), b = d.tag(map::position(c, 1));
    if (a == b) continue;
    twice[{std::min(a, b), std::max(a, b)}] += d.sign(c);
  }
  std::map<std::pair<int, int>, int> out;
  for (auto [key, v] : twice)
    if (v != 0) out[key] = v / 2;
  return out;
}

/// <d1 u d2> == delta <d1> <d2>.
inline bool split_factor_check(const Diagram& d1, const Diagram& d2) {
  return kauffman_bracket(disjoint_union(d1, d2)) ==
         LaurentPolynomial::delta() * kauffman_bracket(d1) * kauffman_bracket(d2);
}

/// p == (A^4 + 1) q for some Laurent polynomial q. Every split link's
/// bracket has this factor (it divides the loop value).
inline bool divisible_by_a4_plus_1(LaurentPolynomial p) {
  while (!p.is_zero()) {
    int top = p.max_exponent();
    if (top - 4 < p.min_exponent()) return false;
    auto c = p.coefficient(top);
    p = p - LaurentPolynomial::monomial(c, top) - LaurentPolynomial::monomial(c, top - 4);
  }
  return true;
}

}  // namespace aalt
