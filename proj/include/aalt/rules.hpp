#pragma once

// Non-reduced configurations as data. A rule is a fragment of PD code
// anchored at the dealternator (pattern crossing 0) plus the Reidemeister
// sequence that removes it. Fragment labels: 0 marks a slot leaving the
// fragment, a positive label appearing twice is an arc inside it. Over and
// under are not part of the pattern; the reflected fragment is tried too.
//
// Moves: {"R3": [i, k]} slides across the triangle at corner (i, k) of the
// fragment; {"R2": [i, j]} cancels fragment crossings i and j across a
// bigon.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "diagram.hpp"
#include "reidemeister.hpp"

namespace aalt {

struct MoveStep {
  enum class Kind { R2, R3 };
  Kind kind = Kind::R2;
  int a = 0, b = 0;
  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct RewriteRule {
  std::string name;
  std::string verdict;  // "I" or "II"
  std::vector<std::array<int, 4>> pattern;
  std::vector<MoveStep> moves;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct RuleSet {
  int version = 1;
  std::vector<RewriteRule> rules;
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

inline constexpr const char* kDefaultRulesJson = R"JSON({
  "version": 1,
  "rules": [
    {
      "name": "clasp",
      "verdict": "I",
      "pattern": [[1, 2, 0, 0], [2, 1, 0, 0]],
      "moves": [{"R2": [0, 1]}]
    },
    {
      "name": "tongue",
      "verdict": "II",
      "pattern": [[1, 2, 0, 5], [3, 1, 4, 0], [2, 3, 0, 0], [4, 5, 0, 0]],
      "moves": [{"R3": [0, 0]}, {"R2": [2, 3]}]
    }
  ]
}
)JSON";

namespace detail {

inline void validate_rule(const RewriteRule& r) {
  if (r.verdict != "I" && r.verdict != "II") throw ParseError("rule " + r.name + ": verdict must be I or II");
  const int n = static_cast<int>(r.pattern.size());
  if (n == 0) throw ParseError("rule " + r.name + ": empty pattern");
  std::map<int, int> count;
  for (const auto& row : r.pattern)
    for (int x : row) {
      if (x < 0) throw ParseError("rule " + r.name + ": negative label");
      if (x > 0) ++count[x];
    }
  for (auto [label, k] : count)
    if (k != 2) throw ParseError("rule " + r.name + ": internal label " + std::to_string(label) + " must occur twice");
  // Fragment must be connected through internal arcs.
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      for (int x : r.pattern[i])
        for (int y : r.pattern[j])
          if (x > 0 && x == y && !seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
  }
  for (int s : seen)
    if (!s) throw ParseError("rule " + r.name + ": pattern is not connected");
  int removed = 0;
  for (const auto& m : r.moves) {
    if (m.kind == MoveStep::Kind::R2) {
      if (m.a == m.b || m.a < 0 || m.b < 0 || m.a >= n || m.b >= n)
        throw ParseError("rule " + r.name + ": bad R2 crossings");
      removed += 2;
    } else if (m.a < 0 || m.a >= n || m.b < 0 || m.b > 3) {
      throw ParseError("rule " + r.name + ": bad R3 corner");
    }
  }
  if (removed == 0) throw ParseError("rule " + r.name + ": moves must remove crossings");
}

}  // namespace detail

inline RuleSet parse_rules(const nlohmann::json& j) {
  RuleSet rs;
  try {
    const nlohmann::json* list = &j;
    if (j.is_object()) {
      rs.version = j.value("version", 1);
      list = &j.at("rules");
    }
    if (!list->is_array()) throw ParseError("rules must be a list");
    for (const auto& item : *list) {
      RewriteRule r;
      r.name = item.at("name").get<std::string>();
      r.verdict = item.at("verdict").get<std::string>();
      for (const auto& row : item.at("pattern")) {
        if (row.size() != 4) throw ParseError("rule " + r.name + ": pattern rows need 4 labels");
        r.pattern.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()});
      }
      for (const auto& mv : item.at("moves")) {
        MoveStep s;
        if (mv.contains("R2")) {
          s.kind = MoveStep::Kind::R2;
        } else if (mv.contains("R3")) {
          s.kind = MoveStep::Kind::R3;
        } else {
          throw ParseError("rule " + r.name + ": unknown move");
        }
        const auto& args = mv.contains("R2") ? mv.at("R2") : mv.at("R3");
        if (args.size() != 2) throw ParseError("rule " + r.name + ": moves take two integers");
        s.a = args[0].get<int>();
        s.b = args[1].get<int>();
        r.moves.push_back(s);
      }
      detail::validate_rule(r);
      rs.rules.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad rules file: ") + e.what());
  }
  return rs;
}

inline RuleSet parse_rules_text(const std::string& text) {
  try {
    return parse_rules(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad rules JSON: ") + e.what());
  }
}

inline const RuleSet& default_rules() {
  static const RuleSet rs = parse_rules_text(kDefaultRulesJson);
  return rs;
}

inline RuleSet load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read rules file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rules_text(ss.str());
}

// ---------------------------------------------------------------- matching

struct Match {
  int rule = -1;
  bool reflected = false;
  std::vector<CrossingId> crossings;  // image of each pattern crossing
  std::vector<int> rotation;          // pattern slot k sits at diagram slot k' + rotation
  friend bool operator==(const Match&, const Match&) = default;
};

namespace detail {

inline std::vector<std::array<int, 4>> oriented_pattern(const RewriteRule& r, bool reflected) {
  auto p = r.pattern;
  if (reflected)
    for (auto& row : p) row = {row[0], row[3], row[2], row[1]};
  return p;
}

// Pattern slot of a label's other end: (crossing, slot), or (-1, -1).
inline std::pair<int, int> partner_slot(const std::vector<std::array<int, 4>>& p, int i, int k) {
  int label = p[i][k];
  if (label == 0) return {-1, -1};
  for (int j = 0; j < static_cast<int>(p.size()); ++j)
    for (int l = 0; l < 4; ++l)
      if ((j != i || l != k) && p[j][l] == label) return {j, l};
  return {-1, -1};
}

inline bool extend(const Diagram& d, const std::vector<std::array<int, 4>>& p, std::vector<int>& img,
                   std::vector<int>& rot, std::vector<char>& used) {
  const int n = static_cast<int>(p.size());
  // Propagate along internal arcs from assigned crossings.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (img[i] == -1) continue;
      for (int k = 0; k < 4; ++k) {
        auto [j, l] = partner_slot(p, i, k);
        if (j == -1) continue;
        int q = d.mate(map::position(img[i], k + rot[i]));
        if (img[j] != -1) {
          if (q != map::position(img[j], l + rot[j])) return false;
        } else {
          int c = map::vertex_of(q);
          if (used[c]) return false;
          img[j] = c;
          rot[j] = (map::slot_of(q) - l + 4) & 3;
          used[c] = 1;
          changed = true;
        }
      }
    }
  }
  for (int x : img)
    if (x == -1) return false;
  return true;
}

}  // namespace detail

/// The first placement of rule r anchored at crossing `anchor`.
inline std::optional<Match> match_rule(const Diagram& d, const RuleSet& rs, int r, CrossingId anchor) {
  const auto& rule = rs.rules.at(r);
  const int n = static_cast<int>(rule.pattern.size());
  if (n > d.crossing_count()) return std::nullopt;
  for (bool reflected : {false, true}) {
    auto p = detail::oriented_pattern(rule, reflected);
    for (int r0 = 0; r0 < 4; ++r0) {
      std::vector<int> img(n, -1), rot(n, 0);
      std::vector<char> used(d.crossing_count(), 0);
      img[0] = anchor;
      rot[0] = r0;
      used[anchor] = 1;
      if (detail::extend(d, p, img, rot, used)) return Match{r, reflected, img, rot};
    }
  }
  return std::nullopt;
}

/// Applies a rule's Reidemeister sequence at a match.
inline Diagram apply_rule(const Diagram& d, const RuleSet& rs, const Match& m) {
  const auto& rule = rs.rules.at(m.rule);
  Diagram cur = d;
  std::vector<int> img = m.crossings;
  for (const auto& step : rule.moves) {
    if (step.kind == MoveStep::Kind::R3) {
      int corner = m.reflected ? (3 - step.b) & 3 : step.b;
      int pos = map::position(img.at(step.a), corner + m.rotation.at(step.a));
      cur = r3(cur, cur.face_of_corner()[pos]);
    } else {
      int a = img.at(step.a), b = img.at(step.b);
      if (a < 0 || b < 0) throw InvalidMove("R2 on a crossing that is already gone");
      int face = -1;
      for (int f = 0; f < static_cast<int>(cur.faces().size()) && face == -1; ++f) {
        const auto& bd = cur.faces()[f].boundary;
        if (bd.size() != 2) continue;
        if (!((bd[0].crossing == a && bd[1].crossing == b) || (bd[0].crossing == b && bd[1].crossing == a))) continue;
        bool ok = true;
        for (int q : bigon_positions(cur, f)) ok = ok && cur.is_over(q) == cur.is_over(cur.mate(q));
        if (ok) face = f;
      }
      if (face == -1) throw InvalidMove("no cancelling bigon between the matched crossings");
      cur = r2_remove(cur, face);
      for (int& x : img) {
        if (x == a || x == b) {
          x = -1;
        } else if (x >= 0) {
          x -= (a < x) + (b < x);
        }
      }
    }
  }
  return cur;
}

// ---------------------------------------------------------------- reducedness

struct ReducednessVerdict {
  enum class Kind { Reduced, MatchesDiagramI, MatchesDiagramII };
  Kind kind = Kind::Reduced;
  std::optional<Match> site;
};

inline const char* to_string(ReducednessVerdict::Kind k) {
  switch (k) {
    case ReducednessVerdict::Kind::Reduced: return "Reduced";
    case ReducednessVerdict::Kind::MatchesDiagramI: return "MatchesDiagramI";
    case ReducednessVerdict::Kind::MatchesDiagramII: return "MatchesDiagramII";
  }
  return "?";
}

// The unique dealternator; throws when d is not almost alternating with
// exactly one.
inline CrossingId unique_dealternator(const Diagram& d) {
  auto rep = alternation_report(d);
  if (!rep.is_almost_alternating) throw NotAlmostAlternating("diagram is not almost alternating");
  if (rep.dealternators.size() != 1)
    throw NotAlmostAlternating("diagram has " + std::to_string(rep.dealternators.size()) + " dealternators");
  return rep.dealternators.front();
}

inline ReducednessVerdict is_reduced(const Diagram& d, const RuleSet& rs = default_rules()) {
  require_connected(d);
  CrossingId dealt = unique_dealternator(d);
  if (!is_prime(d)) throw NotPrime("reducedness is defined for prime diagrams");
  for (int r = 0; r < static_cast<int>(rs.rules.size()); ++r) {
    if (auto m = match_rule(d, rs, r, dealt)) {
      ReducednessVerdict v;
      v.kind = rs.rules[r].verdict == "I" ? ReducednessVerdict::Kind::MatchesDiagramI
                                          : ReducednessVerdict::Kind::MatchesDiagramII;
      v.site = m;
      return v;
    }
  }
  return {};
}

}  // namespace aalt
