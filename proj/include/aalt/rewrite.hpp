#pragma once

// Reducing moves and the splittability decision for almost alternating
// diagrams, with an auditable trace.

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "codec.hpp"
#include "oracle.hpp"
#include "rules.hpp"

namespace aalt {

// ---------------------------------------------------------------- moves

namespace detail {

inline Match require_match(const Diagram& d, const RuleSet& rs, const std::string& verdict) {
  auto v = is_reduced(d, rs);
  if (!v.site || rs.rules[v.site->rule].verdict != verdict)
    throw NoMatch("diagram does not match a diagram-" + verdict + " rule");
  return *v.site;
}

// Anchors at any dealternator; used where more than one exists.
inline std::optional<Match> match_any_anchor(const Diagram& d, const RuleSet& rs, const std::string& verdict) {
  for (CrossingId c : dealternators(d))
    for (int r = 0; r < static_cast<int>(rs.rules.size()); ++r)
      if (rs.rules[r].verdict == verdict)
        if (auto m = match_rule(d, rs, r, c)) return m;
  return std::nullopt;
}

}  // namespace detail

inline Diagram reducing_move_I(const Diagram& d, const Match& m, const RuleSet& rs = default_rules()) {
  if (m.rule < 0 || m.rule >= static_cast<int>(rs.rules.size()) || rs.rules[m.rule].verdict != "I")
    throw NoMatch("match is not a diagram-I site");
  return apply_rule(d, rs, m);
}

inline Diagram reducing_move_I(const Diagram& d, const RuleSet& rs = default_rules()) {
  return reducing_move_I(d, detail::require_match(d, rs, "I"), rs);
}

inline Diagram reducing_move_II(const Diagram& d, const Match& m, const RuleSet& rs = default_rules()) {
  if (m.rule < 0 || m.rule >= static_cast<int>(rs.rules.size()) || rs.rules[m.rule].verdict != "II")
    throw NoMatch("match is not a diagram-II site");
  return apply_rule(d, rs, m);
}

inline Diagram reducing_move_II(const Diagram& d, const RuleSet& rs = default_rules()) {
  return reducing_move_II(d, detail::require_match(d, rs, "II"), rs);
}

// ---------------------------------------------------------------- trace

// FNV-1a of the canonical PD text, as 16 hex digits.
inline std::string diagram_hash(const Diagram& d) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : emit_pd(d)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct TraceStep {
  std::string move;  // I, II or factorize
  std::string before_hash, after_hash;
  std::string before_pd, after_pd;
  int crossings_removed = 0;
  std::string justification;
};

struct MoveTrace {
  std::vector<TraceStep> steps;
  int moves() const {
    int k = 0;
    for (const auto& s : steps) k += s.move == "I" || s.move == "II";
    return k;
  }
};

enum class Verdict { NonSplittable, Splittable, PartialSplit };

// Which fact closes the argument.
enum class Certificate {
  ConnectedAlternating,      // connected alternating diagrams are non-split
  ReducedAlmostAlternating,  // connected prime reduced almost alternating diagrams are non-split
  NonSplitFactors,           // connected sum of non-split pieces
  DisconnectedDiagram,       // a disconnected diagram was reached
  SplitFactor,               // some connected summand is split
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NonSplittable: return "NonSplittable";
    case Verdict::Splittable: return "Splittable";
    case Verdict::PartialSplit: return "PartialSplit";
  }
  return "?";
}

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::ConnectedAlternating: return "connected-alternating";
    case Certificate::ReducedAlmostAlternating: return "reduced-almost-alternating";
    case Certificate::NonSplitFactors: return "non-split-factors";
    case Certificate::DisconnectedDiagram: return "disconnected-diagram";
    case Certificate::SplitFactor: return "split-factor";
  }
  return "?";
}

struct SplitVerdict {
  Verdict kind = Verdict::NonSplittable;
  Certificate certificate = Certificate::ConnectedAlternating;
  std::optional<Diagram> exhibited;  // the disconnected diagram, when split
  std::vector<Diagram> pieces;       // its connected pieces
};

struct Decision {
  SplitVerdict verdict;
  MoveTrace trace;
};

inline nlohmann::json to_json(const TraceStep& s, int index) {
  return {{"step", index},
          {"move", s.move},
          {"before_hash", s.before_hash},
          {"after_hash", s.after_hash},
          {"before", s.before_pd},
          {"after", s.after_pd},
          {"crossings_removed", s.crossings_removed},
          {"justification", s.justification}};
}

// One JSON object per line.
inline std::string trace_jsonl(const MoveTrace& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.steps.size(); ++i) os << to_json(t.steps[i], static_cast<int>(i)).dump() << '\n';
  return os.str();
}

// ---------------------------------------------------------------- decision

namespace detail {

inline TraceStep make_step(const std::string& move, const Diagram& before, const Diagram& after,
                           const std::string& why) {
  return {move,           diagram_hash(before),
          diagram_hash(after),
          emit_pd(before), emit_pd(after),
          before.crossing_count() - after.crossing_count(),
          why};
}

// Split verdicts must not separate components that link.
inline void check_split_soundness(const Diagram& original, const std::vector<Diagram>& pieces) {
  std::map<int, int> piece_of_tag;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    for (int p = 0; p < 4 * pieces[i].crossing_count(); ++p) piece_of_tag[pieces[i].tag(p)] = i;
    for (int t : pieces[i].circle_tags()) piece_of_tag[t] = i;
  }
  for (auto [key, lk] : tag_linking(original))
    if (piece_of_tag.count(key.first) && piece_of_tag.count(key.second) &&
        piece_of_tag[key.first] != piece_of_tag[key.second])
      throw std::logic_error("split verdict separates components with linking number " + std::to_string(lk));
  if (original.crossing_count() <= 14 && !divisible_by_a4_plus_1(kauffman_bracket(original)))
    throw std::logic_error("split verdict for a diagram whose bracket lacks the loop factor");
}

inline std::set<int> tags_of(const Diagram& d) {
  std::set<int> out(d.circle_tags().begin(), d.circle_tags().end());
  for (int p = 0; p < 4 * d.crossing_count(); ++p) out.insert(d.tag(p));
  return out;
}

// Connected sum along an arc of component `t` in each, keeping tags.
inline Diagram join_on_tag(const Diagram& a, const Diagram& b, int t) {
  if (a.crossing_count() == 0 && a.circle_count() == 1) return b;
  if (b.crossing_count() == 0 && b.circle_count() == 1) return a;
  auto first = [&](const Diagram& d) {
    for (int p = 0; p < 4 * d.crossing_count(); ++p)
      if (d.tag(p) == t) return p;
    throw std::logic_error("component tag not present");
  };
  int pa = first(a), pb = first(b);
  MapData m = disjoint_union(a, b, true).data();
  const int off = 4 * a.crossing_count();
  int p = pa, q = m.mate[pa];
  if (m.incoming[p]) std::swap(p, q);
  int r = pb + off, s = m.mate[pb + off];
  if (m.incoming[r]) std::swap(r, s);
  m.mate[p] = s;
  m.mate[s] = p;
  m.mate[r] = q;
  m.mate[q] = r;
  return Diagram::from_map(std::move(m));
}

// Glues parts sharing a component back together; the groups left are the
// pieces of the whole link.
inline std::vector<Diagram> reassemble(std::vector<Diagram> parts) {
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < parts.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < parts.size() && !merged; ++j) {
        auto ti = tags_of(parts[i]), tj = tags_of(parts[j]);
        for (int t : ti)
          if (tj.count(t)) {
            parts[i] = join_on_tag(parts[i], parts[j], t);
            parts.erase(parts.begin() + j);
            merged = true;
            break;
          }
      }
  }
  return parts;
}

inline SplitVerdict split_verdict(const Diagram& whole, std::vector<Diagram> pieces) {
  SplitVerdict v{Verdict::Splittable, Certificate::DisconnectedDiagram, whole, std::move(pieces)};
  for (const auto& piece : v.pieces)
    if (piece.link_components() > 1) v.kind = Verdict::PartialSplit;
  return v;
}

inline SplitVerdict decide_rec(const Diagram& d, const RuleSet& rs, MoveTrace& trace) {
  if (d.shadow_components() > 1) return split_verdict(d, split_pieces(d));
  if (is_alternating(d)) return {};
  auto rep = alternation_report(d);
  if (!rep.is_almost_alternating) throw NotAlmostAlternating("diagram is neither alternating nor almost alternating");

  if (!is_prime(d)) {
    auto factors = connected_sum_factors(d);
    TraceStep step = make_step("factorize", d, d, "connected-sum-factorization");
    step.after_pd.clear();
    for (const auto& f : factors) step.after_pd += (step.after_pd.empty() ? "" : " # ") + emit_pd(f);
    trace.steps.push_back(step);
    // Alternating factors are non-split and kept as they are.
    std::vector<Diagram> parts;
    bool split = false;
    for (const auto& f : factors) {
      if (is_alternating(f)) {
        parts.push_back(f);
        continue;
      }
      SplitVerdict v = decide_rec(f, rs, trace);
      if (v.kind == Verdict::NonSplittable) {
        parts.push_back(f);
      } else {
        split = true;
        for (auto& piece : v.pieces) parts.push_back(std::move(piece));
      }
    }
    if (!split) return {Verdict::NonSplittable, Certificate::NonSplitFactors, std::nullopt, {}};
    auto pieces = reassemble(std::move(parts));
    Diagram whole = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) whole = disjoint_union(whole, pieces[i], true);
    SplitVerdict v = split_verdict(whole, std::move(pieces));
    v.certificate = Certificate::SplitFactor;
    return v;
  }

  std::optional<Match> site;
  ReducednessVerdict::Kind kind = ReducednessVerdict::Kind::Reduced;
  if (rep.dealternators.size() > 1) {
    // Only the changed Hopf diagram is prime with two dealternators.
    site = detail::match_any_anchor(d, rs, "I");
    if (!site) throw NotAlmostAlternating("prime diagram with several dealternators outside the known exception");
    kind = ReducednessVerdict::Kind::MatchesDiagramI;
  } else {
    auto v = is_reduced(d, rs);
    kind = v.kind;
    site = v.site;
  }
  if (kind == ReducednessVerdict::Kind::Reduced) {
    SplitVerdict v{Verdict::NonSplittable, Certificate::ReducedAlmostAlternating, std::nullopt, {}};
    return v;
  }
  if (kind == ReducednessVerdict::Kind::MatchesDiagramI) {
    Diagram e = apply_rule(d, rs, *site);
    trace.steps.push_back(make_step("I", d, e, "reducing-move-I"));
    return decide_rec(e, rs, trace);
  }
  Diagram e = apply_rule(d, rs, *site);
  trace.steps.push_back(make_step("II", d, e, "reducing-move-II"));
  return decide_rec(e, rs, trace);
}

}  // namespace detail

/// Splittability of the link of a connected alternating or almost
/// alternating diagram.
inline Decision decide_splittable(const Diagram& d, const RuleSet& rs = default_rules()) {
  require_connected(d);
  Decision out;
  out.verdict = detail::decide_rec(d, rs, out.trace);
  if (out.verdict.kind != Verdict::NonSplittable) detail::check_split_soundness(d, out.verdict.pieces);
  return out;
}

inline nlohmann::json to_json(const Decision& dec) {
  nlohmann::json j;
  j["verdict"] = to_string(dec.verdict.kind);
  j["certificate"] = to_string(dec.verdict.certificate);
  if (dec.verdict.exhibited) j["exhibited"] = emit_pd(*dec.verdict.exhibited);
  j["pieces"] = nlohmann::json::array();
  for (const auto& p : dec.verdict.pieces) j["pieces"].push_back(emit_pd(p));
  j["trace"] = nlohmann::json::array();
  for (std::size_t i = 0; i < dec.trace.steps.size(); ++i)
    j["trace"].push_back(to_json(dec.trace.steps[i], static_cast<int>(i)));
  j["moves"] = dec.trace.moves();
  return j;
}

/// A connected almost alternating diagram of a link with more than two
/// components never represents the trivial link: run the decision and
/// read off a non-split sublink with at least two components.
inline bool decide_trivial_multicomponent(const Diagram& d, const RuleSet& rs = default_rules()) {
  require_connected(d);
  if (d.link_components() <= 2)
    throw TooFewComponents("needs more than two components, got " + std::to_string(d.link_components()));
  if (!alternation_report(d).is_almost_alternating) throw NotAlmostAlternating("diagram is not almost alternating");
  Decision dec = decide_splittable(d, rs);
  for (const auto& s : dec.trace.steps) {
    Diagram after = parse_pd(s.after_pd.empty() ? s.before_pd : s.after_pd.substr(0, s.after_pd.find(" # ")));
    if (after.crossing_count() == 0 && after.circle_count() == d.link_components())
      throw std::logic_error("trace reached the crossingless trivial link");
  }
  switch (dec.verdict.kind) {
    case Verdict::NonSplittable: return true;
    case Verdict::PartialSplit: return true;
    case Verdict::Splittable: return false;
  }
  return false;
}

}  // namespace aalt
