#pragma once

// Command-line front end. run() is separate from main so tests can drive
// it in-process.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classify.hpp"
#include "codec.hpp"
#include "discharge.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "rewrite.hpp"
#include "rules.hpp"

namespace aalt::cli {

enum ExitCode { kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3 };

struct Options {
  std::string input;
  std::string format;
  bool json = false;
  std::string trace_path;
  std::string rules_path;
  std::string svg_path;
  std::string to = "pd";
  int max_vertices = 4;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

inline std::string infer_format(const Options& o) {
  if (!o.format.empty()) return o.format;
  auto ends = [&](const std::string& ext) {
    return o.input.size() >= ext.size() && o.input.compare(o.input.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends(".gauss")) return "gauss";
  if (ends(".json")) return "json";
  return "pd";
}

inline Diagram load_diagram(const Options& o, std::istream& in) {
  std::string text = read_input(o.input, in);
  std::string fmt = infer_format(o);
  if (fmt == "pd") return parse_pd(text);
  if (fmt == "gauss") return parse_gauss(text);
  if (fmt == "json") return parse_json(text);
  throw ParseError("unknown format " + fmt);
}

inline RuleSet load_rule_set(const Options& o) {
  if (!o.rules_path.empty()) return load_rules(o.rules_path);
  if (const char* env = std::getenv("AALT_RULES"); env && *env) return load_rules(env);
  return default_rules();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

inline void maybe_svg(const Options& o, const Diagram& d) {
  if (o.svg_path.empty()) return;
  std::vector<CrossingId> hl;
  if (d.shadow_components() == 1) hl = dealternators(d);
  write_file(o.svg_path, emit_svg(d, hl));
}

inline std::string reducedness_text(const Diagram& d, const RuleSet& rs) {
  try {
    return to_string(is_reduced(d, rs).kind);
  } catch (const PreconditionError&) {
    return "n/a";
  }
}

inline int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  Diagram d = load_diagram(o, in);
  RuleSet rs = load_rule_set(o);
  maybe_svg(o, d);
  auto rep = alternation_report(d);
  bool prime = d.crossing_count() > 0 && is_prime(d);
  std::string reduced = rep.is_almost_alternating ? reducedness_text(d, rs) : "n/a";
  if (o.json) {
    out << nlohmann::json{{"crossings", d.crossing_count()},
                          {"components", d.link_components()},
                          {"alternating", rep.is_alternating},
                          {"almost_alternating", rep.is_almost_alternating},
                          {"dealternators", rep.dealternators},
                          {"hopf_degenerate", rep.dealternators.size() > 1 && hopf_degeneracy_check(d)},
                          {"prime", prime},
                          {"reducedness", reduced}}
               .dump()
        << '\n';
    return kOk;
  }
  if (rep.is_alternating) {
    out << "alternating\n";
  } else if (rep.is_almost_alternating) {
    std::size_t k = rep.dealternators.size();
    out << "almost alternating, " << k << (k == 1 ? " dealternator" : " dealternators");
    if (k > 1 && hopf_degeneracy_check(d)) out << " (changed-Hopf degenerate)";
    out << '\n';
  } else {
    out << "neither alternating nor almost alternating\n";
  }
  out << "crossings: " << d.crossing_count() << "\ncomponents: " << d.link_components()
      << "\nprime: " << (prime ? "yes" : "no") << "\nreducedness: " << reduced << '\n';
  return kOk;
}

inline void write_trace(const Options& o, const MoveTrace& t) {
  if (!o.trace_path.empty()) write_file(o.trace_path, trace_jsonl(t));
}

inline int cmd_decide(const Options& o, std::istream& in, std::ostream& out) {
  Diagram d = load_diagram(o, in);
  RuleSet rs = load_rule_set(o);
  maybe_svg(o, d);
  Decision dec = decide_splittable(d, rs);
  write_trace(o, dec.trace);
  if (o.json) {
    out << to_json(dec).dump() << '\n';
    return kOk;
  }
  out << to_string(dec.verdict.kind) << " (" << to_string(dec.verdict.certificate) << "), " << dec.trace.moves()
      << (dec.trace.moves() == 1 ? " move\n" : " moves\n");
  if (dec.verdict.exhibited) out << "exhibited: " << emit_pd(*dec.verdict.exhibited) << '\n';
  return kOk;
}

inline int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  Diagram d = load_diagram(o, in);
  RuleSet rs = load_rule_set(o);
  Decision dec = decide_splittable(d, rs);
  write_trace(o, dec.trace);
  std::string result = emit_pd(d);
  for (const auto& s : dec.trace.steps)
    if (s.move != "factorize") result = s.after_pd;
  if (dec.verdict.exhibited) result = emit_pd(*dec.verdict.exhibited);
  if (!o.svg_path.empty()) maybe_svg(o, parse_pd(result));
  if (o.json) {
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < dec.trace.steps.size(); ++i) steps.push_back(to_json(dec.trace.steps[i], static_cast<int>(i)));
    out << nlohmann::json{{"result", result}, {"moves", dec.trace.moves()}, {"trace", steps}}.dump() << '\n';
    return kOk;
  }
  for (const auto& s : dec.trace.steps)
    out << s.move << ": " << s.before_hash << " -> " << s.after_hash << " (-" << s.crossings_removed << ")\n";
  out << result << '\n';
  return kOk;
}

inline int cmd_bracket(const Options& o, std::istream& in, std::ostream& out) {
  Diagram d = load_diagram(o, in);
  maybe_svg(o, d);
  auto b = kauffman_bracket(d);
  auto lk = linking_matrix(d);
  if (o.json) {
    nlohmann::json m = nlohmann::json::array();
    for (int i = 0; i < lk.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < lk.size(); ++j) row.push_back(lk(i, j));
      m.push_back(row);
    }
    out << nlohmann::json{{"bracket", b.to_string()}, {"writhe", writhe(d)}, {"linking", m}}.dump() << '\n';
    return kOk;
  }
  out << b.to_string() << '\n';
  return kOk;
}

inline int cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
  Diagram d = load_diagram(o, in);
  maybe_svg(o, d);
  if (o.to == "pd")
    out << emit_pd(d) << '\n';
  else if (o.to == "gauss")
    out << emit_gauss(d) << '\n';
  else if (o.to == "json")
    out << to_json(d).dump() << '\n';
  else if (o.to == "svg")
    out << emit_svg(d, d.shadow_components() == 1 ? dealternators(d) : std::vector<CrossingId>{});
  else
    throw ParseError("unknown output format " + o.to);
  return kOk;
}

inline int cmd_graphsearch(const Options& o, std::ostream& out, std::ostream& err) {
  int total = 0, compliant = 0;
  enumerate_candidates(o.max_vertices, [&](const CandidateReport& r) {
    ++total;
    compliant += r.compliant();
    if (o.json) out << to_json(r).dump() << '\n';
  });
  (o.json ? err : out) << compliant << " compliant graphs / " << total << " candidates\n";
  return kOk;
}

inline int run(const std::vector<std::string>& args, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"Splittability toolkit for almost alternating link diagrams", "aalt"};
  app.require_subcommand(1);
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "diagram file, or - for stdin")->required();
    sub->add_option("--format", o.format, "pd, gauss or json (default: by extension)")
        ->check(CLI::IsMember({"pd", "gauss", "json"}));
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--svg", o.svg_path, "write an SVG drawing");
  };
  auto* classify = app.add_subcommand("classify", "alternation, primeness and reducedness");
  add_input(classify);
  classify->add_option("--rules", o.rules_path, "rewrite rules file");
  auto* decide = app.add_subcommand("decide", "decide splittability");
  add_input(decide);
  decide->add_option("--rules", o.rules_path, "rewrite rules file");
  decide->add_option("--trace", o.trace_path, "write the move trace as JSON lines");
  auto* reduce = app.add_subcommand("reduce", "apply reducing moves");
  add_input(reduce);
  reduce->add_option("--rules", o.rules_path, "rewrite rules file");
  reduce->add_option("--trace", o.trace_path, "write the move trace as JSON lines");
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket and linking numbers");
  add_input(bracket);
  auto* convert = app.add_subcommand("convert", "convert between formats");
  add_input(convert);
  convert->add_option("--to", o.to, "pd, gauss, json or svg")->check(CLI::IsMember({"pd", "gauss", "json", "svg"}));
  auto* search = app.add_subcommand("graphsearch", "search intersection graphs");
  search->add_option("--max-vertices", o.max_vertices, "largest graph size");
  search->add_flag("--json", o.json, "one JSON object per candidate");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParse;
  }
  try {
    if (*classify) return cmd_classify(o, in, out);
    if (*decide) return cmd_decide(o, in, out);
    if (*reduce) return cmd_reduce(o, in, out);
    if (*bracket) return cmd_bracket(o, in, out);
    if (*convert) return cmd_convert(o, in, out);
    if (*search) return cmd_graphsearch(o, out, err);
  } catch (const InputError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace aalt::cli
