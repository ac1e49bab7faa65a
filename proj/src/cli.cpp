#include "domgame/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "domgame/classify.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/families.hpp"
#include "domgame/game.hpp"
#include "domgame/graph6.hpp"
#include "domgame/invariants.hpp"

namespace domgame::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  using Node = std::variant<long long, Graph>;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Node parse_node() {
    skip_ws();
    if (pos >= text.size()) {
      throw UsageError("family spec ended unexpectedly");
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) {
          throw UsageError("family spec integer is out of range");
        }
        ++pos;
      }
      return value;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') {
      throw UsageError(std::string("unexpected character '") + c +
                       "' in family spec");
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    std::string name(text.substr(start, pos - start));
    std::vector<Node> args;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          args.push_back(parse_node());
        } while (eat(','));
        if (!eat(')')) {
          throw UsageError("expected ')' in family spec");
        }
      }
    }
    return build(name, args);
  }

  static Graph build(const std::string& name, std::vector<Node>& args) {
    auto arity = [&](std::size_t want) {
      if (args.size() != want) {
        throw UsageError(name + " takes " + std::to_string(want) +
                         " argument(s), e.g. " + usage_hint(name));
      }
    };
    auto as_int = [&](std::size_t i) {
      if (!std::holds_alternative<long long>(args[i])) {
        throw UsageError(name + " takes integer argument(s)");
      }
      return static_cast<int>(std::get<long long>(args[i]));
    };
    auto as_graph = [&](std::size_t i) -> Graph& {
      if (!std::holds_alternative<Graph>(args[i])) {
        throw UsageError(name + " takes graph argument(s)");
      }
      return std::get<Graph>(args[i]);
    };
    if (name == "path") {
      arity(1);
      return path(as_int(0));
    }
    if (name == "cycle") {
      arity(1);
      return cycle(as_int(0));
    }
    if (name == "complete") {
      arity(1);
      return complete(as_int(0));
    }
    if (name == "star") {
      arity(1);
      return star(as_int(0));
    }
    if (name == "paw") {
      arity(0);
      return paw();
    }
    if (name == "D15") {
      arity(0);
      return family_d15();
    }
    if (name == "F") {
      arity(1);
      return family_f(as_int(0));
    }
    if (name == "G" || name == "G_r") {
      arity(1);
      return family_g(as_int(0));
    }
    if (name == "corona") {
      arity(1);
      return corona(as_graph(0));
    }
    if (name == "cartesian") {
      arity(2);
      return cartesian_product(as_graph(0), as_graph(1));
    }
    if (name == "direct") {
      arity(2);
      return direct_product(as_graph(0), as_graph(1));
    }
    throw UsageError("unknown family name '" + name + "'");
  }

  static std::string usage_hint(const std::string& name) {
    if (name == "corona") return "corona(cycle(3))";
    if (name == "cartesian" || name == "direct") {
      return name + "(paw,complete(2))";
    }
    if (name == "paw" || name == "D15") return name;
    return name + "(5)";
  }
};

enum class Format { json, tsv, human };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "tsv") return Format::tsv;
  if (name == "human") return Format::human;
  throw UsageError("unknown format: " + name);
}

struct InputOpts {
  std::string family;
  std::string graph6_path;
  std::string edges_path;
  int r = 0;
  int k = 0;
};

std::string read_stream_or_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Graph family_from_opts(const InputOpts& o) {
  std::string spec = o.family;
  if (spec.find('(') == std::string::npos) {
    if (spec == "G" || spec == "G_r") {
      if (o.r == 0) throw UsageError("family G needs --r");
      spec = "G(" + std::to_string(o.r) + ")";
    } else if (spec == "F") {
      if (o.k == 0) throw UsageError("family F needs --k");
      spec = "F(" + std::to_string(o.k) + ")";
    }
  }
  return family_spec_parse(spec);
}

std::vector<Graph> load_graphs(const InputOpts& o) {
  int sources = (o.family.empty() ? 0 : 1) + (o.graph6_path.empty() ? 0 : 1) +
                (o.edges_path.empty() ? 0 : 1);
  if (sources != 1) {
    throw UsageError("exactly one of --family, --graph6, --edges is required");
  }
  std::vector<Graph> graphs;
  if (!o.family.empty()) {
    graphs.push_back(family_from_opts(o));
  } else if (!o.graph6_path.empty()) {
    std::istringstream in(read_stream_or_file(o.graph6_path));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      graphs.push_back(parse_graph6(line));
    }
    if (graphs.empty()) throw UsageError("no graphs found in graph6 input");
  } else {
    graphs.push_back(parse_edge_list(read_stream_or_file(o.edges_path)));
  }
  return graphs;
}

GameVariant variant_from(const std::string& s) {
  return s == "total" ? GameVariant::total_connected : GameVariant::connected;
}

Player starter_from(const std::string& s) {
  return s == "s" ? Player::staller : Player::dominator;
}

int cmd_compute(const InputOpts& in, const std::string& variant_s,
                const std::string& starter_s, Format fmt, bool reverse,
                std::ostream& out) {
  GameVariant variant = variant_from(variant_s);
  Player starter = starter_from(starter_s);
  bool first = true;
  for (const Graph& g : load_graphs(in)) {
    GameSolver solver(g, variant, SolveOptions{reverse});
    int value = solver.game_value(starter);
    std::vector<int> pv = solver.principal_variation(starter);
    if (fmt == Format::json) {
      ordered_json j;
      j["graph"] = emit_graph6(g);
      j["n"] = g.order();
      j["variant"] = variant_s;
      j["starter"] = starter_s;
      j["value"] = value;
      ordered_json line = ordered_json::array();
      for (int v : pv) line.push_back(g.label(v));
      j["line"] = std::move(line);
      j["stats"] = {{"states", solver.stats().states},
                    {"memo_hits", solver.stats().memo_hits}};
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      if (first) out << "graph\tn\tvariant\tstarter\tvalue\tline\n";
      out << emit_graph6(g) << '\t' << g.order() << '\t' << variant_s << '\t'
          << starter_s << '\t' << value << '\t';
      for (std::size_t i = 0; i < pv.size(); ++i) {
        out << (i ? " " : "") << g.label(pv[i]);
      }
      out << '\n';
    } else {
      out << value << '\n';
    }
    first = false;
  }
  return 0;
}

int cmd_classify(const InputOpts& in, Format fmt, std::ostream& out) {
  bool first = true;
  for (const Graph& g : load_graphs(in)) {
    ClassLabel label = classify(g);
    if (fmt == Format::json) {
      ordered_json j;
      j["graph"] = emit_graph6(g);
      j["n"] = g.order();
      j["gamma_cg"] = label.gamma_cg;
      j["gamma_tcg"] = label.gamma_tcg;
      j["class"] = label.cls;
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      if (first) out << "graph\tn\tgamma_cg\tgamma_tcg\tclass\n";
      out << emit_graph6(g) << '\t' << g.order() << '\t' << label.gamma_cg
          << '\t' << label.gamma_tcg << '\t' << label.cls << '\n';
    } else {
      out << "gamma_cg=" << label.gamma_cg << " gamma_tcg=" << label.gamma_tcg
          << " class=" << label.cls << '\n';
    }
    first = false;
  }
  return 0;
}

int cmd_per_vertex(const InputOpts& in, const std::string& variant_s,
                   Format fmt, std::ostream& out) {
  GameVariant variant = variant_from(variant_s);
  bool first = true;
  for (const Graph& g : load_graphs(in)) {
    std::vector<int> values = per_vertex_values(g, variant);
    int min_value = values[0];
    for (int v : values) min_value = std::min(min_value, v);
    if (fmt == Format::json) {
      ordered_json j;
      j["graph"] = emit_graph6(g);
      j["n"] = g.order();
      j["variant"] = variant_s;
      ordered_json vals = ordered_json::object();
      for (int v = 0; v < g.order(); ++v) vals[g.label(v)] = values[v];
      j["values"] = std::move(vals);
      j["min"] = min_value;
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      if (first) out << "graph\tvariant\tvertex\tvalue\n";
      for (int v = 0; v < g.order(); ++v) {
        out << emit_graph6(g) << '\t' << variant_s << '\t' << g.label(v)
            << '\t' << values[v] << '\n';
      }
    } else {
      for (int v = 0; v < g.order(); ++v) {
        out << g.label(v) << ' ' << values[v] << '\n';
      }
      out << "min " << min_value << '\n';
    }
    first = false;
  }
  return 0;
}

int cmd_family(const InputOpts& in, Format fmt, std::ostream& out) {
  bool first = true;
  for (const Graph& g : load_graphs(in)) {
    if (fmt == Format::json) {
      ordered_json j;
      j["graph"] = emit_graph6(g);
      j["n"] = g.order();
      j["m"] = g.size();
      ordered_json labels = ordered_json::array();
      for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
      j["labels"] = std::move(labels);
      ordered_json edges = ordered_json::array();
      for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      if (first) out << "u\tv\n";
      for (auto [u, v] : g.edge_list()) out << u << '\t' << v << '\n';
    } else {
      out << "n=" << g.order() << " m=" << g.size() << '\n';
      for (auto [u, v] : g.edge_list()) {
        out << g.label(u) << " -- " << g.label(v) << '\n';
      }
    }
    first = false;
  }
  return 0;
}

void print_results(const std::vector<VerificationResult>& results,
                   Format fmt, std::uint64_t scanned_graphs, bool scanned,
                   std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.holds) ++failed;
  }
  if (fmt == Format::tsv) {
    out << "claim\tholds\tgraph\tobserved\n";
  }
  for (const auto& r : results) {
    if (fmt == Format::json) {
      ordered_json j;
      j["claim"] = r.claim;
      j["holds"] = r.holds;
      if (r.counterexample) {
        j["counterexample"] = {
            {"graph", emit_graph6(r.counterexample->graph)},
            {"observed", r.counterexample->observed}};
      } else {
        j["counterexample"] = nullptr;
      }
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      out << r.claim << '\t' << (r.holds ? "true" : "false") << '\t';
      if (r.counterexample) {
        out << emit_graph6(r.counterexample->graph) << '\t'
            << r.counterexample->observed;
      } else {
        out << '\t';
      }
      out << '\n';
    } else {
      if (r.holds) {
        out << "ok   " << r.claim << '\n';
      } else {
        out << "FAIL " << r.claim << " :: "
            << emit_graph6(r.counterexample->graph) << " :: "
            << r.counterexample->observed << '\n';
      }
    }
  }
  if (fmt == Format::json) {
    ordered_json j;
    j["claims"] = results.size();
    j["failed"] = failed;
    if (scanned) j["scanned_graphs"] = scanned_graphs;
    out << j.dump() << '\n';
  } else if (fmt == Format::human) {
    if (scanned) out << "scanned " << scanned_graphs << " graphs\n";
    if (failed == 0) {
      out << "all " << results.size() << " claims hold\n";
    } else {
      out << failed << " of " << results.size() << " claims failed\n";
    }
  }
}

int cmd_verify(const InputOpts& in, const std::string& suite,
               const std::string& claim, const std::string& hs, int max_n,
               int workers, const std::string& format_s, std::ostream& out) {
  if (suite.empty() == claim.empty()) {
    throw UsageError("choose exactly one of --suite or --claim");
  }
  std::vector<VerificationResult> results;
  std::uint64_t scanned_graphs = 0;
  bool scanned = false;
  if (!suite.empty()) {
    if (suite != "paper") throw UsageError("unknown suite: " + suite);
    results = reference_value_suite();
    if (max_n > 0) {
      ScanOutcome outcome = exhaustive_claim_scan(max_n, workers);
      scanned = true;
      scanned_graphs = outcome.graphs;
      for (auto& f : outcome.failures) results.push_back(std::move(f));
    }
  } else if (claim == "gr-class2") {
    if (in.r == 0) throw UsageError("--claim gr-class2 needs --r");
    results.push_back(verify_gr_class2(in.r));
  } else if (claim == "corona-class1") {
    std::vector<Graph> bases = load_graphs(in);
    if (bases.size() != 1) {
      throw UsageError("corona-class1 needs exactly one base graph");
    }
    if (hs.empty()) {
      throw UsageError(
          "corona-class1 needs --hs with semicolon-separated specs");
    }
    std::vector<Graph> blocks;
    std::istringstream parts(hs);
    std::string part;
    while (std::getline(parts, part, ';')) {
      if (part.empty()) continue;
      blocks.push_back(family_spec_parse(part));
    }
    results.push_back(verify_corona_class1(bases.front(), blocks));
  } else if (claim == "class-trichotomy" || claim == "tcg-bounds" ||
             claim == "non-inclusive-class0") {
    for (const Graph& g : load_graphs(in)) {
      if (claim == "class-trichotomy") {
        results.push_back(verify_class_trichotomy(g));
      } else if (claim == "tcg-bounds") {
        results.push_back(verify_tcg_bounds(g));
      } else {
        results.push_back(verify_non_inclusive_class0(g));
      }
    }
  } else {
    throw UsageError("unknown claim: " + claim);
  }
  return report_verification(results, format_s, out, scanned_graphs, scanned);
}

int cmd_scan(const std::string& target, int max_n, int workers,
             const std::string& format_s, std::ostream& out) {
  Format fmt = parse_format(format_s);
  if (target == "realizability") {
    RealizabilityReport rep = realizability_scan(max_n, workers);
    if (fmt == Format::json) {
      ordered_json j;
      j["target"] = "realizability";
      j["max_n"] = max_n;
      j["scanned"] = rep.scanned;
      j["skipped"] = rep.skipped;
      ordered_json buckets = ordered_json::array();
      for (const auto& [gc, counts] : rep.buckets) {
        ordered_json b;
        b["gamma_c"] = gc;
        b["range"] = {gc, 2 * gc - 1};
        ordered_json cj = ordered_json::object();
        for (const auto& [tcg, count] : counts) {
          cj[std::to_string(tcg)] = count;
        }
        b["counts"] = std::move(cj);
        ordered_json missing = ordered_json::array();
        for (int value = gc; value <= 2 * gc - 1; ++value) {
          if (!counts.count(value)) missing.push_back(value);
        }
        b["missing"] = std::move(missing);
        buckets.push_back(std::move(b));
      }
      j["buckets"] = std::move(buckets);
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      out << "gamma_c\tgamma_tcg\tcount\n";
      for (const auto& [gc, counts] : rep.buckets) {
        for (const auto& [tcg, count] : counts) {
          out << gc << '\t' << tcg << '\t' << count << '\n';
        }
      }
    } else {
      out << "scanned " << rep.scanned << " graphs (skipped " << rep.skipped
          << " with a dominating vertex)\n";
      for (const auto& [gc, counts] : rep.buckets) {
        out << "gamma_c=" << gc << " range [" << gc << ".." << 2 * gc - 1
            << "] hit:";
        for (const auto& [tcg, count] : counts) {
          out << ' ' << tcg << " (x" << count << ')';
        }
        bool any_missing = false;
        for (int value = gc; value <= 2 * gc - 1; ++value) {
          if (!counts.count(value)) {
            out << (any_missing ? ", " : "  missing: ") << value;
            any_missing = true;
          }
        }
        out << '\n';
      }
    }
    return 0;
  }
  if (target == "sgame-equality") {
    return report_sgame_equality(sgame_equality_scan(max_n, workers), max_n,
                                 format_s, out);
  }
  throw UsageError("unknown scan target: " + target);
}

void print_sgame(const SGameEqualityReport& rep, int max_n, Format fmt,
                 std::ostream& out) {
  if (fmt == Format::tsv) out << "graph\tcg_s\ttcg_s\n";
  for (const auto& ce : rep.counterexamples) {
    if (fmt == Format::json) {
      ordered_json j;
      j["graph"] = ce.graph6;
      j["cg_s"] = ce.cg_s;
      j["tcg_s"] = ce.tcg_s;
      out << j.dump() << '\n';
    } else if (fmt == Format::tsv) {
      out << ce.graph6 << '\t' << ce.cg_s << '\t' << ce.tcg_s << '\n';
    } else {
      out << "UNEQUAL " << ce.graph6 << " cg_s=" << ce.cg_s
          << " tcg_s=" << ce.tcg_s << '\n';
    }
  }
  if (fmt == Format::json) {
    ordered_json j;
    j["target"] = "sgame-equality";
    j["max_n"] = max_n;
    j["checked"] = rep.checked;
    j["skipped_complete"] = rep.skipped_complete;
    j["equal"] = rep.equal;
    j["counterexamples"] = rep.counterexamples.size();
    if (rep.checked > 0) {
      j["equality_rate"] =
          static_cast<double>(rep.equal) / static_cast<double>(rep.checked);
    }
    out << j.dump() << '\n';
  } else if (fmt == Format::human) {
    out << "checked " << rep.checked << " non-complete graphs (skipped "
        << rep.skipped_complete << " complete); equal on " << rep.equal
        << ", counterexamples " << rep.counterexamples.size() << '\n';
  }
}

}  // namespace

int report_verification(const std::vector<VerificationResult>& results,
                        const std::string& format, std::ostream& out,
                        std::uint64_t scanned_graphs, bool with_scan_count) {
  print_results(results, parse_format(format), scanned_graphs,
                with_scan_count, out);
  for (const auto& r : results) {
    if (!r.holds) return 2;
  }
  return 0;
}

int report_sgame_equality(const SGameEqualityReport& rep, int max_n,
                          const std::string& format, std::ostream& out) {
  print_sgame(rep, max_n, parse_format(format), out);
  return rep.counterexamples.empty() ? 0 : 2;
}

Graph family_spec_parse(const std::string& text) {
  SpecParser parser{text};
  SpecParser::Node node = parser.parse_node();
  parser.skip_ws();
  if (parser.pos != text.size()) {
    throw UsageError("trailing characters in family spec");
  }
  if (!std::holds_alternative<Graph>(node)) {
    throw UsageError("family spec must describe a graph, not a number");
  }
  return std::get<Graph>(std::move(node));
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact solver for connected domination games on small graphs"};
  app.name("domgame");
  app.require_subcommand(1);

  InputOpts in;
  std::string format_s = "json";
  std::string variant_s = "connected";
  std::string starter_s = "d";
  bool reverse = false;
  int workers = 1;
  int max_n = 0;
  std::string suite;
  std::string claim;
  std::string hs;
  std::string target;

  auto add_input = [&](CLI::App* c) {
    c->add_option("--family", in.family,
                  "family spec, e.g. direct(paw,complete(2))");
    c->add_option("--graph6", in.graph6_path,
                  "graph6 file, one graph per line, - for stdin");
    c->add_option("--edges", in.edges_path,
                  "edge list file: 'n m' header then one 'u v' line per "
                  "edge, - for stdin");
    c->add_option("--r", in.r, "parameter for family G");
    c->add_option("--k", in.k, "parameter for family F");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format_s, "output format")
        ->check(CLI::IsMember({"json", "tsv", "human"}));
  };

  CLI::App* c_compute =
      app.add_subcommand("compute", "game length for a graph");
  add_input(c_compute);
  add_format(c_compute);
  c_compute->add_option("--variant", variant_s, "which game to play")
      ->check(CLI::IsMember({"connected", "total"}));
  c_compute->add_option("--starter", starter_s, "who moves first")
      ->check(CLI::IsMember({"d", "s"}));
  c_compute->add_flag("--reverse-moves", reverse,
                      "explore moves in descending order (diagnostic; the "
                      "value must not change)");

  CLI::App* c_classify =
      app.add_subcommand("classify", "both game values and their difference");
  add_input(c_classify);
  add_format(c_classify);

  CLI::App* c_pv = app.add_subcommand(
      "per-vertex", "game length for each possible first move");
  add_input(c_pv);
  add_format(c_pv);
  c_pv->add_option("--variant", variant_s, "which game to play")
      ->check(CLI::IsMember({"connected", "total"}));

  CLI::App* c_family =
      app.add_subcommand("family", "build a graph and print it");
  add_input(c_family);
  add_format(c_family);

  CLI::App* c_verify =
      app.add_subcommand("verify", "check claims against the solver");
  add_input(c_verify);
  add_format(c_verify);
  c_verify->add_option("--suite", suite, "named suite to run: paper");
  c_verify->add_option(
      "--claim", claim,
      "single claim: class-trichotomy, tcg-bounds, non-inclusive-class0, "
      "corona-class1, gr-class2");
  c_verify->add_option("--hs", hs,
                       "semicolon-separated attachment specs for "
                       "corona-class1, e.g. 'complete(2);complete(1)'");
  c_verify
      ->add_option("--max-n", max_n,
                   "also check every connected graph up to this order")
      ->check(CLI::Range(2, kEnumerationCap));
  c_verify->add_option("--workers", workers, "worker threads for scans")
      ->check(CLI::PositiveNumber);

  CLI::App* c_scan =
      app.add_subcommand("scan", "exhaustive reports on open questions");
  add_format(c_scan);
  c_scan
      ->add_option("--target", target,
                   "realizability (gamma_tcg values within the gamma_c "
                   "bounds) or sgame-equality (Staller-start values of the "
                   "two variants)")
      ->required();
  c_scan->add_option("--max-n", max_n, "largest graph order to enumerate")
      ->required()
      ->check(CLI::Range(2, kEnumerationCap));
  c_scan->add_option("--workers", workers, "worker threads")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("domgame");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Format fmt = format_s == "tsv"     ? Format::tsv
               : format_s == "human" ? Format::human
                                     : Format::json;
  try {
    if (app.got_subcommand(c_compute)) {
      return cmd_compute(in, variant_s, starter_s, fmt, reverse, out);
    }
    if (app.got_subcommand(c_classify)) {
      return cmd_classify(in, fmt, out);
    }
    if (app.got_subcommand(c_pv)) {
      return cmd_per_vertex(in, variant_s, fmt, out);
    }
    if (app.got_subcommand(c_family)) {
      return cmd_family(in, fmt, out);
    }
    if (app.got_subcommand(c_verify)) {
      return cmd_verify(in, suite, claim, hs, max_n, workers, format_s, out);
    }
    if (app.got_subcommand(c_scan)) {
      return cmd_scan(target, max_n, workers, format_s, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace domgame::cli
