#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "regulab/betti.hpp"
#include "regulab/catalog.hpp"
#include "regulab/even_connection.hpp"
#include "regulab/io.hpp"
#include "regulab/parallel.hpp"
#include "regulab/structure.hpp"
#include "regulab/verify.hpp"

using namespace regulab;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string graph;
  std::string ideal;
  unsigned power = 1;
  int characteristic = 0;
  int jobs = 0;
  bool pretty = false;
};

/// Usage problems found after parsing; exit code 2.
struct UsageError : Error {
  using Error::Error;
};

json labels_json(const SimpleGraph& g, VertexMask m) { return g.labels_of(m); }

MonomialIdeal input_ideal(const Common& c) {
  if (!c.ideal.empty() && !c.graph.empty()) throw UsageError("give either --graph or --ideal");
  if (c.power == 0) throw UsageError("--power must be at least 1");
  if (!c.ideal.empty()) return power(load_ideal(c.ideal), c.power);
  if (c.graph.empty()) throw UsageError("--graph or --ideal is required");
  return power(edge_ideal(load_graph(c.graph)), c.power);
}

FieldSpec field_of(const Common& c) {
  FieldSpec f{c.characteristic};
  validate(f);
  return f;
}

BettiOptions betti_options(const Common& c) {
  BettiOptions o;
  o.jobs = resolve_jobs(c.jobs);
  return o;
}

void emit(const json& j, const std::string& text, bool pretty) {
  if (pretty) std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

int cmd_reg(const Common& c) {
  const MonomialIdeal i = input_ideal(c);
  const FieldSpec f = field_of(c);
  const int reg = regularity(i, f, betti_options(c));
  json j;
  j["regularity"] = reg;
  emit(j, "reg = " + std::to_string(reg) + " over " + f.str() + "\n", c.pretty);
  return 0;
}

int cmd_betti(const Common& c) {
  const MonomialIdeal i = input_ideal(c);
  const FieldSpec f = field_of(c);
  const BettiTable t = betti_table(i, f, betti_options(c));
  json j;
  j["field"] = f.str();
  j["regularity"] = t.regularity();
  j["projective_dimension"] = t.projective_dimension();
  auto& e = j["betti"] = json::array();
  for (const auto& [ij, b] : t.entries) e.push_back({{"i", ij.first}, {"j", ij.second}, {"value", b}});
  emit(j, t.str(), c.pretty);
  return 0;
}

json lemma_json(const LemmaReport& r) {
  json out = json::array();
  for (const auto& cl : r.clauses) {
    json o;
    o["clause"] = cl.name;
    o["applicable"] = cl.applicable;
    if (cl.applicable) o["pass"] = cl.pass;
    if (!cl.detail.empty()) o["detail"] = cl.detail;
    out.push_back(std::move(o));
  }
  return out;
}

json classification_json(const SimpleGraph& g) {
  json j;
  if (!is_connected(g)) {
    j["status"] = "disconnected";
    return j;
  }
  const auto res = classify_gap_diamond_free(g);
  j["status"] = to_string(res.status);
  if (res.status == ClassificationStatus::Classified) {
    j["base"] = res.base;
    j["multiplicities"] = res.multiplicities;
    j["witness"] = res.witness;
  }
  if (!res.detail.empty()) j["detail"] = res.detail;
  return j;
}

int cmd_analyze(const Common& c) {
  const SimpleGraph g = load_graph(c.graph);
  const FieldSpec f = field_of(c);
  json j;
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  j["connected"] = g.size() > 0 && is_connected(g);
  j["gap_free"] = is_gap_free(g);
  j["diamond_free"] = is_diamond_free(g);
  j["cricket_free"] = !contains_induced(g, Pattern::cricket()).has_value();
  j["induced_c5"] = contains_induced(g, Pattern::cycle(5)).has_value();
  j["chordal"] = is_chordal(g).chordal;
  j["complement_chordal"] = is_chordal(complement(g)).chordal;
  j["bipartite"] = is_bipartite(g).bipartite;
  j["clique_number"] = clique_number(g);
  bool isolated = false;
  for (int v = 0; v < g.size(); ++v) isolated = isolated || g.degree(v) == 0;
  if (j["gap_free"] && !isolated && clique_number(g) >= 3) {
    auto k = dominating_clique(g);
    j["dominating_clique"] = k ? labels_json(g, *k) : json(nullptr);
  }
  j["regularity"] = edge_ideal_regularity(g, f, betti_options(c));
  j["star_bound"] = reg_upper_bound_via_star(g).bound;
  j["classification"] = classification_json(g);
  j["lemmas"] = lemma_json(check_structure_lemmas(g));
  const auto c5 = check_computer_aided_lemma(g);
  if (c5.applicable) {
    json o;
    o["pairs"] = c5.cases.size();
    o["pass"] = c5.pass();
    j["c5_edge"] = o;
  }
  std::string text;
  for (const auto& [k, v] : j.items())
    if (!v.is_array() && !v.is_object()) text += k + ": " + v.dump() + "\n";
  text += "classification: " + j["classification"].dump() + "\n";
  for (const auto& cl : j["lemmas"]) text += "lemma " + cl.dump() + "\n";
  emit(j, text, c.pretty);
  return 0;
}

int cmd_colon_graph(const Common& c, const std::string& edges) {
  const SimpleGraph g = load_graph(c.graph);
  const SFoldProduct m = SFoldProduct::parse(g, edges);
  const ColonGraph cg = colon_graph(g, m);
  json j;
  j["product"] = m.str(g);
  j["graph"] = json::parse(format_graph_json(cg.graph));
  auto& ne = j["new_edges"] = json::array();
  for (auto [u, v] : cg.new_edges) ne.push_back({g.label(u), g.label(v)});
  auto& sq = j["squares"] = json::array();
  for (int u : cg.squares) sq.push_back(g.label(u));
  auto& w = j["witnesses"] = json::array();
  for (const auto& [e, conn] : cg.witnesses)
    w.push_back({{"pair", {g.label(e.first), g.label(e.second)}}, {"connection", conn.str(g)}});
  if (cg.graph.edge_count() > 0) j["regularity"] = edge_ideal_regularity(cg.graph, field_of(c));
  std::string text = format_graph_text(cg.graph, "colon graph of " + m.str(g));
  text += "# report " + json{{"new_edges", j["new_edges"]}, {"squares", j["squares"]}}.dump() + "\n";
  if (c.pretty) std::cout << text;
  else std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_classify(const Common& c) {
  const SimpleGraph g = load_graph(c.graph);
  if (!is_connected(g)) throw UsageError("classification needs a connected graph");
  const json j = classification_json(g);
  std::string text = "status: " + j["status"].get<std::string>() + "\n";
  if (j.contains("base")) text += "base: " + j["base"].get<std::string>() + "\n";
  if (j.contains("multiplicities"))
    for (const auto& [v, k] : j["multiplicities"].items())
      if (k.get<int>() > 1) text += "  " + v + " x" + k.dump() + "\n";
  emit(j, text, c.pretty);
  return 0;
}

int cmd_catalog_list(const Common& c) {
  json j = json::array();
  std::string text;
  for (const auto& n : catalog::names()) {
    const auto e = catalog::entry(n);
    json o;
    o["name"] = n;
    o["vertices"] = e.graph.size();
    o["edges"] = e.graph.edge_count();
    o["gap_free"] = e.metadata.gap_free;
    o["diamond_free"] = e.metadata.diamond_free;
    o["induced_c5"] = e.metadata.has_induced_c5;
    if (!e.metadata.isomorphic_to.empty()) o["isomorphic_to"] = e.metadata.isomorphic_to;
    text += n + "  " + std::to_string(e.graph.size()) + " vertices, " +
            std::to_string(e.graph.edge_count()) + " edges" +
            (e.metadata.gap_free ? "" : ", has a gap") +
            (e.metadata.isomorphic_to.empty() ? "" : ", isomorphic to " + e.metadata.isomorphic_to) +
            "\n";
    j.push_back(std::move(o));
  }
  emit(j, text, c.pretty);
  return 0;
}

int cmd_catalog_show(const std::string& name, bool as_json) {
  const auto e = catalog::entry(name);
  if (as_json) std::cout << format_graph_json(e.graph) << "\n";
  else std::cout << format_graph_text(e.graph, e.name);
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite, double timeout, bool timings) {
  SuiteOptions o;
  o.jobs = c.jobs;
  o.timeout_secs = timeout;
  if (c.characteristic != 0) o.characteristics = {0, static_cast<unsigned>(c.characteristic)};
  const SuiteReport r = run_suite(suite, o);
  std::cout << (c.pretty ? r.pretty(timings) : r.json(timings));
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of edge ideals and their powers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  Common c;
  auto add_common = [&c](CLI::App* sub, bool graph, bool power) {
    if (graph) sub->add_option("--graph", c.graph, "graph file, catalog:NAME or NAME");
    if (power) {
      sub->add_option("--ideal", c.ideal, "monomial ideal file, one generator per line");
      sub->add_option("--power", c.power, "power s of the ideal")->capture_default_str();
    }
    sub->add_option("--char", c.characteristic, "field characteristic (0 or a prime)")
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads (default: REGULAB_JOBS or 1)");
    sub->add_flag("--pretty", c.pretty, "human-readable output");
  };

  auto* analyze = app.add_subcommand("analyze", "graph predicates, regularity and lemma report");
  add_common(analyze, true, false);
  analyze->add_option("GRAPH", c.graph, "graph (same as --graph)");
  auto* reg = app.add_subcommand("reg", "regularity of I(G)^s or of a monomial ideal");
  add_common(reg, true, true);
  auto* betti = app.add_subcommand("betti", "graded Betti table of I(G)^s or of a monomial ideal");
  add_common(betti, true, true);
  std::string edges;
  auto* colon = app.add_subcommand("colon-graph", "graph of (I^{s+1} : e_1...e_s), polarized");
  add_common(colon, true, false);
  colon->add_option("--edges", edges, "edge product, e.g. \"u1u2,u2u3\"")->required();
  auto* classify = app.add_subcommand("classify", "base graph and multiplicities");
  add_common(classify, true, false);
  classify->add_option("GRAPH", c.graph, "graph (same as --graph)");

  auto* cat = app.add_subcommand("catalog", "named graphs");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list the named graphs");
  cat_list->add_flag("--pretty", c.pretty, "human-readable output");
  std::string show_name;
  bool show_json = false;
  auto* cat_show = cat->add_subcommand("show", "print a catalog graph");
  cat_show->add_option("name", show_name, "G_0..G_10, C_n, C_n^c, K_n, P_n, 2K2")->required();
  cat_show->add_flag("--json", show_json, "JSON instead of the text format");

  std::string suite;
  double timeout = 0;
  bool timings = false;
  bool list_suites = false;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify, false, false);
  verify->add_option("--suite", suite, "suite name");
  verify->add_option("--timeout-secs", timeout, "stop starting new cases after T seconds");
  verify->add_flag("--timings", timings, "include wall times (output no longer reproducible)");
  verify->add_flag("--list", list_suites, "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      if (c.graph.empty()) throw UsageError("analyze needs a graph");
      return cmd_analyze(c);
    }
    if (*reg) return cmd_reg(c);
    if (*betti) return cmd_betti(c);
    if (*colon) {
      if (c.graph.empty()) throw UsageError("colon-graph needs --graph");
      return cmd_colon_graph(c, edges);
    }
    if (*classify) {
      if (c.graph.empty()) throw UsageError("classify needs a graph");
      return cmd_classify(c);
    }
    if (*cat_list) return cmd_catalog_list(c);
    if (*cat_show) return cmd_catalog_show(show_name, show_json);
    if (*verify) {
      if (list_suites) {
        for (const auto& s : suite_names()) std::cout << s << "\n";
        return 0;
      }
      if (suite.empty()) throw UsageError("verify needs --suite (see --list)");
      return cmd_verify(c, suite, timeout, timings);
    }
  } catch (const SizeLimitError& e) {
    std::cerr << "regulab: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "regulab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
