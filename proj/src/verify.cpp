#include "regulab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "regulab/betti.hpp"
#include "regulab/catalog.hpp"
#include "regulab/even_connection.hpp"
#include "regulab/parallel.hpp"
#include "regulab/structure.hpp"

namespace regulab {

namespace {

using Clock = std::chrono::steady_clock;

struct Task {
  std::string id;
  std::function<CaseRecord()> run;
};

const BettiOptions kSerial{1, kMaxHochsterVertices};


std::string edge_list(const SimpleGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += g.label(u) + g.label(v);
  }
  return out.empty() ? "-" : out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

std::string percent(std::size_t num, std::size_t den) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << (den ? 100.0 * num / den : 100.0) << "%";
  return os.str();
}

/// "G_3[u_4x2]" for a multiplication of a catalog graph, from the "v^k" labels.
std::string member_name(const std::string& base, const SimpleGraph& g) {
  std::map<std::string, int> copies;
  for (const auto& l : g.labels())
    if (auto hat = l.rfind('^'); hat != std::string::npos) ++copies[l.substr(0, hat)];
  std::vector<std::string> parts;
  for (const auto& [v, k] : copies) parts.push_back(v + "x" + std::to_string(k));
  return parts.empty() ? base : base + "[" + join(parts, ",") + "]";
}

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

/// Proper multiplications (multiplicity <= 2, gap- and diamond-free), spread
/// evenly over the concatenated families of `bases`.
std::vector<NamedGraph> family_members(const std::vector<std::string>& bases, std::size_t count) {
  std::vector<NamedGraph> all;
  for (const auto& b : bases) {
    const SimpleGraph base = catalog::get(b);
    for (auto& g : catalog::enumerate_family(b, 2, catalog::FamilyFilter::GapAndDiamondFree))
      if (g.size() > base.size()) all.push_back({member_name(b, g), std::move(g)});
  }
  if (all.size() <= count) return all;
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[i * all.size() / count]);
  return out;
}

std::vector<NamedGraph> named_catalog(const std::vector<std::string>& names) {
  std::vector<NamedGraph> out;
  for (const auto& n : names) out.push_back({n, catalog::get(n)});
  return out;
}

std::vector<std::string> family_1_to_9() {
  return {"G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9"};
}

std::vector<std::string> gap_diamond_free_bases() {
  return {"G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"};
}

/// Every labelled graph on n vertices v1..vn with at least one edge.
std::vector<SimpleGraph> all_graphs(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) edges.push_back(pairs[k]);
    out.emplace_back(labels, edges);
  }
  return out;
}

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng, bool need_edge = true) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    if (!need_edge || !edges.empty()) return SimpleGraph(labels, edges);
  }
}

std::vector<SimpleGraph> froberg_samples(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SimpleGraph> out;
  for (int i = 0; i < 500; ++i) out.push_back(random_graph(6, 0.5, rng));
  return out;
}

std::vector<NamedGraph> froberg_inputs(bool with_samples, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : all_graphs(n))
      out.push_back({"n" + std::to_string(n) + ": " + edge_list(g), std::move(g)});
  if (with_samples) {
    auto samples = froberg_samples(seed);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      std::ostringstream id;
      id << "sample-" << std::setw(3) << std::setfill('0') << i << ": " << edge_list(samples[i]);
      out.push_back({id.str(), std::move(samples[i])});
    }
  }
  return out;
}

std::vector<NamedGraph> reg_le_3_inputs() {
  auto out = named_catalog({"C_5", "C_6^c"});
  for (auto& g : named_catalog(gap_diamond_free_bases())) out.push_back(std::move(g));
  for (auto& g : family_members(gap_diamond_free_bases(), 30)) out.push_back(std::move(g));
  return out;
}

const std::vector<std::string> kSquareDirect = {"C_5", "G_1", "G_2", "G_3", "G_10", "G_0"};
const std::vector<std::string> kSquareIndirect = {"G_5", "G_6", "G_7", "G_8", "G_9"};

struct ColonInput {
  std::string id;
  std::string graph;
  std::string generator;  // monomial text
};

const std::vector<ColonInput> kColonValues = {
    {"G_0: (I^2 : y*a_2)", "G_0", "y*a_2"},
    {"G_10: (I^2 : a_0*y)", "G_10", "a_0*y"},
};

MonomialIdeal colon_value_ideal(const ColonInput& c) {
  return colon(power(edge_ideal(catalog::get(c.graph)), 2), parse_monomial(c.generator));
}

// --- suite runner ------------------------------------------------------------

SuiteReport execute(const std::string& name, std::vector<Task> tasks, const SuiteOptions& opts,
                    std::map<std::string, std::string> metadata = {}) {
  SuiteReport rep;
  rep.suite = name;
  rep.metadata = std::move(metadata);
  rep.metadata["tool"] = "regulab";
  rep.metadata["version"] = version();
  if (!rep.metadata.count("field")) rep.metadata["field"] = FieldSpec{}.str();
  rep.metadata["seed"] = std::to_string(opts.seed);
  const auto start = Clock::now();
  const bool limited = opts.timeout_secs > 0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(limited ? opts.timeout_secs : 0));
  rep.records.resize(tasks.size());
  parallel_for(tasks.size(), resolve_jobs(opts.jobs), [&](std::size_t i, int) {
    CaseRecord rec;
    if (limited && Clock::now() >= deadline) {
      rec.skipped = true;
      rec.reason = "timeout before start";
    } else {
      const auto t0 = Clock::now();
      try {
        rec = tasks[i].run();
      } catch (const SizeLimitError& e) {
        rec = CaseRecord{};
        rec.skipped = true;
        rec.reason = e.what();
      }
      rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    rec.id = tasks[i].id;
    if (rec.skipped) {
      rec.pass = false;
      rec.computed = "skipped";
    }
    rep.records[i] = std::move(rec);
  });
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

/// A record passes exactly when the two strings agree.
CaseRecord record(std::string expected, std::string computed, std::string note = {}) {
  CaseRecord r;
  r.pass = expected == computed;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.reason = std::move(note);
  return r;
}

/// `computed` is `expected` when ok holds, otherwise the observed value.
CaseRecord verdict(const std::string& expected, bool ok, const std::string& observed,
                   std::string note = {}) {
  return record(expected, ok ? expected : observed, std::move(note));
}

// --- Fröberg -----------------------------------------------------------------

std::vector<Task> froberg_tasks(bool with_samples, std::uint64_t seed) {
  std::vector<Task> tasks;
  for (auto& in : froberg_inputs(with_samples, seed)) {
    tasks.push_back({in.name, [g = std::move(in.graph)] {
                       const bool chordal = is_chordal(complement(g)).chordal;
                       const int reg = regularity(edge_ideal(g), {}, kSerial);
                       return record(chordal ? "reg 2" : "reg > 2", reg == 2 ? "reg 2" : "reg > 2",
                                     "reg " + std::to_string(reg) +
                                         (chordal ? ", complement chordal"
                                                  : ", complement not chordal"));
                     }});
  }
  return tasks;
}

// --- regularity at most 3 ----------------------------------------------------

std::vector<Task> reg_le_3_tasks() {
  std::vector<Task> tasks;
  tasks.push_back({"K_3", [] {
                     const int reg = regularity(edge_ideal(catalog::get("K_3")), {}, kSerial);
                     return record("reg 2", "reg " + std::to_string(reg));
                   }});
  for (auto& in : reg_le_3_inputs()) {
    tasks.push_back({in.name, [g = in.graph] {
                       const int reg = regularity(edge_ideal(g), {}, kSerial);
                       const std::string got = "reg " + std::to_string(reg);
                       return verdict("reg <= 3", reg <= 3, got, got);
                     }});
    tasks.push_back({"star bound: " + in.name, [g = std::move(in.graph)] {
                       const int reg = regularity(edge_ideal(g), {}, kSerial);
                       const int bound = reg_upper_bound_via_star(g).bound;
                       const std::string got =
                           "reg " + std::to_string(reg) + ", bound " + std::to_string(bound);
                       return verdict("reg <= bound <= 3", reg <= bound && bound <= 3, got, got);
                     }});
  }
  return tasks;
}

// --- powers ------------------------------------------------------------------

CaseRecord power_case(const SimpleGraph& g, unsigned s) {
  const MonomialIdeal p = power(edge_ideal(g), s);
  const int vars = static_cast<int>(polarize(p).ideal.variables().size());
  const int reg = regularity(p, {}, kSerial);
  return record("reg " + std::to_string(2 * s), "reg " + std::to_string(reg),
                std::to_string(vars) + " polarized variables");
}

std::vector<Task> main_theorem_s2_tasks() {
  std::vector<Task> tasks;
  for (const auto& n : kSquareDirect)
    tasks.push_back({n + " (direct)", [n] { return power_case(catalog::get(n), 2); }});
  // The larger squares still fit under the homology size wall, so they are
  // computed directly as well.
  for (const auto& n : kSquareIndirect)
    tasks.push_back({n + " (direct)", [n] { return power_case(catalog::get(n), 2); }});
  for (const auto& n : kSquareIndirect) {
    tasks.push_back({n + " (indirect)", [n] {
                       const SimpleGraph g = catalog::get(n);
                       const int vars = static_cast<int>(
                           polarize(power(edge_ideal(g), 2)).ideal.variables().size());
                       BanerjeeOptions bo;
                       bo.betti = kSerial;
                       const auto rep = banerjee_sufficiency_check(g, 2, bo);
                       return verdict("reg 4 via certified colon hypothesis", rep.certified,
                                      rep.verdict(),
                                      "indirect; reg(I) = " + std::to_string(rep.base_regularity) +
                                          ", " + std::to_string(rep.cases.size()) +
                                          " colons; the square polarizes to " +
                                          std::to_string(vars) + " variables");
                     }});
  }
  return tasks;
}

std::vector<Task> main_theorem_c5_s3_tasks() {
  return {{"C_5 cubed", [] { return power_case(catalog::get("C_5"), 3); }}};
}

std::vector<Task> colon_value_tasks() {
  std::vector<Task> tasks;
  for (const auto& c : kColonValues) {
    tasks.push_back({c.id, [c] {
                       const int reg = regularity(colon_value_ideal(c), {}, kSerial);
                       return record("reg 3", "reg " + std::to_string(reg));
                     }});
    tasks.push_back({c.id + " via colon graph", [c] {
                       const SimpleGraph g = catalog::get(c.graph);
                       const Monomial m = parse_monomial(c.generator);
                       const auto f = edge_factorizations(g, m, 1);
                       const ColonGraph cg = colon_graph(g, SFoldProduct::of(g, f.front()));
                       const int reg = regularity(edge_ideal(cg.graph), {}, kSerial);
                       return record("reg 3", "reg " + std::to_string(reg));
                     }});
  }
  return tasks;
}

// --- Banerjee pipeline ---------------------------------------------------------

struct SpecialFamily {
  std::string base;
  std::set<std::string> special;  // base vertices whose copies mark the special edges
  std::vector<std::map<std::string, int>> members;
};

const std::vector<SpecialFamily> kSpecialFamilies = {
    {"G_0", {"u_1", "y"}, {{}, {{"y", 2}}, {{"u_1", 2}}}},
    {"G_10", {"y"}, {{}, {{"y", 2}}, {{"u_0", 2}}}},
};

std::string base_vertex(const std::string& label) {
  auto hat = label.rfind('^');
  return hat == std::string::npos ? label : label.substr(0, hat);
}

std::vector<NamedGraph> banerjee_main_inputs() {
  auto out = named_catalog(family_1_to_9());
  for (auto& g : family_members(family_1_to_9(), 20)) out.push_back(std::move(g));
  return out;
}

struct SpecialInput {
  NamedGraph graph;
  std::set<std::string> special;
};

std::vector<SpecialInput> banerjee_special_inputs() {
  std::vector<SpecialInput> out;
  for (const auto& fam : kSpecialFamilies) {
    const SimpleGraph base = catalog::get(fam.base);
    for (const auto& mult : fam.members) {
      SimpleGraph g = mult.empty() ? base : multiply_vertices(base, mult);
      out.push_back({{member_name(fam.base, g), std::move(g)}, fam.special});
    }
  }
  return out;
}

std::vector<Task> banerjee_tasks() {
  std::vector<Task> tasks;
  const auto main = banerjee_main_inputs();
  for (const auto& in : main) {
    tasks.push_back({in.name, [g = in.graph] {
                       BanerjeeOptions bo;
                       bo.betti = kSerial;
                       const auto rep = banerjee_sufficiency_check(g, 2, bo);
                       std::size_t fast = 0, two = 0;
                       for (const auto& c : rep.cases) {
                         fast += c.fast_path;
                         two += !c.skipped && c.regularity == 2 && c.ideal_matches;
                       }
                       const std::string got =
                           std::to_string(two) + "/" + std::to_string(rep.cases.size()) +
                           " colons reg 2, " + std::to_string(fast) + " by fast path";
                       return verdict("all colons reg 2",
                                      rep.base_regularity <= 4 && two == rep.cases.size(), got, got);
                     }});
  }
  tasks.push_back({"fast-path share", [main] {
                     std::size_t cases = 0, fast = 0;
                     for (const auto& in : main) {
                       for (unsigned s = 1; s <= 2; ++s) {
                         const auto order = ordered_generators(in.graph, s);
                         for (std::size_t k = 0; k < order.generators.size(); ++k) {
                           const ColonGraph cg = colon_graph(in.graph, order.product(k));
                           ++cases;
                           fast += cg.graph.edge_count() > 0 && froberg_linear_check(cg.graph);
                         }
                       }
                     }
                     const bool ok = fast * 100 >= cases * 95;
                     const std::string got = percent(fast, cases) + " (" + std::to_string(fast) +
                                             "/" + std::to_string(cases) + ")";
                     return verdict(">= 95% of colons settled by the fast path", ok, got, got);
                   }});

  for (const auto& in : banerjee_special_inputs()) {
    for (unsigned s = 1; s <= 2; ++s) {
      auto run = [in, s](bool exact) {
        const SimpleGraph& g = in.graph.graph;
        auto is_special = [&](Edge e) {
          return in.special.count(base_vertex(g.label(e.first))) ||
                 in.special.count(base_vertex(g.label(e.second)));
        };
        BanerjeeOptions bo;
        bo.betti = kSerial;
        const auto rep = banerjee_sufficiency_check(g, s, bo);
        std::vector<std::string> exceptional, inconclusive, stray;
        for (const auto& c : rep.cases) {
          if (c.s != s) continue;
          bool all_special = true;
          for (const auto& f : edge_factorizations(g, c.generator, s))
            all_special = all_special && std::all_of(f.begin(), f.end(), is_special);
          const bool bad = c.skipped || c.regularity > 2;
          const std::string name = c.expression.str(g);
          if (all_special) exceptional.push_back(name);
          if (bad) inconclusive.push_back(name);
          if (bad && !all_special) stray.push_back(name);
        }
        if (!exact)
          return verdict("inconclusive only where every factor is special", stray.empty(),
                         "inconclusive outside: " + join(stray),
                         "inconclusive: " + join(inconclusive));
        std::vector<std::string> conclusive;
        for (const auto& e : exceptional)
          if (std::find(inconclusive.begin(), inconclusive.end(), e) == inconclusive.end())
            conclusive.push_back(e);
        return record("inconclusive at: " + join(exceptional),
                      "inconclusive at: " + join(inconclusive),
                      conclusive.empty() ? std::string{}
                                         : "colon reg 2 although every factor is special: " +
                                               join(conclusive));
      };
      const std::string id = in.graph.name + " s=" + std::to_string(s);
      tasks.push_back({id + " case split", [run] { return run(false); }});
      tasks.push_back({id + " exact", [run] { return run(true); }});
    }
  }
  return tasks;
}

// --- even-connections against colon ideals ------------------------------------

CaseRecord even_connection_case(const SimpleGraph& g) {
  const MonomialIdeal i = edge_ideal(g);
  const int n = g.size();
  std::size_t checks = 0;
  std::vector<std::string> problems;
  for (unsigned s = 1; s <= 2; ++s) {
    const MonomialIdeal next = power(i, s + 1);
    const MonomialIdeal gens = power(i, s);
    for (const auto& m : gens.generators()) {
      const MonomialIdeal c = colon(next, m);
      std::set<std::pair<int, int>> quadrics;
      for (const auto& gen : c.generators()) {
        if (gen.degree() != 2) {
          problems.push_back("degree " + std::to_string(gen.degree()) + " generator " + gen.str());
          continue;
        }
        auto vs = gen.terms();
        const int a = g.index(vs.front().first.label());
        const int b = g.index(vs.back().first.label());
        quadrics.insert({std::min(a, b), std::max(a, b)});
      }
      for (const auto& f : edge_factorizations(g, m, s)) {
        const SFoldProduct prod = SFoldProduct::of(g, f);
        for (int u = 0; u < n; ++u) {
          for (int v = u; v < n; ++v) {
            ++checks;
            const auto w = find_even_connection(g, prod, u, v);
            if (w && !is_even_connection(g, prod, u, v, *w))
              problems.push_back("bad witness " + w->str(g));
            const bool generator = quadrics.count({u, v}) > 0;
            const bool edge = u != v && g.adjacent(u, v);
            if (edge ? !generator : w.has_value() != generator)
              problems.push_back(prod.str(g) + " (" + g.label(u) + "," + g.label(v) + ")");
          }
        }
      }
    }
  }
  const std::size_t count = problems.size();
  if (problems.size() > 5) problems.resize(5);
  return record("0 mismatches", std::to_string(count) + " mismatches",
                std::to_string(checks) + " checks" +
                    (problems.empty() ? std::string{} : "; " + join(problems, "; ")));
}

std::vector<Task> even_connection_tasks(std::uint64_t seed) {
  std::vector<Task> tasks;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : all_graphs(n))
      tasks.push_back({"n" + std::to_string(n) + ": " + edge_list(g),
                       [g] { return even_connection_case(g); }});
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 200; ++k) {
    SimpleGraph g = random_graph(7, 0.4, rng);
    std::ostringstream id;
    id << "random-" << std::setw(3) << std::setfill('0') << k << ": " << edge_list(g);
    tasks.push_back({id.str(), [g] { return even_connection_case(g); }});
  }
  return tasks;
}

// --- ordered colon decomposition ---------------------------------------------

std::vector<Task> ordered_colon_tasks() {
  const std::vector<std::pair<std::string, unsigned>> inputs = {
      {"P_4", 1}, {"C_5", 1}, {"G_1", 1}, {"G_10", 1}, {"P_4", 2}, {"C_5", 2}};
  std::vector<Task> tasks;
  for (const auto& [name, s] : inputs) {
    tasks.push_back({name + " s=" + std::to_string(s), [name = name, s = s] {
                       const SimpleGraph g = catalog::get(name);
                       const auto order = ordered_generators(g, s);
                       const auto reports = verify_ordered_colon_decomposition(g, order);
                       std::vector<std::string> failed;
                       std::size_t vars = 0;
                       for (const auto& r : reports) {
                         if (!r.holds) failed.push_back("l=" + std::to_string(r.ell));
                         vars += r.variables.size();
                       }
                       return verdict(
                           "identity for l = 1.." + std::to_string(order.generators.size() - 1),
                           failed.empty(), "fails at " + join(failed),
                           std::to_string(reports.size()) + " values of l, " +
                               std::to_string(vars) + " added variables in total");
                     }});
  }
  return tasks;
}

// --- structural lemmas -------------------------------------------------------

std::string failing_clauses(const LemmaReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.clauses)
    if (c.applicable && !c.pass) out.push_back(c.name + ": " + c.detail);
  return join(out, "; ");
}

CaseRecord c5_edge_case(const SimpleGraph& g) {
  const auto rep = check_computer_aided_lemma(g);
  std::size_t tri = 0, cross = 0, none = 0;
  for (const auto& c : rep.cases) {
    if (c.clause == "dominating-triangle") ++tri;
    else if (c.clause == "cross-neighbours") ++cross;
    else ++none;
  }
  const std::string got = std::to_string(rep.cases.size()) + " pairs: " + std::to_string(tri) +
                          " dominating-triangle, " + std::to_string(cross) +
                          " cross-neighbours, " + std::to_string(none) + " uncovered";
  return verdict("every (C_5, edge) pair covered", rep.applicable && rep.pass(),
                 rep.applicable ? got : "not applicable", got);
}

std::vector<Task> c5_edge_tasks() {
  std::vector<Task> tasks;
  for (auto& in : banerjee_main_inputs())
    tasks.push_back({"c5-edge: " + in.name, [g = std::move(in.graph)] { return c5_edge_case(g); }});
  return tasks;
}

CaseRecord colon_lemma_case(const SimpleGraph& g) {
  std::size_t colons = 0, applications = 0, triangle_colons = 0;
  std::vector<std::string> problems;
  for (unsigned s = 1; s <= 2; ++s) {
    const auto order = ordered_generators(g, s);
    for (std::size_t k = 0; k < order.generators.size(); ++k) {
      const ColonGraph cg = colon_graph(g, order.product(k));
      ++colons;
      bool triangle = false;
      for (const auto& f : edge_factorizations(g, order.generators[k], s)) {
        const auto rep = check_colon_graph_lemmas(g, SFoldProduct::of(g, f), cg);
        for (const auto& c : rep.clauses) {
          applications += c.applicable;
          triangle = triangle || (c.applicable && c.name == "dominating-triangle-linear");
        }
        if (!rep.pass()) problems.push_back(SFoldProduct::of(g, f).str(g) + ": " + failing_clauses(rep));
      }
      triangle_colons += triangle;
    }
  }
  const std::size_t count = problems.size();
  if (problems.size() > 5) problems.resize(5);
  const std::string summary = std::to_string(colons) + " colon graphs (" +
                              std::to_string(triangle_colons) + " by dominating-triangle edges), " +
                              std::to_string(applications) + " clause applications";
  return verdict("all applicable clauses hold", problems.empty(),
                 std::to_string(count) + " failures", summary +
                     (problems.empty() ? std::string{} : "; " + join(problems, "; ")));
}

SimpleGraph random_gap_free_bipartite(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(2, 8);
  for (;;) {
    const int n = size(rng);
    std::bernoulli_distribution side(0.5), coin(0.6);
    std::vector<bool> left(n);
    for (int i = 0; i < n; ++i) left[i] = side(rng);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (left[i] != left[j] && coin(rng)) edges.emplace_back(i, j);
    if (edges.empty()) continue;
    SimpleGraph g(labels, edges);
    if (is_gap_free(g)) return g;
  }
}

std::vector<Task> structure_tasks(std::uint64_t seed) {
  std::vector<Task> tasks;
  for (const auto& n : family_1_to_9()) {
    tasks.push_back({"dominating clique: " + n, [n] {
                       const SimpleGraph g = catalog::get(n);
                       const auto rep = check_structure_lemmas(g);
                       bool applied = false;
                       for (const auto& c : rep.clauses)
                         if (c.name == "dominating-clique-unique-neighbour") applied = c.applicable;
                       return verdict("unique attachments, independent neighbourhoods",
                                      applied && rep.pass(),
                                      applied ? failing_clauses(rep) : "not applicable",
                                      rep.clauses.front().detail);
                     }});
  }
  tasks.push_back({"complement of C_6", [] {
                     const auto rep = check_structure_lemmas(catalog::get("C_6^c"));
                     std::string detail;
                     bool ok = false;
                     for (const auto& c : rep.clauses)
                       if (c.name == "c6-complement-dichotomy") {
                         detail = c.detail;
                         ok = c.applicable && c.pass && c.detail == "graph is the complement of C6";
                       }
                     return verdict("graph is the complement of C6", ok,
                                    detail.empty() ? "clause missing" : detail);
                   }});
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 100; ++k) {
    SimpleGraph g = random_gap_free_bipartite(rng);
    std::ostringstream id;
    id << "bipartite-" << std::setw(3) << std::setfill('0') << k << ": " << edge_list(g);
    tasks.push_back({id.str(), [g] {
                       const auto rep = check_structure_lemmas(g);
                       for (const auto& c : rep.clauses)
                         if (c.name == "bipartite-complement-chordal")
                           return verdict("complement chordal", c.applicable && c.pass,
                                          c.applicable ? c.detail : "not applicable");
                       return record("complement chordal", "clause missing");
                     }});
  }
  for (auto& in : banerjee_main_inputs())
    tasks.push_back({"colon graphs: " + in.name, [g = in.graph] { return colon_lemma_case(g); }});
  for (auto& in : banerjee_special_inputs())
    tasks.push_back(
        {"colon graphs: " + in.graph.name, [g = in.graph.graph] { return colon_lemma_case(g); }});
  for (auto& t : c5_edge_tasks()) tasks.push_back(std::move(t));
  return tasks;
}

// --- classification round trip ------------------------------------------------

CaseRecord classification_case(const std::string& base_name, const std::map<std::string, int>& mult,
                               const SimpleGraph& input) {
  const SimpleGraph base = catalog::get(base_name);
  std::string expected = base_name;
  for (const auto& [v, k] : mult)
    if (k > 1) expected += " " + v + "x" + std::to_string(k);
  const auto res = classify_gap_diamond_free(input);
  std::string computed = to_string(res.status);
  bool ok = false;
  if (res.status == ClassificationStatus::Classified) {
    computed = "classified as " + res.base;
    for (const auto& [v, k] : res.multiplicities)
      if (k > 1) computed += " " + v + "x" + std::to_string(k);
    const SimpleGraph got = catalog::get(res.base);
    std::vector<int> want(base.size());
    for (int v = 0; v < base.size(); ++v) {
      auto it = mult.find(base.label(v));
      want[v] = it == mult.end() ? 1 : it->second;
    }
    // The multiplicity maps agree up to an isomorphism between the bases.
    for_each_isomorphism(base, got, [&](const std::vector<int>& phi) {
      bool same = true;
      for (int v = 0; v < base.size() && same; ++v)
        same = res.multiplicities.at(got.label(phi[v])) == want[v];
      ok = ok || same;
      return !ok;
    });
    ok = ok && find_isomorphism(multiply_vertices(got, res.multiplicities), input).has_value();
  }
  // Drawings of distinct names can give isomorphic bases, so the comparison is
  // up to an isomorphism of bases carrying the multiplicities.
  return verdict(expected + " (up to base isomorphism)", ok, computed, computed);
}

SimpleGraph relabel_randomly(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.size());
  for (int i = 0; i < g.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(g.size());
  for (int i = 0; i < g.size(); ++i) labels[perm[i]] = "x" + std::to_string(perm[i] + 1);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return SimpleGraph(labels, edges);
}

std::vector<Task> classification_tasks(std::uint64_t seed) {
  std::vector<Task> tasks;
  std::mt19937_64 rng(seed);
  const auto bases = catalog::classification_bases();
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int k = 0; k < 100; ++k) {
    const std::string b = bases[pick(rng)];
    const SimpleGraph base = catalog::get(b);
    VertexMask in_triangle = 0;
    for (auto t : triangles(base)) in_triangle |= t;
    std::map<std::string, int> m;
    for (int v = 0; v < base.size(); ++v)
      if (!(in_triangle & bit(v))) m[base.label(v)] = mult(rng);
    SimpleGraph input = relabel_randomly(multiply_vertices(base, m), rng);
    std::ostringstream id;
    id << "sample-" << std::setw(3) << std::setfill('0') << k << ": " << b;
    tasks.push_back({id.str(), [b, m, input] { return classification_case(b, m, input); }});
  }
  tasks.push_back({"G_4", [] {
                     const auto res = classify_gap_diamond_free(catalog::get("G_4"));
                     return record(to_string(ClassificationStatus::NotGapDiamondFree),
                                   to_string(res.status));
                   }});
  return tasks;
}

// --- field robustness --------------------------------------------------------

struct IdealInput {
  std::string id;
  std::function<MonomialIdeal()> make;
};

std::vector<IdealInput> robustness_inputs(std::uint64_t seed) {
  std::vector<IdealInput> out;
  for (auto& in : froberg_inputs(true, seed))
    out.push_back({"criterion 1: " + in.name, [g = in.graph] { return edge_ideal(g); }});
  out.push_back({"criterion 2: K_3", [] { return edge_ideal(catalog::get("K_3")); }});
  for (auto& in : reg_le_3_inputs())
    out.push_back({"criterion 2: " + in.name, [g = in.graph] { return edge_ideal(g); }});
  for (const auto& n : kSquareDirect)
    out.push_back({"criterion 3: " + n + " squared",
                   [n] { return power(edge_ideal(catalog::get(n)), 2); }});
  out.push_back({"criterion 3: C_5 cubed", [] { return power(edge_ideal(catalog::get("C_5")), 3); }});
  for (const auto& c : kColonValues)
    out.push_back({"criterion 4: " + c.id, [c] { return colon_value_ideal(c); }});
  return out;
}

std::vector<Task> field_tasks(const SuiteOptions& opts) {
  std::vector<unsigned> chars = opts.characteristics;
  if (chars.empty()) chars = {0, 2, 3};
  for (unsigned p : chars) validate(FieldSpec{static_cast<int>(p)});
  std::vector<Task> tasks;
  for (auto& in : robustness_inputs(opts.seed)) {
    tasks.push_back({in.id, [make = in.make, chars] {
                       const MonomialIdeal i = make();
                       std::vector<BettiTable> tables;
                       for (unsigned p : chars)
                         tables.push_back(betti_table(i, FieldSpec{static_cast<int>(p)}, kSerial));
                       std::vector<std::string> diverging;
                       for (std::size_t k = 1; k < tables.size(); ++k)
                         if (!(tables[k] == tables[0])) diverging.push_back(tables[k].field.str());
                       std::vector<std::string> fields;
                       for (const auto& t : tables) fields.push_back(t.field.str());
                       return verdict("identical over " + join(fields), diverging.empty(),
                                      "differs over " + join(diverging) + " from " +
                                          tables[0].field.str(),
                                      "reg " + std::to_string(tables[0].regularity()));
                     }});
  }
  return tasks;
}

const std::vector<std::string> kSuites = {
    "froberg-n5",      "froberg",          "reg-le-3",        "main-theorem-s2",
    "main-theorem-c5-s3", "colon-values",  "banerjee-sufficiency", "even-connection-oracle",
    "ordered-colon",   "structure-lemmas", "c5-edge-lemma",   "classification",
    "field-robustness"};

}  // namespace

const char* version() { return "0.1.0"; }

SuiteSummary SuiteReport::summary() const {
  SuiteSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    if (r.skipped) ++s.skipped;
    else if (r.pass) ++s.passed;
    else ++s.failed;
  }
  return s;
}

bool SuiteReport::pass() const {
  auto s = summary();
  return s.failed == 0 && s.skipped == 0;
}

std::string SuiteReport::json(bool timings) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["pass"] = pass();
  const auto s = summary();
  j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed},
                  {"skipped", s.skipped}};
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  j["metadata"] = meta;
  if (timings) j["seconds"] = seconds;
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["expected"] = r.expected;
    o["computed"] = r.computed;
    o["pass"] = r.pass;
    if (r.skipped) o["skipped"] = true;
    if (!r.reason.empty()) o["note"] = r.reason;
    if (timings) o["seconds"] = r.seconds;
    recs.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::string SuiteReport::pretty(bool timings) const {
  std::size_t wid = 2;
  for (const auto& r : records) wid = std::max(wid, std::min<std::size_t>(r.id.size(), 48));
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const auto& r : records) {
    std::string id = r.id.size() > 48 ? r.id.substr(0, 45) + "..." : r.id;
    os << (r.skipped ? "SKIP" : r.pass ? "ok  " : "FAIL") << "  " << std::left
       << std::setw(static_cast<int>(wid)) << id << "  " << r.computed;
    if (!r.pass) os << "  (expected " << r.expected << ")";
    if (!r.reason.empty()) os << "  [" << r.reason << "]";
    if (timings) os << "  " << std::fixed << std::setprecision(3) << r.seconds << "s";
    os << "\n";
  }
  const auto s = summary();
  os << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped of "
     << s.total;
  if (timings) os << " in " << std::fixed << std::setprecision(2) << seconds << "s";
  os << "\n";
  return os.str();
}

std::vector<std::string> suite_names() { return kSuites; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  std::vector<Task> tasks;
  std::map<std::string, std::string> meta;
  if (name == "froberg-n5") tasks = froberg_tasks(false, opts.seed);
  else if (name == "froberg") tasks = froberg_tasks(true, opts.seed);
  else if (name == "reg-le-3") tasks = reg_le_3_tasks();
  else if (name == "main-theorem-s2") tasks = main_theorem_s2_tasks();
  else if (name == "main-theorem-c5-s3") tasks = main_theorem_c5_s3_tasks();
  else if (name == "colon-values") tasks = colon_value_tasks();
  else if (name == "banerjee-sufficiency") tasks = banerjee_tasks();
  else if (name == "even-connection-oracle") tasks = even_connection_tasks(opts.seed);
  else if (name == "ordered-colon") tasks = ordered_colon_tasks();
  else if (name == "structure-lemmas") tasks = structure_tasks(opts.seed);
  else if (name == "c5-edge-lemma") tasks = c5_edge_tasks();
  else if (name == "classification") tasks = classification_tasks(opts.seed);
  else if (name == "field-robustness") {
    tasks = field_tasks(opts);
    std::vector<std::string> f;
    for (unsigned p : opts.characteristics.empty() ? std::vector<unsigned>{0, 2, 3}
                                                   : opts.characteristics)
      f.push_back(FieldSpec{static_cast<int>(p)}.str());
    meta["field"] = join(f);
  } else {
    throw Error("unknown suite '" + name + "' (known: " + join(kSuites) + ")");
  }
  return execute(name, std::move(tasks), opts, std::move(meta));
}

}  // namespace regulab
