#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "regulab/catalog.hpp"
#include "regulab/structure.hpp"

using namespace regulab;

namespace {

const ClauseCheck& clause(const LemmaReport& r, const std::string& name) {
  for (auto& c : r.clauses)
    if (c.name == name) return c;
  throw std::runtime_error("missing clause " + name);
}

std::map<std::string, int> nontrivial(const std::map<std::string, int>& m) {
  std::map<std::string, int> out;
  for (auto& [k, v] : m)
    if (v > 1) out[k] = v;
  return out;
}

}  // namespace

TEST_CASE("dominating cliques") {
  auto g1 = catalog::get("G_1");
  auto d = dominating_clique(g1);
  REQUIRE(d.has_value());
  CHECK(*d == g1.mask_of({"a_0", "u_2", "u_3"}));
  // every outside vertex sees exactly one clique vertex
  for (int v = 0; v < g1.size(); ++v)
    if (!(*d & bit(v))) CHECK(popcount(g1.neighbors(v) & *d) == 1);

  auto k3 = catalog::get("K_3");
  CHECK(dominating_clique(k3) == k3.all());
  CHECK_THROWS_AS(dominating_clique(catalog::get("C_5")), Error);
  auto c5 = catalog::get("C_5");
  CHECK_FALSE(is_dominating(c5, c5.mask_of({"u1", "u2"})));

  for (const auto& name : catalog::classification_bases()) {
    auto g = catalog::get(name);
    if (clique_number(g) < 3) continue;
    auto c = dominating_clique(g);
    REQUIRE(c.has_value());
    for (int v = 0; v < g.size(); ++v)
      if (!(*c & bit(v))) CHECK((g.neighbors(v) & *c) != 0);
  }
}

TEST_CASE("structure lemma reports") {
  auto g7 = check_structure_lemmas(catalog::get("G_7"));
  CHECK(g7.pass());
  CHECK(clause(g7, "dominating-clique-unique-neighbour").applicable);
  CHECK(clause(g7, "triangle-neighbourhoods-independent").applicable);

  auto c6c = check_structure_lemmas(catalog::get("C_6^c"));
  CHECK(c6c.pass());
  CHECK(clause(c6c, "c6-complement-dichotomy").applicable);

  std::mt19937_64 rng(59);
  int tested = 0;
  while (tested < 40) {
    std::uniform_int_distribution<int> size(2, 8);
    const int n = size(rng);
    std::bernoulli_distribution side(0.5), coin(0.6);
    std::vector<bool> left(n);
    for (int v = 0; v < n; ++v) left[v] = side(rng);
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (left[a] != left[b] && coin(rng)) e.emplace_back(a, b);
    SimpleGraph g(oracle::vlabels(n), e);
    if (!oracle::gap_free(g)) continue;
    ++tested;
    REQUIRE(oracle::chordal(complement(g)));
    auto r = check_structure_lemmas(g);
    REQUIRE(r.pass());
    REQUIRE(clause(r, "bipartite-complement-chordal").applicable);
  }
}

TEST_CASE("five-cycle recognizer") {
  auto c5 = catalog::get("C_5");
  auto m = c5_multiplication_recognizer(multiply_vertices(c5, std::map<std::string, int>{{"u2", 4}}));
  REQUIRE(m.has_value());
  int total = 0;
  for (auto& [v, k] : *m) total += k;
  CHECK(total == 8);
  CHECK(nontrivial(*m).size() == 1);
  auto plain = c5_multiplication_recognizer(c5);
  REQUIRE(plain.has_value());
  CHECK(nontrivial(*plain).empty());

  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> k(1, 3);
  for (int t = 0; t < 30; ++t) {
    std::map<std::string, int> plan;
    for (auto& l : c5.labels()) plan[l] = k(rng);
    auto g = multiply_vertices(c5, plan);
    auto r = c5_multiplication_recognizer(g);
    REQUIRE(r.has_value());
    REQUIRE(oracle::isomorphic(multiply_vertices(c5, *r), g));
  }
}

TEST_CASE("classification") {
  auto g0 = classify_gap_diamond_free(catalog::get("G_0"));
  CHECK(g0.status == ClassificationStatus::Classified);
  CHECK(g0.base == "G_0");
  CHECK(nontrivial(g0.multiplicities).empty());

  auto g10 = classify_gap_diamond_free(
      multiply_vertices(catalog::get("G_10"), std::map<std::string, int>{{"y", 2}}));
  CHECK(g10.status == ClassificationStatus::Classified);
  CHECK(g10.base == "G_10");
  CHECK(nontrivial(g10.multiplicities) == std::map<std::string, int>{{"y", 2}});

  CHECK(classify_gap_diamond_free(catalog::get("G_4")).status ==
        ClassificationStatus::NotGapDiamondFree);
  CHECK(classify_gap_diamond_free(catalog::get("C_4")).status == ClassificationStatus::NoInducedC5);
  CHECK_THROWS_AS(classify_gap_diamond_free(catalog::get("2K2")), Error);

  // drawings that coincide up to isomorphism land on the first base
  CHECK(classify_gap_diamond_free(catalog::get("G_8")).base == "G_6");

  for (const auto& name : catalog::classification_bases()) {
    for (auto& g : catalog::enumerate_family(name, 2, catalog::FamilyFilter::GapAndDiamondFree)) {
      auto r = classify_gap_diamond_free(g);
      REQUIRE(r.status == ClassificationStatus::Classified);
      auto base = catalog::get(r.base);
      REQUIRE(oracle::isomorphic(multiply_vertices(base, r.multiplicities), g));
      VertexMask covered = 0;
      for (auto t : triangles(base)) covered |= t;
      for (auto& [v, k] : r.multiplicities)
        if (k > 1) REQUIRE((covered & bit(base.index(v))) == 0);
    }
  }
}

TEST_CASE("colon graph lemmas") {
  for (const auto& name : {"G_1", "G_3", "G_10", "G_0"}) {
    auto g = catalog::get(name);
    const MonomialIdeal gens = power(edge_ideal(g), 2);
    for (const auto& gen : gens.generators())
      for (auto& f : edge_factorizations(g, gen, 2)) {
        auto m = SFoldProduct::of(g, f);
        auto col = colon_graph(g, m);
        auto r = check_colon_graph_lemmas(g, m, col);
        REQUIRE(r.pass());
        // anticycles found by the checker are genuine
        for (auto& a : induced_anticycles(col.graph)) {
          REQUIRE(oracle::induces_cycle(complement(col.graph), a));
          REQUIRE(a.size() < 6);
        }
      }
  }
  auto c6c = catalog::get("C_6^c");
  CHECK(induced_anticycles(c6c, 6).size() == 1);
  CHECK(induced_anticycles(catalog::get("C_5")).size() == 1);
}

TEST_CASE("dominating-triangle colons are linear") {
  for (const auto& name : {"G_1", "G_2", "G_3", "G_5", "G_9"}) {
    auto g = catalog::get(name);
    auto d = dominating_clique(g);
    REQUIRE(d.has_value());
    auto tri = oracle::members(*d);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        for (auto e : g.edges()) {
          auto m = SFoldProduct::of(g, {{tri[a], tri[b]}, e});
          auto col = colon_graph(g, m);
          REQUIRE(oracle::chordal(complement(col.graph)));
          for (auto& c : induced_cycles(col.graph, 5)) {
            int hits = 0;
            for (int v : c) hits += (*d >> v) & 1;
            REQUIRE(hits >= 2);
          }
        }
  }
}

TEST_CASE("edge lemma for five-cycles") {
  auto g3 = catalog::get("G_3");
  auto r3 = check_computer_aided_lemma(g3);
  CHECK(r3.pass());
  auto cyc = g3.mask_of({"b_0", "u_1", "u_2", "u_3", "u_4"});
  for (auto& c : r3.cases) {
    VertexMask m = 0;
    for (int v : c.cycle) m |= bit(v);
    CHECK(m != cyc);
  }

  auto g3m = multiply_vertices(g3, std::map<std::string, int>{{"u_4", 2}});
  auto r = check_computer_aided_lemma(g3m);
  CHECK(r.pass());
  bool seen = false;
  auto target = g3m.mask_of({"b_0", "u_1", "u_2", "u_3", "u_4^1"});
  const Edge e{std::min(g3m.index("u_0"), g3m.index("u_4^2")),
               std::max(g3m.index("u_0"), g3m.index("u_4^2"))};
  for (auto& c : r.cases) {
    VertexMask m = 0;
    for (int v : c.cycle) m |= bit(v);
    if (m != target || c.edge != e) continue;
    seen = true;
    CHECK(c.clause == "cross-neighbours");
    std::set<std::string> uv{g3m.label(c.u), g3m.label(c.v)};
    CHECK(uv == std::set<std::string>{"u_1", "u_3"});
  }
  CHECK(seen);

  auto g9 = catalog::get("G_9");
  auto r9 = check_computer_aided_lemma(g9);
  CHECK(r9.pass());
  const Edge ba{std::min(g9.index("b_0"), g9.index("a_0")), std::max(g9.index("b_0"), g9.index("a_0"))};
  bool hit = false;
  for (auto& c : r9.cases) {
    VertexMask m = 0;
    for (int v : c.cycle) m |= bit(v);
    auto need = g9.mask_of({"u_1", "u_2", "u_4"});
    if (c.edge != ba || (m & need) != need || c.clause != "cross-neighbours") continue;
    std::set<std::string> uv{g9.label(c.u), g9.label(c.v)};
    if (uv == std::set<std::string>{"u_2", "u_4"}) hit = true;
  }
  CHECK(hit);

  for (const auto& name : {"G_1", "G_2", "G_5", "G_6"}) CHECK(check_computer_aided_lemma(catalog::get(name)).pass());
}

TEST_CASE("sufficiency check") {
  auto g1 = banerjee_sufficiency_check(catalog::get("G_1"), 2);
  CHECK(g1.certified);
  for (auto& c : g1.cases) CHECK(c.regularity == 2);

  auto g0 = banerjee_sufficiency_check(catalog::get("G_0"), 1);
  CHECK_FALSE(g0.certified);
  bool found = false;
  for (auto i : g0.offending)
    if (g0.cases[i].generator == parse_monomial("y*a_2")) {
      found = true;
      CHECK(g0.cases[i].regularity == 3);
    }
  CHECK(found);

  auto one = banerjee_sufficiency_check(catalog::get("P_2"), 2);
  CHECK(one.certified);
}
