#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "regulab/catalog.hpp"
#include "regulab/graph.hpp"

using namespace regulab;

namespace {

SimpleGraph relabel(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<std::string> labels(g.size());
  for (int v = 0; v < g.size(); ++v) labels[p[v]] = "x" + std::to_string(v);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(p[u], p[v]);
  return SimpleGraph(labels, e);
}

bool embedding_ok(const SimpleGraph& host, const InducedEmbedding& e) {
  auto pat = e.pattern.graph();
  for (int i = 0; i < pat.size(); ++i)
    for (int j = i + 1; j < pat.size(); ++j)
      if (pat.adjacent(i, j) != host.adjacent(e.mapping[i], e.mapping[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("graph construction rejects loops and duplicate labels") {
  CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a", "a"}, {}), Error);
  auto g = SimpleGraph::from_labelled_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(g.index("z"), Error);
}

TEST_CASE("complement") {
  auto k3 = catalog::get("K_3");
  CHECK(complement(k3).edge_count() == 0);
  CHECK(complement(k3).size() == 3);
  auto g1 = catalog::get("G_1");
  CHECK(complement(complement(g1)) == g1);
  auto c5 = catalog::get("C_5");
  CHECK(are_isomorphic(c5, complement(c5)).has_value());
}

TEST_CASE("induced subgraphs") {
  auto c5 = catalog::get("C_5");
  CHECK(induced_subgraph(c5, c5.all()) == c5);
  auto p3 = induced_subgraph(c5, std::vector<std::string>{"u1", "u2", "u3"});
  CHECK(are_isomorphic(p3, catalog::get("P_3")).has_value());
  CHECK_THROWS_AS(induced_subgraph(c5, std::vector<std::string>{"zz"}), Error);

  auto g0 = catalog::get("G_0");
  auto w = induced_subgraph(g0, std::vector<std::string>{"y", "a_2", "u_4", "u_3", "a_0"});
  CHECK(are_isomorphic(w, c5).has_value());
  // these two are the only induced five-cycles of G_0
  auto cycles = induced_cycles(g0, 5);
  CHECK(cycles.size() == 2);
  std::vector<VertexMask> sets;
  for (auto& c : cycles) {
    VertexMask m = 0;
    for (int v : c) m |= bit(v);
    sets.push_back(m);
  }
  CHECK(std::count(sets.begin(), sets.end(), g0.mask_of({"y", "a_2", "u_4", "u_3", "a_0"})) == 1);
  CHECK(std::count(sets.begin(), sets.end(), g0.mask_of({"u_0", "u_1", "u_2", "u_3", "u_4"})) == 1);
}

TEST_CASE("pattern search") {
  auto two_k2 = catalog::get("2K2");
  CHECK(contains_induced(two_k2, Pattern::gap()).has_value());

  auto g4 = catalog::get("G_4");
  bool found = false;
  for (auto& e : enumerate_induced(g4, Pattern::gap()))
    if (e.image() == g4.mask_of({"u_0", "a_0", "b_0", "b_2"})) found = true;
  CHECK(found);

  auto c5 = catalog::get("C_5");
  CHECK_FALSE(contains_induced(c5, Pattern::diamond()).has_value());
  CHECK_FALSE(contains_induced(c5, Pattern::gap()).has_value());
  CHECK_FALSE(contains_induced(catalog::get("K_3"), Pattern::cycle(4)).has_value());
}

TEST_CASE("pattern predicates agree with brute force on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : oracle::graphs(n)) {
      REQUIRE(is_gap_free(g) == oracle::gap_free(g));
      REQUIRE(is_diamond_free(g) == oracle::diamond_free(g));
      REQUIRE(clique_number(g) == oracle::clique_number(g));
      REQUIRE(is_chordal(g).chordal == oracle::chordal(g));
      // gap-free iff the complement has no induced C4
      REQUIRE(is_gap_free(g) == oracle::induced_cycle_sets(complement(g), 4).empty());
    }
}

TEST_CASE("embeddings respect edges and non-edges") {
  std::mt19937_64 rng(7);
  const Pattern pats[] = {Pattern::gap(), Pattern::diamond(), Pattern::cricket(),
                          Pattern::cycle(5), Pattern::anticycle(6), Pattern::clique(3),
                          Pattern::path(4)};
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_graph(8, 0.5, rng);
    for (const auto& p : pats)
      for (const auto& e : enumerate_induced(g, p)) REQUIRE(embedding_ok(g, e));
  }
}

TEST_CASE("chordality witnesses") {
  auto p4 = catalog::get("P_4");
  auto r = is_chordal(p4);
  CHECK(r.chordal);
  CHECK(is_perfect_elimination_ordering(p4, r.elimination_order));

  auto c5 = catalog::get("C_5");
  auto h = is_chordal(c5);
  CHECK_FALSE(h.chordal);
  CHECK(h.hole.size() == 5);
  CHECK(is_induced_cycle(c5, h.hole));

  auto c6c = catalog::get("C_6^c");
  auto w = is_chordal(c6c);
  CHECK_FALSE(w.chordal);
  CHECK(w.hole.size() == 4);
  CHECK(is_induced_cycle(c6c, w.hole));
  // the induced 4-cycles of C_6^c sit on cycle positions {1,3,4,6} and rotations
  auto holes = oracle::induced_cycle_sets(c6c, 4);
  CHECK(holes.size() == 3);
  CHECK(std::count(holes.begin(), holes.end(), c6c.mask_of({"u1", "u3", "u4", "u6"})) == 1);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(9, 0.45, rng);
    auto res = is_chordal(g);
    if (res.chordal)
      REQUIRE(is_perfect_elimination_ordering(g, res.elimination_order));
    else
      REQUIRE((res.hole.size() >= 4 && oracle::induces_cycle(g, res.hole)));
  }
}

TEST_CASE("cliques") {
  CHECK(clique_number(catalog::get("K_4")) == 4);
  CHECK(clique_number(catalog::get("C_5")) == 2);
  CHECK(clique_number(catalog::get("G_1")) == 3);
  CHECK(clique_number(SimpleGraph({"a", "b"}, {})) == 1);
  CHECK(clique_number(SimpleGraph()) == 0);
  for (const auto& name : catalog::names()) {
    auto g = catalog::get(name);
    for (auto c : max_cliques(g)) {
      CHECK(g.is_clique(c));
      CHECK(popcount(c) == clique_number(g));
    }
  }
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(catalog::get("C_6")).bipartite);
  CHECK_FALSE(is_bipartite(catalog::get("C_5")).bipartite);
  auto g10 = catalog::get("G_10");
  auto r = is_bipartite(g10);
  REQUIRE_FALSE(r.bipartite);
  // odd closed walk: consecutive entries adjacent, wraps around, odd length
  REQUIRE(r.odd_cycle.size() % 2 == 1);
  for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
    CHECK(g10.adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST_CASE("vertex multiplication") {
  auto c5 = catalog::get("C_5");
  auto m = multiply_vertices(c5, std::map<std::string, int>{{"u1", 2}});
  CHECK(m.size() == 6);
  CHECK(m.edge_count() == 7);
  CHECK(m.find("u1^1").has_value());
  CHECK(m.find("u1^2").has_value());

  auto k3 = multiply_vertices(catalog::get("K_3"), std::map<std::string, int>{{"a", 2}});
  CHECK(contains_induced(k3, Pattern::diamond()).has_value());

  auto g1 = catalog::get("G_1");
  CHECK(clique_number(multiply_vertices(g1, std::map<std::string, int>{{"u_0", 3}})) == 3);

  // substitution wires the inserted graph internally
  MultiplyPlan plan{{"u1", MultiplyInstruction(catalog::get("K_3"))}};
  auto s = multiply_vertices(c5, plan);
  CHECK(s.size() == 7);
  CHECK(s.edge_count() == 3 + 3 + 3 + 3);
}

TEST_CASE("multiplication invariants on random graphs") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    auto g = oracle::random_graph(6, 0.5, rng);
    std::uniform_int_distribution<int> pick(0, g.size() - 1), k(2, 3);
    const int v = pick(rng);
    auto h = multiply_vertices(g, std::map<std::string, int>{{g.label(v), k(rng)}});
    REQUIRE(is_gap_free(h) == is_gap_free(g));
    REQUIRE(clique_number(h) == clique_number(g));
    if (is_diamond_free(g)) {
      bool in_triangle = false;
      for (auto tri : triangles(g)) in_triangle |= (tri & bit(v)) != 0;
      REQUIRE(is_diamond_free(h) == !in_triangle);
    }
    // an induced long cycle meets the copies of v at most once
    VertexMask copies = 0;
    for (int w = 0; w < h.size(); ++w)
      if (h.label(w).rfind(g.label(v) + "^", 0) == 0) copies |= bit(w);
    for (int n = 5; n <= h.size(); ++n)
      for (auto& c : induced_cycles(h, n)) {
        int hits = 0;
        for (int w : c) hits += (copies >> w) & 1;
        REQUIRE(hits <= 1);
      }
    auto col = collapse_false_twins(h);
    auto back = multiply_vertices(col.base, col.multiplicities);
    REQUIRE(are_isomorphic(back, h).has_value());
  }
}

TEST_CASE("false twin collapse") {
  auto c5 = catalog::get("C_5");
  auto r = collapse_false_twins(multiply_vertices(c5, std::map<std::string, int>{{"u1", 3}}));
  CHECK(are_isomorphic(r.base, c5).has_value());
  int total = 0, big = 0;
  for (auto& [v, k] : r.multiplicities) {
    total += k;
    if (k == 3) ++big;
  }
  CHECK(total == 7);
  CHECK(big == 1);

  auto plain = collapse_false_twins(c5);
  CHECK(plain.base == c5);
  for (auto& [v, k] : plain.multiplicities) CHECK(k == 1);

  auto g10 = catalog::get("G_10");
  auto m = multiply_vertices(g10, std::map<std::string, int>{{"y", 2}, {"u_4", 2}});
  auto c = collapse_false_twins(m);
  auto iso = are_isomorphic(c.base, g10);
  REQUIRE(iso.has_value());
  std::map<std::string, int> mapped;
  for (auto& [v, k] : c.multiplicities)
    if (k > 1) mapped[iso->at(v)] = k;
  CHECK(mapped == std::map<std::string, int>{{"u_4", 2}, {"y", 2}});
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(are_isomorphic(catalog::get("G_1"), catalog::get("G_2")).has_value());
  std::mt19937_64 rng(5);
  for (const auto& name : catalog::names()) {
    auto g = catalog::get(name);
    auto h = relabel(g, rng);
    auto iso = find_isomorphism(h, g);
    REQUIRE(iso.has_value());
    for (auto [u, v] : h.edges()) CHECK(g.adjacent((*iso)[u], (*iso)[v]));
  }
  for (int t = 0; t < 300; ++t) {
    auto a = oracle::random_graph(6, 0.5, rng);
    auto b = oracle::random_graph(6, 0.5, rng);
    REQUIRE(find_isomorphism(a, b).has_value() == oracle::isomorphic(a, b));
  }
  CHECK(automorphisms(catalog::get("C_5")).size() == 10);
}

TEST_CASE("distances") {
  auto g10 = catalog::get("G_10");
  auto d = distance_partition(g10, {"u_0", "u_1", "u_2", "u_3", "u_4"});
  CHECK(d.at("a_0") == 1);
  CHECK(d.at("y") == 2);
  CHECK(d.at("u_3") == 0);
  auto iso = SimpleGraph({"a", "b", "c"}, {{0, 1}});
  CHECK(distance_partition(iso, {"a"}).at("c") == kUnreachable);
  CHECK_THROWS_AS(distance_partition(iso, {}), Error);
}
