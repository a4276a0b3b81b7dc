#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regulab/betti.hpp"
#include "regulab/even_connection.hpp"
#include "regulab/graph.hpp"

namespace regulab {

/// Every vertex outside `clique` has a neighbour in it.
bool is_dominating(const SimpleGraph& g, VertexMask clique);
/// Maximum cliques that dominate, in max_cliques order.
std::vector<VertexMask> dominating_max_cliques(const SimpleGraph& g);

/// Lexicographically least dominating maximum clique. Requires a gap-free
/// graph with no isolated vertices and clique number at least 3 (throws
/// otherwise); nullopt would contradict the known existence result.
std::optional<VertexMask> dominating_clique(const SimpleGraph& g);

/// For gap-free, triangle-free, non-bipartite graphs without isolated
/// vertices: multiplicities over the C_5 labels u1..u5, or nullopt.
std::optional<std::map<std::string, int>> c5_multiplication_recognizer(const SimpleGraph& g);

enum class ClassificationStatus { Classified, NotGapDiamondFree, NoInducedC5, Unrecognized };

struct ClassificationResult {
  ClassificationStatus status = ClassificationStatus::Unrecognized;
  std::string base;                            // catalog name
  std::map<std::string, int> multiplicities;   // base vertex -> k >= 1
  std::map<std::string, std::string> witness;  // input vertex -> base vertex
  std::string detail;
};

std::string to_string(ClassificationStatus s);

/// Twin collapse followed by isomorphism against the catalog bases in the
/// order C_5, G_0, G_1, ..., G_10. Throws on disconnected input.
ClassificationResult classify_gap_diamond_free(const SimpleGraph& g);

struct ClauseCheck {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};

struct LemmaReport {
  std::vector<ClauseCheck> clauses;
  bool pass() const;
};

/// Dominating-clique structure of gap- and diamond-free graphs with clique
/// number >= 3, chordality of complements of gap-free bipartite graphs, and
/// the C_6^c dichotomy for connected C_5- and diamond-free graphs.
LemmaReport check_structure_lemmas(const SimpleGraph& g);

/// Induced complements of cycles C_n^c with n >= min_n, each as the vertex
/// sequence of the cycle in the complement.
std::vector<std::vector<int>> induced_anticycles(const SimpleGraph& g, int min_n = 5);

/// Properties of the colon graph G' of (I^{s+1} : m) over the host G:
///   colon-gap-free               G gap-free => G' gap-free
///   anticycle-lifts              G gap-free => induced C_n^c (n >= 5) of G' are induced in G
///   anticycle-avoids-product     G gap-free => such anticycles miss every factor of m
///   no-large-anticycle           G gap- and diamond-free => no induced C_n^c with n >= 6
///   dominating-triangle-c5       m has a factor ab in a dominating triangle abc of a
///                                (gap, diamond)-free G with clique number 3 => every
///                                induced C_5 of G' meets {a, b, c} twice
///   dominating-triangle-linear   same hypothesis => G' has a chordal complement
LemmaReport check_colon_graph_lemmas(const SimpleGraph& host, const SFoldProduct& m,
                                     const ColonGraph& colon);

/// One (induced C_5, disjoint edge) pair.
struct C5EdgeCase {
  std::vector<int> cycle;
  Edge edge;
  /// "dominating-triangle", "cross-neighbours", or "none".
  std::string clause;
  int u = -1, v = -1;  // witnesses for cross-neighbours
};

struct C5EdgeReport {
  bool applicable = false;
  std::vector<VertexMask> dominating_triangles;
  std::vector<C5EdgeCase> cases;
  bool pass() const;
};

/// For every induced C_5 and every edge e = ab disjoint from it: e lies in
/// some dominating triangle, or there are distinct u, v on the cycle with
/// au, bv edges and uv not a cycle edge.
C5EdgeReport check_computer_aided_lemma(const SimpleGraph& g);

struct ColonCase {
  unsigned s = 1;
  std::size_t index = 0;  // position in the generator order
  Monomial generator;
  SFoldProduct expression;  // the maximal expression
  int regularity = 0;
  bool fast_path = false;   // settled by the chordal-complement test
  bool skipped = false;     // refused by the homology size wall
  bool ideal_matches = true;  // edge ideal of the colon graph equals the polarized colon
  SimpleGraph colon;
};

struct BanerjeeReport {
  int base_regularity = 0;
  bool base_fast_path = false;
  unsigned s_max = 1;
  std::vector<ColonCase> cases;
  bool certified = false;  // reg(I) <= 4 and every checked colon has reg <= 2
  std::vector<std::size_t> offending;  // indices into cases

  std::string verdict() const;
};

struct BanerjeeOptions {
  std::vector<Edge> edge_order;  // empty: default order
  FieldSpec field;
  BettiOptions betti;
  bool cross_check_ideals = true;
};

BanerjeeReport banerjee_sufficiency_check(const SimpleGraph& g, unsigned s_max,
                                          const BanerjeeOptions& opts = {});

struct StarStep {
  VertexMask vertices = 0;
  int x = -1;  // -1 for base cases
  int bound = 0;
  std::string rule;  // "edgeless", "chordal-complement", "star"
};

struct StarBound {
  int bound = 1;
  std::vector<StarStep> trace;  // one entry per distinct subgraph, in evaluation order
};

/// Recursive bound reg(I(G)) <= max(reg(I(G - st x)) + 1, reg(I(G - x))),
/// with x taken from a dominating maximum clique when one exists, and the
/// chordal-complement case (value 2) as a base case.
StarBound reg_upper_bound_via_star(const SimpleGraph& g);

}  // namespace regulab
