#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regulab/graph.hpp"
#include "regulab/ideal.hpp"

namespace regulab {

using Edge = std::pair<int, int>;  // (u, v) with u < v

/// Multiset of s >= 1 host edges e_1 ... e_s.
struct SFoldProduct {
  std::vector<Edge> edges;  // sorted, with repetition

  /// Validates that every pair is a host edge.
  static SFoldProduct of(const SimpleGraph& host, std::vector<Edge> edges);
  /// "u1u2,u1u2,u2u3": each item is two concatenated labels ("a-b" and
  /// "a*b" also work).
  static SFoldProduct parse(const SimpleGraph& host, std::string_view text);

  unsigned s() const { return static_cast<unsigned>(edges.size()); }
  Monomial product(const SimpleGraph& host) const;
  std::string str(const SimpleGraph& host) const;

  bool operator==(const SFoldProduct&) const = default;
};

/// Witness p_0 ... p_{2l+1}; uses[j] is the edge matched by (p_{2j+1}, p_{2j+2}).
struct EvenConnection {
  std::vector<int> sequence;
  std::vector<Edge> uses;

  std::string str(const SimpleGraph& host) const;
};

/// Checks the four defining conditions literally.
bool is_even_connection(const SimpleGraph& host, const SFoldProduct& m, int u, int v,
                        const EvenConnection& c);

/// Complete search over (vertex, unused edges) states; u == v allowed.
/// A bare host edge uv is not an even-connection.
std::optional<EvenConnection> find_even_connection(const SimpleGraph& host,
                                                   const SFoldProduct& m, int u, int v);

/// Witness for every v even-connected to u (index v; empty when none).
std::vector<std::optional<EvenConnection>> even_connections_from(const SimpleGraph& host,
                                                                 const SFoldProduct& m, int u);

/// Polarized copy of a self-connected vertex: label with one prime appended.
std::string square_copy_label(const std::string& label);

struct ColonGraph {
  SimpleGraph graph;
  std::vector<Edge> new_edges;     // host vertex pairs, not host edges
  std::vector<int> squares;        // self-connected host vertices
  std::map<Edge, EvenConnection> witnesses;  // keyed by (u, v), u <= v
};

/// Host vertices plus u' per self-connected u; edges are the host edges, the
/// even-connected pairs and u-u'.
ColonGraph colon_graph(const SimpleGraph& host, const SFoldProduct& m);

// --- generator order -------------------------------------------------------

/// Row-major edge order of the host, used when none is supplied.
std::vector<Edge> default_edge_order(const SimpleGraph& host);

/// Exponents of m over host vertices; throws if m involves other variables.
std::vector<unsigned> vertex_exponents(const SimpleGraph& host, const Monomial& m);

/// All multisets of s edges whose product is m, each sorted.
std::vector<std::vector<Edge>> edge_factorizations(const SimpleGraph& host, const Monomial& m,
                                                   unsigned s);

/// Lexicographically greatest exponent vector (over `order`) among the
/// factorizations of m into s edges. Throws if there is none.
std::vector<unsigned> maximal_expression(const SimpleGraph& host, const Monomial& m,
                                         const std::vector<Edge>& order, unsigned s);

struct GeneratorOrder {
  std::vector<Edge> edge_order;
  unsigned s = 1;
  std::vector<Monomial> generators;             // L_1 > L_2 > ...
  std::vector<std::vector<unsigned>> expressions;

  SFoldProduct product(std::size_t k) const;
};

GeneratorOrder ordered_generators(const SimpleGraph& host, unsigned s,
                                  std::vector<Edge> order = {});

struct OrderedColonReport {
  int ell = 0;
  MonomialIdeal lhs;         // ((I^{s+1}, L_1, ..., L_l) : L_{l+1})
  MonomialIdeal colon;       // (I^{s+1} : L_{l+1})
  std::vector<Variable> variables;
  bool holds = false;
};

/// Requires 1 <= ell <= r - 1 for r generators.
OrderedColonReport verify_ordered_colon_decomposition(const SimpleGraph& host,
                                                      const GeneratorOrder& order, int ell);
/// Every ell in range; empty when I^s has a single generator.
std::vector<OrderedColonReport> verify_ordered_colon_decomposition(const SimpleGraph& host,
                                                                   const GeneratorOrder& order);

}  // namespace regulab
