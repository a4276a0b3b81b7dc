#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace regulab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline int lowest(VertexMask m) { return __builtin_ctzll(m); }
/// Vertices with index strictly greater than v.
inline VertexMask above(int v) {
  return v >= 63 ? VertexMask{0} : ~((VertexMask{2} << v) - 1);
}

template <class F>
inline void for_each_bit(VertexMask m, F&& f) {
  while (m) {
    int v = lowest(m);
    m &= m - 1;
    f(v);
  }
}

/// Finite simple graph on labelled vertices, stored as a dense symmetric
/// bit matrix. Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Edges are given by vertex index. Loops and duplicate labels are rejected.
  SimpleGraph(std::vector<std::string> labels,
              const std::vector<std::pair<int, int>>& edges);

  static SimpleGraph from_labelled_edges(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  int edge_count() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  /// Index of a label; throws Error for unknown labels.
  int index(const std::string& label) const;
  std::optional<int> find(const std::string& label) const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  VertexMask all() const {
    return size() == 64 ? ~VertexMask{0} : (bit(size()) - 1);
  }

  /// Edges (u < v) in row-major order.
  std::vector<std::pair<int, int>> edges() const;

  VertexMask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(VertexMask m) const;

  bool is_clique(VertexMask m) const;
  bool is_independent(VertexMask m) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexMask> adj_;
};

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask w);
SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<std::string>& w);
SimpleGraph remove_vertices(const SimpleGraph& g, VertexMask w);
/// G with isolated vertices dropped.
SimpleGraph without_isolated(const SimpleGraph& g);
/// st x = N(x) together with x.
VertexMask closed_neighborhood(const SimpleGraph& g, int x);
bool is_connected(const SimpleGraph& g);
std::vector<VertexMask> connected_components(const SimpleGraph& g);

// --- induced pattern search -------------------------------------------------

enum class PatternKind { Gap, Diamond, Cricket, Cycle, Anticycle, Clique, Path };

struct Pattern {
  PatternKind kind;
  int n = 0;  // size parameter for Cycle/Anticycle/Clique/Path

  static Pattern gap() { return {PatternKind::Gap, 4}; }
  static Pattern diamond() { return {PatternKind::Diamond, 4}; }
  static Pattern cricket() { return {PatternKind::Cricket, 5}; }
  static Pattern cycle(int n) { return {PatternKind::Cycle, n}; }
  static Pattern anticycle(int n) { return {PatternKind::Anticycle, n}; }
  static Pattern clique(int n) { return {PatternKind::Clique, n}; }
  static Pattern path(int n) { return {PatternKind::Path, n}; }

  SimpleGraph graph() const;
  std::string name() const;
};

struct InducedEmbedding {
  Pattern pattern;
  /// mapping[i] is the host vertex playing pattern vertex i.
  std::vector<int> mapping;

  VertexMask image() const;
};

/// Embedding of `pattern` into `host` with edges and non-edges respected.
std::optional<std::vector<int>> find_induced(const SimpleGraph& host,
                                             const SimpleGraph& pattern);
/// Calls `visit` for every induced embedding; stop early by returning false.
void for_each_induced(const SimpleGraph& host, const SimpleGraph& pattern,
                      const std::function<bool(const std::vector<int>&)>& visit);

std::optional<InducedEmbedding> contains_induced(const SimpleGraph& g,
                                                 const Pattern& p);
/// One embedding per distinct image vertex set (i.e. up to automorphisms of
/// the pattern).
std::vector<InducedEmbedding> enumerate_induced(const SimpleGraph& g,
                                                const Pattern& p);

bool is_gap_free(const SimpleGraph& g);
bool is_diamond_free(const SimpleGraph& g);

/// Induced cycles of length `n` as vertex sequences in cycle order, one per
/// vertex set.
std::vector<std::vector<int>> induced_cycles(const SimpleGraph& g, int n);

// --- chordality -------------------------------------------------------------

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (each vertex simplicial among later ones).
  std::vector<int> elimination_order;
  /// Induced cycle of length >= 4, in cycle order.
  std::vector<int> hole;
};

ChordalityResult is_chordal(const SimpleGraph& g);
bool is_perfect_elimination_ordering(const SimpleGraph& g,
                                     const std::vector<int>& order);
bool is_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

// --- cliques and bipartiteness ----------------------------------------------

std::vector<VertexMask> maximal_cliques(const SimpleGraph& g);
/// All cliques of maximum size, sorted by their sorted label lists.
std::vector<VertexMask> max_cliques(const SimpleGraph& g);
/// 0 for the graph with no vertices, 1 for edgeless graphs.
int clique_number(const SimpleGraph& g);
std::vector<VertexMask> triangles(const SimpleGraph& g);

struct BipartiteResult {
  bool bipartite = false;
  VertexMask side = 0;           // one colour class when bipartite
  std::vector<int> odd_cycle;    // closed walk of odd length otherwise
};

BipartiteResult is_bipartite(const SimpleGraph& g);

// --- vertex multiplication --------------------------------------------------

/// Per-vertex instruction: a multiplicity k >= 1 or a graph to substitute.
using MultiplyInstruction = std::variant<int, SimpleGraph>;
using MultiplyPlan = std::map<std::string, MultiplyInstruction>;

/// Copies of a vertex v multiplied by k >= 2 are named "v^1", ..., "v^k".
SimpleGraph multiply_vertices(const SimpleGraph& g, const MultiplyPlan& plan);
SimpleGraph multiply_vertices(const SimpleGraph& g,
                              const std::map<std::string, int>& multiplicities);

std::string copy_label(const std::string& base, int i);

struct TwinCollapse {
  SimpleGraph base;
  std::map<std::string, int> multiplicities;  // every base vertex, >= 1
  std::map<std::string, std::vector<std::string>> classes;
};

TwinCollapse collapse_false_twins(const SimpleGraph& g);

// --- isomorphism -----------------------------------------------------------

/// Bijection as mapping[v of g] = vertex of h.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g,
                                                 const SimpleGraph& h);
void for_each_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const std::function<bool(const std::vector<int>&)>& visit);
std::optional<std::map<std::string, std::string>> are_isomorphic(
    const SimpleGraph& g, const SimpleGraph& h);
std::vector<std::vector<int>> automorphisms(const SimpleGraph& g);

// --- distances --------------------------------------------------------------

inline constexpr int kUnreachable = -1;

/// Distance from every vertex to the set h (kUnreachable when no path).
std::vector<int> distances_to(const SimpleGraph& g, VertexMask h);
std::map<std::string, int> distance_partition(
    const SimpleGraph& g, const std::vector<std::string>& h);

}  // namespace regulab
