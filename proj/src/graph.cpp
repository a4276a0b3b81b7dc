#include "regulab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace regulab {

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  if (labels_.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error("graphs are limited to 64 vertices, got " +
                std::to_string(labels_.size()));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error("empty vertex label");
    if (!seen.insert(l).second) throw Error("duplicate vertex label '" + l + "'");
  }
  const int n = size();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge endpoint out of range");
    if (u == v) throw Error("loop at vertex '" + labels_[u] + "'");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

SimpleGraph SimpleGraph::from_labelled_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  auto lookup = [&](const std::string& l) {
    auto it = idx.find(l);
    if (it == idx.end()) {
      idx.emplace(l, labels.size());
      labels.push_back(l);
      return static_cast<int>(labels.size() - 1);
    }
    return it->second;
  };
  std::vector<std::pair<int, int>> e;
  e.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int u = lookup(a);
    int v = lookup(b);
    e.emplace_back(u, v);
  }
  return SimpleGraph(std::move(labels), e);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (auto m : adj_) twice += popcount(m);
  return twice / 2;
}

std::optional<int> SimpleGraph::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int SimpleGraph::index(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw Error("unknown vertex '" + label + "'");
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for_each_bit(adj_[u] & above(u),
                 [&](int v) { out.emplace_back(u, v); });
  return out;
}

VertexMask SimpleGraph::mask_of(const std::vector<std::string>& labels) const {
  VertexMask m = 0;
  for (const auto& l : labels) m |= bit(index(l));
  return m;
}

std::vector<std::string> SimpleGraph::labels_of(VertexMask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int v) { out.push_back(labels_[v]); });
  return out;
}

bool SimpleGraph::is_clique(VertexMask m) const {
  bool ok = true;
  for_each_bit(m, [&](int v) {
    if ((adj_[v] & m) != (m & ~bit(v))) ok = false;
  });
  return ok;
}

bool SimpleGraph::is_independent(VertexMask m) const {
  bool ok = true;
  for_each_bit(m, [&](int v) {
    if (adj_[v] & m) ok = false;
  });
  return ok;
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return SimpleGraph(g.labels(), e);
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask w) {
  std::vector<int> keep;
  for_each_bit(w & g.all(), [&](int v) { keep.push_back(v); });
  std::vector<int> pos(g.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = static_cast<int>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
  return SimpleGraph(std::move(labels), e);
}

SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<std::string>& w) {
  return induced_subgraph(g, g.mask_of(w));
}

SimpleGraph remove_vertices(const SimpleGraph& g, VertexMask w) {
  return induced_subgraph(g, g.all() & ~w);
}

SimpleGraph without_isolated(const SimpleGraph& g) {
  VertexMask keep = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.neighbors(v)) keep |= bit(v);
  return induced_subgraph(g, keep);
}

VertexMask closed_neighborhood(const SimpleGraph& g, int x) {
  return g.neighbors(x) | bit(x);
}

std::vector<VertexMask> connected_components(const SimpleGraph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.all();
  while (left) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  return connected_components(g).size() <= 1;
}

// --- patterns ---------------------------------------------------------------

SimpleGraph Pattern::graph() const {
  std::vector<std::pair<int, int>> e;
  int size = n;
  switch (kind) {
    case PatternKind::Gap:
      size = 4;
      e = {{0, 1}, {2, 3}};
      break;
    case PatternKind::Diamond:
      // a b c d with ab, bc, ac, ad, cd
      size = 4;
      e = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {2, 3}};
      break;
    case PatternKind::Cricket:
      // w1 w2 w3 w4 w5 with w1w3, w2w3, w3w4, w3w5, w4w5
      size = 5;
      e = {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
      break;
    case PatternKind::Cycle:
    case PatternKind::Anticycle:
      if (n < 3) throw Error("cycles need at least 3 vertices");
      for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      break;
    case PatternKind::Clique:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
      break;
    case PatternKind::Path:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) labels.push_back("p" + std::to_string(i));
  SimpleGraph g(std::move(labels), e);
  return kind == PatternKind::Anticycle ? complement(g) : g;
}

std::string Pattern::name() const {
  switch (kind) {
    case PatternKind::Gap: return "gap";
    case PatternKind::Diamond: return "diamond";
    case PatternKind::Cricket: return "cricket";
    case PatternKind::Cycle: return "C" + std::to_string(n);
    case PatternKind::Anticycle: return "C" + std::to_string(n) + "^c";
    case PatternKind::Clique: return "K" + std::to_string(n);
    case PatternKind::Path: return "P" + std::to_string(n);
  }
  return "?";
}

VertexMask InducedEmbedding::image() const {
  VertexMask m = 0;
  for (int v : mapping) m |= bit(v);
  return m;
}

namespace {

// Pattern vertices ordered so each one (after the first of its component)
// has as many already-placed neighbours as possible.
std::vector<int> placement_order(const SimpleGraph& p) {
  const int n = p.size();
  std::vector<int> order;
  VertexMask placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    int best_key = -1;
    for (int v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      int key = popcount(p.neighbors(v) & placed) * 128 + p.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

bool induced_search(const SimpleGraph& host, const SimpleGraph& pat,
                    const std::vector<int>& order, std::size_t depth,
                    std::vector<int>& map, VertexMask used,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  if (depth == order.size()) return visit(map);
  const int pv = order[depth];
  const int need = pat.degree(pv);
  for (int hv = 0; hv < host.size(); ++hv) {
    if (used & bit(hv)) continue;
    if (host.degree(hv) < need) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      int q = order[k];
      if (pat.adjacent(pv, q) != host.adjacent(hv, map[q])) ok = false;
    }
    if (!ok) continue;
    map[pv] = hv;
    if (!induced_search(host, pat, order, depth + 1, map, used | bit(hv), visit))
      return false;
  }
  map[pv] = -1;
  return true;
}

}  // namespace

void for_each_induced(const SimpleGraph& host, const SimpleGraph& pattern,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  if (pattern.size() > host.size()) return;
  auto order = placement_order(pattern);
  std::vector<int> map(pattern.size(), -1);
  induced_search(host, pattern, order, 0, map, 0, visit);
}

std::optional<std::vector<int>> find_induced(const SimpleGraph& host,
                                             const SimpleGraph& pattern) {
  std::optional<std::vector<int>> found;
  for_each_induced(host, pattern, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<InducedEmbedding> contains_induced(const SimpleGraph& g,
                                                 const Pattern& p) {
  if (auto m = find_induced(g, p.graph())) return InducedEmbedding{p, *m};
  return std::nullopt;
}

std::vector<InducedEmbedding> enumerate_induced(const SimpleGraph& g,
                                                const Pattern& p) {
  std::vector<InducedEmbedding> out;
  std::set<VertexMask> seen;
  for_each_induced(g, p.graph(), [&](const std::vector<int>& m) {
    InducedEmbedding e{p, m};
    if (seen.insert(e.image()).second) out.push_back(std::move(e));
    return true;
  });
  return out;
}

bool is_gap_free(const SimpleGraph& g) {
  return !contains_induced(g, Pattern::gap());
}

bool is_diamond_free(const SimpleGraph& g) {
  return !contains_induced(g, Pattern::diamond());
}

std::vector<std::vector<int>> induced_cycles(const SimpleGraph& g, int n) {
  std::vector<std::vector<int>> out;
  for (auto& e : enumerate_induced(g, Pattern::cycle(n)))
    out.push_back(std::move(e.mapping));
  return out;
}

// --- chordality -------------------------------------------------------------

bool is_perfect_elimination_ordering(const SimpleGraph& g,
                                     const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.size()) return false;
  VertexMask later = g.all();
  for (int v : order) {
    if (!(later & bit(v))) return false;
    later &= ~bit(v);
    if (!g.is_clique(g.neighbors(v) & later)) return false;
  }
  return true;
}

bool is_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n < 3) return false;
  VertexMask m = 0;
  for (int v : cycle) m |= bit(v);
  if (popcount(m) != n) return false;
  for (int i = 0; i < n; ++i) {
    int v = cycle[i];
    VertexMask expect = bit(cycle[(i + 1) % n]) | bit(cycle[(i + n - 1) % n]);
    if ((g.neighbors(v) & m) != expect) return false;
  }
  return true;
}

namespace {

// Shortest path from `from` to `to` inside `allowed`; empty when none.
std::vector<int> shortest_path(const SimpleGraph& g, int from, int to,
                               VertexMask allowed) {
  std::vector<int> parent(g.size(), -1);
  std::deque<int> queue{from};
  VertexMask seen = bit(from);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for_each_bit(g.neighbors(v) & allowed & ~seen, [&](int w) {
      seen |= bit(w);
      parent[w] = v;
      queue.push_back(w);
    });
  }
  if (!(seen & bit(to))) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ChordalityResult is_chordal(const SimpleGraph& g) {
  const int n = g.size();
  ChordalityResult r;
  // maximum cardinality search; reversed visit order is a PEO iff chordal
  std::vector<int> weight(n, 0);
  VertexMask numbered = 0;
  std::vector<int> visit;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!(numbered & bit(v)) && (best < 0 || weight[v] > weight[best])) best = v;
    numbered |= bit(best);
    visit.push_back(best);
    for_each_bit(g.neighbors(best) & ~numbered, [&](int w) { ++weight[w]; });
  }
  std::reverse(visit.begin(), visit.end());
  if (is_perfect_elimination_ordering(g, visit)) {
    r.chordal = true;
    r.elimination_order = std::move(visit);
    return r;
  }
  // A hole through v uses two non-adjacent neighbours x, y of v and an
  // induced x-y path avoiding the rest of st v.
  for (int v = 0; v < n; ++v) {
    VertexMask nb = g.neighbors(v);
    for (int x = 0; x < n; ++x) {
      if (!(nb & bit(x))) continue;
      for (int y = x + 1; y < n; ++y) {
        if (!(nb & bit(y)) || g.adjacent(x, y)) continue;
        VertexMask allowed = (g.all() & ~(nb | bit(v))) | bit(x) | bit(y);
        auto path = shortest_path(g, x, y, allowed);
        if (path.empty()) continue;
        r.hole.push_back(v);
        r.hole.insert(r.hole.end(), path.begin(), path.end());
        return r;
      }
    }
  }
  throw Error("internal: chordality search found neither PEO nor hole");
}

// --- cliques ---------------------------------------------------------------

namespace {

void bron_kerbosch(const SimpleGraph& g, VertexMask r, VertexMask p,
                   VertexMask x, std::vector<VertexMask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = lowest(p | x);
  int best = -1;
  for_each_bit(p | x, [&](int u) {
    int c = popcount(p & g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  for_each_bit(p & ~g.neighbors(pivot), [&](int v) {
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

std::vector<std::string> sorted_labels(const SimpleGraph& g, VertexMask m) {
  auto l = g.labels_of(m);
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

std::vector<VertexMask> maximal_cliques(const SimpleGraph& g) {
  std::vector<VertexMask> out;
  if (g.size() == 0) return out;
  bron_kerbosch(g, 0, g.all(), 0, out);
  return out;
}

std::vector<VertexMask> max_cliques(const SimpleGraph& g) {
  auto all = maximal_cliques(g);
  int best = 0;
  for (auto c : all) best = std::max(best, popcount(c));
  std::vector<VertexMask> out;
  for (auto c : all)
    if (popcount(c) == best) out.push_back(c);
  std::sort(out.begin(), out.end(), [&](VertexMask a, VertexMask b) {
    return sorted_labels(g, a) < sorted_labels(g, b);
  });
  return out;
}

int clique_number(const SimpleGraph& g) {
  int best = 0;
  for (auto c : maximal_cliques(g)) best = std::max(best, popcount(c));
  return best;
}

std::vector<VertexMask> triangles(const SimpleGraph& g) {
  std::vector<VertexMask> out;
  for (auto [u, v] : g.edges())
    for_each_bit(g.neighbors(u) & g.neighbors(v) & above(v),
                 [&](int w) { out.push_back(bit(u) | bit(v) | bit(w)); });
  return out;
}

BipartiteResult is_bipartite(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
  BipartiteResult r;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push_back(w);
        } else if (colour[w] == colour[v]) {
          // climb both tree paths to their meeting point
          std::vector<int> a{v}, b{w};
          int x = v, y = w;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              x = parent[x];
              a.push_back(x);
            } else {
              y = parent[y];
              b.push_back(y);
            }
          }
          b.pop_back();
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin(), b.end());
          r.odd_cycle = std::move(a);
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  for (int v = 0; v < n; ++v)
    if (colour[v] == 0) r.side |= bit(v);
  return r;
}

// --- multiplication ---------------------------------------------------------

std::string copy_label(const std::string& base, int i) {
  return base + "^" + std::to_string(i);
}

SimpleGraph multiply_vertices(const SimpleGraph& g, const MultiplyPlan& plan) {
  for (const auto& [label, _] : plan) g.index(label);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> images(g.size());
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.size(); ++v) {
    auto it = plan.find(g.label(v));
    if (it == plan.end()) {
      images[v].push_back(static_cast<int>(labels.size()));
      labels.push_back(g.label(v));
      continue;
    }
    if (const int* k = std::get_if<int>(&it->second)) {
      if (*k < 1) throw Error("multiplicity of '" + g.label(v) + "' must be >= 1");
      if (*k == 1) {
        images[v].push_back(static_cast<int>(labels.size()));
        labels.push_back(g.label(v));
        continue;
      }
      for (int i = 1; i <= *k; ++i) {
        images[v].push_back(static_cast<int>(labels.size()));
        labels.push_back(copy_label(g.label(v), i));
      }
    } else {
      const auto& f = std::get<SimpleGraph>(it->second);
      if (f.size() == 0) throw Error("cannot substitute an empty graph");
      const int offset = static_cast<int>(labels.size());
      for (int i = 0; i < f.size(); ++i) {
        images[v].push_back(offset + i);
        labels.push_back(f.label(i));
      }
      for (auto [a, b] : f.edges()) edges.emplace_back(offset + a, offset + b);
    }
  }
  for (auto [u, v] : g.edges())
    for (int a : images[u])
      for (int b : images[v]) edges.emplace_back(a, b);
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph multiply_vertices(const SimpleGraph& g,
                              const std::map<std::string, int>& multiplicities) {
  MultiplyPlan plan;
  for (const auto& [k, v] : multiplicities) plan.emplace(k, v);
  return multiply_vertices(g, plan);
}

namespace {

// "X^i" -> "X", otherwise empty.
std::string copy_base(const std::string& label) {
  auto pos = label.rfind('^');
  if (pos == std::string::npos || pos == 0 || pos + 1 == label.size()) return {};
  for (std::size_t i = pos + 1; i < label.size(); ++i)
    if (label[i] < '0' || label[i] > '9') return {};
  return label.substr(0, pos);
}

}  // namespace

TwinCollapse collapse_false_twins(const SimpleGraph& g) {
  TwinCollapse out;
  for (const auto& l : g.labels()) {
    out.multiplicities[l] = 1;
    out.classes[l] = {l};
  }
  SimpleGraph cur = g;
  while (true) {
    std::map<VertexMask, std::vector<int>> groups;
    std::vector<VertexMask> order;
    for (int v = 0; v < cur.size(); ++v) {
      auto [it, fresh] = groups.try_emplace(cur.neighbors(v));
      if (fresh) order.push_back(cur.neighbors(v));
      it->second.push_back(v);
    }
    if (groups.size() == static_cast<std::size_t>(cur.size())) break;

    std::vector<std::string> labels;
    std::vector<int> rep(cur.size(), -1);
    std::map<std::string, int> mult;
    std::map<std::string, std::vector<std::string>> classes;
    std::set<std::string> taken(cur.labels().begin(), cur.labels().end());
    // vertices keep the position of their class's first member
    for (int v = 0; v < cur.size(); ++v) {
      const auto& members = groups[cur.neighbors(v)];
      if (members.front() != v) continue;
      std::vector<std::string> names;
      for (int m : members) names.push_back(cur.label(m));
      std::sort(names.begin(), names.end());
      std::string name = names.front();
      if (members.size() > 1) {
        std::string base = copy_base(names.front());
        bool shared = !base.empty() && !taken.count(base);
        for (const auto& nm : names) shared = shared && copy_base(nm) == base;
        if (shared) name = base;
      }
      int total = 0;
      std::vector<std::string> merged;
      for (const auto& nm : names) {
        total += out.multiplicities.at(nm);
        const auto& c = out.classes.at(nm);
        merged.insert(merged.end(), c.begin(), c.end());
      }
      std::sort(merged.begin(), merged.end());
      const int id = static_cast<int>(labels.size());
      for (int m : members) rep[m] = id;
      labels.push_back(name);
      mult[name] = total;
      classes[name] = std::move(merged);
    }
    std::set<std::pair<int, int>> e;
    for (auto [u, v] : cur.edges())
      e.emplace(std::min(rep[u], rep[v]), std::max(rep[u], rep[v]));
    cur = SimpleGraph(std::move(labels),
                      std::vector<std::pair<int, int>>(e.begin(), e.end()));
    out.multiplicities = std::move(mult);
    out.classes = std::move(classes);
  }
  out.base = std::move(cur);
  return out;
}

// --- isomorphism -----------------------------------------------------------

namespace {

// Joint colour refinement; returns false if the colour histograms differ.
bool refine_colours(const SimpleGraph& g, const SimpleGraph& h,
                    std::vector<int>& cg, std::vector<int>& ch) {
  const int n = g.size();
  cg.assign(n, 0);
  ch.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const SimpleGraph& x, const std::vector<int>& c, int v) {
      std::vector<int> sig{c[v]};
      std::vector<int> nb;
      for_each_bit(x.neighbors(v), [&](int w) { nb.push_back(c[w]); });
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      return sig;
    };
    std::vector<std::vector<int>> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
      ids.emplace(sg[v], 0);
      ids.emplace(sh[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> hist(next, 0);
    for (int v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
      ++hist[cg[v]];
      --hist[ch[v]];
    }
    for (int c : hist)
      if (c != 0) return false;
    if (next == classes) return true;
    classes = next;
  }
}

bool iso_search(const SimpleGraph& g, const SimpleGraph& h,
                const std::vector<int>& cg, const std::vector<int>& ch,
                const std::vector<int>& order, std::size_t depth,
                std::vector<int>& map, VertexMask used,
                const std::function<bool(const std::vector<int>&)>& visit) {
  if (depth == order.size()) return visit(map);
  const int v = order[depth];
  for (int w = 0; w < h.size(); ++w) {
    if ((used & bit(w)) || ch[w] != cg[v]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k)
      if (g.adjacent(v, order[k]) != h.adjacent(w, map[order[k]])) ok = false;
    if (!ok) continue;
    map[v] = w;
    if (!iso_search(g, h, cg, ch, order, depth + 1, map, used | bit(w), visit))
      return false;
  }
  return true;
}

}  // namespace

void for_each_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return;
  std::vector<int> cg, ch;
  if (!refine_colours(g, h, cg, ch)) return;
  // rare colours first, then stay connected to placed vertices
  std::vector<int> freq(g.size() + 1, 0);
  for (int c : cg) ++freq[c];
  std::vector<int> order;
  VertexMask placed = 0;
  while (static_cast<int>(order.size()) < g.size()) {
    int best = -1;
    std::pair<int, int> key{-1, 0};
    for (int v = 0; v < g.size(); ++v) {
      if (placed & bit(v)) continue;
      std::pair<int, int> k{popcount(g.neighbors(v) & placed) > 0 ? 1 : 0,
                            -freq[cg[v]]};
      if (best < 0 || k > key) {
        key = k;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  std::vector<int> map(g.size(), -1);
  iso_search(g, h, cg, ch, order, 0, map, 0, visit);
}

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g,
                                                 const SimpleGraph& h) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(g, h, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<std::map<std::string, std::string>> are_isomorphic(
    const SimpleGraph& g, const SimpleGraph& h) {
  auto m = find_isomorphism(g, h);
  if (!m) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int v = 0; v < g.size(); ++v) out[g.label(v)] = h.label((*m)[v]);
  return out;
}

std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for_each_isomorphism(g, g, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// --- distances --------------------------------------------------------------

std::vector<int> distances_to(const SimpleGraph& g, VertexMask h) {
  if (!h) throw Error("distance to an empty vertex set");
  std::vector<int> dist(g.size(), kUnreachable);
  VertexMask seen = h;
  VertexMask frontier = h;
  int d = 0;
  while (frontier) {
    for_each_bit(frontier, [&](int v) { dist[v] = d; });
    VertexMask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
    ++d;
  }
  return dist;
}

std::map<std::string, int> distance_partition(
    const SimpleGraph& g, const std::vector<std::string>& h) {
  auto dist = distances_to(g, g.mask_of(h));
  std::map<std::string, int> out;
  for (int v = 0; v < g.size(); ++v) out[g.label(v)] = dist[v];
  return out;
}

}  // namespace regulab
