#include "regulab/even_connection.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace regulab {

namespace {

Edge normalized(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Edge parse_edge(const SimpleGraph& host, const std::string& item) {
  for (char sep : {'-', '*'}) {
    auto p = item.find(sep);
    if (p != std::string::npos) {
      auto a = host.find(trim(item.substr(0, p)));
      auto b = host.find(trim(item.substr(p + 1)));
      if (!a || !b) throw Error("unknown vertex in edge '" + item + "'");
      if (!host.adjacent(*a, *b)) throw Error("'" + item + "' is not an edge of the graph");
      return normalized(*a, *b);
    }
  }
  std::vector<Edge> found;
  bool labels_only = false;
  for (std::size_t i = 1; i < item.size(); ++i) {
    auto a = host.find(item.substr(0, i));
    auto b = host.find(item.substr(i));
    if (!a || !b) continue;
    labels_only = true;
    if (host.adjacent(*a, *b)) found.push_back(normalized(*a, *b));
  }
  if (found.size() == 1) return found.front();
  if (found.size() > 1) throw Error("ambiguous edge '" + item + "'; separate the labels with '-'");
  if (labels_only) throw Error("'" + item + "' is not an edge of the graph");
  throw Error("cannot read '" + item + "' as two vertex labels");
}

}  // namespace

SFoldProduct SFoldProduct::of(const SimpleGraph& host, std::vector<Edge> edges) {
  if (edges.empty()) throw Error("an s-fold product needs at least one edge");
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= host.size() || e.second >= host.size() ||
        !host.adjacent(e.first, e.second))
      throw Error("s-fold product uses a pair that is not a host edge");
    e = normalized(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return SFoldProduct{std::move(edges)};
}

SFoldProduct SFoldProduct::parse(const SimpleGraph& host, std::string_view text) {
  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(text.substr(start, end - start));
    if (item.empty()) throw Error("empty edge in product '" + std::string(text) + "'");
    edges.push_back(parse_edge(host, item));
    start = end + 1;
  }
  return of(host, std::move(edges));
}

Monomial SFoldProduct::product(const SimpleGraph& host) const {
  Monomial m;
  for (auto [a, b] : edges)
    m = m * Monomial::of(Variable::from_label(host.label(a))) *
        Monomial::of(Variable::from_label(host.label(b)));
  return m;
}

std::string SFoldProduct::str(const SimpleGraph& host) const {
  std::string out;
  for (auto [a, b] : edges) {
    if (!out.empty()) out += ',';
    out += host.label(a) + host.label(b);
  }
  return out;
}

std::string EvenConnection::str(const SimpleGraph& host) const {
  std::string out;
  for (int v : sequence) {
    if (!out.empty()) out += ' ';
    out += host.label(v);
  }
  return out;
}

bool is_even_connection(const SimpleGraph& host, const SFoldProduct& m, int u, int v,
                        const EvenConnection& c) {
  const auto& p = c.sequence;
  if (p.size() < 4 || p.size() % 2 != 0) return false;  // l >= 1
  const std::size_t ell = (p.size() - 2) / 2;
  for (int x : p)
    if (x < 0 || x >= host.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!host.adjacent(p[i], p[i + 1])) return false;
  if (p.front() != u || p.back() != v) return false;
  std::map<Edge, int> used;
  for (std::size_t j = 0; j < ell; ++j) {
    Edge e = normalized(p[2 * j + 1], p[2 * j + 2]);
    if (std::find(m.edges.begin(), m.edges.end(), e) == m.edges.end()) return false;
    ++used[e];
  }
  for (const auto& [e, k] : used)
    if (k > std::count(m.edges.begin(), m.edges.end(), e)) return false;
  return true;
}

std::vector<std::optional<EvenConnection>> even_connections_from(const SimpleGraph& host,
                                                                 const SFoldProduct& m, int u) {
  const int n = host.size();
  std::vector<Edge> distinct = m.edges;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const int d = static_cast<int>(distinct.size());
  std::vector<int> cap(d), radix(d);
  int codes = 1;
  for (int k = 0; k < d; ++k) {
    cap[k] = static_cast<int>(std::count(m.edges.begin(), m.edges.end(), distinct[k]));
    radix[k] = codes;
    codes *= cap[k] + 1;
  }
  auto used_of = [&](int code, int k) { return code / radix[k] % (cap[k] + 1); };

  struct Parent {
    int state = -1;
    int via = -1;   // p_{2j+1}
    int edge = -1;  // distinct edge index
  };
  const int states = n * codes;
  std::vector<char> seen(states, 0);
  std::vector<Parent> parent(states);
  std::vector<int> order;
  std::deque<int> queue;
  const int root = u * codes;
  seen[root] = 1;
  queue.push_back(root);
  while (!queue.empty()) {
    int st = queue.front();
    queue.pop_front();
    order.push_back(st);
    const int x = st / codes, code = st % codes;
    for (int k = 0; k < d; ++k) {
      if (used_of(code, k) == cap[k]) continue;
      auto [a, b] = distinct[k];
      for (auto [in, out] : {std::pair{a, b}, std::pair{b, a}}) {
        if (!host.adjacent(x, in)) continue;
        int next = out * codes + code + radix[k];
        if (seen[next]) continue;
        seen[next] = 1;
        parent[next] = {st, in, k};
        queue.push_back(next);
      }
    }
  }

  std::vector<std::optional<EvenConnection>> out(n);
  for (int st : order) {
    if (st % codes == 0) continue;
    const int x = st / codes;
    VertexMask targets = host.neighbors(x);
    for_each_bit(targets, [&](int v) {
      if (out[v]) return;
      EvenConnection c;
      std::vector<int> rev{v, x};
      std::vector<Edge> uses;
      for (int cur = st; parent[cur].state >= 0; cur = parent[cur].state) {
        rev.push_back(parent[cur].via);
        rev.push_back(parent[cur].state / codes);
        uses.push_back(distinct[parent[cur].edge]);
      }
      c.sequence.assign(rev.rbegin(), rev.rend());
      c.uses.assign(uses.rbegin(), uses.rend());
      out[v] = std::move(c);
    });
  }
  return out;
}

std::optional<EvenConnection> find_even_connection(const SimpleGraph& host,
                                                   const SFoldProduct& m, int u, int v) {
  if (u < 0 || v < 0 || u >= host.size() || v >= host.size()) throw Error("vertex out of range");
  return even_connections_from(host, m, u)[v];
}

std::string square_copy_label(const std::string& label) { return label + "'"; }

ColonGraph colon_graph(const SimpleGraph& host, const SFoldProduct& m) {
  const int n = host.size();
  ColonGraph out;
  for (int u = 0; u < n; ++u) {
    auto conns = even_connections_from(host, m, u);
    for (int v = u; v < n; ++v) {
      if (!conns[v]) continue;
      if (v == u) {
        out.squares.push_back(u);
        out.witnesses[{u, u}] = *conns[v];
      } else if (!host.adjacent(u, v)) {
        out.new_edges.emplace_back(u, v);
        out.witnesses[{u, v}] = *conns[v];
      }
    }
  }
  std::vector<std::string> labels = host.labels();
  std::vector<Edge> edges = host.edges();
  edges.insert(edges.end(), out.new_edges.begin(), out.new_edges.end());
  for (int u : out.squares) {
    labels.push_back(square_copy_label(host.label(u)));
    edges.emplace_back(u, static_cast<int>(labels.size()) - 1);
  }
  out.graph = SimpleGraph(std::move(labels), edges);
  return out;
}

std::vector<Edge> default_edge_order(const SimpleGraph& host) { return host.edges(); }

std::vector<unsigned> vertex_exponents(const SimpleGraph& host, const Monomial& m) {
  std::vector<unsigned> e(host.size(), 0);
  for (const auto& [var, k] : m.terms()) {
    auto v = host.find(var.label());
    if (!v) throw Error("monomial " + m.str() + " uses a variable outside the graph");
    e[*v] = k;
  }
  return e;
}

namespace {

// Depth-first over `order`, trying the largest multiplicity of each edge
// first. `visit` returns false to stop.
void factor(const std::vector<Edge>& order, std::size_t k, std::vector<unsigned>& rest,
            unsigned left, std::vector<unsigned>& counts,
            const std::function<bool(const std::vector<unsigned>&)>& visit, bool& stop) {
  if (stop) return;
  if (left == 0) {
    if (std::all_of(rest.begin(), rest.end(), [](unsigned x) { return x == 0; }))
      if (!visit(counts)) stop = true;
    return;
  }
  if (k == order.size()) return;
  auto [a, b] = order[k];
  unsigned top = std::min({rest[a], rest[b], left});
  for (unsigned c = top + 1; c-- > 0 && !stop;) {
    rest[a] -= c;
    rest[b] -= c;
    counts[k] = c;
    factor(order, k + 1, rest, left - c, counts, visit, stop);
    counts[k] = 0;
    rest[a] += c;
    rest[b] += c;
  }
}

void check_order(const SimpleGraph& host, const std::vector<Edge>& order) {
  auto sorted = order;
  for (auto& e : sorted) e = normalized(e.first, e.second);
  std::sort(sorted.begin(), sorted.end());
  if (sorted != host.edges()) throw Error("edge order must list every host edge exactly once");
}

}  // namespace

std::vector<std::vector<Edge>> edge_factorizations(const SimpleGraph& host, const Monomial& m,
                                                   unsigned s) {
  auto order = default_edge_order(host);
  auto rest = vertex_exponents(host, m);
  std::vector<unsigned> counts(order.size(), 0);
  std::vector<std::vector<Edge>> out;
  bool stop = false;
  factor(order, 0, rest, s, counts, [&](const std::vector<unsigned>& c) {
    std::vector<Edge> f;
    for (std::size_t k = 0; k < c.size(); ++k) f.insert(f.end(), c[k], order[k]);
    out.push_back(std::move(f));
    return true;
  }, stop);
  return out;
}

std::vector<unsigned> maximal_expression(const SimpleGraph& host, const Monomial& m,
                                         const std::vector<Edge>& order, unsigned s) {
  check_order(host, order);
  std::vector<Edge> norm = order;
  for (auto& e : norm) e = normalized(e.first, e.second);
  auto rest = vertex_exponents(host, m);
  std::vector<unsigned> counts(norm.size(), 0), best;
  bool stop = false;
  factor(norm, 0, rest, s, counts, [&](const std::vector<unsigned>& c) {
    best = c;
    return false;
  }, stop);
  if (best.empty())
    throw Error(m.str() + " is not a product of " + std::to_string(s) + " edges");
  return best;
}

SFoldProduct GeneratorOrder::product(std::size_t k) const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_order.size(); ++i)
    edges.insert(edges.end(), expressions.at(k)[i], normalized(edge_order[i].first,
                                                               edge_order[i].second));
  std::sort(edges.begin(), edges.end());
  return SFoldProduct{std::move(edges)};
}

GeneratorOrder ordered_generators(const SimpleGraph& host, unsigned s, std::vector<Edge> order) {
  if (s < 1) throw Error("power must be at least 1");
  if (order.empty()) order = default_edge_order(host);
  check_order(host, order);
  GeneratorOrder out;
  out.edge_order = order;
  out.s = s;
  auto gens = power(edge_ideal(host), s).generators();
  std::vector<std::pair<std::vector<unsigned>, Monomial>> keyed;
  for (const auto& g : gens) keyed.emplace_back(maximal_expression(host, g, order, s), g);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 1; k < keyed.size(); ++k)
    if (keyed[k - 1].first == keyed[k].first)
      throw Error("two generators share a maximal expression");
  for (auto& [e, g] : keyed) {
    out.expressions.push_back(std::move(e));
    out.generators.push_back(std::move(g));
  }
  return out;
}

OrderedColonReport verify_ordered_colon_decomposition(const SimpleGraph& host,
                                                      const GeneratorOrder& order, int ell) {
  const int r = static_cast<int>(order.generators.size());
  if (ell < 1 || ell > r - 1)
    throw Error("ell must lie between 1 and " + std::to_string(r - 1));
  const MonomialIdeal next = power(edge_ideal(host), order.s + 1);
  std::vector<Monomial> earlier(order.generators.begin(), order.generators.begin() + ell);
  const Monomial& pivot = order.generators[ell];
  OrderedColonReport rep;
  rep.ell = ell;
  rep.lhs = colon(add(next, earlier), pivot);
  rep.colon = colon(next, pivot);
  std::vector<Monomial> vars;
  for (const auto& g : rep.lhs.generators()) {
    if (g.degree() != 1) continue;
    vars.push_back(g);
    rep.variables.push_back(g.support().front());
  }
  rep.holds = add(rep.colon, vars) == rep.lhs;
  return rep;
}

std::vector<OrderedColonReport> verify_ordered_colon_decomposition(const SimpleGraph& host,
                                                                   const GeneratorOrder& order) {
  std::vector<OrderedColonReport> out;
  for (int ell = 1; ell < static_cast<int>(order.generators.size()); ++ell)
    out.push_back(verify_ordered_colon_decomposition(host, order, ell));
  return out;
}

}  // namespace regulab
