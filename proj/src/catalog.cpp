#include "regulab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace regulab::catalog {

namespace {

struct Literal {
  const char* name;
  std::vector<const char*> vertices;
  std::vector<std::pair<const char*, const char*>> edges;
};

#define C5_EDGES {"u_0", "u_1"}, {"u_1", "u_2"}, {"u_2", "u_3"}, {"u_3", "u_4"}, {"u_4", "u_0"}
#define A0_EDGES {"a_0", "u_0"}, {"a_0", "u_2"}, {"a_0", "u_3"}
#define A2_EDGES {"a_2", "u_0"}, {"a_2", "u_4"}, {"a_2", "u_2"}

const std::vector<Literal>& literals() {
  static const std::vector<Literal> data = {
      {"G_0",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "a_2", "y"},
       {C5_EDGES, A0_EDGES, A2_EDGES, {"y", "a_0"}, {"y", "a_2"}}},
      {"G_1", {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0"}, {C5_EDGES, A0_EDGES}},
      {"G_2", {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "a_2"}, {C5_EDGES, A0_EDGES, A2_EDGES}},
      {"G_3",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "b_0", "b_2"},
       {C5_EDGES, {"b_0", "u_4"}, {"b_0", "u_1"}, {"b_0", "b_2"}, {"b_2", "u_1"}, {"b_2", "u_3"}}},
      {"G_4",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "b_0", "b_2"},
       {C5_EDGES, {"b_0", "u_4"}, {"b_0", "u_1"}, {"b_2", "u_1"}, {"b_2", "u_3"}, A0_EDGES,
        {"b_0", "b_2"}}},
      {"G_5",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "b_1", "b_4"},
       {C5_EDGES, A0_EDGES, {"b_1", "u_0"}, {"b_4", "u_0"}, {"b_1", "u_2"}, {"b_4", "u_3"},
        {"b_1", "b_4"}}},
      {"G_6",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "b_1", "b_2", "b_4"},
       {C5_EDGES, A0_EDGES, {"b_1", "u_0"}, {"b_4", "u_0"}, {"b_1", "u_2"}, {"b_4", "u_3"},
        {"b_1", "b_4"}, {"b_2", "u_3"}, {"b_2", "u_1"}, {"b_1", "b_2"}}},
      {"G_7",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "a_2", "b_3", "b_4"},
       {C5_EDGES, A0_EDGES, A2_EDGES, {"b_4", "u_0"}, {"b_4", "u_3"}, {"b_3", "u_4"},
        {"b_3", "u_2"}, {"b_4", "b_3"}}},
      {"G_8",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "a_2", "b_2", "b_4"},
       {C5_EDGES, A0_EDGES, A2_EDGES, {"b_4", "u_0"}, {"b_4", "u_3"}, {"b_2", "a_2"},
        {"b_2", "u_1"}, {"b_2", "u_3"}}},
      {"G_9",
       {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "a_2", "b_0", "b_2"},
       {C5_EDGES, A0_EDGES, A2_EDGES, {"b_0", "u_4"}, {"b_0", "u_1"}, {"b_2", "a_2"},
        {"b_2", "u_1"}, {"b_2", "u_3"}, {"b_0", "a_0"}, {"b_0", "b_2"}}},
      {"G_10", {"u_0", "u_1", "u_2", "u_3", "u_4", "a_0", "y"}, {C5_EDGES, A0_EDGES, {"a_0", "y"}}},
  };
  return data;
}

#undef C5_EDGES
#undef A0_EDGES
#undef A2_EDGES

Metadata compute_metadata(const SimpleGraph& g) {
  Metadata m;
  m.gap_free = is_gap_free(g);
  m.diamond_free = is_diamond_free(g);
  m.has_induced_c5 = contains_induced(g, Pattern::cycle(5)).has_value();
  return m;
}

SimpleGraph build(const Literal& lit) {
  std::vector<std::string> labels(lit.vertices.begin(), lit.vertices.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : lit.edges) edges.emplace_back(a, b);
  return SimpleGraph::from_labelled_edges(std::move(labels), edges);
}

void self_check(const Entry& e) {
  auto fail = [&e](const std::string& what) {
    throw Error("catalog graph " + e.name + " fails its self-check: " + what);
  };
  const auto& g = e.graph;
  const bool is_g4 = e.name == "G_4";
  if (is_g4) {
    if (e.metadata.gap_free) fail("expected a gap");
  } else {
    if (!e.metadata.gap_free) fail("not gap-free");
  }
  if (!e.metadata.diamond_free) fail("not diamond-free");
  if (!e.metadata.has_induced_c5) fail("no induced C5");
  std::vector<int> cycle;
  for (int i = 0; i < 5; ++i) cycle.push_back(g.index("u_" + std::to_string(i)));
  if (!is_induced_cycle(g, cycle)) fail("u_0..u_4 is not an induced C5");
  if (e.name != "G_0" && e.name != "G_10" && clique_number(g) != 3) fail("clique number is not 3");
  if (collapse_false_twins(g).base.size() != g.size()) fail("has false twins");
}

const std::map<std::string, Entry>& named() {
  static const std::map<std::string, Entry> table = [] {
    std::map<std::string, Entry> t;
    for (const auto& lit : literals()) {
      Entry e{lit.name, build(lit), {}};
      e.metadata = compute_metadata(e.graph);
      self_check(e);
      t.emplace(e.name, std::move(e));
    }
    for (const auto& n : names()) {
      auto& e = t.at(n);
      for (const auto& m : names()) {
        if (m == n) break;
        if (t.at(m).metadata.isomorphic_to.empty() && find_isomorphism(t.at(m).graph, e.graph)) {
          e.metadata.isomorphic_to = m;
          break;
        }
      }
    }
    return t;
  }();
  return table;
}

std::string letters(int i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return s;
}

SimpleGraph cycle(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    labels.push_back("u" + std::to_string(i + 1));
    edges.emplace_back(i, (i + 1) % n);
  }
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph lettered(int n, bool complete) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) labels.push_back(letters(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (complete || j == i + 1) edges.emplace_back(i, j);
  return SimpleGraph(std::move(labels), edges);
}

std::string normalize(std::string_view name) {
  std::string s(name);
  if (s.rfind("catalog:", 0) == 0) s = s.substr(8);
  // "G0" -> "G_0", "C5^c" -> "C_5^c"
  if (s.size() >= 2 && std::isalpha(static_cast<unsigned char>(s[0])) &&
      std::isdigit(static_cast<unsigned char>(s[1])) && s != "2K2")
    s.insert(1, "_");
  return s;
}

int parse_size(const std::string& digits, const std::string& full) {
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error("unknown catalog graph '" + full + "'");
  return std::stoi(digits);
}

}  // namespace

Entry entry(std::string_view raw) {
  const std::string name = normalize(raw);
  if (auto it = named().find(name); it != named().end()) return it->second;
  auto make = [&](SimpleGraph g) {
    Entry e{name, std::move(g), {}};
    e.metadata = compute_metadata(e.graph);
    return e;
  };
  if (name == "2K2") return make(SimpleGraph({"a", "b", "c", "d"}, {{0, 1}, {2, 3}}));
  if (name.size() >= 3 && name[1] == '_') {
    const char kind = name[0];
    std::string rest = name.substr(2);
    bool comp = false;
    if (rest.size() > 2 && rest.compare(rest.size() - 2, 2, "^c") == 0) {
      comp = true;
      rest.resize(rest.size() - 2);
    }
    const int n = parse_size(rest, std::string(raw));
    if (n > kMaxVertices) throw Error("catalog graphs are limited to 64 vertices");
    if (kind == 'C' && n >= 3) return make(comp ? complement(cycle(n)) : cycle(n));
    if (!comp && kind == 'K' && n >= 1) return make(lettered(n, true));
    if (!comp && kind == 'P' && n >= 1) return make(lettered(n, false));
  }
  throw Error("unknown catalog graph '" + std::string(raw) + "'");
}

SimpleGraph get(std::string_view name) { return entry(name).graph; }

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& lit : literals()) out.push_back(lit.name);
  return out;
}

std::vector<std::string> classification_bases() {
  return {"C_5", "G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"};
}

std::vector<SimpleGraph> enumerate_family(std::string_view base, int max_multiplicity,
                                          FamilyFilter filter) {
  return enumerate_family(get(base), max_multiplicity, filter);
}

std::vector<SimpleGraph> enumerate_family(const SimpleGraph& base, int max_multiplicity,
                                          FamilyFilter filter) {
  if (max_multiplicity < 1) throw Error("maximum multiplicity must be at least 1");
  VertexMask in_triangle = 0;
  for (auto t : triangles(base)) in_triangle |= t;
  std::vector<int> free;
  for_each_bit(base.all() & ~in_triangle, [&](int v) { free.push_back(v); });

  std::vector<SimpleGraph> out;
  std::vector<int> mult(free.size(), 1);
  for (;;) {
    std::map<std::string, int> plan;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mult[k] > 1) plan[base.label(free[k])] = mult[k];
    SimpleGraph g = multiply_vertices(base, plan);
    bool keep = filter == FamilyFilter::All || (is_gap_free(g) && is_diamond_free(g));
    if (keep) {
      for (const auto& h : out) {
        if (h.size() == g.size() && h.edge_count() == g.edge_count() &&
            find_isomorphism(h, g)) {
          keep = false;
          break;
        }
      }
    }
    if (keep) out.push_back(std::move(g));
    std::size_t k = 0;
    while (k < mult.size() && mult[k] == max_multiplicity) mult[k++] = 1;
    if (k == mult.size()) break;
    ++mult[k];
  }
  return out;
}

}  // namespace regulab::catalog
