#include "regulab/structure.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "regulab/catalog.hpp"

namespace regulab {

namespace {

bool has_isolated(const SimpleGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

std::string join_labels(const SimpleGraph& g, VertexMask m) {
  std::string out;
  for (const auto& l : g.labels_of(m)) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

std::string join_sequence(const SimpleGraph& g, const std::vector<int>& seq) {
  std::string out;
  for (int v : seq) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

/// Isomorphism h -> base, preferring the identity on labels when it works.
std::optional<std::vector<int>> match_base(const SimpleGraph& h, const SimpleGraph& base) {
  if (h.size() != base.size() || h.edge_count() != base.edge_count()) return std::nullopt;
  std::vector<int> ident(h.size());
  bool ok = true;
  for (int v = 0; v < h.size() && ok; ++v) {
    auto b = base.find(h.label(v));
    if (!b) ok = false;
    else ident[v] = *b;
  }
  if (ok) {
    for (auto [a, b] : h.edges())
      if (!base.adjacent(ident[a], ident[b])) ok = false;
  }
  if (ok) return ident;
  return find_isomorphism(h, base);
}

}  // namespace

bool is_dominating(const SimpleGraph& g, VertexMask clique) {
  VertexMask reach = clique;
  for_each_bit(clique, [&](int v) { reach |= g.neighbors(v); });
  return (reach & g.all()) == g.all();
}

std::vector<VertexMask> dominating_max_cliques(const SimpleGraph& g) {
  std::vector<VertexMask> out;
  for (auto c : max_cliques(g))
    if (is_dominating(g, c)) out.push_back(c);
  return out;
}

std::optional<VertexMask> dominating_clique(const SimpleGraph& g) {
  if (!is_gap_free(g)) throw Error("dominating clique search needs a gap-free graph");
  if (has_isolated(g)) throw Error("dominating clique search needs a graph without isolated vertices");
  if (clique_number(g) < 3) throw Error("dominating clique search needs clique number at least 3");
  auto all = dominating_max_cliques(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<std::map<std::string, int>> c5_multiplication_recognizer(const SimpleGraph& g) {
  if (!is_gap_free(g)) throw Error("C5 recognizer needs a gap-free graph");
  if (has_isolated(g)) throw Error("C5 recognizer needs a graph without isolated vertices");
  if (clique_number(g) != 2) throw Error("C5 recognizer needs a triangle-free graph with an edge");
  if (is_bipartite(g).bipartite) throw Error("C5 recognizer needs a non-bipartite graph");
  auto collapsed = collapse_false_twins(g);
  const SimpleGraph c5 = catalog::get("C_5");
  auto iso = match_base(collapsed.base, c5);
  if (!iso) return std::nullopt;
  std::map<std::string, int> out;
  for (int v = 0; v < collapsed.base.size(); ++v)
    out[c5.label((*iso)[v])] = collapsed.multiplicities.at(collapsed.base.label(v));
  return out;
}

std::string to_string(ClassificationStatus s) {
  switch (s) {
    case ClassificationStatus::Classified: return "classified";
    case ClassificationStatus::NotGapDiamondFree: return "not (gap,diamond)-free";
    case ClassificationStatus::NoInducedC5: return "no induced C5";
    case ClassificationStatus::Unrecognized: return "unrecognized";
  }
  return "unknown";
}

ClassificationResult classify_gap_diamond_free(const SimpleGraph& g) {
  if (g.size() == 0 || !is_connected(g)) throw Error("classification needs a connected graph");
  ClassificationResult r;
  if (auto gap = contains_induced(g, Pattern::gap())) {
    r.status = ClassificationStatus::NotGapDiamondFree;
    r.detail = "gap on " + join_sequence(g, gap->mapping);
    return r;
  }
  if (auto d = contains_induced(g, Pattern::diamond())) {
    r.status = ClassificationStatus::NotGapDiamondFree;
    r.detail = "diamond on " + join_sequence(g, d->mapping);
    return r;
  }
  if (!contains_induced(g, Pattern::cycle(5))) {
    r.status = ClassificationStatus::NoInducedC5;
    return r;
  }
  auto collapsed = collapse_false_twins(g);
  for (const auto& name : catalog::classification_bases()) {
    const SimpleGraph base = catalog::get(name);
    auto iso = match_base(collapsed.base, base);
    if (!iso) continue;
    r.base = name;
    for (int v = 0; v < collapsed.base.size(); ++v) {
      const std::string& cls = collapsed.base.label(v);
      const std::string& target = base.label((*iso)[v]);
      r.multiplicities[target] = collapsed.multiplicities.at(cls);
      for (const auto& member : collapsed.classes.at(cls)) r.witness[member] = target;
    }
    VertexMask in_triangle = 0;
    for (auto t : triangles(base)) in_triangle |= t;
    for (const auto& [label, k] : r.multiplicities) {
      if (k > 1 && (in_triangle & bit(base.index(label)))) {
        r.status = ClassificationStatus::Unrecognized;
        r.detail = "multiplied vertex " + label + " lies in a triangle of " + name;
        return r;
      }
    }
    r.status = ClassificationStatus::Classified;
    return r;
  }
  r.status = ClassificationStatus::Unrecognized;
  r.detail = "twin-free core on " + std::to_string(collapsed.base.size()) +
             " vertices matches no base";
  return r;
}

bool LemmaReport::pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseCheck& c) { return !c.applicable || c.pass; });
}

LemmaReport check_structure_lemmas(const SimpleGraph& g) {
  LemmaReport rep;
  const bool gap_free = is_gap_free(g);
  const bool diamond_free = is_diamond_free(g);
  const int omega = clique_number(g);
  const bool isolated = has_isolated(g);

  ClauseCheck unique;
  unique.name = "dominating-clique-unique-neighbour";
  ClauseCheck large;
  large.name = "large-clique-rest-independent";
  ClauseCheck tri;
  tri.name = "triangle-neighbourhoods-independent";
  unique.applicable = gap_free && diamond_free && omega >= 3 && !isolated;
  large.applicable = unique.applicable && omega >= 4;
  tri.applicable = unique.applicable && omega == 3;
  if (unique.applicable) {
    std::optional<VertexMask> chosen;
    for (auto k : dominating_max_cliques(g)) {
      bool ok = true;
      for_each_bit(g.all() & ~k, [&](int v) { ok = ok && popcount(g.neighbors(v) & k) == 1; });
      if (ok) {
        chosen = k;
        break;
      }
    }
    unique.pass = chosen.has_value();
    unique.detail = chosen ? "clique " + join_labels(g, *chosen) : "no dominating maximum clique "
                                                                  "with unique attachments";
    if (large.applicable) {
      large.pass = chosen && g.is_independent(g.all() & ~*chosen) &&
                   is_chordal(complement(g)).chordal;
      large.detail = unique.detail;
    }
    if (tri.applicable) {
      tri.pass = chosen.has_value();
      if (chosen) {
        for_each_bit(*chosen, [&](int x) {
          VertexMask outside = g.neighbors(x) & ~*chosen;
          if (!g.is_independent(outside)) {
            tri.pass = false;
            tri.detail += "N(" + g.label(x) + ") outside the clique has an edge; ";
          }
          SimpleGraph rest = remove_vertices(g, closed_neighborhood(g, x));
          if (!is_bipartite(rest).bipartite) {
            tri.pass = false;
            tri.detail += "G - st " + g.label(x) + " is not bipartite; ";
          }
        });
      }
      if (tri.pass) tri.detail = unique.detail;
    }
  }
  rep.clauses.push_back(unique);
  rep.clauses.push_back(large);
  rep.clauses.push_back(tri);

  ClauseCheck bip;
  bip.name = "bipartite-complement-chordal";
  bip.applicable = gap_free && is_bipartite(g).bipartite;
  if (bip.applicable) {
    auto ch = is_chordal(complement(g));
    bip.pass = ch.chordal;
    if (!ch.chordal) bip.detail = "complement hole " + join_sequence(g, ch.hole);
  }
  rep.clauses.push_back(bip);

  ClauseCheck anti;
  anti.name = "c6-complement-dichotomy";
  anti.applicable = gap_free && g.size() > 0 && is_connected(g) && diamond_free && omega == 3 &&
                    !contains_induced(g, Pattern::cycle(5));
  if (anti.applicable) {
    const SimpleGraph c6c = complement(catalog::get("C_6"));
    if (g.size() == 6 && find_isomorphism(g, c6c)) {
      anti.detail = "graph is the complement of C6";
    } else {
      auto ch = is_chordal(complement(g));
      anti.pass = ch.chordal;
      anti.detail = ch.chordal ? "complement chordal" : "complement hole " + join_sequence(g, ch.hole);
    }
  }
  rep.clauses.push_back(anti);
  return rep;
}

std::vector<std::vector<int>> induced_anticycles(const SimpleGraph& g, int min_n) {
  VertexMask keep = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) >= 2) keep |= bit(v);
  std::vector<int> index;
  for_each_bit(keep, [&](int v) { index.push_back(v); });
  const SimpleGraph comp = complement(induced_subgraph(g, keep));
  std::vector<std::vector<int>> out;
  for (int n = std::max(min_n, 3); n <= comp.size(); ++n) {
    for (auto cyc : induced_cycles(comp, n)) {
      for (int& v : cyc) v = index[v];
      out.push_back(std::move(cyc));
    }
  }
  return out;
}

LemmaReport check_colon_graph_lemmas(const SimpleGraph& host, const SFoldProduct& m,
                                     const ColonGraph& colon) {
  LemmaReport rep;
  const SimpleGraph& gp = colon.graph;
  const bool gap_free = is_gap_free(host);
  const bool diamond_free = is_diamond_free(host);
  const auto anticycles = gap_free ? induced_anticycles(gp, 5) : std::vector<std::vector<int>>{};
  VertexMask product = 0;
  for (auto [a, b] : m.edges) product |= bit(a) | bit(b);

  ClauseCheck gapc;
  gapc.name = "colon-gap-free";
  gapc.applicable = gap_free;
  if (gap_free) {
    auto gap = contains_induced(gp, Pattern::gap());
    gapc.pass = !gap.has_value();
    if (gap) gapc.detail = "gap on " + join_labels(gp, gap->image());
  }

  ClauseCheck lifts;
  lifts.name = "anticycle-lifts";
  ClauseCheck avoids;
  avoids.name = "anticycle-avoids-product";
  ClauseCheck large;
  large.name = "no-large-anticycle";
  lifts.applicable = avoids.applicable = gap_free;
  large.applicable = gap_free && diamond_free;
  for (const auto& cyc : anticycles) {
    VertexMask mask = 0;
    bool in_host = true;
    for (int v : cyc) {
      mask |= bit(v);
      in_host = in_host && v < host.size();
    }
    const std::string where = join_labels(gp, mask);
    std::vector<int> local;
    for (int v : cyc) local.push_back(popcount(mask & (bit(v) - 1)));
    if (!in_host || !is_induced_cycle(complement(induced_subgraph(host, mask)), local)) {
      lifts.pass = false;
      lifts.detail += "not induced in the host: " + where + "; ";
    }
    if (mask & product) {
      avoids.pass = false;
      avoids.detail += "meets the product: " + where + "; ";
    }
    if (cyc.size() >= 6 && large.applicable) {
      large.pass = false;
      large.detail += "C_" + std::to_string(cyc.size()) + "^c on " + where + "; ";
    }
  }
  if (gap_free) lifts.detail += std::to_string(anticycles.size()) + " anticycles checked";

  ClauseCheck tri_c5;
  tri_c5.name = "dominating-triangle-c5";
  ClauseCheck tri_lin;
  tri_lin.name = "dominating-triangle-linear";
  if (gap_free && diamond_free && host.size() > 0 && !has_isolated(host) &&
      clique_number(host) == 3) {
    for (VertexMask t : dominating_max_cliques(host)) {
      bool hit = false;
      for (auto [a, b] : m.edges)
        if ((t & (bit(a) | bit(b))) == (bit(a) | bit(b))) hit = true;
      if (!hit) continue;
      tri_c5.applicable = tri_lin.applicable = true;
      for (const auto& cyc : induced_cycles(gp, 5)) {
        VertexMask mask = 0;
        for (int v : cyc) mask |= bit(v);
        if (popcount(mask & t) < 2) {
          tri_c5.pass = false;
          tri_c5.detail += "C_5 " + join_labels(gp, mask) + " vs triangle " + join_labels(host, t) + "; ";
        }
      }
      tri_lin.detail = "triangle " + join_labels(host, t);
    }
    if (tri_lin.applicable) {
      tri_lin.pass = gp.edge_count() == 0 || is_chordal(complement(gp)).chordal;
      if (!tri_lin.pass) tri_lin.detail += ": complement of the colon graph is not chordal";
    }
  }

  rep.clauses = {gapc, lifts, avoids, large, tri_c5, tri_lin};
  return rep;
}

bool C5EdgeReport::pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const C5EdgeCase& c) { return c.clause != "none"; });
}

C5EdgeReport check_computer_aided_lemma(const SimpleGraph& g) {
  C5EdgeReport rep;
  rep.applicable = is_gap_free(g) && is_diamond_free(g) && clique_number(g) == 3;
  if (!rep.applicable) return rep;
  rep.dominating_triangles = dominating_max_cliques(g);
  const auto edges = g.edges();
  for (const auto& cycle : induced_cycles(g, 5)) {
    VertexMask cmask = 0;
    for (int v : cycle) cmask |= bit(v);
    auto consecutive = [&cycle](int x, int y) {
      for (int i = 0; i < 5; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % 5];
        if ((a == x && b == y) || (a == y && b == x)) return true;
      }
      return false;
    };
    for (auto e : edges) {
      if (cmask & (bit(e.first) | bit(e.second))) continue;
      C5EdgeCase c{cycle, e, "none"};
      VertexMask em = bit(e.first) | bit(e.second);
      for (auto t : rep.dominating_triangles)
        if ((t & em) == em) c.clause = "dominating-triangle";
      if (c.clause == "none") {
        for (auto [a, b] : {e, Edge{e.second, e.first}}) {
          for (int u : cycle) {
            if (!g.adjacent(a, u)) continue;
            for (int v : cycle) {
              if (v == u || !g.adjacent(b, v) || consecutive(u, v)) continue;
              c.clause = "cross-neighbours";
              c.u = u;
              c.v = v;
              break;
            }
            if (c.clause != "none") break;
          }
          if (c.clause != "none") break;
        }
      }
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

std::string BanerjeeReport::verdict() const {
  if (certified)
    return "linear powers certified (colon hypothesis checked for s <= " + std::to_string(s_max) +
           ")";
  return "inconclusive";
}

BanerjeeReport banerjee_sufficiency_check(const SimpleGraph& g, unsigned s_max,
                                          const BanerjeeOptions& opts) {
  BanerjeeReport rep;
  rep.s_max = s_max;
  rep.base_fast_path = g.edge_count() > 0 && froberg_linear_check(g);
  rep.base_regularity = edge_ideal_regularity(g, opts.field, opts.betti);
  bool ok = rep.base_regularity <= 4;
  if (g.edge_count() > 0) {
    const MonomialIdeal ideal = edge_ideal(g);
    for (unsigned s = 1; s <= s_max; ++s) {
      const GeneratorOrder order = ordered_generators(g, s, opts.edge_order);
      const MonomialIdeal next = opts.cross_check_ideals ? power(ideal, s + 1) : MonomialIdeal{};
      for (std::size_t k = 0; k < order.generators.size(); ++k) {
        ColonCase c;
        c.s = s;
        c.index = k;
        c.generator = order.generators[k];
        c.expression = order.product(k);
        ColonGraph cg = colon_graph(g, c.expression);
        c.colon = cg.graph;
        if (c.colon.edge_count() == 0) {
          c.regularity = 1;
        } else if (froberg_linear_check(c.colon)) {
          c.fast_path = true;
          c.regularity = 2;
        } else {
          try {
            c.regularity = regularity(edge_ideal(c.colon), opts.field, opts.betti);
          } catch (const SizeLimitError&) {
            c.skipped = true;
          }
        }
        if (opts.cross_check_ideals)
          c.ideal_matches = edge_ideal(c.colon) == polarize(colon(next, c.generator)).ideal;
        const bool bad = c.skipped || c.regularity > 2 || !c.ideal_matches;
        if (bad) {
          ok = false;
          rep.offending.push_back(rep.cases.size());
        }
        rep.cases.push_back(std::move(c));
      }
    }
  }
  rep.certified = ok;
  return rep;
}

StarBound reg_upper_bound_via_star(const SimpleGraph& g) {
  StarBound out;
  std::unordered_map<VertexMask, int> memo;
  std::function<int(VertexMask)> rec = [&](VertexMask m) -> int {
    VertexMask core = 0;
    for_each_bit(m, [&](int v) {
      if (g.neighbors(v) & m) core |= bit(v);
    });
    if (auto it = memo.find(core); it != memo.end()) return it->second;
    StarStep step;
    step.vertices = core;
    if (core == 0) {
      step.bound = 1;
      step.rule = "edgeless";
    } else {
      SimpleGraph h = induced_subgraph(g, core);
      std::vector<int> back;
      for_each_bit(core, [&](int v) { back.push_back(v); });
      if (froberg_linear_check(h)) {
        step.bound = 2;
        step.rule = "chordal-complement";
      } else {
        auto doms = dominating_max_cliques(h);
        VertexMask pool = doms.empty() ? h.all() : doms.front();
        int x = -1;
        for_each_bit(pool, [&](int v) {
          if (x < 0 || h.degree(v) > h.degree(x)) x = v;
        });
        const int gx = back[x];
        int a = rec(core & ~closed_neighborhood(g, gx)) + 1;
        int b = rec(core & ~bit(gx));
        step.x = gx;
        step.bound = std::max(a, b);
        step.rule = "star";
      }
    }
    memo[core] = step.bound;
    out.trace.push_back(step);
    return step.bound;
  };
  out.bound = rec(g.all());
  return out;
}

}  // namespace regulab
