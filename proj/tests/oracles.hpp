#pragma once

// Brute-force reference implementations used only by the tests. They trade
// speed for obviousness and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "regulab/graph.hpp"
#include "regulab/ideal.hpp"

namespace oracle {

using regulab::SimpleGraph;

inline std::vector<std::string> vlabels(int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back("v" + std::to_string(i));
  return l;
}

/// Every labelled graph on n vertices, including the edgeless one.
inline std::vector<SimpleGraph> graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<SimpleGraph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1) e.push_back(pairs[k]);
    out.emplace_back(vlabels(n), e);
  }
  return out;
}

inline SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return SimpleGraph(vlabels(n), e);
}

inline std::vector<int> members(std::uint64_t m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

inline int edges_within(const SimpleGraph& g, const std::vector<int>& s) {
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) c += g.adjacent(s[i], s[j]);
  return c;
}

inline bool gap_free(const SimpleGraph& g) {
  // A gap is an induced 2K2: four vertices, exactly two disjoint edges.
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<int> s{a, b, c, d};
          if (edges_within(g, s) != 2) continue;
          std::vector<int> deg(4, 0);
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              if (i != j && g.adjacent(s[i], s[j])) ++deg[i];
          if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; })) return false;
        }
  return true;
}

inline bool diamond_free(const SimpleGraph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (edges_within(g, {a, b, c, d}) == 5) return false;
  return true;
}

inline int clique_number(const SimpleGraph& g) {
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
    auto s = members(m);
    const int k = static_cast<int>(s.size());
    if (k > best && edges_within(g, s) == k * (k - 1) / 2) best = k;
  }
  return best;
}

/// Vertex set induces a cycle: connected and 2-regular inside the set.
inline bool induces_cycle(const SimpleGraph& g, const std::vector<int>& s) {
  if (s.size() < 3) return false;
  for (int v : s) {
    int d = 0;
    for (int w : s) d += v != w && g.adjacent(v, w);
    if (d != 2) return false;
  }
  std::vector<int> seen{s.front()};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (int w : s)
      if (g.adjacent(seen[i], w) && std::find(seen.begin(), seen.end(), w) == seen.end())
        seen.push_back(w);
  return seen.size() == s.size();
}

inline std::vector<std::uint64_t> induced_cycle_sets(const SimpleGraph& g, int len) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m)
    if (__builtin_popcountll(m) == len && induces_cycle(g, members(m))) out.push_back(m);
  return out;
}

inline bool chordal(const SimpleGraph& g) {
  for (int len = 4; len <= g.size(); ++len)
    if (!induced_cycle_sets(g, len).empty()) return false;
  return true;
}

inline bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && h.adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Rank over GF(p) of a dense matrix, plain Gaussian elimination.
inline int rank_mod(std::vector<std::vector<long long>> a, long long p) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (((a[i][c] % p) + p) % p) piv = i;
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    long long iv = inv(((a[r][c] % p) + p) % p);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      long long f = ((a[i][c] % p) + p) % p * iv % p;
      if (!f) continue;
      for (int k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Graded Betti numbers b_{i,j} of a squarefree monomial ideal over GF(p)
/// (p odd prime or 2), by Hochster's formula over every vertex subset with
/// dense boundary matrices.
inline std::map<std::pair<int, int>, int> betti_squarefree(const regulab::MonomialIdeal& ideal,
                                                           long long p) {
  const auto vars = ideal.variables();
  const int n = static_cast<int>(vars.size());
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.generators()) {
    std::uint64_t m = 0;
    for (const auto& v : g.support())
      m |= std::uint64_t{1} << (std::find(vars.begin(), vars.end(), v) - vars.begin());
    supports.push_back(m);
  }
  auto is_face = [&](std::uint64_t f) {
    for (auto s : supports)
      if ((s & f) == s) return false;
    return true;
  };
  std::map<std::pair<int, int>, int> out;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    const int j = __builtin_popcountll(w);
    std::vector<std::vector<std::uint64_t>> faces(j + 2);  // faces[d + 1], d >= -1
    for (std::uint64_t f = w;; f = (f - 1) & w) {
      if (is_face(f)) faces[__builtin_popcountll(f)].push_back(f);
      if (f == 0) break;
    }
    // rank of boundary from dimension d faces (size d + 1) to size d
    std::vector<int> rk(j + 2, 0);
    for (int sz = 1; sz <= j; ++sz) {
      const auto& hi = faces[sz];
      const auto& lo = faces[sz - 1];
      if (hi.empty() || lo.empty()) continue;
      std::vector<std::vector<long long>> m(lo.size(), std::vector<long long>(hi.size(), 0));
      for (std::size_t c = 0; c < hi.size(); ++c) {
        int sign = 1;
        for (int v = 0; v < n; ++v) {
          if (!(hi[c] >> v & 1)) continue;
          auto face = hi[c] & ~(std::uint64_t{1} << v);
          auto it = std::find(lo.begin(), lo.end(), face);
          m[it - lo.begin()][c] = sign;
          sign = -sign;
        }
      }
      rk[sz] = rank_mod(m, p);
    }
    for (int sz = 0; sz <= j; ++sz) {
      // reduced homology in dimension sz - 1
      const int h = static_cast<int>(faces[sz].size()) - rk[sz] - rk[sz + 1];
      if (h > 0) {
        const int i = j - (sz - 1) - 2;
        if (i >= 0) out[{i, j}] += h;
      }
    }
  }
  return out;
}

}  // namespace oracle
