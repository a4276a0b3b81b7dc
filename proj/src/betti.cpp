#include "regulab/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

#include "regulab/parallel.hpp"

namespace regulab {

SizeLimitError::SizeLimitError(int vertices, int limit)
    : Error("ideal needs " + std::to_string(vertices) +
            " (polarized) variables; the homology engine is limited to " +
            std::to_string(limit)),
      vertices_(vertices),
      limit_(limit) {}

std::uint32_t NonFaceSystem::all() const {
  return size() >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size()) - 1;
}

bool NonFaceSystem::is_face(std::uint32_t mask) const {
  return std::none_of(nonfaces.begin(), nonfaces.end(),
                      [mask](std::uint32_t n) { return (n & mask) == n; });
}

std::uint32_t NonFaceSystem::mask_of(const std::vector<Variable>& vs) const {
  std::uint32_t m = 0;
  for (const auto& v : vs) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) throw Error("unknown vertex " + v.label());
    m |= std::uint32_t{1} << (it - vertices.begin());
  }
  return m;
}

std::vector<std::uint32_t> NonFaceSystem::faces_within(std::uint32_t w) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = w;; s = (s - 1) & w) {
    if (is_face(s)) out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

NonFaceSystem stanley_reisner(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw Error("Stanley-Reisner complex needs a squarefree ideal");
  NonFaceSystem nf;
  nf.vertices = i.variables();
  if (nf.size() > 32) throw SizeLimitError(nf.size(), 32);
  for (const auto& g : i.generators()) nf.nonfaces.push_back(nf.mask_of(g.support()));
  return nf;
}

HomologyRanks reduced_homology_dims(const NonFaceSystem& nf, std::uint32_t w,
                                    const FieldSpec& field) {
  if (w & ~nf.all()) throw Error("vertex subset is not contained in the vertex set");
  auto faces = nf.faces_within(w);
  return reduced_homology(faces, field);
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries.empty()) return 1;
  int r = std::numeric_limits<int>::min();
  for (const auto& [ij, b] : entries)
    if (b) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [ij, b] : entries)
    if (b) p = std::max(p, ij.first);
  return p;
}

std::string BettiTable::str() const {
  if (entries.empty()) return "0\n";
  int rmin = std::numeric_limits<int>::max(), rmax = std::numeric_limits<int>::min();
  int imax = projective_dimension();
  for (const auto& [ij, b] : entries) {
    rmin = std::min(rmin, ij.second - ij.first);
    rmax = std::max(rmax, ij.second - ij.first);
  }
  const int width = 7;
  std::ostringstream os;
  os << std::string(6, ' ');
  for (int i = 0; i <= imax; ++i) os << std::setw(width) << i;
  os << '\n';
  for (int r = rmin; r <= rmax; ++r) {
    os << std::setw(4) << r << ": ";
    for (int i = 0; i <= imax; ++i) {
      auto b = at(i, i + r);
      if (b)
        os << std::setw(width) << b;
      else
        os << std::setw(width) << '.';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void check_generator_row(const BettiTable& t, const MonomialIdeal& i) {
  std::map<int, std::uint64_t> by_degree;
  for (const auto& g : i.generators()) ++by_degree[static_cast<int>(g.degree())];
  std::map<int, std::uint64_t> row;
  for (const auto& [ij, b] : t.entries)
    if (ij.first == 0) row[ij.second] = b;
  if (row != by_degree) throw Error("internal error: b_0 row does not count the generators");
}

using Table = std::map<std::pair<int, int>, std::uint64_t>;

BettiTable merge(std::vector<Table>& parts, const FieldSpec& field) {
  BettiTable t;
  t.field = field;
  for (auto& part : parts)
    for (auto& [k, v] : part) t.entries[k] += v;
  return t;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& i, const FieldSpec& field, const BettiOptions& opts) {
  validate(field);
  if (i.is_zero()) return BettiTable{{}, field};
  if (i.generators().front().is_one()) return BettiTable{{{{0, 0}, 1}}, field};
  MonomialIdeal sq = i.is_squarefree() ? i : polarize(i).ideal;
  const int n = static_cast<int>(sq.variables().size());
  if (n > opts.max_vertices) throw SizeLimitError(n, opts.max_vertices);
  NonFaceSystem nf = stanley_reisner(sq);

  const std::size_t cube = std::size_t{1} << n;
  std::vector<std::uint8_t> nonface(cube, 0);
  for (auto m : nf.nonfaces) nonface[m] = 1;
  for (int v = 0; v < n; ++v)
    for (std::size_t m = 0; m < cube; ++m)
      if (m >> v & 1) nonface[m] |= nonface[m ^ (std::size_t{1} << v)];

  // Only unions of non-faces can carry homology; elsewhere the restriction
  // is a cone.
  std::vector<std::uint32_t> candidates{0};
  {
    std::unordered_set<std::uint32_t> seen{0};
    for (auto g : nf.nonfaces) {
      std::size_t k = candidates.size();
      for (std::size_t a = 0; a < k; ++a) {
        std::uint32_t u = candidates[a] | g;
        if (seen.insert(u).second) candidates.push_back(u);
      }
    }
  }
  candidates.erase(candidates.begin());
  std::sort(candidates.begin(), candidates.end());

  const int jobs = resolve_jobs(opts.jobs);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(candidates.size())));
  std::vector<Table> parts(workers);
  std::vector<HomologyEngine> engines;
  engines.reserve(workers);
  for (int w = 0; w < workers; ++w) engines.emplace_back(n);
  std::vector<std::vector<std::uint32_t>> scratch(workers);

  parallel_for(candidates.size(), workers, [&](std::size_t idx, int worker) {
    std::uint32_t w = candidates[idx];
    auto& faces = scratch[worker];
    faces.clear();
    for (std::uint32_t s = w;; s = (s - 1) & w) {
      if (!nonface[s]) faces.push_back(s);
      if (s == 0) break;
    }
    int j = __builtin_popcount(w);
    for (auto [k, rank] : engines[worker].compute(faces, field))
      parts[worker][{j - k - 2, j}] += rank;
  });

  BettiTable t = merge(parts, field);
  check_generator_row(t, sq);
  return t;
}

BettiTable betti_table_koszul(const MonomialIdeal& i, const FieldSpec& field,
                              const BettiOptions& opts) {
  validate(field);
  if (i.is_zero()) return BettiTable{{}, field};
  if (i.generators().front().is_one()) return BettiTable{{{{0, 0}, 1}}, field};
  const auto vars = i.variables();
  const int n = static_cast<int>(vars.size());
  if (n > opts.max_vertices) throw SizeLimitError(n, opts.max_vertices);

  using Vec = std::vector<Exponent>;
  std::vector<Vec> gens;
  for (const auto& g : i.generators()) {
    Vec e(n, 0);
    for (int v = 0; v < n; ++v) e[v] = g.exponent(vars[v]);
    gens.push_back(std::move(e));
  }
  auto in_ideal = [&gens](const Vec& b) {
    return std::any_of(gens.begin(), gens.end(), [&b](const Vec& g) {
      for (std::size_t v = 0; v < g.size(); ++v)
        if (g[v] > b[v]) return false;
      return true;
    });
  };

  std::set<Vec> lattice;
  std::vector<Vec> order;
  for (const auto& g : gens) {
    std::size_t k = order.size();
    for (std::size_t a = 0; a < k; ++a) {
      Vec u = order[a];
      for (int v = 0; v < n; ++v) u[v] = std::max(u[v], g[v]);
      if (lattice.insert(u).second) order.push_back(std::move(u));
    }
    if (lattice.insert(g).second) order.push_back(g);
  }
  std::vector<Vec> points(lattice.begin(), lattice.end());

  const int jobs = resolve_jobs(opts.jobs);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  std::vector<Table> parts(workers);
  parallel_for(points.size(), workers, [&](std::size_t idx, int worker) {
    const Vec& b = points[idx];
    std::vector<int> supp;
    int degree = 0;
    for (int v = 0; v < n; ++v) {
      if (b[v]) supp.push_back(v);
      degree += static_cast<int>(b[v]);
    }
    const std::uint32_t full = (std::uint32_t{1} << supp.size()) - 1;
    std::vector<std::uint32_t> faces;
    Vec shifted(n);
    for (std::uint32_t f = 0; f <= full; ++f) {
      shifted = b;
      for (std::size_t k = 0; k < supp.size(); ++k)
        if (f >> k & 1) --shifted[supp[k]];
      if (in_ideal(shifted)) faces.push_back(f);
    }
    HomologyEngine engine(static_cast<int>(supp.size()));
    for (auto [k, rank] : engine.compute(faces, field)) parts[worker][{k + 1, degree}] += rank;
  });
  BettiTable t = merge(parts, field);
  check_generator_row(t, i);
  return t;
}

int regularity(const MonomialIdeal& i, const FieldSpec& field, const BettiOptions& opts) {
  if (i.is_zero() || i.is_generated_by_variables()) return 1;
  return betti_table(i, field, opts).regularity();
}

bool froberg_linear_check(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw Error("Froberg check needs a graph with at least one edge");
  return is_chordal(complement(g)).chordal;
}

int edge_ideal_regularity(const SimpleGraph& g, const FieldSpec& field, const BettiOptions& opts) {
  if (g.edge_count() == 0) return 1;
  if (froberg_linear_check(g)) return 2;
  return regularity(edge_ideal(g), field, opts);
}

}  // namespace regulab
