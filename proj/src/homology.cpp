#include "regulab/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "regulab/graph.hpp"

namespace regulab {

void validate(const FieldSpec& f) {
  const int p = f.characteristic;
  if (p == 0) return;
  bool prime = p >= 2;
  for (int d = 2; prime && static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw Error("field characteristic must be 0 or a prime, got " + std::to_string(p));
}

namespace {

struct Overflow {};

using BigInt = boost::multiprecision::cpp_int;

template <class T>
struct IntOps;

template <>
struct IntOps<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
};

template <>
struct IntOps<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
  }
};

// Rows of one boundary column: (row index, coefficient), ascending rows.
template <class T>
using Column = std::vector<std::pair<int, T>>;

template <class Lookup>
void boundary_signs(std::uint32_t face, const Lookup& index,
                    std::vector<std::pair<int, int>>& out) {
  out.clear();
  int pos = 0;
  for (std::uint32_t m = face; m; m &= m - 1, ++pos) {
    std::uint32_t v = m & (~m + 1);
    out.emplace_back(index(face ^ v), (pos % 2 == 0) ? 1 : -1);
  }
  std::sort(out.begin(), out.end());
}

// Rank of a boundary map over GF(p). Columns listed in `skip` are known to
// reduce to zero; pivot rows are reported through `pivot_rows`.
template <class Lookup>
std::uint64_t rank_mod_p(const std::vector<std::uint32_t>& cols, std::size_t row_count,
                         const Lookup& index, std::uint32_t p,
                         const std::vector<char>& skip, std::vector<char>& pivot_rows) {
  auto inv = [p](std::uint32_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  std::vector<int> pivot_of_row(row_count, -1);
  std::vector<Column<std::uint32_t>> store(cols.size());
  std::vector<std::pair<int, int>> raw;
  Column<std::uint32_t> col, tmp;
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    boundary_signs(cols[j], index, raw);
    col.clear();
    for (auto [r, s] : raw) col.emplace_back(r, s > 0 ? 1U % p : p - 1);
    while (!col.empty()) {
      int pc = pivot_of_row[col.back().first];
      if (pc < 0) break;
      const auto& piv = store[pc];  // low coefficient normalised to 1
      std::uint64_t f = col.back().second;
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          tmp.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          std::uint32_t v = static_cast<std::uint32_t>((p - f * piv[b].second % p) % p);
          if (v) tmp.emplace_back(piv[b].first, v);
          ++b;
        } else {
          std::uint64_t v = (col[a].second + p - f * piv[b].second % p) % p;
          if (v) tmp.emplace_back(col[a].first, static_cast<std::uint32_t>(v));
          ++a;
          ++b;
        }
      }
      col.swap(tmp);
    }
    if (col.empty()) continue;
    std::uint32_t scale = inv(col.back().second);
    for (auto& e : col) e.second = static_cast<std::uint32_t>(std::uint64_t{e.second} * scale % p);
    pivot_of_row[col.back().first] = static_cast<int>(j);
    pivot_rows[col.back().first] = 1;
    store[j] = col;
    ++rank;
  }
  return rank;
}

// Rank over the rationals via fraction-free column operations over Z.
template <class T, class Lookup>
std::uint64_t rank_integer(const std::vector<std::uint32_t>& cols, std::size_t row_count,
                           const Lookup& index, const std::vector<char>& skip,
                           std::vector<char>& pivot_rows) {
  using Ops = IntOps<T>;
  std::vector<int> pivot_of_row(row_count, -1);
  std::vector<Column<T>> store(cols.size());
  std::vector<std::pair<int, int>> raw;
  Column<T> col, tmp;
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    boundary_signs(cols[j], index, raw);
    col.clear();
    for (auto [r, s] : raw) col.emplace_back(r, T(s));
    while (!col.empty()) {
      int pc = pivot_of_row[col.back().first];
      if (pc < 0) break;
      const auto& piv = store[pc];
      T g = Ops::gcd(col.back().second, piv.back().second);
      T cm = piv.back().second / g;   // multiplier for col
      T pm = col.back().second / g;   // multiplier for pivot
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          tmp.emplace_back(col[a].first, Ops::mul(col[a].second, cm));
          ++a;
        } else if (a == col.size() || piv[b].first < col[a].first) {
          tmp.emplace_back(piv[b].first, Ops::sub(T(0), Ops::mul(piv[b].second, pm)));
          ++b;
        } else {
          T v = Ops::sub(Ops::mul(col[a].second, cm), Ops::mul(piv[b].second, pm));
          if (v != 0) tmp.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      T content = 0;
      for (const auto& e : tmp) content = Ops::gcd(content, e.second);
      if (content > 1)
        for (auto& e : tmp) e.second /= content;
      col.swap(tmp);
    }
    if (col.empty()) continue;
    pivot_of_row[col.back().first] = static_cast<int>(j);
    pivot_rows[col.back().first] = 1;
    store[j] = col;
    ++rank;
  }
  return rank;
}

template <class Lookup>
HomologyRanks homology_from_layers(const std::vector<std::vector<std::uint32_t>>& by_dim,
                                   const Lookup& index, const FieldSpec& field) {
  // by_dim[k + 1] holds the k-dimensional faces; by_dim[0] = {empty face}.
  const int top = static_cast<int>(by_dim.size()) - 2;
  std::vector<std::uint64_t> rank(by_dim.size() + 1, 0);  // rank[k + 1] = rank of ∂_k
  if (top >= 0 && !by_dim[1].empty()) rank[1] = 1;          // ∂_0 onto C_{-1}

  std::vector<char> skip;
  for (int k = top; k >= 1; --k) {
    const auto& cols = by_dim[k + 1];
    const auto& rows = by_dim[k];
    std::vector<char> pivot_rows(rows.size(), 0);
    if (field.characteristic == 0) {
      try {
        rank[k + 1] = rank_integer<std::int64_t>(cols, rows.size(), index, skip, pivot_rows);
      } catch (const Overflow&) {
        std::fill(pivot_rows.begin(), pivot_rows.end(), 0);
        rank[k + 1] = rank_integer<BigInt>(cols, rows.size(), index, skip, pivot_rows);
      }
    } else {
      rank[k + 1] = rank_mod_p(cols, rows.size(), index,
                               static_cast<std::uint32_t>(field.characteristic), skip,
                               pivot_rows);
    }
    skip.swap(pivot_rows);
  }

  HomologyRanks out;
  for (int k = -1; k <= top; ++k) {
    std::uint64_t f = by_dim[k + 1].size();
    std::uint64_t r_out = rank[k + 1];
    std::uint64_t r_in = (k + 2 < static_cast<int>(rank.size())) ? rank[k + 2] : 0;
    std::uint64_t h = f - r_out - r_in;
    if (h) out[k] = h;
  }
  return out;
}

}  // namespace

HomologyEngine::HomologyEngine(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > 32)
    throw Error("homology engine supports at most 32 vertices");
  if (vertex_count <= 24) dense_index_.assign(std::size_t{1} << vertex_count, -1);
}

HomologyRanks HomologyEngine::compute(std::span<const std::uint32_t> faces,
                                      const FieldSpec& field) {
  validate(field);
  std::vector<std::vector<std::uint32_t>> by_dim(1);
  bool has_empty = false;
  for (std::uint32_t f : faces) {
    std::size_t d = static_cast<std::size_t>(__builtin_popcount(f));
    if (d == 0) has_empty = true;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(f);
  }
  if (!has_empty) throw Error("face list must contain the empty face");
  for (auto& layer : by_dim) std::sort(layer.begin(), layer.end());

  if (!dense_index_.empty()) {
    for (auto& layer : by_dim)
      for (std::size_t i = 0; i < layer.size(); ++i)
        dense_index_[layer[i]] = static_cast<std::int32_t>(i);
    auto lookup = [this](std::uint32_t m) {
      std::int32_t i = dense_index_[m];
      if (i < 0) throw Error("face list is not closed under subsets");
      return static_cast<int>(i);
    };
    HomologyRanks out;
    try {
      out = homology_from_layers(by_dim, lookup, field);
    } catch (...) {
      for (auto& layer : by_dim)
        for (auto f : layer) dense_index_[f] = -1;
      throw;
    }
    for (auto& layer : by_dim)
      for (auto f : layer) dense_index_[f] = -1;
    return out;
  }
  std::unordered_map<std::uint32_t, int> sparse;
  for (auto& layer : by_dim)
    for (std::size_t i = 0; i < layer.size(); ++i) sparse.emplace(layer[i], static_cast<int>(i));
  auto lookup = [&sparse](std::uint32_t m) {
    auto it = sparse.find(m);
    if (it == sparse.end()) throw Error("face list is not closed under subsets");
    return it->second;
  };
  return homology_from_layers(by_dim, lookup, field);
}

HomologyRanks reduced_homology(std::span<const std::uint32_t> faces,
                               const FieldSpec& field) {
  std::uint32_t all = 0;
  for (auto f : faces) all |= f;
  int n = all ? 32 - __builtin_clz(all) : 0;
  HomologyEngine engine(n);
  return engine.compute(faces, field);
}

}  // namespace regulab
