#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regulab/graph.hpp"
#include "regulab/homology.hpp"
#include "regulab/ideal.hpp"

namespace regulab {

/// Thrown when an ideal has too many (polarized) variables for the
/// homology engine.
class SizeLimitError : public Error {
 public:
  SizeLimitError(int vertices, int limit);
  int vertices() const { return vertices_; }
  int limit() const { return limit_; }

 private:
  int vertices_;
  int limit_;
};

inline constexpr int kMaxHochsterVertices = 24;

/// Stanley–Reisner complex given by its minimal non-faces. Vertex i is
/// vertices[i]; non-faces are bitmasks over those indices.
struct NonFaceSystem {
  std::vector<Variable> vertices;
  std::vector<std::uint32_t> nonfaces;

  int size() const { return static_cast<int>(vertices.size()); }
  std::uint32_t all() const;
  bool is_face(std::uint32_t mask) const;
  std::uint32_t mask_of(const std::vector<Variable>& vs) const;
  /// Faces of the restriction to `w`, including the empty face.
  std::vector<std::uint32_t> faces_within(std::uint32_t w) const;
};

NonFaceSystem stanley_reisner(const MonomialIdeal& i);

HomologyRanks reduced_homology_dims(const NonFaceSystem& nf, std::uint32_t w,
                                    const FieldSpec& field);

/// Graded Betti numbers b_{i,j} of an ideal (not of the quotient).
struct BettiTable {
  std::map<std::pair<int, int>, std::uint64_t> entries;
  FieldSpec field;

  std::uint64_t at(int i, int j) const;
  /// max{j - i : b_{i,j} != 0}; 1 for the empty table (zero ideal).
  int regularity() const;
  int projective_dimension() const;
  /// Rows j - i, columns i, in the usual Macaulay-style layout.
  std::string str() const;

  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

struct BettiOptions {
  int jobs = 0;  // 0: REGULAB_JOBS or 1
  int max_vertices = kMaxHochsterVertices;
};

/// Hochster's formula on the polarization of `i`, summed over the vertex
/// sets that are unions of non-faces.
BettiTable betti_table(const MonomialIdeal& i, const FieldSpec& field,
                       const BettiOptions& opts = {});

/// Independent route that does not polarize: b_{i,b}(I) = dim H̃_{i-1}(K^b)
/// with K^b the upper Koszul simplicial complex, b over the lcm lattice.
BettiTable betti_table_koszul(const MonomialIdeal& i, const FieldSpec& field,
                              const BettiOptions& opts = {});

/// reg(zero ideal) = 1, reg(ideal of variables) = 1, reg(unit ideal) = 0.
int regularity(const MonomialIdeal& i, const FieldSpec& field = {},
               const BettiOptions& opts = {});

/// True iff the complement of g is chordal. Throws on edgeless graphs.
bool froberg_linear_check(const SimpleGraph& g);

/// reg(I(g)) via the Fröberg fast path when it applies, else Hochster.
int edge_ideal_regularity(const SimpleGraph& g, const FieldSpec& field = {},
                          const BettiOptions& opts = {});

}  // namespace regulab
