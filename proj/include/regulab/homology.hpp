#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace regulab {

/// Coefficient field: characteristic 0 (exact rationals) or a prime.
struct FieldSpec {
  int characteristic = 0;

  std::string str() const {
    return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
  }
  bool operator==(const FieldSpec&) const = default;
};

/// Throws Error unless the characteristic is 0 or a prime below 2^31.
void validate(const FieldSpec& f);

/// dimension -> rank of reduced homology; only nonzero entries stored.
using HomologyRanks = std::map<int, std::uint64_t>;

/// Reduced simplicial homology from an explicit face list.
///
/// Faces are vertex bitmasks over at most 32 vertices. The list must be
/// closed under taking subsets and contain the empty face (mask 0); the empty
/// complex {∅} therefore has H̃_{-1} of rank 1. Ranks of boundary maps are
/// computed by sparse column reduction with clearing: modular arithmetic for
/// prime fields, fraction-free integer elimination for characteristic 0.
class HomologyEngine {
 public:
  /// `vertex_count` bounds the masks; up to 24 uses a dense index table.
  explicit HomologyEngine(int vertex_count);

  HomologyRanks compute(std::span<const std::uint32_t> faces, const FieldSpec& field);

 private:
  int vertex_count_;
  std::vector<std::int32_t> dense_index_;
};

/// Convenience wrapper around a throwaway engine.
HomologyRanks reduced_homology(std::span<const std::uint32_t> faces,
                               const FieldSpec& field);

}  // namespace regulab
