#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regulab/graph.hpp"

namespace regulab::catalog {

struct Metadata {
  bool gap_free = false;
  bool diamond_free = false;
  bool has_induced_c5 = false;
  /// Earliest named graph (in names() order) isomorphic to this one, if any.
  /// The drawings of G_7 and G_8 give graphs isomorphic to G_6.
  std::string isomorphic_to;
};

struct Entry {
  std::string name;
  SimpleGraph graph;
  Metadata metadata;
};

/// Names: G_0 ... G_10, and the families C_n (vertices u1..un), C_n^c,
/// K_n and P_n (vertices a, b, c, ...), 2K2. "G0", "C5" and "C_5" are
/// accepted spellings.
Entry entry(std::string_view name);
SimpleGraph get(std::string_view name);

/// The named graphs G_0 ... G_10.
std::vector<std::string> names();
/// Bases of the gap- and diamond-free classification: C5, G_0..G_3, G_5..G_10.
std::vector<std::string> classification_bases();

enum class FamilyFilter { All, GapAndDiamondFree };

/// Multiplications of `base` by multiplicities 1..max_multiplicity on the
/// vertices lying in no triangle, one graph per isomorphism class, in
/// enumeration order.
std::vector<SimpleGraph> enumerate_family(std::string_view base, int max_multiplicity,
                                          FamilyFilter filter = FamilyFilter::All);
std::vector<SimpleGraph> enumerate_family(const SimpleGraph& base, int max_multiplicity,
                                          FamilyFilter filter = FamilyFilter::All);

}  // namespace regulab::catalog
