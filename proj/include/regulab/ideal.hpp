#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "regulab/graph.hpp"

namespace regulab {

/// A ring variable: base name plus polarization index (0 = original).
struct Variable {
  std::string name;
  int index = 0;

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;

  /// Graph label form: the name followed by `index` primes, e.g. "a'".
  std::string label() const;
  /// Inverse of label(): trailing primes become the polarization index.
  static Variable from_label(std::string_view label);
};

using VarId = std::uint32_t;
using Exponent = std::uint32_t;

/// Process-wide interning of variables so monomial arithmetic works on
/// integer ids. Thread safe.
VarId intern(const Variable& v);
const Variable& variable(VarId id);

/// Monomial as a sparse exponent vector. Entries are kept sorted by VarId and
/// never store a zero exponent.
class Monomial {
 public:
  using Entry = std::pair<VarId, Exponent>;
  using Storage = boost::container::small_vector<Entry, 8>;

  Monomial() = default;
  static Monomial of(const Variable& v, Exponent e = 1);
  static Monomial from_entries(const std::vector<std::pair<Variable, Exponent>>& e);

  bool is_one() const { return entries_.empty(); }
  unsigned degree() const { return degree_; }
  Exponent exponent(const Variable& v) const;
  bool is_squarefree() const;
  /// Variables with positive exponent, in variable order.
  std::vector<Variable> support() const;
  /// (variable, exponent) pairs in variable order.
  std::vector<std::pair<Variable, Exponent>> terms() const;
  const Storage& raw() const { return entries_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, m): the generator of (this) : m.
  Monomial colon(const Monomial& m) const;
  /// Exact quotient; throws if `m` does not divide this.
  Monomial divide(const Monomial& m) const;

  /// Multiplicative text form, e.g. "a^2*b*c"; "1" for the unit monomial.
  std::string str() const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  /// Fast total order on the interned representation (not canonical).
  bool raw_less(const Monomial& o) const;

 private:
  void finish();
  Storage entries_;
  std::uint64_t sig_ = 0;  // bloom of var ids, for quick divisibility rejects
  unsigned degree_ = 0;
};

/// Canonical order: degree, then lexicographic in variable order.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Monomial ideal kept as its canonical minimal generating set.
class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Monomial> gens);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;
  /// Every generator has degree 1.
  bool is_generated_by_variables() const;
  std::vector<Variable> variables() const;
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  std::string str() const;  // one generator per line

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens);
  std::vector<Monomial> gens_;
};

/// Divisibility-reduced canonical generating set.
MonomialIdeal minimalize(std::vector<Monomial> gens);
MonomialIdeal power(const MonomialIdeal& i, unsigned s);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m);
MonomialIdeal add(const MonomialIdeal& i, const std::vector<Monomial>& ms);
MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

struct Polarization {
  MonomialIdeal ideal;
  /// polarized variable -> (original variable, copy number)
  std::map<Variable, std::pair<Variable, int>> lineage;
};

/// x^e becomes x_0 x_1 ... x_{e-1}, where x_k is the variable (x, k).
Polarization polarize(const MonomialIdeal& i);

/// Vertex labels map to variables through Variable::from_label.
MonomialIdeal edge_ideal(const SimpleGraph& g);
/// Graph on the variables occurring in a squarefree quadratic ideal.
SimpleGraph graph_of(const MonomialIdeal& i);

Monomial parse_monomial(std::string_view text);
/// One generator per line; blank lines and '#' comments ignored.
MonomialIdeal parse_ideal(std::string_view text);

}  // namespace regulab
