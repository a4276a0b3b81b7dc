#include "regulab/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace regulab {

std::string Variable::label() const { return name + std::string(index, '\''); }

Variable Variable::from_label(std::string_view label) {
  std::size_t end = label.size();
  while (end > 1 && label[end - 1] == '\'') --end;
  return {std::string(label.substr(0, end)), static_cast<int>(label.size() - end)};
}

namespace {

struct VariableHash {
  std::size_t operator()(const Variable& v) const {
    return std::hash<std::string>{}(v.name) * 31 + std::hash<int>{}(v.index);
  }
};

class VariableTable {
 public:
  VarId intern(const Variable& v) {
    {
      std::shared_lock lock(mutex_);
      auto it = ids_.find(v);
      if (it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, fresh] = ids_.try_emplace(v, static_cast<VarId>(vars_.size()));
    if (fresh) vars_.push_back(v);
    return it->second;
  }

  const Variable& get(VarId id) {
    std::shared_lock lock(mutex_);
    return vars_.at(id);
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Variable> vars_;  // deque keeps references stable
  std::unordered_map<Variable, VarId, VariableHash> ids_;
};

VariableTable& table() {
  static VariableTable t;
  return t;
}

}  // namespace

VarId intern(const Variable& v) { return table().intern(v); }
const Variable& variable(VarId id) { return table().get(id); }

// --- Monomial ---------------------------------------------------------------

void Monomial::finish() {
  sig_ = 0;
  degree_ = 0;
  for (auto [id, e] : entries_) {
    sig_ |= std::uint64_t{1} << (id & 63);
    degree_ += e;
  }
}

Monomial Monomial::of(const Variable& v, Exponent e) {
  Monomial m;
  if (e > 0) m.entries_.emplace_back(intern(v), e);
  m.finish();
  return m;
}

Monomial Monomial::from_entries(
    const std::vector<std::pair<Variable, Exponent>>& e) {
  std::map<VarId, Exponent> acc;
  for (const auto& [v, k] : e)
    if (k > 0) acc[intern(v)] += k;
  Monomial m;
  for (auto [id, k] : acc) m.entries_.emplace_back(id, k);
  m.finish();
  return m;
}

Exponent Monomial::exponent(const Variable& v) const {
  VarId id = intern(v);
  for (auto [i, e] : entries_)
    if (i == id) return e;
  return 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second == 1; });
}

std::vector<std::pair<Variable, Exponent>> Monomial::terms() const {
  std::vector<std::pair<Variable, Exponent>> out;
  out.reserve(entries_.size());
  for (auto [id, e] : entries_) out.emplace_back(variable(id), e);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Variable> Monomial::support() const {
  std::vector<Variable> out;
  for (auto& [v, e] : terms()) out.push_back(v);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (sig_ & ~other.sig_)) return false;
  auto it = other.entries_.begin();
  const auto end = other.entries_.end();
  for (auto [id, e] : entries_) {
    while (it != end && it->first < id) ++it;
    if (it == end || it->first != id || it->second < e) return false;
  }
  return true;
}

namespace {

template <class Combine>
Monomial::Storage merge(const Monomial::Storage& a, const Monomial::Storage& b,
                        Combine combine) {
  Monomial::Storage out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    VarId id;
    Exponent x = 0, y = 0;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      id = a[i].first;
      x = a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      id = b[j].first;
      y = b[j++].second;
    } else {
      id = a[i].first;
      x = a[i++].second;
      y = b[j++].second;
    }
    Exponent r = combine(x, y);
    if (r > 0) out.emplace_back(id, r);
  }
  return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.entries_ = merge(entries_, o.entries_, [](Exponent x, Exponent y) { return x + y; });
  m.finish();
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  m.entries_ = merge(entries_, o.entries_,
                     [](Exponent x, Exponent y) { return std::max(x, y); });
  m.finish();
  return m;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial m;
  m.entries_ = merge(entries_, o.entries_,
                     [](Exponent x, Exponent y) { return std::min(x, y); });
  m.finish();
  return m;
}

Monomial Monomial::colon(const Monomial& o) const {
  Monomial m;
  m.entries_ = merge(entries_, o.entries_,
                     [](Exponent x, Exponent y) { return x > y ? x - y : 0; });
  m.finish();
  return m;
}

Monomial Monomial::divide(const Monomial& o) const {
  if (!o.divides(*this)) throw Error(o.str() + " does not divide " + str());
  return colon(o);
}

bool Monomial::raw_less(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ < o.degree_;
  return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                      o.entries_.begin(), o.entries_.end());
}

namespace {

std::string variable_text(const Variable& v) {
  bool plain = !v.name.empty() && v.name.back() != '\'' && v.name != "1";
  for (char c : v.name)
    if (c == '*' || c == '^' || c == '{' || c == '}' || std::isspace(
                                                           static_cast<unsigned char>(c)))
      plain = false;
  std::string base = plain ? v.name : "{" + v.name + "}";
  return base + std::string(v.index, '\'');
}

}  // namespace

std::string Monomial::str() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : terms()) {
    if (!out.empty()) out += '*';
    out += variable_text(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.terms() < b.terms();
}

// --- MonomialIdeal ----------------------------------------------------------

MonomialIdeal minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.raw_less(b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  MonomialIdeal out;
  out.gens_ = std::move(kept);
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) : gens_(std::move(gens)) {
  // Callers outside minimalize() may hand in arbitrary sets.
  bool canonical = std::is_sorted(gens_.begin(), gens_.end(), canonical_less);
  for (std::size_t i = 0; canonical && i < gens_.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (i != j && gens_[i].divides(gens_[j])) {
        canonical = false;
        break;
      }
  if (!canonical) *this = minimalize(std::move(gens_));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_generated_by_variables() const {
  return !gens_.empty() && std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) {
    return m.degree() == 1;
  });
}

std::vector<Variable> MonomialIdeal::variables() const {
  std::set<Variable> vars;
  for (const auto& g : gens_)
    for (auto& v : g.support()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::str() const {
  std::string out;
  for (const auto& g : gens_) out += g.str() + "\n";
  return out;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return minimalize(std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, unsigned s) {
  if (s == 0) return MonomialIdeal({Monomial()});
  MonomialIdeal out = i;
  for (unsigned k = 1; k < s; ++k) out = product(out, i);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(i.size());
  for (const auto& g : i.generators()) gens.push_back(g.colon(m));
  return minimalize(std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& i, const std::vector<Monomial>& ms) {
  std::vector<Monomial> gens = i.generators();
  gens.insert(gens.end(), ms.begin(), ms.end());
  return minimalize(std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  return add(a, b.generators());
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

Polarization polarize(const MonomialIdeal& i) {
  Polarization out;
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<std::pair<Variable, Exponent>> e;
    for (const auto& [v, k] : g.terms()) {
      if (k > 1 && v.index != 0)
        throw Error("cannot polarize a power of the polarized variable " + v.label());
      for (Exponent c = 0; c < k; ++c) {
        Variable p{v.name, v.index + static_cast<int>(c)};
        e.emplace_back(p, 1);
        out.lineage.emplace(p, std::make_pair(Variable{v.name, v.index},
                                              static_cast<int>(c)));
      }
    }
    gens.push_back(Monomial::from_entries(e));
  }
  out.ideal = minimalize(std::move(gens));
  return out;
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges())
    gens.push_back(Monomial::of(Variable::from_label(g.label(u))) *
                   Monomial::of(Variable::from_label(g.label(v))));
  return minimalize(std::move(gens));
}

SimpleGraph graph_of(const MonomialIdeal& i) {
  std::vector<std::string> labels;
  for (const auto& v : i.variables()) labels.push_back(v.label());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& g : i.generators()) {
    if (g.degree() != 2 || !g.is_squarefree())
      throw Error("not an edge ideal: generator " + g.str() +
                  " is not a squarefree quadratic monomial");
    auto s = g.support();
    edges.emplace_back(s[0].label(), s[1].label());
  }
  return SimpleGraph::from_labelled_edges(std::move(labels), edges);
}

// --- text format ------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error("empty monomial");
  if (text == "1") return Monomial();
  std::vector<std::pair<Variable, Exponent>> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    // one factor: name or {name}, optional primes, optional ^k
    std::size_t start = pos;
    std::string name;
    int primes = 0;
    if (pos < text.size() && text[pos] == '{') {
      auto close = text.find('}', pos);
      if (close == std::string_view::npos) throw Error("unterminated '{' in monomial");
      name = std::string(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      while (pos < text.size() && text[pos] == '\'') {
        ++primes;
        ++pos;
      }
    } else {
      while (pos < text.size() && text[pos] != '*' && text[pos] != '^') ++pos;
      auto v = Variable::from_label(trim(text.substr(start, pos - start)));
      name = v.name;
      primes = v.index;
    }
    if (name.empty()) throw Error("missing variable name in monomial '" +
                                  std::string(text) + "'");
    Exponent e = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t s = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (s == pos) throw Error("missing exponent after '^'");
      e = static_cast<Exponent>(std::stoul(std::string(text.substr(s, pos - s))));
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    terms.emplace_back(Variable{name, primes}, e);
    if (pos == text.size()) break;
    if (text[pos] != '*')
      throw Error("unexpected '" + std::string(1, text[pos]) + "' in monomial");
    ++pos;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  return Monomial::from_entries(terms);
}

MonomialIdeal parse_ideal(std::string_view text) {
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      try {
        gens.push_back(parse_monomial(line));
      } catch (const Error& e) {
        throw Error("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return minimalize(std::move(gens));
}

}  // namespace regulab
