#include "regulab/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "regulab/catalog.hpp"

namespace regulab {

namespace {

Error line_error(int line, const std::string& what) {
  return Error("line " + std::to_string(line) + ": " + what);
}

struct Builder {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;

  int vertex(const std::string& l) {
    auto [it, fresh] = index.emplace(l, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(l);
    return it->second;
  }
};

}  // namespace

SimpleGraph parse_graph_text(std::string_view text) {
  Builder b;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() < 2) throw line_error(lineno, "'vertex' needs at least one label");
      for (std::size_t i = 1; i < tok.size(); ++i) b.vertex(tok[i]);
      continue;
    }
    if (tok.size() != 2)
      throw line_error(lineno, "expected two vertex labels, found " + std::to_string(tok.size()) +
                                   " tokens");
    if (tok[0] == tok[1]) throw line_error(lineno, "loop at " + tok[0]);
    int u = b.vertex(tok[0]);
    int v = b.vertex(tok[1]);
    b.edges.emplace_back(u, v);
    if (b.labels.size() > static_cast<std::size_t>(kMaxVertices))
      throw line_error(lineno, "more than " + std::to_string(kMaxVertices) + " vertices");
  }
  return SimpleGraph(std::move(b.labels), b.edges);
}

std::string format_graph_text(const SimpleGraph& g, const std::string& title) {
  std::ostringstream os;
  if (!title.empty())
    os << "# " << title << ": " << g.size() << " vertices, " << g.edge_count() << " edges\n";
  for (const auto& l : g.labels()) os << "vertex " << l << '\n';
  for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
  return os.str();
}

SimpleGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid JSON graph: ") + e.what());
  }
  if (!j.is_object() || !j.contains("edges")) throw Error("JSON graph needs an \"edges\" array");
  Builder b;
  try {
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) b.vertex(v.get<std::string>());
    std::size_t k = 0;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error("JSON graph edge " + std::to_string(k) + " is not a pair");
      auto a = e[0].get<std::string>(), c = e[1].get<std::string>();
      if (a == c) throw Error("JSON graph edge " + std::to_string(k) + " is a loop");
      b.edges.emplace_back(b.vertex(a), b.vertex(c));
      ++k;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid JSON graph: ") + e.what());
  }
  return SimpleGraph(std::move(b.labels), b.edges);
}

std::string format_graph_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({g.label(u), g.label(v)});
  return j.dump();
}

SimpleGraph parse_graph(std::string_view text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SimpleGraph load_graph(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return catalog::get(source.substr(8));
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    try {
      return parse_graph(read_file(source));
    } catch (const Error& e) {
      throw Error(source + ": " + e.what());
    }
  }
  try {
    return catalog::get(source);
  } catch (const Error&) {
    throw Error("'" + source + "' is neither a readable file nor a catalog graph");
  }
}

MonomialIdeal load_ideal(const std::string& path) {
  try {
    return parse_ideal(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace regulab
