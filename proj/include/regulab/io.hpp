#pragma once

#include <string>
#include <string_view>

#include "regulab/graph.hpp"
#include "regulab/ideal.hpp"

namespace regulab {

/// Text format: one edge "u v" per line, "vertex w" declares a vertex
/// (needed for isolated ones), '#' starts a comment. Vertex order is order of
/// first appearance. Errors carry the line number.
SimpleGraph parse_graph_text(std::string_view text);
std::string format_graph_text(const SimpleGraph& g, const std::string& title = {});

/// {"vertices": [...], "edges": [[u, v], ...]}
SimpleGraph parse_graph_json(std::string_view text);
std::string format_graph_json(const SimpleGraph& g);

/// Either format, chosen by the first non-blank character.
SimpleGraph parse_graph(std::string_view text);

/// "catalog:NAME", an existing file, or a bare catalog name.
SimpleGraph load_graph(const std::string& source);
MonomialIdeal load_ideal(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace regulab
