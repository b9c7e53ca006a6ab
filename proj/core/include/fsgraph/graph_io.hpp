#pragma once

#include <iosfwd>
#include <string>

#include "fsgraph/graph.hpp"

namespace fsg {

// Text format: first line "n", then one "u v" line per edge.
SimpleGraph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const SimpleGraph& g);

// JSON form {"n":int,"edges":[[u,v],...]}.
SimpleGraph read_graph_json(const std::string& json);
std::string write_graph_json(const SimpleGraph& g);

void write_graph_dot(std::ostream& out, const SimpleGraph& g, const std::string& name = "G");

// Loads a graph from a file path (JSON when the content starts with '{',
// text otherwise) or from a "family:n[:m]" shorthand.
SimpleGraph load_graph_spec(const std::string& spec);

}  // namespace fsg
