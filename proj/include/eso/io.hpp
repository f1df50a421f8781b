#pragma once

#include <json.hpp>
#include <string>

#include "eso/csp.hpp"
#include "eso/graph.hpp"
#include "eso/mcheck.hpp"
#include "eso/pattern.hpp"

namespace eso {

/// {"n", "mode", "edges", "marks"?}. Edges of basic and undirected graphs
/// are closed symmetrically on load; a loop in a basic graph is an error.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// {"colors": [names], "plus": [[c1,c2],...], "minus": [...]} with colour
/// names or indices as arc endpoints.
PatternGraph pattern_from_json(const nlohmann::json& j);
nlohmann::json pattern_to_json(const PatternGraph& p);

nlohmann::json assignment_to_json(const SoAssignment& a);
nlohmann::json certificate_to_json(const PatternGraph& p, const SaturationCertificate& c);

/// Graphviz rendering; marked vertices are drawn filled. `labels` may be
/// empty or name every vertex.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace eso
