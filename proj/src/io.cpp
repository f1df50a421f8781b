#include "eso/io.hpp"

#include <fstream>
#include <sstream>

#include "eso/error.hpp"

namespace eso {

using nlohmann::json;

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("graph JSON must be an object");
  if (!j.contains("n")) throw ValidationError("graph JSON needs \"n\"");
  int n = as_int(j.at("n"), "n");
  GraphMode mode = GraphMode::Basic;
  if (j.contains("mode")) mode = parse_graph_mode(j.at("mode").get<std::string>());
  Graph g(n, mode);
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("edges are pairs [u, v]");
      g.add_edge(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
  }
  if (j.contains("marks")) {
    std::vector<int> marks;
    for (const auto& v : j.at("marks")) marks.push_back(as_int(v, "mark"));
    g.set_marks(marks);
  }
  return g;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json out = {{"n", g.n()}, {"mode", to_string(g.mode())}, {"edges", edges}};
  if (g.has_marks()) out["marks"] = g.mark_list();
  return out;
}

PatternGraph pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("colors")) throw ValidationError("pattern JSON needs \"colors\"");
  PatternGraph p(j.at("colors").get<std::vector<std::string>>());
  auto colour = [&](const json& c) {
    if (c.is_string()) return p.color_index(c.get<std::string>());
    int idx = as_int(c, "colour");
    if (idx < 0 || idx >= p.size()) throw ValidationError("colour index out of range");
    return idx;
  };
  for (const char* key : {"plus", "minus"}) {
    if (!j.contains(key)) continue;
    for (const auto& arc : j.at(key)) {
      if (!arc.is_array() || arc.size() != 2) throw ValidationError("arcs are pairs [c1, c2]");
      int c = colour(arc[0]);
      int d = colour(arc[1]);
      if (std::string(key) == "plus") {
        p.add_plus(c, d);
      } else {
        p.add_minus(c, d);
      }
    }
  }
  return p;
}

json pattern_to_json(const PatternGraph& p) {
  json plus = json::array();
  json minus = json::array();
  for (int c = 0; c < p.size(); ++c) {
    for (int d = 0; d < p.size(); ++d) {
      if (p.has_plus(c, d)) plus.push_back({p.colors[c], p.colors[d]});
      if (p.has_minus(c, d)) minus.push_back({p.colors[c], p.colors[d]});
    }
  }
  return {{"colors", p.colors}, {"plus", plus}, {"minus", minus}};
}

json assignment_to_json(const SoAssignment& a) {
  json out = json::object();
  for (const auto& [name, ext] : a) {
    json tuples = json::array();
    for (const auto& t : ext.tuples) {
      if (ext.arity == 1) {
        tuples.push_back(t[0]);
      } else {
        tuples.push_back(t);
      }
    }
    out[name] = {{"arity", ext.arity}, {"tuples", tuples}};
  }
  return out;
}

json certificate_to_json(const PatternGraph& p, const SaturationCertificate& c) {
  json colouring = json::array();
  for (int col : c.coloring) colouring.push_back(p.colors.at(col));
  return {{"coloring", colouring}, {"witness", c.witness}};
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  bool directed = g.mode() == GraphMode::Directed;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "  " << v;
    std::string label = labels.empty() ? std::to_string(v) : labels.at(v);
    out << " [label=\"" << label << "\"";
    if (g.marked(v)) out << ", style=filled, fillcolor=gray80";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << (directed ? " -> " : " -- ") << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what(), e.byte);
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace eso
