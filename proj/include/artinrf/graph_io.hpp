#pragma once

// Line-oriented graph format:
//
//   # comment
//   name: affine_a2          (optional, axiom files only)
//   vertices: a b c
//   edge: a b 3
//
// Exactly one `vertices:` directive, which must precede every `edge:`.

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter_graph.hpp"

namespace artinrf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct NamedGraph {
  std::string name;
  CoxeterGraph graph;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct ParsedGraphText {
  std::optional<std::string> name;
  CoxeterGraph graph;
};

inline ParsedGraphText parse_graph_text(std::string_view text) {
  ParsedGraphText out;
  std::optional<std::vector<VertexId>> vertices;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'directive: ...'");
    std::string_view key = trim(line.substr(0, colon));
    auto args = split_ws(line.substr(colon + 1));

    if (key == "vertices") {
      if (vertices) throw ParseError(line_no, "second 'vertices:' directive");
      vertices = args;
    } else if (key == "edge") {
      if (!vertices) throw ParseError(line_no, "'edge:' before 'vertices:'");
      if (args.size() != 3) throw ParseError(line_no, "'edge:' takes two vertices and a label");
      int m = 0;
      const auto& lab = args[2];
      auto [ptr, ec] = std::from_chars(lab.data(), lab.data() + lab.size(), m);
      if (ec != std::errc{} || ptr != lab.data() + lab.size())
        throw ParseError(line_no, "label '" + lab + "' is not an integer");
      edges.push_back({args[0], args[1], m});
      edge_lines.push_back(line_no);
    } else if (key == "name") {
      if (out.name) throw ParseError(line_no, "second 'name:' directive");
      if (args.size() != 1) throw ParseError(line_no, "'name:' takes one identifier");
      out.name = args[0];
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!vertices) throw ParseError(0, "missing 'vertices:' directive");

  try {
    (void)CoxeterGraph::build(*vertices, {});
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
  try {
    out.graph = CoxeterGraph::build(*vertices, edges);
  } catch (const GraphError&) {
    // Locate the first offending edge so the diagnostic carries its line.
    for (std::size_t k = 0; k < edges.size(); ++k) {
      try {
        (void)CoxeterGraph::build(*vertices, {edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(k) + 1});
      } catch (const GraphError& e) {
        throw ParseError(edge_lines[k], e.what());
      }
    }
    throw;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

inline CoxeterGraph parse_graph(std::string_view text) {
  auto parsed = detail::parse_graph_text(text);
  if (parsed.name) throw ParseError(0, "'name:' is only allowed in axiom files");
  return parsed.graph;
}

inline NamedGraph parse_axiom(std::string_view text) {
  auto parsed = detail::parse_graph_text(text);
  if (!parsed.name) throw ParseError(0, "axiom file needs a 'name:' directive");
  return {*parsed.name, parsed.graph};
}

inline CoxeterGraph load_graph(const std::string& path) { return parse_graph(detail::read_file(path)); }
inline NamedGraph load_axiom(const std::string& path) { return parse_axiom(detail::read_file(path)); }

inline std::string emit_graph(const CoxeterGraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& e : g.edges()) out << "edge: " << e.from << ' ' << e.to << ' ' << e.label << '\n';
  return out.str();
}

inline std::string emit_axiom(const NamedGraph& a) { return "name: " + a.name + "\n" + emit_graph(a.graph); }

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string export_dot(const CoxeterGraph& g, std::string_view name = "coxeter") {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (const auto& v : g.vertices()) out << "  " << dot_quote(v) << ";\n";
  for (const auto& e : g.edges())
    out << "  " << dot_quote(e.from) << " -- " << dot_quote(e.to) << " [label=" << e.label << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace artinrf
