#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace artinrf;
using namespace artinrf::testing;

TEST(ParseGraph, Basic) {
  auto g = parse_graph("# a path\nvertices: a b c\nedge: a b 3\n\nedge: b c 4   # trailing\n");
  EXPECT_EQ(g, path({3, 4}));
}

TEST(ParseGraph, VertexOnlyAndNoTrailingNewline) {
  auto g = parse_graph("vertices: x");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

namespace {
std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return 999;
}
}  // namespace

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("vertices: a b\nedge: a a 3\n"), 2u);
  EXPECT_EQ(error_line("vertices: a b\nedge: a b 3\n# c\nedge: b a 4\n"), 4u);
  EXPECT_EQ(error_line("vertices: a b\nedge: a c 3\n"), 2u);
  EXPECT_EQ(error_line("vertices: a b\nedge: a b 1\n"), 2u);
  EXPECT_EQ(error_line("vertices: a b\nedge: a b x\n"), 2u);
  EXPECT_EQ(error_line("vertices: a b\nedge: a b\n"), 2u);
  EXPECT_EQ(error_line("edge: a b 3\nvertices: a b\n"), 1u);
  EXPECT_EQ(error_line("vertices: a\nvertices: b\n"), 2u);
  EXPECT_EQ(error_line("vertices: a\nbogus line\n"), 2u);
  EXPECT_EQ(error_line("vertices: a\ncolour: red\n"), 2u);
  EXPECT_EQ(error_line("vertices: a\nname: x\n"), 0u);
  EXPECT_EQ(error_line("# nothing\n"), 0u);
  EXPECT_EQ(error_line("vertices: a a\n"), 0u);
}

TEST(ParseAxiom, NameRequired) {
  auto ax = parse_axiom("name: tri\nvertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3\n");
  EXPECT_EQ(ax.name, "tri");
  EXPECT_EQ(ax.graph, triangle(3, 3, 3));
  EXPECT_THROW(parse_axiom("vertices: a\n"), ParseError);
  EXPECT_THROW(parse_axiom("name: x y\nvertices: a\n"), ParseError);
  EXPECT_EQ(parse_axiom(emit_axiom(ax)).graph, ax.graph);
}

TEST(EmitGraph, Format) {
  EXPECT_EQ(emit_graph(path({3, 4})), "vertices: a b c\nedge: a b 3\nedge: b c 4\n");
}

TEST(EmitGraph, RoundTripProperty) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform_int(rng, 1, 14)), 0.3, 2, 12);
    EXPECT_EQ(parse_graph(emit_graph(g)), g);
  }
}

TEST(ExportDot, Format) {
  EXPECT_EQ(export_dot(graph({"a", "b"}, {{"a", "b", 3}})),
            "graph \"coxeter\" {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\" [label=3];\n}\n");
  EXPECT_EQ(dot_quote("x\"y"), "\"x\\\"y\"");
}

TEST(LoadGraph, MissingFile) { EXPECT_THROW(load_graph("/nonexistent/file.graph"), ParseError); }
