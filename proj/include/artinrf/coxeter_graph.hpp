#pragma once

// Coxeter graphs: vertices are opaque string identifiers kept in
// lexicographic order, edges carry an integer label m >= 2, and a missing
// edge stands for m = infinity.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artinrf {

using VertexId = std::string;
using VertexSet = std::set<VertexId>;

/// Subsets of at most 64 vertices, indexed by position in a graph.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxMaskVertices = 64;

struct Edge {
  VertexId from;
  VertexId to;
  int label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Identifiers must be usable in the text formats: nonempty, no whitespace,
/// none of the delimiters used by comments and partition literals.
inline bool is_valid_vertex_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (static_cast<unsigned char>(c) <= ' ') return false;
    if (c == '#' || c == '{' || c == '}' || c == '|' || c == ',') return false;
  }
  return true;
}

class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  /// Validating constructor. Edge order does not matter; the same pair may
  /// be listed twice (in either orientation) only with the same label.
  static CoxeterGraph build(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
    CoxeterGraph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!is_valid_vertex_id(vertices[i]))
        throw GraphError("invalid vertex identifier '" + vertices[i] + "'");
      if (i > 0 && vertices[i] == vertices[i - 1])
        throw GraphError("duplicate vertex '" + vertices[i] + "'");
    }
    g.vertices_ = std::move(vertices);
    g.labels_.assign(g.vertices_.size() * g.vertices_.size(), 0);
    for (const Edge& e : edges) {
      auto i = g.index_of(e.from);
      auto j = g.index_of(e.to);
      if (!i) throw GraphError("edge endpoint '" + e.from + "' is not a declared vertex");
      if (!j) throw GraphError("edge endpoint '" + e.to + "' is not a declared vertex");
      if (*i == *j) throw GraphError("self-loop at '" + e.from + "'");
      if (e.label < 2)
        throw GraphError("label " + std::to_string(e.label) + " on " + e.from + "-" + e.to +
                         " is below 2");
      int& slot = g.labels_[*i * g.size() + *j];
      if (slot != 0 && slot != e.label)
        throw GraphError("conflicting labels " + std::to_string(slot) + " and " +
                         std::to_string(e.label) + " for " + e.from + "-" + e.to);
      slot = e.label;
      g.labels_[*j * g.size() + *i] = e.label;
    }
    return g;
  }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexSet vertex_set() const { return {vertices_.begin(), vertices_.end()}; }
  const VertexId& vertex(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> index_of(std::string_view v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  bool contains(std::string_view v) const { return index_of(v).has_value(); }

  /// Label between two positions; 0 encodes infinity (no edge).
  int label_at(std::size_t i, std::size_t j) const { return labels_[i * size() + j]; }
  bool adjacent_at(std::size_t i, std::size_t j) const { return label_at(i, j) != 0; }

  std::optional<int> label(std::string_view s, std::string_view t) const {
    auto i = index_of(s);
    auto j = index_of(t);
    if (!i || !j || *i == *j) return std::nullopt;
    int m = label_at(*i, *j);
    if (m == 0) return std::nullopt;
    return m;
  }

  /// Edges with from < to, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (int m = label_at(i, j)) out.push_back({vertices_[i], vertices_[j], m});
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) n += adjacent_at(i, j) ? 1 : 0;
    return n;
  }

  std::size_t degree_at(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j) d += adjacent_at(i, j) ? 1 : 0;
    return d;
  }

  Mask neighbour_mask(std::size_t i) const {
    Mask m = 0;
    for (std::size_t j = 0; j < size(); ++j)
      if (adjacent_at(i, j)) m |= Mask{1} << j;
    return m;
  }

  Mask full_mask() const {
    require_mask_size();
    return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  void require_mask_size() const {
    if (size() > kMaxMaskVertices)
      throw std::length_error("graph has more than 64 vertices");
  }

  Mask mask_of(const VertexSet& xs) const {
    require_mask_size();
    Mask m = 0;
    for (const auto& x : xs) {
      auto i = index_of(x);
      if (!i) throw GraphError("unknown vertex '" + x + "'");
      m |= Mask{1} << *i;
    }
    return m;
  }

  VertexSet set_of(Mask m) const {
    VertexSet out;
    for (std::size_t i = 0; i < size(); ++i)
      if (m >> i & 1) out.insert(vertices_[i]);
    return out;
  }

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<int> labels_;  // row-major, symmetric, zero diagonal
};

inline CoxeterGraph new_graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
  return CoxeterGraph::build(std::move(vertices), edges);
}

inline CoxeterGraph full_subgraph(const CoxeterGraph& g, const VertexSet& xs) {
  std::vector<std::size_t> idx;
  idx.reserve(xs.size());
  for (const auto& x : xs) {
    auto i = g.index_of(x);
    if (!i) throw GraphError("unknown vertex '" + x + "'");
    idx.push_back(*i);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (int m = g.label_at(idx[a], idx[b])) edges.push_back({g.vertex(idx[a]), g.vertex(idx[b]), m});
  return CoxeterGraph::build({xs.begin(), xs.end()}, edges);
}

inline CoxeterGraph full_subgraph(const CoxeterGraph& g, Mask m) { return full_subgraph(g, g.set_of(m)); }

/// Components ordered by least vertex identifier.
inline std::vector<VertexSet> connected_components(const CoxeterGraph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.insert(g.vertex(v));
      for (std::size_t w = 0; w < g.size(); ++w)
        if (!seen[w] && g.adjacent_at(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// Component of `start` inside the vertex subset `within`, as a mask.
inline Mask component_mask(const CoxeterGraph& g, Mask within, std::size_t start) {
  Mask found = Mask{1} << start;
  Mask frontier = found;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.neighbour_mask(static_cast<std::size_t>(std::countr_zero(f)));
    next &= within & ~found;
    found |= next;
    frontier = next;
  }
  return found;
}

inline bool is_connected(const CoxeterGraph& g) { return connected_components(g).size() <= 1; }

inline bool is_even(const CoxeterGraph& g) {
  for (const auto& e : g.edges())
    if (e.label % 2 != 0) return false;
  return true;
}

inline bool is_triangle_free(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent_at(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.adjacent_at(i, k) && g.adjacent_at(j, k)) return false;
    }
  return true;
}

/// Acyclic iff |E| = |V| - (number of components).
inline bool is_forest(const CoxeterGraph& g) {
  return g.edge_count() + connected_components(g).size() == g.size();
}

// ---------------------------------------------------------------------------
// Artin presentation

using Word = std::vector<VertexId>;

struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  std::vector<VertexId> generators;
  std::vector<Relation> relations;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// The alternating word a b a b ... of length m.
inline Word alternating_word(const VertexId& a, const VertexId& b, int m) {
  Word w;
  w.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

inline Presentation artin_presentation(const CoxeterGraph& g) {
  Presentation p;
  p.generators = g.vertices();
  for (const auto& e : g.edges())
    p.relations.push_back({alternating_word(e.from, e.to, e.label), alternating_word(e.to, e.from, e.label)});
  return p;
}

inline std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& s : p.generators) out << ' ' << s;
  out << '\n';
  for (const auto& r : p.relations) {
    out << "relation:";
    for (const auto& s : r.lhs) out << ' ' << s;
    out << " =";
    for (const auto& s : r.rhs) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

}  // namespace artinrf
