#pragma once

// Partitions of the generating set, the admissibility condition (at most
// one edge between any two cells) and the quotient graph they induce.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxeter_graph.hpp"
#include "graph_io.hpp"

namespace artinrf {

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical form: cells sorted internally (VertexSet) and ordered by least
/// element.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> cells) : cells_(std::move(cells)) {
    for (const auto& c : cells_)
      if (c.empty()) throw PartitionError("partition has an empty cell");
    std::sort(cells_.begin(), cells_.end(), [](const VertexSet& a, const VertexSet& b) { return *a.begin() < *b.begin(); });
  }

  static Partition singletons(const CoxeterGraph& g) {
    std::vector<VertexSet> cells;
    for (const auto& v : g.vertices()) cells.push_back({v});
    return Partition(std::move(cells));
  }

  /// `labels[i]` is the cell index of vertex i of g.
  static Partition from_labels(const CoxeterGraph& g, const std::vector<int>& labels) {
    int k = 0;
    for (int l : labels) k = std::max(k, l + 1);
    std::vector<VertexSet> cells(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < labels.size(); ++i) cells[static_cast<std::size_t>(labels[i])].insert(g.vertex(i));
    std::erase_if(cells, [](const VertexSet& c) { return c.empty(); });
    return Partition(std::move(cells));
  }

  static Partition from_masks(const CoxeterGraph& g, const std::vector<Mask>& masks) {
    std::vector<VertexSet> cells;
    for (Mask m : masks) cells.push_back(g.set_of(m));
    return Partition(std::move(cells));
  }

  const std::vector<VertexSet>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  /// Index of the cell containing v, if any.
  std::optional<std::size_t> cell_of(const VertexId& v) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].count(v)) return i;
    return std::nullopt;
  }

  VertexSet support() const {
    VertexSet out;
    for (const auto& c : cells_) out.insert(c.begin(), c.end());
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<VertexSet> cells_;
};

/// Throws unless p is a partition of vertices(g).
inline void require_partition_of(const CoxeterGraph& g, const Partition& p) {
  std::size_t total = 0;
  for (const auto& c : p.cells()) {
    total += c.size();
    for (const auto& v : c)
      if (!g.contains(v)) throw PartitionError("cell vertex '" + v + "' is not in the graph");
  }
  if (total != g.size() || p.support().size() != g.size())
    throw PartitionError("cells are not pairwise disjoint or do not cover the vertex set");
}

inline std::vector<Mask> cell_masks(const CoxeterGraph& g, const Partition& p) {
  std::vector<Mask> out;
  for (const auto& c : p.cells()) out.push_back(g.mask_of(c));
  return out;
}

inline bool is_admissible(const CoxeterGraph& g, const Partition& p) {
  require_partition_of(g, p);
  const auto& cells = p.cells();
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      int crossing = 0;
      for (const auto& s : cells[a])
        for (const auto& t : cells[b])
          if (g.label(s, t) && ++crossing > 1) return false;
    }
  return true;
}

/// Maps a pair of quotient vertices (cell representatives, ordered) to the
/// unique edge of g joining the two cells. The edge is oriented so `from`
/// lies in the first cell of the key.
using QuotientEdgeIndex = std::map<std::pair<VertexId, VertexId>, Edge>;

struct Quotient {
  CoxeterGraph graph;  // vertex per cell, named by its least element
  QuotientEdgeIndex index;
};

inline Quotient quotient(const CoxeterGraph& g, const Partition& p) {
  require_partition_of(g, p);
  if (!is_admissible(g, p)) throw PartitionError("partition is not admissible; quotient labels are ill-defined");
  Quotient q;
  std::vector<VertexId> names;
  std::vector<Edge> edges;
  const auto& cells = p.cells();
  for (const auto& c : cells) names.push_back(*c.begin());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b)
      for (const auto& s : cells[a])
        for (const auto& t : cells[b])
          if (auto m = g.label(s, t)) {
            edges.push_back({names[a], names[b], *m});
            q.index[{names[a], names[b]}] = Edge{s, t, *m};
          }
  q.graph = CoxeterGraph::build(names, edges);
  return q;
}

/// Looks up the connecting edge between two cells given by representative,
/// oriented from the first argument's cell.
inline std::optional<Edge> connecting_edge(const Quotient& q, const VertexId& x, const VertexId& y) {
  if (x < y) {
    auto it = q.index.find({x, y});
    if (it == q.index.end()) return std::nullopt;
    return it->second;
  }
  auto it = q.index.find({y, x});
  if (it == q.index.end()) return std::nullopt;
  return Edge{it->second.to, it->second.from, it->second.label};
}

// ---------------------------------------------------------------------------
// Enumeration

/// Shared counter of visited search nodes. `limit` of zero means unbounded.
struct SearchBudget {
  std::size_t limit = 1'000'000;
  std::size_t used = 0;
  bool exhausted = false;

  bool spend() {
    if (limit != 0 && used >= limit) {
      exhausted = true;
      return false;
    }
    ++used;
    return true;
  }
};

/// Walks admissible partitions in restricted-growth-string order. The label
/// of vertex i is at most one more than the largest earlier label, so each
/// set partition appears once. A partial assignment is abandoned as soon as
/// two cells share a second edge. The visitor receives the cell label of
/// each vertex and returns false to stop. Returns false if stopped early
/// (visitor or budget).
class AdmissibleEnumerator {
 public:
  explicit AdmissibleEnumerator(const CoxeterGraph& g) : g_(g), n_(g.size()) {
    g_.require_mask_size();
    nbr_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) nbr_[i] = g_.neighbour_mask(i);
  }

  template <class Visitor>
  bool run(Visitor&& visit, SearchBudget* budget = nullptr) {
    labels_.assign(n_, -1);
    cross_.assign(n_ * n_, 0);
    if (n_ == 0) {
      if (budget && !budget->spend()) return false;
      return visit(labels_, 0);
    }
    return place(0, 0, visit, budget);
  }

 private:
  template <class Visitor>
  bool place(std::size_t v, int cells, Visitor& visit, SearchBudget* budget) {
    if (v == n_) return visit(labels_, cells);
    for (int c = 0; c <= cells && c < static_cast<int>(n_); ++c) {
      if (budget && !budget->spend()) return false;
      if (!assign(v, c)) {
        unassign(v, c);
        continue;
      }
      bool go_on = place(v + 1, std::max(cells, c + 1), visit, budget);
      unassign(v, c);
      if (!go_on) return false;
    }
    return true;
  }

  int& cross(int a, int b) { return cross_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }

  // Adds v to cell c and bumps the edge counts to other cells; false if some
  // pair now has two connecting edges. unassign() must follow either way.
  bool assign(std::size_t v, int c) {
    labels_[v] = c;
    bool ok = true;
    for (std::size_t u = 0; u < v; ++u) {
      if (!(nbr_[v] >> u & 1) || labels_[u] == c) continue;
      int d = labels_[u];
      ++cross(c, d);
      ++cross(d, c);
      if (cross(c, d) > 1) ok = false;
    }
    return ok;
  }

  void unassign(std::size_t v, int c) {
    for (std::size_t u = 0; u < v; ++u) {
      if (!(nbr_[v] >> u & 1) || labels_[u] == c) continue;
      int d = labels_[u];
      --cross(c, d);
      --cross(d, c);
    }
    labels_[v] = -1;
  }

  const CoxeterGraph& g_;
  std::size_t n_;
  std::vector<Mask> nbr_;
  std::vector<int> labels_;
  std::vector<int> cross_;
};

inline std::vector<Partition> enumerate_admissible(const CoxeterGraph& g) {
  std::vector<Partition> out;
  AdmissibleEnumerator(g).run([&](const std::vector<int>& labels, int) {
    out.push_back(Partition::from_labels(g, labels));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Partition literal: {a,b|c|d,e}

inline Partition parse_partition(std::string_view text) {
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw PartitionError("partition literal must look like {a,b|c}");
  text = text.substr(1, text.size() - 2);
  std::vector<VertexSet> cells;
  std::size_t seen = 0;
  for (;;) {
    auto bar = text.find('|');
    std::string_view cell_text = text.substr(0, bar);
    VertexSet cell;
    for (;;) {
      auto comma = cell_text.find(',');
      std::string_view id = trimmed(cell_text.substr(0, comma));
      if (!is_valid_vertex_id(id)) throw PartitionError("bad vertex '" + std::string(id) + "' in partition literal");
      cell.insert(std::string(id));
      ++seen;
      if (comma == std::string_view::npos) break;
      cell_text = cell_text.substr(comma + 1);
    }
    cells.push_back(std::move(cell));
    if (bar == std::string_view::npos) break;
    text = text.substr(bar + 1);
  }
  Partition p(std::move(cells));
  if (p.support().size() != seen) throw PartitionError("vertex repeated in partition literal");
  return p;
}

inline std::string format_partition(const Partition& p) {
  std::string out = "{";
  bool first_cell = true;
  for (const auto& c : p.cells()) {
    if (!first_cell) out += '|';
    first_cell = false;
    bool first = true;
    for (const auto& v : c) {
      if (!first) out += ',';
      first = false;
      out += v;
    }
  }
  return out + "}";
}

/// DOT rendering of the quotient: nodes are labelled with their cell, each
/// edge carries its label and the witnessing edge of the original graph.
inline std::string export_quotient_dot(const CoxeterGraph& g, const Partition& p) {
  Quotient q = quotient(g, p);
  std::ostringstream out;
  out << "graph \"quotient\" {\n";
  for (const auto& c : p.cells()) {
    out << "  " << dot_quote(*c.begin()) << " [cell=" << dot_quote(format_partition(Partition({c}))) << "];\n";
  }
  for (const auto& [key, witness] : q.index)
    out << "  " << dot_quote(key.first) << " -- " << dot_quote(key.second) << " [label=" << witness.label
        << ", witness=" << dot_quote(witness.from + "--" + witness.to) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace artinrf
