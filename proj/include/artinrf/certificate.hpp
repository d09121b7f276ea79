#pragma once

// Residual finiteness certificates.
//
// A certificate is a tree over vertex subsets ("subjects") of one Coxeter
// graph. Each node claims that the Artin group of its subject is residually
// finite:
//
//   Base         the subject belongs to a family known to be residually
//                finite (see recognizers.hpp).
//   FreeProduct  the children are the connected components of the subject.
//   Amalgam      subject = x1 u x2 with x1 n x2 = x0 and no edge between
//                x1\x0 and x2\x0, so A = A_x1 *_{A_x0} A_x2; each factor
//                retracts onto A_x0 via a generator-level witness. A free
//                product of two factors with an edge-free split is the
//                special case x0 = {} with Kill witnesses.
//
// The builders below expand the cell-partition arguments into these three
// node kinds; verify.hpp re-checks every condition independently.

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coxeter_graph.hpp"
#include "partition.hpp"
#include "recognizers.hpp"

namespace artinrf {

class BuildError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Generator map A_domain -> A_target used as a retraction.
///   FoldTo(s): every generator goes to s.
///   Kill(V):   generators in V go to 1, the rest are fixed.
struct RetractionWitness {
  enum class Kind { FoldTo, Kill };

  Kind kind = Kind::FoldTo;
  VertexId target;    // FoldTo only
  VertexSet victims;  // Kill only
  VertexSet domain;

  static RetractionWitness fold_to(VertexId s, VertexSet domain) {
    return {Kind::FoldTo, std::move(s), {}, std::move(domain)};
  }
  static RetractionWitness kill(VertexSet victims, VertexSet domain) {
    return {Kind::Kill, {}, std::move(victims), std::move(domain)};
  }

  /// Image of a generator; nullopt is the identity element.
  std::optional<VertexId> image(const VertexId& v) const {
    if (kind == Kind::FoldTo) return target;
    if (victims.count(v)) return std::nullopt;
    return v;
  }

  friend bool operator==(const RetractionWitness&, const RetractionWitness&) = default;
};

enum class NodeKind { Base, FreeProduct, Amalgam };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Base: return "base";
    case NodeKind::FreeProduct: return "free_product";
    case NodeKind::Amalgam: return "amalgam";
  }
  return "?";
}

struct Certificate {
  NodeKind kind = NodeKind::Base;
  VertexSet subject;
  BaseTag tag;                  // Base
  VertexSet x1, x2, x0;         // Amalgam
  RetractionWitness w1, w2;     // Amalgam
  std::vector<Certificate> children;

  static Certificate base(VertexSet subject, BaseTag tag) {
    Certificate c;
    c.kind = NodeKind::Base;
    c.subject = std::move(subject);
    c.tag = std::move(tag);
    return c;
  }

  static Certificate free_product(VertexSet subject, std::vector<Certificate> children) {
    Certificate c;
    c.kind = NodeKind::FreeProduct;
    c.subject = std::move(subject);
    c.children = std::move(children);
    return c;
  }

  static Certificate amalgam(VertexSet x1, VertexSet x2, VertexSet x0, RetractionWitness w1, RetractionWitness w2,
                             Certificate child1, Certificate child2) {
    Certificate c;
    c.kind = NodeKind::Amalgam;
    c.subject = x1;
    c.subject.insert(x2.begin(), x2.end());
    c.x1 = std::move(x1);
    c.x2 = std::move(x2);
    c.x0 = std::move(x0);
    c.w1 = std::move(w1);
    c.w2 = std::move(w2);
    c.children.push_back(std::move(child1));
    c.children.push_back(std::move(child2));
    return c;
  }

  std::size_t node_count() const {
    return std::accumulate(children.begin(), children.end(), std::size_t{1},
                           [](std::size_t acc, const Certificate& c) { return acc + c.node_count(); });
  }

  std::size_t count(NodeKind k) const {
    std::size_t n = kind == k ? 1 : 0;
    for (const auto& c : children) n += c.count(k);
    return n;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// ---------------------------------------------------------------------------
// Retraction check

struct RetractionVerdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that w defines a homomorphism A_sub -> A_target that fixes target
/// pointwise. Once identity letters are erased, every relation of the sub
/// graph must map either to two equal words of the free monoid or to a
/// defining relation of A_target; either way the image holds in A_target.
inline RetractionVerdict check_retraction(const CoxeterGraph& g, const VertexSet& sub, const VertexSet& target,
                                          const RetractionWitness& w) {
  auto fail = [](std::string why) { return RetractionVerdict{false, std::move(why)}; };

  for (const auto& v : sub)
    if (!g.contains(v)) return fail("vertex '" + v + "' of the factor is not in the graph");
  if (!std::includes(sub.begin(), sub.end(), target.begin(), target.end()))
    return fail("amalgamated set is not contained in the factor");
  if (w.domain != sub) return fail("witness domain differs from the factor");
  if (w.kind == RetractionWitness::Kind::FoldTo && !sub.count(w.target))
    return fail("fold target '" + w.target + "' is outside the domain");
  if (w.kind == RetractionWitness::Kind::Kill &&
      !std::includes(sub.begin(), sub.end(), w.victims.begin(), w.victims.end()))
    return fail("killed generators lie outside the domain");

  for (const auto& t : target) {
    auto img = w.image(t);
    if (!img || *img != t) return fail("generator '" + t + "' of the amalgamated subgroup is not fixed");
  }
  for (const auto& v : sub) {
    auto img = w.image(v);
    if (img && !target.count(*img)) return fail("generator '" + v + "' is sent outside the amalgamated subgroup");
  }

  auto apply = [&](const Word& word) {
    Word out;
    for (const auto& letter : word)
      if (auto img = w.image(letter)) out.push_back(*img);
    return out;
  };
  std::set<std::pair<Word, Word>> target_relations;
  for (auto& rel : artin_presentation(full_subgraph(g, target)).relations) {
    target_relations.emplace(rel.lhs, rel.rhs);
    target_relations.emplace(std::move(rel.rhs), std::move(rel.lhs));
  }
  for (const auto& rel : artin_presentation(full_subgraph(g, sub)).relations) {
    Word lhs = apply(rel.lhs);
    Word rhs = apply(rel.rhs);
    if (lhs != rhs && !target_relations.count({lhs, rhs})) {
      auto spell = [](const Word& wd) {
        std::string s;
        for (const auto& l : wd) s += (s.empty() ? "" : " ") + l;
        return s.empty() ? std::string("1") : s;
      };
      return fail("relation " + spell(rel.lhs) + " = " + spell(rel.rhs) + " maps to " + spell(lhs) + " = " +
                  spell(rhs));
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Builders

/// Supplies a certificate whose subject is exactly the given cell.
using CellCertifier = std::function<Certificate(const VertexSet& cell)>;

namespace detail {

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Certificate small_base(const CoxeterGraph& g, const VertexSet& subject) {
  return Certificate::base(subject, {BaseKind::SizeLeqTwo, size_leq_two_detail(full_subgraph(g, subject))});
}

inline Certificate cell_certificate(const CoxeterGraph& g, const VertexSet& cell, const CellCertifier& certify) {
  if (cell.size() <= 2) return small_base(g, cell);
  Certificate c = certify(cell);
  if (c.subject != cell) throw BuildError("cell certifier returned a certificate for a different subject");
  return c;
}

/// A = A_a *_<s> A_b for pieces meeting exactly in {s} with no edge between
/// a\{s} and b\{s}. Both sides fold onto s.
inline Certificate fold_amalgam(const VertexId& s, VertexSet a, Certificate ca, VertexSet b, Certificate cb) {
  auto least_other = [&](const VertexSet& piece) {
    for (const auto& v : piece)
      if (v != s) return v;
    return s;
  };
  if (least_other(b) < least_other(a)) {
    std::swap(a, b);
    std::swap(ca, cb);
  }
  auto w1 = RetractionWitness::fold_to(s, a);
  auto w2 = RetractionWitness::fold_to(s, b);
  return Certificate::amalgam(std::move(a), std::move(b), VertexSet{s}, std::move(w1), std::move(w2), std::move(ca),
                              std::move(cb));
}

/// Free product of pieces with no edges between them. When the pieces are
/// exactly the connected components this is a FreeProduct node; otherwise it
/// is a right-nested chain of amalgams over the trivial group.
inline Certificate free_join(const CoxeterGraph& g, std::vector<VertexSet> pieces, std::vector<Certificate> certs) {
  if (pieces.size() == 1) return std::move(certs.front());
  VertexSet subject;
  for (const auto& p : pieces) subject.insert(p.begin(), p.end());
  auto comps = connected_components(full_subgraph(g, subject));
  {
    auto sorted = pieces;
    std::sort(sorted.begin(), sorted.end());
    auto sorted_comps = comps;
    std::sort(sorted_comps.begin(), sorted_comps.end());
    if (sorted == sorted_comps) {
      std::vector<Certificate> ordered;
      for (const auto& c : comps)
        for (std::size_t k = 0; k < pieces.size(); ++k)
          if (pieces[k] == c) ordered.push_back(certs[k]);
      return Certificate::free_product(std::move(subject), std::move(ordered));
    }
  }
  VertexSet head;
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) head.insert(pieces[k].begin(), pieces[k].end());
  VertexSet last = pieces.back();
  Certificate last_cert = std::move(certs.back());
  pieces.pop_back();
  certs.pop_back();
  Certificate head_cert = free_join(g, std::move(pieces), std::move(certs));
  auto w1 = RetractionWitness::kill(head, head);
  auto w2 = RetractionWitness::kill(last, last);
  return Certificate::amalgam(head, last, {}, std::move(w1), std::move(w2), std::move(head_cert),
                              std::move(last_cert));
}

inline void require_admissible(const CoxeterGraph& g, const Partition& p) {
  try {
    if (!is_admissible(g, p)) throw BuildError("partition is not admissible");
  } catch (const PartitionError& e) {
    throw BuildError(e.what());
  }
}

inline Partition restrict_cells(const Partition& p, const std::vector<std::size_t>& keep) {
  std::vector<VertexSet> cells;
  for (auto k : keep) cells.push_back(p.cells()[k]);
  return Partition(std::move(cells));
}

}  // namespace detail

/// Splits over one vertex s. With Y_1..Y_l the components of g - s (by least
/// vertex), produces l-1 nested amalgams
///   x1 = Y_1 u ... u Y_{l-1} u {s},  x2 = Y_l u {s},  x0 = {s}
/// and asks certify_child for each Y_i u {s}. For l <= 1 the child
/// certificate of the whole graph is returned unchanged.
inline Certificate build_vertex_amalgam(const CoxeterGraph& g, const VertexId& s, const CellCertifier& certify_child) {
  if (!g.contains(s)) throw BuildError("split vertex '" + s + "' is not in the graph");
  auto rest = g.vertex_set();
  rest.erase(s);
  auto comps = connected_components(full_subgraph(g, rest));
  if (comps.size() <= 1) return certify_child(g.vertex_set());

  auto with_s = [&](VertexSet y) {
    y.insert(s);
    return y;
  };
  VertexSet acc = with_s(comps[0]);
  Certificate cert = certify_child(acc);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    VertexSet piece = with_s(comps[i]);
    auto w1 = RetractionWitness::fold_to(s, acc);
    auto w2 = RetractionWitness::fold_to(s, piece);
    VertexSet next = detail::set_union(acc, piece);
    cert = Certificate::amalgam(acc, piece, {s}, std::move(w1), std::move(w2), std::move(cert), certify_child(piece));
    acc = std::move(next);
  }
  return cert;
}

/// Admissible partitions with one or two cells. Two cells X, Y joined by
/// their unique edge s-t (s in X) give
///   A = A_X *_<s> A_{Y u {s}},   A_{Y u {s}} = A_Y *_<t> A_{s,t}
/// so only the cells themselves and the dihedral piece {s,t} need
/// certificates. Unjoined cells give a free product.
inline Certificate build_two_cell(const CoxeterGraph& g, const Partition& p, const CellCertifier& certify_cells) {
  detail::require_admissible(g, p);
  if (p.size() == 0) return detail::small_base(g, {});
  if (p.size() == 1) return detail::cell_certificate(g, p.cells()[0], certify_cells);
  if (p.size() != 2) throw BuildError("two-cell builder called with " + std::to_string(p.size()) + " cells");

  const VertexSet& x = p.cells()[0];
  const VertexSet& y = p.cells()[1];
  std::optional<Edge> link;
  for (const auto& s : x)
    for (const auto& t : y)
      if (auto m = g.label(s, t)) link = Edge{s, t, *m};

  Certificate cx = detail::cell_certificate(g, x, certify_cells);
  Certificate cy = detail::cell_certificate(g, y, certify_cells);
  if (!link) return detail::free_join(g, {x, y}, {std::move(cx), std::move(cy)});

  const VertexId& s = link->from;
  const VertexId& t = link->to;
  VertexSet st{s, t};
  VertexSet y_s = detail::set_union(y, {s});
  Certificate c_ys = y.size() == 1 ? detail::small_base(g, st)
                                   : detail::fold_amalgam(t, y, std::move(cy), st, detail::small_base(g, st));
  if (x.size() == 1) return c_ys;
  return detail::fold_amalgam(s, x, std::move(cx), std::move(y_s), std::move(c_ys));
}

/// Quotient even and triangle free. With three or more cells pick the first
/// non-adjacent pair (X, Y) of the quotient and split
///   A = A_{S\X} *_{A_{S\(X u Y)}} A_{S\Y}
/// killing Y on the first factor and X on the second; the cross edges that
/// survive the kill are the even quotient edges.
inline Certificate build_even_tf(const CoxeterGraph& g, const Partition& p, const CellCertifier& certify_cells) {
  detail::require_admissible(g, p);
  Quotient q = quotient(g, p);
  if (!is_even(q.graph) || !is_triangle_free(q.graph))
    throw BuildError("quotient graph is not even and triangle free");
  if (p.size() <= 2) return build_two_cell(g, p, certify_cells);

  const auto& cells = p.cells();
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (q.graph.adjacent_at(a, b)) continue;
      const VertexSet all = g.vertex_set();
      VertexSet u1 = detail::set_minus(all, cells[a]);
      VertexSet u2 = detail::set_minus(all, cells[b]);
      VertexSet u0 = detail::set_minus(u1, cells[b]);

      std::vector<std::size_t> keep1, keep2;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k != a) keep1.push_back(k);
        if (k != b) keep2.push_back(k);
      }
      Certificate c1 = build_even_tf(full_subgraph(g, u1), detail::restrict_cells(p, keep1), certify_cells);
      Certificate c2 = build_even_tf(full_subgraph(g, u2), detail::restrict_cells(p, keep2), certify_cells);
      auto w1 = RetractionWitness::kill(cells[b], u1);
      auto w2 = RetractionWitness::kill(cells[a], u2);
      return Certificate::amalgam(std::move(u1), std::move(u2), std::move(u0), std::move(w1), std::move(w2),
                                  std::move(c1), std::move(c2));
    }
  throw BuildError("internal: no non-adjacent cell pair in a triangle-free quotient with three or more cells");
}

/// Quotient a forest. Components of the quotient are joined freely. In a
/// tree with three or more cells take the first cell X of valence >= 2 and
/// its first neighbour Y, joined by the unique edge s-t (s in X). Cutting
/// the tree edge X-Y gives
///   U = (cells on Y's side) u {s},   V = cells on X's side,
/// with U n V = {s} and no edge between U\{s} and V\{s}. U carries the
/// partition (Y's side) + {{s}}, V the partition of X's side; both are trees
/// with fewer cells.
inline Certificate build_forest(const CoxeterGraph& g, const Partition& p, const CellCertifier& certify_cells) {
  detail::require_admissible(g, p);
  Quotient q = quotient(g, p);
  if (!is_forest(q.graph)) throw BuildError("quotient graph is not a forest");
  const auto& cells = p.cells();

  auto tree_parts = connected_components(q.graph);
  if (tree_parts.size() > 1) {
    std::vector<VertexSet> pieces;
    std::vector<Certificate> certs;
    for (const auto& part : tree_parts) {
      std::vector<std::size_t> keep;
      VertexSet piece;
      for (const auto& rep : part) {
        std::size_t k = *q.graph.index_of(rep);
        keep.push_back(k);
        piece.insert(cells[k].begin(), cells[k].end());
      }
      certs.push_back(build_forest(full_subgraph(g, piece), detail::restrict_cells(p, keep), certify_cells));
      pieces.push_back(std::move(piece));
    }
    return detail::free_join(g, std::move(pieces), std::move(certs));
  }
  if (p.size() <= 2) return build_two_cell(g, p, certify_cells);

  std::size_t x = 0;
  while (q.graph.degree_at(x) < 2) ++x;
  std::size_t y = 0;
  while (!q.graph.adjacent_at(x, y)) ++y;
  Edge link = *connecting_edge(q, q.graph.vertex(x), q.graph.vertex(y));
  const VertexId& s = link.from;

  // Cells reachable from `start` in the quotient without passing `avoid`.
  auto side = [&](std::size_t start, std::size_t avoid) {
    std::vector<std::size_t> out{start};
    std::vector<bool> seen(cells.size(), false);
    seen[start] = seen[avoid] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (std::size_t w = 0; w < cells.size(); ++w)
        if (!seen[w] && q.graph.adjacent_at(out[k], w)) {
          seen[w] = true;
          out.push_back(w);
        }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<VertexSet> u_cells{{s}};
  VertexSet u{s};
  for (auto k : side(y, x)) {
    u_cells.push_back(cells[k]);
    u.insert(cells[k].begin(), cells[k].end());
  }
  std::vector<std::size_t> v_keep = side(x, y);
  VertexSet v;
  for (auto k : v_keep) v.insert(cells[k].begin(), cells[k].end());

  Certificate cu = build_forest(full_subgraph(g, u), Partition(std::move(u_cells)), certify_cells);
  Certificate cv = build_forest(full_subgraph(g, v), detail::restrict_cells(p, v_keep), certify_cells);
  return detail::fold_amalgam(s, std::move(u), std::move(cu), std::move(v), std::move(cv));
}

}  // namespace artinrf
