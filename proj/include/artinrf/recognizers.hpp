#pragma once

// Recognizers for families of Coxeter graphs whose Artin groups are known to
// be residually finite. A match becomes a trusted Base leaf of a certificate.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "coxeter_graph.hpp"
#include "graph_io.hpp"

namespace artinrf {

enum class BaseKind { SizeLeqTwo, RightAngled, SphericalType, EvenFC, UserAxiom };

inline const char* to_string(BaseKind k) {
  switch (k) {
    case BaseKind::SizeLeqTwo: return "SizeLeqTwo";
    case BaseKind::RightAngled: return "RightAngled";
    case BaseKind::SphericalType: return "SphericalType";
    case BaseKind::EvenFC: return "EvenFC";
    case BaseKind::UserAxiom: return "UserAxiom";
  }
  return "?";
}

inline std::optional<BaseKind> base_kind_from_string(std::string_view s) {
  for (auto k : {BaseKind::SizeLeqTwo, BaseKind::RightAngled, BaseKind::SphericalType, BaseKind::EvenFC,
                 BaseKind::UserAxiom})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

/// For UserAxiom the detail is the axiom name; otherwise it is free text.
struct BaseTag {
  BaseKind kind = BaseKind::SizeLeqTwo;
  std::string detail;
  friend bool operator==(const BaseTag&, const BaseTag&) = default;
};

using AxiomList = std::vector<NamedGraph>;

// ---------------------------------------------------------------------------
// Spherical type by classification

namespace detail {

// Irreducible piece: vertices joined by labels >= 3. Label-2 pairs commute
// and split the diagram into a direct product.
inline std::optional<std::string> classify_irreducible(const CoxeterGraph& g, const std::vector<std::size_t>& comp) {
  const std::size_t n = comp.size();
  auto lab = [&](std::size_t a, std::size_t b) { return g.label_at(comp[a], comp[b]); };
  auto linked = [&](std::size_t a, std::size_t b) { return a != b && lab(a, b) >= 3; };

  if (n == 1) return "A1";
  if (n == 2) {
    int m = lab(0, 1);
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    if (m == 6) return "G2";
    return "I2(" + std::to_string(m) + ")";
  }

  std::vector<std::size_t> deg(n, 0);
  std::size_t edges = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (linked(a, b)) {
        ++deg[a];
        ++deg[b];
        ++edges;
      }
  if (edges != n - 1) return std::nullopt;  // connected, so a tree iff n-1 edges

  const auto branch = std::count_if(deg.begin(), deg.end(), [](std::size_t d) { return d == 3; });
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d > 3; }) || branch > 1)
    return std::nullopt;

  if (branch == 1) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (linked(a, b) && lab(a, b) != 3) return std::nullopt;
    std::size_t centre = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    std::vector<std::size_t> arms;
    for (std::size_t start = 0; start < n; ++start) {
      if (!linked(centre, start)) continue;
      std::size_t prev = centre, cur = start, len = 1;
      for (;;) {
        std::size_t next = n;
        for (std::size_t w = 0; w < n; ++w)
          if (w != prev && linked(cur, w)) next = w;
        if (next == n) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
    return std::nullopt;
  }

  // Path: walk from an endpoint and read off the labels.
  std::size_t end = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 1) - deg.begin());
  std::vector<int> labels;
  for (std::size_t prev = n, cur = end;;) {
    std::size_t next = n;
    for (std::size_t w = 0; w < n; ++w)
      if (w != prev && linked(cur, w)) next = w;
    if (next == n) break;
    labels.push_back(lab(cur, next));
    prev = cur;
    cur = next;
  }
  std::vector<std::size_t> odd_spots;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] != 3) odd_spots.push_back(k);
  if (odd_spots.empty()) return "A" + std::to_string(n);
  if (odd_spots.size() != 1) return std::nullopt;
  const std::size_t k = odd_spots[0];
  const int m = labels[k];
  const bool at_end = k == 0 || k + 1 == labels.size();
  if (m == 4 && at_end) return "B" + std::to_string(n);
  if (m == 4 && n == 4) return "F4";
  if (m == 5 && at_end && (n == 3 || n == 4)) return "H" + std::to_string(n);
  return std::nullopt;
}

}  // namespace detail

/// Cartan-Killing type such as "A3 x B2" (factors sorted by name), or nothing when W is infinite.
/// The empty graph has type "" (trivial group).
inline std::optional<std::string> spherical_type(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent_at(i, j)) return std::nullopt;  // an infinite label

  std::vector<bool> seen(n, false);
  std::vector<std::string> parts;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && g.label_at(comp[k], w) >= 3) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    auto t = detail::classify_irreducible(g, comp);
    if (!t) return std::nullopt;
    parts.push_back(*t);
  }
  // Sorted so the name does not depend on vertex order.
  std::sort(parts.begin(), parts.end());
  std::string type;
  for (const auto& p : parts) type += (type.empty() ? "" : " x ") + p;
  return type;
}

inline bool is_spherical(const CoxeterGraph& g) { return spherical_type(g).has_value(); }

// ---------------------------------------------------------------------------
// Gram matrix oracle

class GramMatrix {
 public:
  explicit GramMatrix(const CoxeterGraph& g) : n_(g.size()), a_(n_ * n_, 0.0L) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) {
          at(i, j) = 1.0L;
          continue;
        }
        int m = g.label_at(i, j);
        if (m == 0) at(i, j) = -1.0L;
        else if (m == 2) at(i, j) = 0.0L;
        else at(i, j) = -std::cos(std::numbers::pi_v<long double> / m);
      }
  }

  std::size_t size() const { return n_; }
  long double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Determinant of the leading k x k block, by elimination with partial pivoting.
  long double leading_minor(std::size_t k) const {
    std::vector<long double> m(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] = (*this)(i, j);
    long double det = 1.0L;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::fabs(m[r * k + c]) > std::fabs(m[piv * k + c])) piv = r;
      if (m[piv * k + c] == 0.0L) return 0.0L;
      if (piv != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(m[c * k + j], m[piv * k + j]);
        det = -det;
      }
      det *= m[c * k + c];
      for (std::size_t r = c + 1; r < k; ++r) {
        long double f = m[r * k + c] / m[c * k + c];
        for (std::size_t j = c; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
      }
    }
    return det;
  }

 private:
  long double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  std::size_t n_;
  std::vector<long double> a_;
};

/// Sylvester's criterion with a tolerance: every leading principal minor > tol.
inline bool gram_positive_definite(const CoxeterGraph& g, double tol) {
  GramMatrix gram(g);
  for (std::size_t k = 1; k <= gram.size(); ++k)
    if (gram.leading_minor(k) <= tol) return false;
  return true;
}

// ---------------------------------------------------------------------------

inline bool is_right_angled(const CoxeterGraph& g) {
  for (const auto& e : g.edges())
    if (e.label != 2) return false;
  return true;
}

/// Maximal cliques of the finite-label graph, pivoting Bron-Kerbosch.
inline std::vector<Mask> maximal_cliques(const CoxeterGraph& g) {
  g.require_mask_size();
  std::vector<Mask> nbr(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) nbr[i] = g.neighbour_mask(i);
  std::vector<Mask> out;
  auto rec = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    std::size_t pivot = 0;
    int best = -1;
    for (Mask px = p | x; px; px &= px - 1) {
      auto u = static_cast<std::size_t>(std::countr_zero(px));
      int c = std::popcount(p & nbr[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~nbr[pivot]; cand; cand &= cand - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(cand));
      Mask bit = Mask{1} << v;
      self(self, r | bit, p & nbr[v], x & nbr[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  if (!g.empty()) rec(rec, 0, g.full_mask(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Even and of FC type. Every free-of-infinity subset lies in a maximal
/// clique, and full subgraphs of spherical graphs are spherical, so checking
/// the maximal cliques suffices.
inline bool is_even_fc(const CoxeterGraph& g) {
  if (!is_even(g)) return false;
  for (Mask c : maximal_cliques(g))
    if (!is_spherical(full_subgraph(g, c))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Label-preserving isomorphism

/// Returns perm with perm[i] = image in `b` of vertex i of `a`.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const CoxeterGraph& a, const CoxeterGraph& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.edge_count() != b.edge_count()) return std::nullopt;

  auto signature = [](const CoxeterGraph& g, std::size_t v) {
    std::vector<int> s;
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g.adjacent_at(v, w)) s.push_back(g.label_at(v, w));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> sa(n), sb(n);
  for (std::size_t v = 0; v < n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }

  // Map high-degree vertices first.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return sa[x].size() > sa[y].size(); });

  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        std::size_t u = order[k];
        ok = a.label_at(v, u) == b.label_at(w, perm[u]);
      }
      if (!ok) continue;
      perm[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    perm[v] = n;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return perm;
}

inline bool label_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------------------

inline std::string size_leq_two_detail(const CoxeterGraph& g) {
  switch (g.size()) {
    case 0: return "trivial group";
    case 1: return "infinite cyclic group";
    default: {
      int m = g.label_at(0, 1);
      if (m == 0) return "free group of rank 2";
      return "dihedral type I2(" + std::to_string(m) + "), spherical";
    }
  }
}

/// Does the claimed tag hold for g? UserAxiom looks the axiom up by name.
inline bool base_tag_holds(const CoxeterGraph& g, const BaseTag& tag, const AxiomList& axioms) {
  switch (tag.kind) {
    case BaseKind::SizeLeqTwo: return g.size() <= 2;
    case BaseKind::RightAngled: return is_right_angled(g);
    case BaseKind::SphericalType: return is_spherical(g);
    case BaseKind::EvenFC: return is_even_fc(g);
    case BaseKind::UserAxiom:
      for (const auto& ax : axioms)
        if (ax.name == tag.detail && label_isomorphic(ax.graph, g)) return true;
      return false;
  }
  return false;
}

/// First match in the order SizeLeqTwo, RightAngled, SphericalType, EvenFC, UserAxiom.
inline std::optional<BaseTag> base_rf(const CoxeterGraph& g, const AxiomList& axioms = {}) {
  if (g.size() <= 2) return BaseTag{BaseKind::SizeLeqTwo, size_leq_two_detail(g)};
  if (is_right_angled(g)) return BaseTag{BaseKind::RightAngled, "all finite labels are 2"};
  if (auto t = spherical_type(g)) return BaseTag{BaseKind::SphericalType, "type " + *t};
  if (is_even_fc(g)) return BaseTag{BaseKind::EvenFC, "even, every maximal clique spherical"};
  for (const auto& ax : axioms)
    if (label_isomorphic(ax.graph, g)) return BaseTag{BaseKind::UserAxiom, ax.name};
  return std::nullopt;
}

}  // namespace artinrf
