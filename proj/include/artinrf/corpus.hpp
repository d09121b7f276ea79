#pragma once

// Seeded random Coxeter graphs for test corpora.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coxeter_graph.hpp"

namespace artinrf {

using Rng = std::mt19937_64;

/// s00, s01, ... so that lexicographic order matches numeric order.
inline std::vector<VertexId> numbered_vertices(std::size_t n) {
  std::vector<VertexId> out;
  const std::size_t width = n <= 100 ? 2 : std::to_string(n - 1).size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("s" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits);
  }
  return out;
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Uniform labelled tree from a random Pruefer sequence, then each edge is
/// dropped with probability drop_prob to give a forest. Labels uniform in
/// [min_label, max_label].
inline CoxeterGraph random_forest(Rng& rng, std::size_t n, double drop_prob = 0.15, int min_label = 2,
                                  int max_label = 7) {
  auto names = numbered_vertices(n);
  std::vector<Edge> edges;
  if (n >= 2) {
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::bernoulli_distribution drop(drop_prob);
    auto add = [&](std::size_t a, std::size_t b) {
      int m = uniform_int(rng, min_label, max_label);
      if (!drop(rng)) edges.push_back({names[a], names[b], m});
    };
    for (auto c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      add(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    std::size_t u = n, v = n;
    for (std::size_t i = 0; i < n; ++i)
      if (degree[i] == 1) (u == n ? u : v) = i;
    add(u, v);
  }
  return CoxeterGraph::build(names, edges);
}

/// Triangle-free graph with even labels drawn from `labels`. Pairs are
/// visited in random order and kept with probability edge_prob unless they
/// would close a triangle.
inline CoxeterGraph random_even_triangle_free(Rng& rng, std::size_t n, double edge_prob = 0.45,
                                              std::vector<int> labels = {2, 4, 6}) {
  auto names = numbered_vertices(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::bernoulli_distribution keep(edge_prob);
  std::vector<Edge> edges;
  for (auto [i, j] : pairs) {
    if (!keep(rng)) continue;
    bool closes = false;
    for (std::size_t k = 0; k < n && !closes; ++k) closes = adj[i][k] && adj[j][k];
    if (closes) continue;
    adj[i][j] = adj[j][i] = true;
    int m = labels[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(labels.size()) - 1))];
    edges.push_back({names[i], names[j], m});
  }
  return CoxeterGraph::build(names, edges);
}

/// Erdos-Renyi style graph with labels uniform in [min_label, max_label].
inline CoxeterGraph random_graph(Rng& rng, std::size_t n, double edge_prob = 0.4, int min_label = 2,
                                 int max_label = 7) {
  auto names = numbered_vertices(n);
  std::bernoulli_distribution keep(edge_prob);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(rng)) edges.push_back({names[i], names[j], uniform_int(rng, min_label, max_label)});
  return CoxeterGraph::build(names, edges);
}

}  // namespace artinrf
