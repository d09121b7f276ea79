#pragma once

// Search for an admissible partition whose cells are residually finite and
// whose quotient is a forest or even and triangle free, and assembly of the
// resulting certificate.

#include <optional>
#include <unordered_map>
#include <vector>

#include "certificate.hpp"
#include "partition.hpp"
#include "recognizers.hpp"

namespace artinrf {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

enum class QuotientCondition { Forest, EvenTriangleFree };

inline const char* to_string(QuotientCondition c) {
  return c == QuotientCondition::Forest ? "forest" : "even-triangle-free";
}

struct CertifyingPartition {
  Partition partition;
  QuotientCondition condition = QuotientCondition::Forest;
  std::vector<Certificate> cell_certificates;  // parallel to partition.cells()
};

struct SearchOutcome {
  std::optional<CertifyingPartition> found;
  bool budget_exhausted = false;
  std::size_t nodes_visited = 0;
};

struct CertifyOutcome {
  std::optional<Certificate> certificate;
  bool budget_exhausted = false;
  std::size_t nodes_visited = 0;
};

/// Stateful search over one root graph. Subjects are masks over the root's
/// vertex positions; cell certificates are memoized per subject and shared
/// across every partition that contains the same cell.
class Certifier {
 public:
  Certifier(CoxeterGraph root, AxiomList axioms, std::size_t budget = kDefaultBudget)
      : root_(std::move(root)), axioms_(std::move(axioms)) {
    root_.require_mask_size();
    budget_.limit = budget;
  }

  const SearchBudget& budget() const { return budget_; }

  /// Certificate for the whole root graph. Components are split off first;
  /// each component then goes through the partition search (no shortcut to
  /// a Base leaf for the whole component except via the one-cell partition).
  std::optional<Certificate> certify() { return certify_subject(root_.full_mask(), false); }

  /// First admissible partition of the subject, singletons first and then in
  /// restricted-growth order, that satisfies the quotient condition and whose
  /// cells all certify. A cell equal to the whole subject may only be a Base
  /// leaf.
  std::optional<CertifyingPartition> find_partition(Mask subject) {
    CoxeterGraph sub = full_subgraph(root_, subject);
    const std::size_t n = sub.size();
    std::vector<Mask> pos_to_root(n);
    for (std::size_t i = 0; i < n; ++i) pos_to_root[i] = Mask{1} << *root_.index_of(sub.vertex(i));

    std::optional<CertifyingPartition> result;
    auto attempt = [&](const std::vector<int>& labels, int cells) {
      auto cond = quotient_condition(sub, labels, cells);
      if (!cond) return;
      std::vector<Mask> masks(static_cast<std::size_t>(cells), 0);
      for (std::size_t i = 0; i < n; ++i) masks[static_cast<std::size_t>(labels[i])] |= pos_to_root[i];
      CertifyingPartition found{Partition::from_masks(root_, masks), *cond, {}};
      for (const auto& cell : found.partition.cells()) {
        Mask m = root_.mask_of(cell);
        std::optional<Certificate> c;
        if (m == subject) {
          if (auto tag = base_rf(sub, axioms_)) c = Certificate::base(cell, *tag);
        } else {
          c = certify_cell(m);
        }
        if (!c) return;
        found.cell_certificates.push_back(std::move(*c));
      }
      result = std::move(found);
    };

    if (!budget_.spend()) return std::nullopt;
    std::vector<int> singleton(n);
    for (std::size_t i = 0; i < n; ++i) singleton[i] = static_cast<int>(i);
    attempt(singleton, static_cast<int>(n));
    if (result || budget_.exhausted) return result;

    AdmissibleEnumerator(sub).run(
        [&](const std::vector<int>& labels, int cells) {
          if (static_cast<std::size_t>(cells) == n) return true;  // already tried
          attempt(labels, cells);
          return !result && !budget_.exhausted;
        },
        &budget_);
    return result;
  }

 private:
  /// Forest takes precedence over even-and-triangle-free.
  static std::optional<QuotientCondition> quotient_condition(const CoxeterGraph& sub, const std::vector<int>& labels,
                                                             int cells) {
    const auto k = static_cast<std::size_t>(cells);
    std::vector<int> qlab(k * k, 0);
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j)
        if (int m = sub.label_at(i, j); m && labels[i] != labels[j]) {
          auto a = static_cast<std::size_t>(labels[i]);
          auto b = static_cast<std::size_t>(labels[j]);
          qlab[a * k + b] = qlab[b * k + a] = m;
        }
    std::size_t edges = 0;
    bool even = true;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (int m = qlab[a * k + b]) {
          ++edges;
          even = even && m % 2 == 0;
        }
    // Union-find component count.
    std::vector<std::size_t> parent(k);
    for (std::size_t a = 0; a < k; ++a) parent[a] = a;
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::size_t components = k;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (qlab[a * k + b]) {
          auto ra = find(a), rb = find(b);
          if (ra != rb) {
            parent[ra] = rb;
            --components;
          }
        }
    if (edges + components == k) return QuotientCondition::Forest;
    if (!even) return std::nullopt;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        if (!qlab[a * k + b]) continue;
        for (std::size_t c = b + 1; c < k; ++c)
          if (qlab[a * k + c] && qlab[b * k + c]) return std::nullopt;
      }
    return QuotientCondition::EvenTriangleFree;
  }

  std::optional<Certificate> certify_cell(Mask m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    auto c = certify_subject(m, true);
    if (c || !budget_.exhausted) memo_.emplace(m, c);
    return c;
  }

  std::optional<Certificate> certify_subject(Mask m, bool as_cell) {
    VertexSet subject = root_.set_of(m);
    CoxeterGraph sub = full_subgraph(root_, subject);
    if (sub.size() <= 2) return Certificate::base(subject, {BaseKind::SizeLeqTwo, size_leq_two_detail(sub)});
    if (as_cell)
      if (auto tag = base_rf(sub, axioms_)) return Certificate::base(subject, *tag);

    auto comps = connected_components(sub);
    if (comps.size() > 1) {
      std::vector<Certificate> children;
      for (const auto& comp : comps) {
        Mask cm = root_.mask_of(comp);
        auto c = as_cell ? certify_cell(cm) : certify_subject(cm, false);
        if (!c) return std::nullopt;
        children.push_back(std::move(*c));
      }
      return Certificate::free_product(std::move(subject), std::move(children));
    }

    auto found = find_partition(m);
    if (!found) return std::nullopt;
    return assemble(sub, *found);
  }

  static Certificate assemble(const CoxeterGraph& sub, const CertifyingPartition& found) {
    const auto& cells = found.partition.cells();
    CellCertifier lookup = [&](const VertexSet& cell) -> Certificate {
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k] == cell) return found.cell_certificates[k];
      throw BuildError("no certificate prepared for a requested cell");
    };
    if (found.partition.size() == 1) return found.cell_certificates.front();
    return found.condition == QuotientCondition::Forest ? build_forest(sub, found.partition, lookup)
                                                        : build_even_tf(sub, found.partition, lookup);
  }

  CoxeterGraph root_;
  AxiomList axioms_;
  SearchBudget budget_;
  std::unordered_map<Mask, std::optional<Certificate>> memo_;
};

inline SearchOutcome find_certifying_partition(const CoxeterGraph& g, const AxiomList& axioms = {},
                                               std::size_t budget = kDefaultBudget) {
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  Certifier certifier(g, axioms, budget);
  SearchOutcome out;
  out.found = certifier.find_partition(g.full_mask());
  out.budget_exhausted = !out.found && certifier.budget().exhausted;
  out.nodes_visited = certifier.budget().used;
  return out;
}

/// Certificate for g, or nothing. Nothing means "unknown", never "not
/// residually finite".
inline CertifyOutcome certify(const CoxeterGraph& g, const AxiomList& axioms = {}, std::size_t budget = kDefaultBudget) {
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  Certifier certifier(g, axioms, budget);
  CertifyOutcome out;
  out.certificate = certifier.certify();
  out.budget_exhausted = !out.certificate && certifier.budget().exhausted;
  out.nodes_visited = certifier.budget().used;
  return out;
}

}  // namespace artinrf
