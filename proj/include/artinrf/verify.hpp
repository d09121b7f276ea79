#pragma once

// Independent certificate checker. Uses only the graph model, the base
// recognizers and check_retraction; nothing from the partition search or
// the builders.

#include <string>
#include <vector>

#include "certificate.hpp"
#include "coxeter_graph.hpp"
#include "recognizers.hpp"

namespace artinrf {

struct TraceEntry {
  std::string path;  // "root", "root.1", "root.1.0", ...
  std::string condition;
  bool pass = true;
  std::string detail;
};

struct VerifyReport {
  bool overall = true;
  std::vector<TraceEntry> trace;

  /// First failing entry, if any.
  const TraceEntry* first_failure() const {
    for (const auto& e : trace)
      if (!e.pass) return &e;
    return nullptr;
  }

  bool failed(std::string_view condition) const {
    for (const auto& e : trace)
      if (!e.pass && e.condition == condition) return true;
    return false;
  }
};

// Condition names reported in the trace.
namespace condition {
inline constexpr const char* kRootCoverage = "root-coverage";
inline constexpr const char* kSubjectKnown = "subject-known";
inline constexpr const char* kNodeShape = "node-shape";
inline constexpr const char* kBaseRecognizer = "base-recognizer";
inline constexpr const char* kFreeProductComponents = "free-product-components";
inline constexpr const char* kAmalgamUnion = "amalgam-union";
inline constexpr const char* kAmalgamIntersection = "amalgam-intersection";
inline constexpr const char* kAmalgamNoCrossEdge = "amalgam-no-cross-edge";
inline constexpr const char* kChildSubjects = "child-subjects";
inline constexpr const char* kRetraction = "check_retraction";
inline constexpr const char* kTrustedParabolic = "trusted:parabolic-intersection";
inline constexpr const char* kTrustedAmalgam = "trusted:retract-amalgam";
}  // namespace condition

namespace detail {

inline std::string spell_set(const VertexSet& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v;
  return out + "}";
}

class Verifier {
 public:
  Verifier(const CoxeterGraph& g, const AxiomList& axioms) : g_(g), axioms_(axioms) {}

  VerifyReport run(const Certificate& root) {
    record("root", condition::kRootCoverage, root.subject == g_.vertex_set(),
           "subject " + spell_set(root.subject) + " vs graph " + spell_set(g_.vertex_set()));
    node("root", root);
    return std::move(report_);
  }

 private:
  void record(const std::string& path, const char* cond, bool pass, std::string detail = {}) {
    report_.trace.push_back({path, cond, pass, std::move(detail)});
    report_.overall = report_.overall && pass;
  }

  void node(const std::string& path, const Certificate& c) {
    bool known = std::all_of(c.subject.begin(), c.subject.end(), [&](const VertexId& v) { return g_.contains(v); });
    record(path, condition::kSubjectKnown, known, spell_set(c.subject));
    if (!known) return;
    CoxeterGraph sub = full_subgraph(g_, c.subject);

    switch (c.kind) {
      case NodeKind::Base: {
        record(path, condition::kNodeShape, c.children.empty(), "base leaf has no children");
        record(path, condition::kBaseRecognizer, base_tag_holds(sub, c.tag, axioms_),
               std::string(to_string(c.tag.kind)) + ": " + c.tag.detail);
        break;
      }
      case NodeKind::FreeProduct: {
        std::vector<VertexSet> claimed;
        for (const auto& ch : c.children) claimed.push_back(ch.subject);
        auto comps = connected_components(sub);
        record(path, condition::kFreeProductComponents, claimed == comps,
               std::to_string(claimed.size()) + " children, " + std::to_string(comps.size()) + " components");
        break;
      }
      case NodeKind::Amalgam: {
        amalgam(path, c);
        break;
      }
    }
    for (std::size_t k = 0; k < c.children.size(); ++k) node(path + "." + std::to_string(k), c.children[k]);
  }

  void amalgam(const std::string& path, const Certificate& c) {
    record(path, condition::kNodeShape, c.children.size() == 2, "amalgam has two factors");

    VertexSet uni = c.x1;
    uni.insert(c.x2.begin(), c.x2.end());
    record(path, condition::kAmalgamUnion, uni == c.subject, "x1 u x2 = " + spell_set(uni));

    VertexSet inter;
    std::set_intersection(c.x1.begin(), c.x1.end(), c.x2.begin(), c.x2.end(), std::inserter(inter, inter.end()));
    record(path, condition::kAmalgamIntersection, inter == c.x0,
           "x1 n x2 = " + spell_set(inter) + ", x0 = " + spell_set(c.x0));

    std::string crossing;
    for (const auto& a : c.x1) {
      if (c.x0.count(a)) continue;
      for (const auto& b : c.x2) {
        if (c.x0.count(b) || a == b) continue;
        if (auto m = g_.label(a, b)) {
          crossing = a + "-" + b + " (label " + std::to_string(*m) + ")";
          break;
        }
      }
      if (!crossing.empty()) break;
    }
    record(path, condition::kAmalgamNoCrossEdge, crossing.empty(),
           crossing.empty() ? "no edge between x1\\x0 and x2\\x0" : "edge " + crossing);

    if (c.children.size() == 2)
      record(path, condition::kChildSubjects, c.children[0].subject == c.x1 && c.children[1].subject == c.x2,
             "factor certificates cover x1 and x2");

    auto r1 = check_retraction(g_, c.x1, c.x0, c.w1);
    record(path, condition::kRetraction, r1.ok, "w1: " + (r1.ok ? std::string("retraction onto x0") : r1.reason));
    auto r2 = check_retraction(g_, c.x2, c.x0, c.w2);
    record(path, condition::kRetraction, r2.ok, "w2: " + (r2.ok ? std::string("retraction onto x0") : r2.reason));

    record(path, condition::kTrustedParabolic, true, "A_x1 n A_x2 = A_x0 for standard parabolic subgroups (cited)");
    record(path, condition::kTrustedAmalgam, true,
           "amalgam of residually finite groups that both retract onto the common subgroup (cited)");
  }

  const CoxeterGraph& g_;
  const AxiomList& axioms_;
  VerifyReport report_;
};

}  // namespace detail

inline VerifyReport verify(const CoxeterGraph& g, const Certificate& c, const AxiomList& axioms = {}) {
  return detail::Verifier(g, axioms).run(c);
}

inline std::string format_report(const VerifyReport& r) {
  std::string out;
  for (const auto& e : r.trace)
    out += (e.pass ? "PASS " : "FAIL ") + e.path + " " + e.condition + (e.detail.empty() ? "" : ": " + e.detail) + "\n";
  out += r.overall ? "verdict: certificate valid\n" : "verdict: certificate REJECTED\n";
  return out;
}

}  // namespace artinrf
