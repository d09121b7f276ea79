// artinrf: residual finiteness certificates for Artin groups.
//
// Exit codes: 0 success, 1 negative or unknown answer, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artinrf/artinrf.hpp"

namespace fs = std::filesystem;
using namespace artinrf;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

AxiomList load_axioms(const std::vector<std::string>& paths) {
  AxiomList out;
  for (const auto& p : paths) {
    try {
      out.push_back(load_axiom(p));
    } catch (const ParseError& e) {
      throw ParseError(0, p + ": " + e.what());
    }
  }
  return out;
}

CoxeterGraph load_graph_reporting(const std::string& path) {
  try {
    return load_graph(path);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int run_check(const std::string& graph_path) {
  CoxeterGraph g = load_graph_reporting(graph_path);
  std::cout << "vertices: " << g.size() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "even: " << yes_no(is_even(g)) << "\n"
            << "triangle-free: " << yes_no(is_triangle_free(g)) << "\n"
            << "forest: " << yes_no(is_forest(g)) << "\n"
            << "spherical: " << yes_no(is_spherical(g)) << "\n"
            << "right-angled: " << yes_no(is_right_angled(g)) << "\n"
            << "even-fc: " << yes_no(g.size() <= kMaxMaskVertices && is_even_fc(g)) << "\n";
  return kOk;
}

int run_certify(const std::string& graph_path, const std::vector<std::string>& axiom_paths, std::size_t budget,
                const std::string& out_path) {
  CoxeterGraph g = load_graph_reporting(graph_path);
  AxiomList axioms = load_axioms(axiom_paths);
  CertifyOutcome result = certify(g, axioms, budget);
  if (!result.certificate) {
    std::cerr << "unknown: no certificate found within budget\n"
              << "budget exhausted: " << yes_no(result.budget_exhausted) << "\n"
              << "search nodes visited: " << result.nodes_visited << "\n";
    if (!result.budget_exhausted)
      std::cerr << "reason: no admissible partition has residually finite cells and a quotient that is a forest "
                   "or even and triangle free\n";
    return kNegative;
  }
  VerifyReport report = verify(g, *result.certificate, axioms);
  if (!report.overall) {
    std::cerr << "internal error: produced certificate does not verify\n" << format_report(report);
    return kInputError;
  }
  std::string text = serialize_certificate(*result.certificate);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
    std::cout << "certified: " << result.certificate->node_count() << " nodes, written to " << out_path << "\n";
  }
  std::cerr << "search nodes visited: " << result.nodes_visited << "\n";
  return kOk;
}

int run_verify(const std::string& graph_path, const std::string& cert_path,
               const std::vector<std::string>& axiom_paths) {
  CoxeterGraph g = load_graph_reporting(graph_path);
  AxiomList axioms = load_axioms(axiom_paths);
  Certificate c = parse_certificate(detail::read_file(cert_path));
  VerifyReport report = verify(g, c, axioms);
  std::cout << format_report(report);
  return report.overall ? kOk : kNegative;
}

int run_present(const std::string& graph_path) {
  std::cout << format_presentation(artin_presentation(load_graph_reporting(graph_path)));
  return kOk;
}

int run_export(const std::string& graph_path, const std::string& partition_text, const std::string& format) {
  CoxeterGraph g = load_graph_reporting(graph_path);
  if (partition_text.empty()) {
    std::cout << (format == "dot" ? export_dot(g) : emit_graph(g));
    return kOk;
  }
  Partition p = parse_partition(partition_text);
  require_partition_of(g, p);
  if (!is_admissible(g, p)) {
    std::cerr << "partition " << format_partition(p) << " is not admissible\n";
    return kInputError;
  }
  std::cout << (format == "dot" ? export_quotient_dot(g, p) : emit_graph(quotient(g, p).graph));
  return kOk;
}

int run_gen_corpus(const std::string& kind, std::size_t n, std::size_t count, std::uint64_t seed,
                   const std::string& out_dir) {
  fs::create_directories(out_dir);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    CoxeterGraph g = kind == "forest"    ? random_forest(rng, n)
                     : kind == "even-tf" ? random_even_triangle_free(rng, n)
                                         : random_graph(rng, n);
    std::string index = std::to_string(i);
    index.insert(0, index.size() < 4 ? 4 - index.size() : 0, '0');
    fs::path file = fs::path(out_dir) / (kind + "-" + index + ".graph");
    write_text(file.string(), emit_graph(g));
  }
  std::cout << "wrote " << count << " " << kind << " graphs to " << out_dir << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual finiteness certificates for Artin groups"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, out_path, partition_text, format = "dot", kind = "random";
  std::vector<std::string> axiom_paths;
  std::size_t budget = kDefaultBudget, n = 6, count = 1;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Report the structural predicates of a graph");
  check->add_option("graph", graph_path, "Graph file")->required();

  auto* cert = app.add_subcommand("certify", "Search for a certificate");
  cert->add_option("graph", graph_path, "Graph file")->required();
  cert->add_option("--axioms", axiom_paths, "Axiom graph files")->expected(1, -1);
  cert->add_option("--budget", budget, "Search node limit")->check(CLI::PositiveNumber);
  cert->add_option("--out", out_path, "Write the certificate here instead of stdout");

  auto* ver = app.add_subcommand("verify", "Check a certificate against a graph");
  ver->add_option("graph", graph_path, "Graph file")->required();
  ver->add_option("certificate", cert_path, "Certificate file")->required();
  ver->add_option("--axioms", axiom_paths, "Axiom graph files")->expected(1, -1);

  auto* present = app.add_subcommand("present", "Print the Artin presentation");
  present->add_option("graph", graph_path, "Graph file")->required();

  auto* dot = app.add_subcommand("export-dot", "Export the graph or a quotient graph");
  dot->add_option("graph", graph_path, "Graph file")->required();
  dot->add_option("--partition", partition_text, "Partition literal such as {a,b|c}");
  dot->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "text"}));

  auto* gen = app.add_subcommand("gen-corpus", "Write seeded random graphs");
  gen->add_option("--kind", kind, "forest, even-tf or random")->check(CLI::IsMember({"forest", "even-tf", "random"}));
  gen->add_option("--n", n, "Number of vertices")->check(CLI::Range(std::size_t{1}, kMaxMaskVertices));
  gen->add_option("--count", count, "Number of graphs")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output directory")->default_str(".");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return run_check(graph_path);
    if (*cert) return run_certify(graph_path, axiom_paths, budget, out_path);
    if (*ver) return run_verify(graph_path, cert_path, axiom_paths);
    if (*present) return run_present(graph_path);
    if (*dot) return run_export(graph_path, partition_text, format);
    if (*gen) return run_gen_corpus(kind, n, count, seed, out_path.empty() ? "." : out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const CertificateFormatError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
