// Command-line front end for the normalized Laplacian Estrada index toolkit.
//
// Exit codes: 0 success, 1 input error, 2 numerical failure,
// 3 verification or invariant failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nee/nee.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2, kVerificationError = 3 };

// Raised for failed verification or a broken invariant in produced output.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nee::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return nee::read_edge_list(in);
}

int cmd_index(const std::string& path, const std::string& which) {
  const auto g = load_graph(path);
  double value = 0.0;
  if (which == "nee") value = nee::normalized_estrada_index(g);
  else if (which == "ee") value = nee::estrada_index(g);
  else if (which == "lee-shifted") value = nee::laplacian_estrada_index(g, nee::LeeVariant::shifted);
  else value = nee::laplacian_estrada_index(g, nee::LeeVariant::plain);
  std::cout << nee::format_significant(value, 12) << '\n';
  return kOk;
}

int cmd_spectrum(const std::string& path, nee::MatrixKind kind) {
  const auto g = load_graph(path);
  nee::write_spectrum(std::cout, nee::graph_spectrum(g, kind).values);
  return kOk;
}

int cmd_bounds(const std::string& path, bool csv, double tol) {
  const auto rep = nee::evaluate_bounds(load_graph(path), tol);
  if (csv) {
    std::cout << nee::kBoundCsvHeader << '\n' << nee::bound_report_csv_row(rep) << '\n';
  } else {
    nee::write_bound_report(std::cout, rep);
  }
  return rep.violation ? kVerificationError : kOk;
}

int cmd_fractal(std::size_t m, std::size_t n, const std::string& mode, const std::string& method,
                bool merged, const std::string& out_path) {
  const auto counts = nee::fractal_counts(m, n);
  const bool dense = method == "dense";
  if (dense && mode != "emit-graph" && counts.vertices > nee::kDenseSizeCap) {
    throw std::invalid_argument("dense method refused for N = " + std::to_string(counts.vertices) +
                                " (cap " + std::to_string(nee::kDenseSizeCap) + "); use decimation");
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (mode == "emit-graph") {
    nee::write_fractal(out, merged ? nee::build_fractal_merged(m, n) : nee::build_fractal(m, n));
  } else if (mode == "nee") {
    const double value = dense ? nee::normalized_estrada_index(nee::build_fractal(m, n).graph)
                               : nee::decimation_nee(m, n);
    out << "N=" << counts.vertices << '\n' << "NEE=" << nee::format_significant(value, 12) << '\n';
  } else if (dense) {
    nee::write_spectrum(out, nee::normalized_laplacian_spectrum(nee::build_fractal(m, n).graph).values);
  } else {
    nee::write_multiset(out, nee::decimation_spectrum(m, n));
  }
  if (!out) throw std::invalid_argument("write failed");
  return kOk;
}

int cmd_verify(std::size_t m, std::size_t n_max) {
  std::cout << "n,N,max_abs_diff,nee_rel_diff,mult1_expected,mult1_multiset,mult1_dense,"
               "rank_expected,rank_dense,status\n";
  bool all_ok = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto r = nee::verify_row(m, n);
    all_ok &= r.ok();
    std::cout << n << ',' << r.order << ',' << nee::format_significant(r.max_abs_diff, 3) << ','
              << nee::format_significant(r.nee_rel_diff, 3) << ',' << r.mult_one_expected << ','
              << r.mult_one_multiset << ',' << r.mult_one_dense << ',' << r.rank_expected << ','
              << r.rank_dense << ',' << (r.ok() ? "pass" : "FAIL") << '\n';
  }
  return all_ok ? kOk : kVerificationError;
}

int cmd_scaling(const std::vector<std::size_t>& m_values, std::size_t n_max,
                const std::string& out_path) {
  std::ostringstream buf;
  buf << "m,n,N,NEE,thm2_lower,thm2_upper,thm3_lower\n";
  for (auto m : m_values) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto row = nee::scaling_row(m, n);
      if (!row.sandwiched()) {
        throw VerificationFailure("bipartite bound sandwich violated at m=" + std::to_string(m) +
                                  " n=" + std::to_string(n));
      }
      buf << row.m << ',' << row.n << ',' << row.order << ',' << nee::format_significant(row.nee, 12)
          << ',' << nee::format_significant(row.thm2_lower, 12) << ','
          << nee::format_significant(row.thm2_upper, 12) << ','
          << nee::format_significant(row.thm3_lower, 12) << '\n';
    }
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << buf.str();
    return kOk;
  }
  std::ofstream file(out_path);
  file << buf.str();
  if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
  return kOk;
}

int cmd_random(std::size_t n, double p, std::uint64_t seed, double tol) {
  const auto g = nee::erdos_renyi(n, p, seed);
  std::cout << "seed=" << seed << '\n' << "p=" << nee::format_significant(p, 12) << '\n';
  const auto rep = nee::evaluate_bounds(g, tol);
  nee::write_bound_report(std::cout, rep);
  return rep.violation || !rep.thm3_detector_agrees ? kVerificationError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized Laplacian Estrada index toolkit"};
  app.require_subcommand(1);

  std::string path;
  std::string which = "nee";
  auto* index = app.add_subcommand("index", "Print an Estrada-type index of an edge-list graph");
  index->add_option("path", path, "Edge-list file")->required();
  index->add_option("--which", which, "Index to compute")
      ->check(CLI::IsMember({"nee", "ee", "lee-shifted", "lee-plain"}));

  const std::map<std::string, nee::MatrixKind> kinds{
      {"adjacency", nee::MatrixKind::adjacency},
      {"laplacian", nee::MatrixKind::laplacian},
      {"normalized", nee::MatrixKind::normalized_laplacian}};
  std::string matrix = "normalized";
  auto* spectrum = app.add_subcommand("spectrum", "Print a graph spectrum, one eigenvalue per line");
  spectrum->add_option("path", path, "Edge-list file")->required();
  spectrum->add_option("--matrix", matrix, "Graph matrix")
      ->check(CLI::IsMember({"adjacency", "laplacian", "normalized"}));

  bool csv = false;
  double tol = 1e-9;
  auto* bounds = app.add_subcommand("bounds", "Evaluate NEE bounds and equality cases");
  bounds->add_option("path", path, "Edge-list file")->required();
  bounds->add_flag("--csv", csv, "Print one CSV row with header");
  bounds->add_option("--tol", tol, "Equality tolerance")->check(CLI::PositiveNumber);

  std::size_t m = 1;
  std::size_t n = 1;
  std::string mode = "nee";
  std::string method = "decimation";
  std::string out_path;
  bool merged = false;
  auto* fractal = app.add_subcommand("fractal", "Work with the treelike fractal G_n(m)");
  fractal->add_option("-m,--m", m, "Branching parameter m >= 1")->required()->check(CLI::PositiveNumber);
  fractal->add_option("-n,--n", n, "Generation n >= 0")->required();
  fractal->add_option("--mode", mode, "What to produce")
      ->check(CLI::IsMember({"emit-graph", "nee", "spectrum"}));
  fractal->add_option("--method", method, "Eigenvalue route")
      ->check(CLI::IsMember({"decimation", "dense"}));
  fractal->add_flag("--merged", merged, "Emit the replica-merging construction");
  fractal->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::size_t n_max = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check decimation against the dense eigensolver");
  verify->add_option("-m,--m", m, "Branching parameter")->required()->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max, "Largest generation")->required();

  std::vector<std::size_t> m_values{1, 2, 3, 4, 5};
  auto* scaling = app.add_subcommand("scaling", "Write the NEE-versus-N scaling table as CSV");
  scaling->add_option("--m", m_values, "Branching parameters")->delimiter(',');
  scaling->add_option("--n-max", n_max, "Largest generation")->default_val(7);
  scaling->add_option("-o,--output", out_path, "CSV path (default stdout)");

  std::size_t order = 10;
  double p = 0.1;
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Bound report for a seeded G(N, p) graph");
  random->add_option("-N,--order", order, "Vertex count")->required();
  random->add_option("-p,--p", p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", seed, "Seed for mt19937_64")->required();
  random->add_option("--tol", tol, "Equality tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*index) return cmd_index(path, which);
    if (*spectrum) return cmd_spectrum(path, kinds.at(matrix));
    if (*bounds) return cmd_bounds(path, csv, tol);
    if (*fractal) return cmd_fractal(m, n, mode, method, merged, out_path);
    if (*verify) return cmd_verify(m, n_max);
    if (*scaling) return cmd_scaling(m_values, n_max, out_path);
    if (*random) return cmd_random(order, p, seed, tol);
  } catch (const nee::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerificationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kVerificationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
