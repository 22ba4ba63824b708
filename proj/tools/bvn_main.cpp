// bvn: scale, complete, decompose, and profile doubly stochastic
// matrices from the command line. Matrices travel as whitespace text
// files, results as JSON on stdout, experiment campaigns as CSV files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bvnkit/bench.hpp"
#include "bvnkit/bvn.hpp"
#include "bvnkit/errors.hpp"
#include "bvnkit/lcu.hpp"
#include "bvnkit/matrix_io.hpp"
#include "bvnkit/sinkhorn.hpp"
#include "json.hpp"

namespace {

using bvnkit::Matrix;
using json = nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json decomposition_to_json(const bvnkit::Decomposition& d) {
  json out;
  out["variant"] = std::string(to_string(d.variant));
  out["eps"] = d.epsilon;
  out["K"] = d.size();
  json weights = json::array();
  json perms = json::array();
  for (const auto& t : d.terms) {
    weights.push_back(t.weight);
    perms.push_back(t.perm.map());
  }
  out["weights"] = std::move(weights);
  out["permutations"] = std::move(perms);
  out["residual_l1"] = d.residual_l1;
  if (d.theta) out["theta"] = *d.theta;
  return out;
}

bvnkit::Decomposition decomposition_from_json(const json& j) {
  bvnkit::Decomposition d;
  d.variant = bvnkit::variant_from_string(j.at("variant").get<std::string>());
  d.epsilon = j.at("eps").get<double>();
  d.residual_l1 = j.value("residual_l1", 0.0);
  if (j.contains("theta")) d.theta = j.at("theta").get<double>();
  const auto& weights = j.at("weights");
  const auto& perms = j.at("permutations");
  if (weights.size() != perms.size())
    throw bvnkit::InvalidInputError("weights and permutations differ in length");
  for (std::size_t k = 0; k < weights.size(); ++k) {
    bvnkit::Term t;
    t.weight = weights[k].get<double>();
    t.perm = bvnkit::Permutation(perms[k].get<std::vector<std::size_t>>());
    d.terms.push_back(std::move(t));
    d.raw_weights.push_back(d.terms.back().weight);
  }
  return d;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_scale(const std::string& file, double tol, std::size_t max_iter) {
  const Matrix a = bvnkit::read_matrix_file(file);
  const auto r = bvnkit::sinkhorn_scale(a, tol, max_iter);
  json out;
  out["d1"] = r.d1;
  out["d2"] = r.d2;
  out["s"] = matrix_to_json(r.s);
  out["iterations"] = r.iterations;
  out["achieved_tol"] = r.achieved_tol;
  print_json(out);
  return 0;
}

int run_complete(const std::string& file) {
  const auto c = bvnkit::complete_to_doubly_stochastic(bvnkit::read_matrix_file(file));
  json out;
  out["m"] = matrix_to_json(c.m);
  out["scale"] = c.scale;
  out["original_dim"] = c.original_dim;
  print_json(out);
  return 0;
}

int run_decompose(const std::string& file, const std::string& variant,
                  double eps, std::optional<double> theta) {
  const Matrix s = bvnkit::read_matrix_file(file);
  bvnkit::Decomposition d;
  switch (bvnkit::variant_from_string(variant)) {
    case bvnkit::Variant::kOriginal:
      d = bvnkit::decompose_original(s, eps);
      break;
    case bvnkit::Variant::kLargestWeight:
      d = bvnkit::decompose_largest_weight(s, eps);
      break;
    case bvnkit::Variant::kBottleneck:
      d = bvnkit::decompose_bottleneck(s, eps);
      break;
    case bvnkit::Variant::kThreshold: {
      const double t = theta ? *theta : bvnkit::find_threshold(s, eps);
      d = bvnkit::decompose_threshold(s, eps, t);
      break;
    }
    case bvnkit::Variant::kCutoffPruned: {
      // eps acts as the Frobenius pruning budget on a near-exact source
      // decomposition.
      const auto full = bvnkit::decompose_original(s, 1e-9);
      d = bvnkit::cutoff_prune(full, s, eps);
      break;
    }
  }
  print_json(decomposition_to_json(d));
  return 0;
}

int run_resources(const std::string& decomposition_file,
                  const std::string& matrix_file, bool with_sigma2) {
  std::ifstream in(decomposition_file);
  if (!in) throw bvnkit::IoError("cannot open " + decomposition_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw bvnkit::ParseError(decomposition_file + ": " + e.what());
  }
  const auto d = decomposition_from_json(j);
  const Matrix s = bvnkit::read_matrix_file(matrix_file);
  const auto rep = bvnkit::resource_report(d, s, with_sigma2);
  json out;
  out["k"] = rep.k;
  out["ancilla_qubits"] = rep.ancilla_qubits;
  if (rep.system_qubits) out["system_qubits"] = *rep.system_qubits;
  out["alpha"] = rep.alpha;
  out["p_succ_uniform"] = rep.p_succ_uniform;
  if (rep.second_singular_value)
    out["second_singular_value"] = *rep.second_singular_value;
  print_json(out);
  return 0;
}

int run_pauli_count(const std::string& file, double tol) {
  const auto count = bvnkit::pauli_term_count(bvnkit::read_matrix_file(file), tol);
  json out;
  out["n_qubits"] = count.n_qubits;
  out["nonzero_terms"] = count.nonzero_terms;
  out["coefficient_l1"] = count.coefficient_l1;
  print_json(out);
  return 0;
}

int run_bench_scaling(const std::vector<std::size_t>& sizes,
                      const std::vector<std::string>& variant_names, double eps,
                      std::size_t trials, std::uint64_t seed,
                      const std::string& out_file, unsigned jobs) {
  std::vector<bvnkit::Variant> variants;
  for (const auto& name : variant_names)
    variants.push_back(bvnkit::variant_from_string(name));
  const auto campaign =
      bvnkit::run_scaling_experiment(sizes, variants, eps, trials, seed, jobs);
  bvnkit::write_csv_file(out_file, campaign.rows);
  json summaries = json::array();
  for (const auto& s : campaign.summaries) {
    json row;
    row["n"] = s.n;
    row["variant"] = std::string(to_string(s.variant));
    row["mean_k"] = s.mean_k;
    row["std_k"] = s.std_k;
    summaries.push_back(std::move(row));
  }
  json out;
  out["out"] = out_file;
  out["rows"] = campaign.rows.size();
  out["summaries"] = std::move(summaries);
  print_json(out);
  return campaign.any_error ? 2 : 0;
}

int run_bench_precision(std::size_t n, const std::vector<double>& eps_list,
                        std::size_t trials, std::uint64_t seed,
                        const std::string& out_file, unsigned jobs) {
  const auto campaign =
      bvnkit::run_precision_experiment(n, eps_list, trials, seed, jobs);
  bvnkit::write_csv_file(out_file, campaign.rows);
  json rows = json::array();
  for (const auto& r : campaign.rows) {
    json row;
    row["n"] = r.n;
    row["eps"] = r.eps;
    row["mean_k"] = r.mean_k;
    row["std_k"] = r.std_k;
    row["trials"] = r.trials;
    rows.push_back(std::move(row));
  }
  json out;
  out["out"] = out_file;
  out["rows"] = std::move(rows);
  print_json(out);
  return campaign.any_error ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff-von Neumann decompositions of doubly stochastic matrices"};
  app.require_subcommand(1);

  // scale
  std::string scale_file;
  double scale_tol = 1e-10;
  std::size_t scale_max_iter = 10000;
  auto* scale = app.add_subcommand("scale", "Sinkhorn-scale a nonnegative matrix");
  scale->add_option("matrix-file", scale_file, "Matrix text file")->required();
  scale->add_option("--tol", scale_tol, "Target row/column sum deviation");
  scale->add_option("--max-iter", scale_max_iter, "Iteration budget");

  // complete
  std::string complete_file;
  auto* complete = app.add_subcommand(
      "complete", "Embed a matrix with equal row and column sums into a "
                  "doubly stochastic matrix of twice the size");
  complete->add_option("matrix-file", complete_file, "Matrix text file")->required();

  // decompose
  std::string dec_file, dec_variant = "original";
  double dec_eps = 0.01;
  std::optional<double> dec_theta;
  auto* dec = app.add_subcommand(
      "decompose", "Express a doubly stochastic matrix as a convex "
                   "combination of permutations");
  dec->add_option("matrix-file", dec_file, "Matrix text file")->required();
  dec->add_option("--variant", dec_variant,
                  "original|largest|bottleneck|threshold|cutoff");
  dec->add_option("--eps", dec_eps,
                  "Residual tolerance (Frobenius budget for cutoff)");
  dec->add_option("--theta", dec_theta,
                  "Entry cutoff for the threshold variant; searched if omitted");

  // resources
  std::string res_dec_file, res_matrix_file;
  bool res_sigma2 = false;
  auto* res = app.add_subcommand(
      "resources", "Block-encoding costs of a stored decomposition");
  res->add_option("decomposition-json", res_dec_file,
                  "Decomposition JSON, as printed by decompose")
      ->required();
  res->add_option("matrix-file", res_matrix_file, "The decomposed matrix")
      ->required();
  res->add_flag("--second-singular-value", res_sigma2,
                "Also compute the second singular value (dense SVD)");

  // pauli-count
  std::string pauli_file;
  double pauli_tol = 1e-12;
  auto* pauli = app.add_subcommand(
      "pauli-count", "Count nonzero Pauli-string coefficients of a matrix");
  pauli->add_option("matrix-file", pauli_file, "Matrix text file")->required();
  pauli->add_option("--tol", pauli_tol, "Magnitude below which a term is zero");

  // bench
  auto* bench = app.add_subcommand("bench", "Seeded experiment campaigns");
  bench->require_subcommand(1);

  std::vector<std::size_t> bs_sizes{4, 8, 16, 32, 64, 128};
  std::vector<std::string> bs_variants{"original", "largest", "bottleneck"};
  double bs_eps = 0.01;
  std::size_t bs_trials = 5;
  std::uint64_t bs_seed = 1;
  std::string bs_out;
  unsigned bs_jobs = 0;
  auto* bscal = bench->add_subcommand("scaling", "Term count vs matrix size");
  bscal->add_option("--sizes", bs_sizes, "Powers of two, at least 4")
      ->delimiter(',');
  bscal->add_option("--variants", bs_variants, "Greedy variants to run")
      ->delimiter(',');
  bscal->add_option("--eps", bs_eps, "Residual tolerance");
  bscal->add_option("--trials", bs_trials, "Trials per size and variant");
  bscal->add_option("--seed", bs_seed, "Base seed");
  bscal->add_option("--out", bs_out, "Output CSV path")->required();
  bscal->add_option("--jobs", bs_jobs, "Worker threads (0 = all cores)");

  std::size_t bp_n = 16;
  std::vector<double> bp_eps{0.1, 0.01, 0.001, 0.0001};
  std::size_t bp_trials = 5;
  std::uint64_t bp_seed = 1;
  std::string bp_out;
  unsigned bp_jobs = 0;
  auto* bprec = bench->add_subcommand("precision", "Term count vs tolerance");
  bprec->add_option("--n", bp_n, "Matrix size, a power of two");
  bprec->add_option("--eps", bp_eps, "Tolerance ladder")->delimiter(',');
  bprec->add_option("--trials", bp_trials, "Trials per tolerance");
  bprec->add_option("--seed", bp_seed, "Base seed");
  bprec->add_option("--out", bp_out, "Output CSV path")->required();
  bprec->add_option("--jobs", bp_jobs, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (scale->parsed()) return run_scale(scale_file, scale_tol, scale_max_iter);
    if (complete->parsed()) return run_complete(complete_file);
    if (dec->parsed()) return run_decompose(dec_file, dec_variant, dec_eps, dec_theta);
    if (res->parsed()) return run_resources(res_dec_file, res_matrix_file, res_sigma2);
    if (pauli->parsed()) return run_pauli_count(pauli_file, pauli_tol);
    if (bscal->parsed())
      return run_bench_scaling(bs_sizes, bs_variants, bs_eps, bs_trials,
                               bs_seed, bs_out, bs_jobs);
    if (bprec->parsed())
      return run_bench_precision(bp_n, bp_eps, bp_trials, bp_seed, bp_out,
                                 bp_jobs);
  } catch (const bvnkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
