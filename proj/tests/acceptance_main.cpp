// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line with the
// measured numbers; the exit code is the number of failures. Everything
// is seeded, so reruns are bit-identical.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bvnkit/bench.hpp"
#include "bvnkit/bvn.hpp"
#include "bvnkit/errors.hpp"
#include "bvnkit/lcu.hpp"
#include "bvnkit/random.hpp"
#include "bvnkit/sinkhorn.hpp"
#include "oracles.hpp"

using namespace bvnkit;

namespace {

constexpr std::uint64_t kBaseSeed = 42;
// Absolute slack on analytic comparisons, covering float accumulation on
// quantities of order 1.
constexpr double kSlack = 1e-9;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double mean_of(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  return m / static_cast<double>(xs.size());
}

// ---------------------------------------------------------------------------
// 1. Largest-weight scaling: mean K/N per size in [1.5, 3.5], grand mean
//    over sizes in [1.9, 3.0].

void criterion_scaling() {
  const std::vector<std::size_t> sizes{16, 32, 64};
  const auto c = run_scaling_experiment(sizes, {Variant::kLargestWeight}, 0.01,
                                        5, kBaseSeed);
  bool pass = !c.any_error;
  std::string detail = "mean K/N:";
  std::vector<double> ratios;
  for (const auto& s : c.summaries) {
    const double ratio = s.mean_k / static_cast<double>(s.n);
    ratios.push_back(ratio);
    detail += " " + std::to_string(s.n) + "->" + fmt(ratio);
    if (!(ratio >= 1.5 && ratio <= 3.5)) pass = false;
  }
  const double grand = mean_of(ratios);
  detail += ", grand " + fmt(grand);
  if (!(grand >= 1.9 && grand <= 3.0)) pass = false;
  report(1, "largest-weight term counts scale near 2N", pass, detail);
}

// ---------------------------------------------------------------------------
// 2. Separation between the original and largest-weight variants on
//    paired seeds at eps = 0.01.

void criterion_separation() {
  const double eps = 0.01;
  std::map<std::size_t, std::vector<double>> k_orig, k_larg;
  for (std::size_t n : {std::size_t{16}, std::size_t{64}})
    for (std::size_t t = 0; t < 5; ++t) {
      const Matrix s = random_doubly_stochastic(n, trial_seed(kBaseSeed, n, t));
      k_orig[n].push_back(static_cast<double>(decompose_original(s, eps).size()));
      k_larg[n].push_back(
          static_cast<double>(decompose_largest_weight(s, eps).size()));
    }
  const double r_variants = mean_of(k_orig[64]) / mean_of(k_larg[64]);
  const double r_orig = mean_of(k_orig[64]) / mean_of(k_orig[16]);
  const double r_larg = mean_of(k_larg[64]) / mean_of(k_larg[16]);
  const bool pass = r_variants >= 5.0 && r_orig >= 8.0 && r_larg <= 6.0;
  report(2, "original grows superlinearly, largest-weight stays near-linear",
         pass,
         "K_orig(64)/K_larg(64) " + fmt(r_variants) + " >= 5, K_orig 64/16 " +
             fmt(r_orig) + " >= 8, K_larg 64/16 " + fmt(r_larg) + " <= 6");
}

// ---------------------------------------------------------------------------
// 3 + 4. Bottleneck runs: K <= ceil(N ln(1/eps)); the residual sum decays
//    at least geometrically; every step's width is at least sum/N.

void criterion_bottleneck() {
  bool bound_pass = true, decay_pass = true, width_pass = true;
  std::size_t runs = 0, steps = 0;
  std::string worst;
  for (std::size_t n : {std::size_t{8}, std::size_t{16}, std::size_t{32},
                        std::size_t{64}}) {
    for (const double eps : {0.1, 0.01}) {
      const std::size_t cap = static_cast<std::size_t>(
          std::ceil(static_cast<double>(n) * std::log(1.0 / eps)));
      for (std::size_t t = 0; t < 5; ++t) {
        const Matrix s = random_doubly_stochastic(n, trial_seed(kBaseSeed, n, t));
        const auto d = decompose_bottleneck(s, eps);
        ++runs;
        if (d.size() > cap) {
          bound_pass = false;
          worst = "K=" + std::to_string(d.size()) + ">cap " +
                  std::to_string(cap) + " at N=" + std::to_string(n);
        }
        // Walk the residual sums along the extraction history.
        double r = induced_l1_norm(s);
        const double shrink = 1.0 - 1.0 / static_cast<double>(n);
        double geometric = 1.0;
        for (std::size_t k = 0; k < d.size(); ++k) {
          const double width = d.raw_weights[k];
          if (width + kSlack < r / static_cast<double>(n)) width_pass = false;
          r -= width;
          geometric *= shrink;
          ++steps;
          if (r > geometric + kSlack) decay_pass = false;
        }
      }
    }
  }
  report(3, "bottleneck term counts stay within N ln(1/eps) and decay geometrically",
         bound_pass && decay_pass,
         std::to_string(runs) + " runs, " + std::to_string(steps) +
             " steps checked" + (worst.empty() ? "" : ", " + worst) +
             (decay_pass ? "" : ", decay violated"));
  report(4, "every bottleneck step keeps width >= residual/N", width_pass,
         std::to_string(steps) + " steps checked");
}

// ---------------------------------------------------------------------------
// 5. Precision sweep at N = 16 with the largest-weight variant.

void criterion_precision() {
  const std::vector<double> ladder{0.1, 0.01, 0.001, 0.0001};
  const auto c = run_precision_experiment(16, ladder, 5, kBaseSeed);
  bool pass = !c.any_error;
  std::string detail = "mean K:";
  for (const auto& row : c.rows) detail += " " + fmt(row.eps) + "->" + fmt(row.mean_k);
  if (!(c.rows[0].mean_k >= 5.0 && c.rows[0].mean_k <= 20.0)) pass = false;
  if (!(c.rows[3].mean_k >= 75.0 && c.rows[3].mean_k <= 300.0)) pass = false;
  for (std::size_t i = 1; i < c.rows.size(); ++i)
    if (c.rows[i].mean_k + kSlack < c.rows[i - 1].mean_k) pass = false;
  report(5, "term count vs precision lands in the expected bands", pass, detail);
}

// ---------------------------------------------------------------------------
// 6. Worst-case bound for the original variant: K <= N^2 - 2N + 2.

void criterion_worst_case() {
  bool pass = true;
  std::size_t runs = 0;
  std::string detail;
  for (std::size_t n : {std::size_t{8}, std::size_t{16}, std::size_t{32},
                        std::size_t{64}}) {
    const std::size_t bound = n * n - 2 * n + 2;
    std::size_t worst = 0;
    for (std::size_t t = 0; t < 5; ++t) {
      const Matrix s = random_doubly_stochastic(n, trial_seed(kBaseSeed, n, t));
      const std::size_t k = decompose_original(s, 0.01).size();
      worst = std::max(worst, k);
      ++runs;
      if (k > bound) pass = false;
    }
    detail += (detail.empty() ? "" : ", ") + std::to_string(n) + ":max " +
              std::to_string(worst) + "/" + std::to_string(bound);
  }
  report(6, "original variant stays under its quadratic worst case", pass,
         detail + " over " + std::to_string(runs) + " runs");
}

// ---------------------------------------------------------------------------
// 7. Reconstruction contract for all three greedy variants.

void criterion_reconstruction() {
  bool pass = true;
  std::size_t checked = 0;
  std::string worst;
  struct Named {
    const char* name;
    Decomposition (*run)(const Matrix&, double, const ToleranceConfig&);
  };
  const Named variants[] = {{"original", decompose_original},
                            {"largest", decompose_largest_weight},
                            {"bottleneck", decompose_bottleneck}};
  for (std::size_t n : {std::size_t{8}, std::size_t{16}, std::size_t{32}}) {
    for (const double eps : {0.05, 0.01}) {
      for (std::size_t t = 0; t < 2; ++t) {
        const Matrix s = random_doubly_stochastic(n, trial_seed(kBaseSeed, n, t));
        for (const auto& v : variants) {
          const auto d = v.run(s, eps, ToleranceConfig{});
          const double raw_err = induced_l1_norm(s - reconstruct_with_raw_weights(d));
          const double norm_err = induced_l1_norm(s - reconstruct(d));
          double wsum = 0.0;
          for (const auto& term : d.terms) wsum += term.weight;
          ++checked;
          if (raw_err > eps + kSlack) {
            pass = false;
            worst = std::string(v.name) + " raw " + fmt(raw_err);
          }
          if (norm_err > 2.0 * eps + kSlack) {
            pass = false;
            worst = std::string(v.name) + " norm " + fmt(norm_err);
          }
          if (std::abs(wsum - 1.0) > 1e-12) {
            pass = false;
            worst = std::string(v.name) + " wsum-1 " + fmt(wsum - 1.0);
          }
        }
      }
    }
  }
  report(7, "raw error <= eps, normalized <= 2 eps, weights sum to 1", pass,
         std::to_string(checked) + " decompositions checked" +
             (worst.empty() ? "" : ", worst " + worst));
}

// ---------------------------------------------------------------------------
// 8. Matching engines agree exactly with brute-force enumeration.

void criterion_matching_oracle() {
  bool pass = true;
  std::size_t with_matching = 0, without = 0;
  std::string worst;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 5;  // 2..6
    Matrix w = random_positive_matrix(n, kBaseSeed + 1000 + i);
    if (i % 2 == 1) {
      // Sparsify: keep a guaranteed diagonal, zero some of the rest.
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (c != (r + i) % n && w(r, c) < 0.55) w(r, c) = 0.0;
    }
    const SupportGraph g = make_support_graph(w, 1e-12);
    const auto ref = oracle::enumerate_matchings(w, 1e-12);
    const auto best = max_weight_perfect_matching(g);
    const auto bn = bottleneck_perfect_matching(g);
    if (best.has_value() != ref.any || bn.has_value() != ref.any) {
      pass = false;
      worst = "existence mismatch at instance " + std::to_string(i);
      continue;
    }
    if (!ref.any) {
      ++without;
      continue;
    }
    ++with_matching;
    if (best->total_weight != ref.best_total) {
      pass = false;
      worst = "total " + fmt(best->total_weight) + " vs " + fmt(ref.best_total) +
              " at instance " + std::to_string(i);
    }
    if (bn->min_edge != ref.best_bottleneck) {
      pass = false;
      worst = "bottleneck " + fmt(bn->min_edge) + " vs " +
              fmt(ref.best_bottleneck) + " at instance " + std::to_string(i);
    }
  }
  report(8, "max-weight and bottleneck matchings equal brute force exactly",
         pass,
         std::to_string(with_matching) + " solvable + " +
             std::to_string(without) + " unsolvable instances" +
             (worst.empty() ? "" : ", " + worst));
}

// ---------------------------------------------------------------------------
// 9. Sinkhorn scaling converges and inverts on strictly positive input.

void criterion_sinkhorn_round_trip() {
  bool pass = true;
  std::string worst;
  const std::size_t dims[] = {2, 3, 4, 5, 6, 8, 12, 16, 24, 32};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = dims[i % 10];
    const Matrix a = random_positive_matrix(n, kBaseSeed + 2000 + i);
    try {
      const auto r = sinkhorn_scale(a, 1e-10);
      if (!is_doubly_stochastic(r.s, 1e-10)) {
        pass = false;
        worst = "not doubly stochastic at instance " + std::to_string(i);
      }
      const Matrix back = reconstruct_original(r);
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) {
          const double rel = std::abs(back(row, col) - a(row, col)) / a(row, col);
          if (rel > 1e-8) {
            pass = false;
            worst = "relative error " + fmt(rel) + " at instance " + std::to_string(i);
          }
        }
    } catch (const Error& e) {
      pass = false;
      worst = std::string("threw: ") + e.what();
    }
  }
  report(9, "sinkhorn scaling converges and round-trips on positive matrices",
         pass, std::string("50 instances, N up to 32") +
                   (worst.empty() ? "" : ", " + worst));
}

// ---------------------------------------------------------------------------
// 10. Block-encoding properties.

void criterion_lcu() {
  bool pass = true;
  std::string worst;

  // Success probability on the uniform superposition: near-exact doubly
  // stochastic inputs (tightly scaled or exact convex combinations).
  std::vector<Matrix> ds_batch;
  for (std::size_t n : {std::size_t{4}, std::size_t{8}, std::size_t{16}})
    for (std::size_t t = 0; t < 3; ++t)
      ds_batch.push_back(
          random_doubly_stochastic(n, trial_seed(kBaseSeed, n, t), 1e-13));
  ds_batch.push_back(Matrix::identity(8));
  {
    Matrix cyc(6);
    for (std::size_t i = 0; i < 6; ++i) {
      cyc(i, i) = 0.25;
      cyc(i, (i + 1) % 6) = 0.35;
      cyc(i, (i + 2) % 6) = 0.4;
    }
    ds_batch.push_back(std::move(cyc));
  }
  std::size_t reports = 0;
  for (const Matrix& s : ds_batch) {
    const auto d = decompose_original(s, 0.05);
    const auto rep = resource_report(d, s);
    ++reports;
    if (std::abs(rep.p_succ_uniform - 1.0) > 1e-12) {
      pass = false;
      worst = "p_succ off by " + fmt(rep.p_succ_uniform - 1.0);
    }
    // Independent ceil(log2 k).
    unsigned expect = 0;
    while ((std::size_t{1} << expect) < rep.k) ++expect;
    if (rep.ancilla_qubits != expect) {
      pass = false;
      worst = "ancilla " + std::to_string(rep.ancilla_qubits) + " for K " +
              std::to_string(rep.k);
    }
  }

  // Pauli support of a dense matrix, and transform invertibility.
  const Matrix dense = random_doubly_stochastic(8, kBaseSeed + 3000);
  if (pauli_term_count(dense, 1e-12).nonzero_terms != 64) {
    pass = false;
    worst = "dense 8x8 term count " +
            std::to_string(pauli_term_count(dense, 1e-12).nonzero_terms);
  }
  const auto coeffs = pauli_coefficients(dense);
  std::vector<std::vector<std::complex<double>>> rebuilt(
      8, std::vector<std::complex<double>>(8));
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    oracle::cmat p = {{1}};
    for (unsigned q = 0; q < 3; ++q)
      p = oracle::kron(p, oracle::pauli_matrix(
                              static_cast<int>(idx >> (2 * (2 - q))) & 3));
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) rebuilt[r][c] += coeffs[idx] * p[r][c];
  }
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      if (std::abs(rebuilt[r][c] - std::complex<double>(dense(r, c))) > 1e-10) {
        pass = false;
        worst = "pauli reconstruction off at (" + std::to_string(r) + "," +
                std::to_string(c) + ")";
      }

  report(10, "uniform success probability, ancilla count, and pauli support",
         pass,
         std::to_string(reports) + " reports + dense 8x8 pauli round trip" +
             (worst.empty() ? "" : ", " + worst));
}

// ---------------------------------------------------------------------------
// 11. Cutoff pruning and threshold stepping shrink K on most seeds.

void criterion_reduction() {
  const double eps = 0.05;
  int cutoff_wins = 0, threshold_wins = 0;
  std::string detail;
  for (std::size_t t = 0; t < 5; ++t) {
    const Matrix s = random_doubly_stochastic(16, trial_seed(kBaseSeed, 16, t));
    const std::size_t k_orig = decompose_original(s, eps).size();

    const auto full = decompose_original(s, 1e-9);
    const std::size_t k_cut = cutoff_prune(full, s, eps).size();

    const double theta = find_threshold(s, eps);
    const std::size_t k_thr = decompose_threshold(s, eps, theta).size();

    if (k_cut < k_orig) ++cutoff_wins;
    if (k_thr < k_orig) ++threshold_wins;
    detail += (detail.empty() ? "" : " ") + std::to_string(k_orig) + "/" +
              std::to_string(k_cut) + "/" + std::to_string(k_thr);
  }
  const bool pass = cutoff_wins >= 4 && threshold_wins >= 4;
  report(11, "cutoff and threshold beat plain stepping on most seeds", pass,
         "orig/cutoff/threshold K: " + detail + "; wins " +
             std::to_string(cutoff_wins) + " and " +
             std::to_string(threshold_wins) + " of 5");
}

}  // namespace

int main() {
  try {
    criterion_scaling();
    criterion_separation();
    criterion_bottleneck();
    criterion_precision();
    criterion_worst_case();
    criterion_reconstruction();
    criterion_matching_oracle();
    criterion_sinkhorn_round_trip();
    criterion_lcu();
    criterion_reduction();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance suite aborted: %s\n", e.what());
    return failures + 1;
  }
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
