#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "bvnkit/bvn.hpp"

namespace bvnkit {

// One trial of one variant at one size. residual_l1 = NaN (with k = 0)
// marks a trial whose decomposition raised an error; the campaign
// carries on past it.
struct ScalingExperimentRow {
  std::size_t n = 0;
  Variant variant = Variant::kOriginal;
  std::uint64_t trial_seed = 0;
  std::size_t k = 0;
  double runtime_ms = 0.0;
  double residual_l1 = 0.0;
  double eps = 0.0;
};

struct ScalingSummary {
  std::size_t n = 0;
  Variant variant = Variant::kOriginal;
  // Over the trials that succeeded; NaN when none did.
  double mean_k = 0.0;
  double std_k = 0.0;
};

struct ScalingCampaign {
  std::vector<ScalingExperimentRow> rows;
  std::vector<ScalingSummary> summaries;
  bool any_error = false;
};

struct PrecisionExperimentRow {
  std::size_t n = 0;
  double eps = 0.0;
  double mean_k = 0.0;
  double std_k = 0.0;
  std::size_t trials = 0;
};

struct PrecisionCampaign {
  std::vector<PrecisionExperimentRow> rows;
  bool any_error = false;
};

// Seed for one trial; pairs the same input matrix across variants at a
// given size.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n,
                         std::size_t trial);

// Runs trials x sizes x variants greedy decompositions on seeded random
// doubly stochastic matrices. Sizes must be powers of two >= 4; variants
// must be of the plain greedy kind (original, largest, bottleneck).
// Trials run in parallel over `jobs` threads (0 = hardware concurrency);
// results are independent of the schedule, runtime_ms aside.
ScalingCampaign run_scaling_experiment(const std::vector<std::size_t>& sizes,
                                       const std::vector<Variant>& variants,
                                       double eps, std::size_t trials,
                                       std::uint64_t base_seed,
                                       unsigned jobs = 0);

// Mean and std of the largest-weight term count at n over each eps in
// eps_list, same seeding and parallelism story as above.
PrecisionCampaign run_precision_experiment(std::size_t n,
                                           const std::vector<double>& eps_list,
                                           std::size_t trials,
                                           std::uint64_t base_seed,
                                           unsigned jobs = 0);

// CSV with a fixed header and stable column order; doubles are written
// in shortest round-trip form so parse(write(rows)) == rows.
void write_csv(std::ostream& out, const std::vector<ScalingExperimentRow>& rows);
void write_csv(std::ostream& out, const std::vector<PrecisionExperimentRow>& rows);
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<ScalingExperimentRow>& rows);
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<PrecisionExperimentRow>& rows);
std::vector<ScalingExperimentRow> parse_scaling_csv(std::istream& in);
std::vector<PrecisionExperimentRow> parse_precision_csv(std::istream& in);

}  // namespace bvnkit
