#include "bvnkit/bench.hpp"

#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "bvnkit/errors.hpp"
#include "bvnkit/random.hpp"

namespace bvnkit {

namespace {

Decomposition decompose_greedy(Variant v, const Matrix& s, double eps) {
  switch (v) {
    case Variant::kOriginal: return decompose_original(s, eps);
    case Variant::kLargestWeight: return decompose_largest_weight(s, eps);
    case Variant::kBottleneck: return decompose_bottleneck(s, eps);
    default:
      throw InvalidInputError("experiments cover the plain greedy variants only");
  }
}

// Runs fn(i) for i in [0, count) over a small thread pool. Each index is
// handled exactly once, so any output indexed by i is schedule
// independent.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& t : pool) t.join();
}

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  if (xs.empty()) {
    mean = sd = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  sd = std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n,
                         std::size_t trial) {
  return base_seed + static_cast<std::uint64_t>(n) * 1000 + trial;
}

ScalingCampaign run_scaling_experiment(const std::vector<std::size_t>& sizes,
                                       const std::vector<Variant>& variants,
                                       double eps, std::size_t trials,
                                       std::uint64_t base_seed, unsigned jobs) {
  if (sizes.empty()) throw InvalidInputError("need at least one size");
  for (std::size_t n : sizes)
    if (n < 4 || !std::has_single_bit(n))
      throw InvalidInputError("sizes must be powers of two, at least 4");
  if (variants.empty()) throw InvalidInputError("need at least one variant");
  for (Variant v : variants)
    if (v != Variant::kOriginal && v != Variant::kLargestWeight &&
        v != Variant::kBottleneck)
      throw InvalidInputError("experiments cover the plain greedy variants only");
  if (trials == 0) throw InvalidInputError("need at least one trial");
  if (!(eps > 0.0)) throw InvalidInputError("eps must be positive");

  struct Key {
    std::size_t n;
    Variant variant;
    std::size_t trial;
  };
  std::vector<Key> keys;
  keys.reserve(sizes.size() * variants.size() * trials);
  for (std::size_t n : sizes)
    for (Variant v : variants)
      for (std::size_t t = 0; t < trials; ++t) keys.push_back({n, v, t});

  ScalingCampaign campaign;
  campaign.rows.resize(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t idx) {
    const Key& key = keys[idx];
    ScalingExperimentRow row;
    row.n = key.n;
    row.variant = key.variant;
    row.trial_seed = trial_seed(base_seed, key.n, key.trial);
    row.eps = eps;
    row.residual_l1 = std::numeric_limits<double>::quiet_NaN();
    try {
      const Matrix m = random_doubly_stochastic(key.n, row.trial_seed);
      const auto t0 = std::chrono::steady_clock::now();
      const Decomposition d = decompose_greedy(key.variant, m, eps);
      const auto t1 = std::chrono::steady_clock::now();
      row.k = d.size();
      row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      row.residual_l1 = d.residual_l1;
    } catch (const std::exception&) {
      // Row stays marked (k = 0, residual NaN); the campaign carries on.
    }
    campaign.rows[idx] = std::move(row);
  });

  // A NaN residual is the error marker; a row that merely needed zero
  // terms still counts as a result.
  for (std::size_t n : sizes)
    for (Variant v : variants) {
      std::vector<double> ks;
      for (const auto& row : campaign.rows)
        if (row.n == n && row.variant == v && !std::isnan(row.residual_l1))
          ks.push_back(static_cast<double>(row.k));
      ScalingSummary s{n, v, 0.0, 0.0};
      mean_std(ks, s.mean_k, s.std_k);
      campaign.summaries.push_back(s);
    }
  for (const auto& row : campaign.rows)
    if (std::isnan(row.residual_l1)) campaign.any_error = true;
  return campaign;
}

PrecisionCampaign run_precision_experiment(std::size_t n,
                                           const std::vector<double>& eps_list,
                                           std::size_t trials,
                                           std::uint64_t base_seed,
                                           unsigned jobs) {
  if (n < 2 || !std::has_single_bit(n))
    throw InvalidInputError("n must be a power of two, at least 2");
  if (eps_list.empty()) throw InvalidInputError("need at least one eps");
  for (double e : eps_list)
    if (!(e > 0.0) || !(e < static_cast<double>(n)))
      throw InvalidInputError("eps must lie in (0, N)");
  if (trials == 0) throw InvalidInputError("need at least one trial");

  // k_table[t * eps_list.size() + e], -1 for an errored cell.
  std::vector<double> k_table(trials * eps_list.size(), -1.0);
  parallel_for(trials, jobs, [&](std::size_t t) {
    Matrix m;
    try {
      m = random_doubly_stochastic(n, trial_seed(base_seed, n, t));
    } catch (const std::exception&) {
      return;  // whole trial marked errored
    }
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
      try {
        k_table[t * eps_list.size() + e] = static_cast<double>(
            decompose_largest_weight(m, eps_list[e]).size());
      } catch (const std::exception&) {
      }
    }
  });

  PrecisionCampaign campaign;
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    std::vector<double> ks;
    for (std::size_t t = 0; t < trials; ++t) {
      const double k = k_table[t * eps_list.size() + e];
      if (k >= 0.0)
        ks.push_back(k);
      else
        campaign.any_error = true;
    }
    PrecisionExperimentRow row;
    row.n = n;
    row.eps = eps_list[e];
    row.trials = ks.size();
    mean_std(ks, row.mean_k, row.std_k);
    campaign.rows.push_back(row);
  }
  return campaign;
}

namespace {

void append_double(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

double parse_double(std::string_view field, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw ParseError(std::string("bad ") + what + " field '" +
                     std::string(field) + "'");
  return v;
}

std::uint64_t parse_u64(std::string_view field, const char* what) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw ParseError(std::string("bad ") + what + " field '" +
                     std::string(field) + "'");
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line,
                                           std::size_t expected) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) +
                     " fields, got " + std::to_string(out.size()));
  return out;
}

constexpr std::string_view kScalingHeader =
    "n,variant,trial_seed,k,runtime_ms,residual_l1,eps";
constexpr std::string_view kPrecisionHeader = "n,eps,mean_k,std_k,trials";

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ScalingExperimentRow>& rows) {
  std::string line(kScalingHeader);
  line += '\n';
  out << line;
  for (const auto& row : rows) {
    line.clear();
    line += std::to_string(row.n);
    line += ',';
    line += to_string(row.variant);
    line += ',';
    line += std::to_string(row.trial_seed);
    line += ',';
    line += std::to_string(row.k);
    line += ',';
    append_double(line, row.runtime_ms);
    line += ',';
    append_double(line, row.residual_l1);
    line += ',';
    append_double(line, row.eps);
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("csv write failed");
}

void write_csv(std::ostream& out, const std::vector<PrecisionExperimentRow>& rows) {
  std::string line(kPrecisionHeader);
  line += '\n';
  out << line;
  for (const auto& row : rows) {
    line.clear();
    line += std::to_string(row.n);
    line += ',';
    append_double(line, row.eps);
    line += ',';
    append_double(line, row.mean_k);
    line += ',';
    append_double(line, row.std_k);
    line += ',';
    line += std::to_string(row.trials);
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("csv write failed");
}

namespace {

template <typename Rows>
void write_csv_to(const std::filesystem::path& path, const Rows& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<ScalingExperimentRow>& rows) {
  write_csv_to(path, rows);
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<PrecisionExperimentRow>& rows) {
  write_csv_to(path, rows);
}

std::vector<ScalingExperimentRow> parse_scaling_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kScalingHeader)
    throw ParseError("bad or missing scaling csv header");
  std::vector<ScalingExperimentRow> rows;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_fields(line, 7);
    ScalingExperimentRow row;
    row.n = parse_u64(f[0], "n");
    row.variant = variant_from_string(f[1]);
    row.trial_seed = parse_u64(f[2], "trial_seed");
    row.k = parse_u64(f[3], "k");
    row.runtime_ms = parse_double(f[4], "runtime_ms");
    row.residual_l1 = parse_double(f[5], "residual_l1");
    row.eps = parse_double(f[6], "eps");
    rows.push_back(row);
  }
  return rows;
}

std::vector<PrecisionExperimentRow> parse_precision_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kPrecisionHeader)
    throw ParseError("bad or missing precision csv header");
  std::vector<PrecisionExperimentRow> rows;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_fields(line, 5);
    PrecisionExperimentRow row;
    row.n = parse_u64(f[0], "n");
    row.eps = parse_double(f[1], "eps");
    row.mean_k = parse_double(f[2], "mean_k");
    row.std_k = parse_double(f[3], "std_k");
    row.trials = parse_u64(f[4], "trials");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bvnkit
