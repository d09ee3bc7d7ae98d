#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "uncover/rng.hpp"

namespace uncover {

// Shared knobs for the Monte Carlo experiments.  Fields irrelevant to an
// experiment are ignored by it; validation happens per experiment.
struct ExperimentConfig {
    long n = 0;
    long k = 0;                       // cluster / largest-component experiments
    std::vector<int> js;              // edge-moment steps
    std::vector<double> grid;         // t values in [0,1] for the rescaled process
    std::vector<double> thresholds;   // sup|Z| exceedance levels
    double alpha = 0.0;               // largest-component cutoff (fraction of n)
    bool collect_components = false;  // accumulate per-size component counts
    long samples = 0;
    std::uint64_t seed = 42;
    int threads = 0;                  // 0 = hardware concurrency
};

// Result of a chi-square goodness-of-fit test.
struct GofResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    bool degenerate = false;                      // fewer than 2 bins after merging
    std::vector<std::pair<double, double>> bins;  // (observed, expected) after merging
};

// Pearson chi-square of counts against cell probabilities.  `expected` may
// sum to less than 1; the leftover probability becomes an implicit tail cell
// holding the unlisted observations.  Cells are merged left to right until
// each bin's expected count reaches 5 (a short final bin folds into its
// predecessor); the p-value comes from the chi-square survival function.
GofResult chi_square_test(const std::vector<long long>& observed,
                          const std::vector<double>& expected, long long total);

// Total variation distance (1/2) sum |p_i - q_i| between two pmf vectors
// aligned at index 0 (missing entries are 0).  Indices where both laws have
// mass below 1e-8 are outside the compared support.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;
    double se_mean = 0.0;
};

struct EdgeMomentReport {
    ExperimentConfig cfg;
    long samples = 0;
    std::vector<MomentSummary> k_moments;     // aligned with cfg.js
    std::vector<double> mean_z;               // aligned with cfg.grid
    std::vector<double> var_z;
    std::vector<double> skew_z;               // sample skewness per grid point
    std::vector<double> exkurt_z;             // excess kurtosis per grid point
    std::vector<std::vector<double>> cov_z;   // grid x grid, pooled estimate
    std::vector<std::vector<double>> cov_z_se;  // batch-scatter standard errors
    std::vector<long> sup_exceed;             // aligned with cfg.thresholds
};

struct ClusterExperimentReport {
    ExperimentConfig cfg;
    long samples = 0;
    std::vector<long> root_cluster_hist;       // index m = 0..k
    std::vector<long> largest_hist;            // index size = 0..k
    std::vector<double> mean_count_by_size;    // index r = 0..k (cfg.collect_components)
    double mean_root_ratio = 0.0;              // mean R/n
    double se_root_ratio = 0.0;
};

struct LargestComponentReport {
    ExperimentConfig cfg;
    long samples = 0;
    double mean_ratio = 0.0;  // mean Cmax/n
    double se_ratio = 0.0;
    double tail_fraction = 0.0;  // fraction of samples with Cmax >= alpha*n
    double se_tail = 0.0;
};

struct LimitProcessMomentReport {
    std::vector<double> grid;
    long samples = 0;
    std::vector<double> mean;
    std::vector<double> var;
    std::vector<std::vector<double>> cov;
    std::vector<std::vector<double>> cov_se;
};

// Empirical K_j moments and rescaled-process moments from uniform trees.
EdgeMomentReport run_edge_moment_experiment(const ExperimentConfig& cfg);

// Root-cluster histogram (uniform rooted trees), largest-cluster histogram,
// and optional per-size component counts.
ClusterExperimentReport run_cluster_experiment(const ExperimentConfig& cfg);

// Largest-cluster ratio summary and tail fraction at cfg.alpha.
LargestComponentReport run_largest_component_experiment(const ExperimentConfig& cfg);

// Same moment summary for draws of the Gaussian limit process, so process
// statistics can be compared simulation-vs-limit with both standard errors.
LimitProcessMomentReport run_limit_process_experiment(const ExperimentConfig& cfg);

int resolve_threads(int requested);  // 0 -> hardware concurrency (floor 1)

inline constexpr int kBatchCount = 64;

// Fixed-batch parallel runner.  The replication range splits into at most
// kBatchCount contiguous batches; every replication draws from its own
// RngStream(seed, index), and workers pull whole batches from a shared
// counter.  Per-batch accumulators come back in batch order, so any reduction
// over them is independent of the worker count.
template <typename Accum, typename Fn>
std::vector<Accum> run_batched(std::uint64_t seed, long samples, int threads, Fn&& fn) {
    if (samples < 1) throw std::invalid_argument("run_batched: samples must be >= 1");
    const int nb = static_cast<int>(std::min<long>(kBatchCount, samples));
    std::vector<Accum> partials(static_cast<std::size_t>(nb));
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            const int b = next.fetch_add(1);
            if (b >= nb) return;
            const long lo = samples * static_cast<long>(b) / nb;
            const long hi = samples * static_cast<long>(b + 1) / nb;
            Accum acc;
            for (long rep = lo; rep < hi; ++rep) {
                RngStream rng(seed, static_cast<std::uint64_t>(rep));
                fn(acc, rep, rng);
            }
            partials[static_cast<std::size_t>(b)] = std::move(acc);
        }
    };
    const int workers = std::min(resolve_threads(threads), nb);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return partials;
}

}  // namespace uncover
