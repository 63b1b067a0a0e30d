#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqtrial/model.hpp"

namespace seqtrial::montecarlo {

// Empirical K above this is reported as flagged; roughly the DKW 99.9% band
// for 1000 replicates.
inline constexpr double kFlagThreshold = 0.06;

struct SimulationPlan {
    StoppingRule rule;
    TrialParams params;
    std::size_t replicates = 1000;
    double ci_halfwidth = 1.96;
    std::uint64_t master_seed = 0;

    // Throws std::invalid_argument on replicates == 0 or a non-positive half-width.
    void validate() const;
};

struct EmpiricalSample {
    std::vector<double> statistics;  // sorted ascending
    std::size_t stop_count = 0;      // replicates that stopped at N = n
    std::uint64_t master_seed = 0;
    // Mean of mu_hat - mu, accumulated in replicate order.
    double mean_estimate_error = 0.0;
    // Sample variance of mu_hat - mu (0 when fewer than two replicates).
    double estimate_error_variance = 0.0;
};

struct SimulationSummary {
    double empirical_kolmogorov = 0.0;
    std::size_t coverage_count = 0;
    double coverage_rate = 0.0;
    double bias_estimate = 0.0;
    bool flagged = false;
};

// Replicate i (1-based) draws from RandomStream::for_replicate(master_seed, i),
// so the result does not depend on `threads`. threads == 0 uses the hardware count.
EmpiricalSample run_simulation(const SimulationPlan& plan, unsigned threads = 0);

// Exact sup distance between the empirical CDF and Phi. Throws std::domain_error if empty.
double empirical_kolmogorov(const EmpiricalSample& sample);

// Number of statistics with |s| <= x. Requires x > 0.
std::size_t coverage_count(const EmpiricalSample& sample, double x);

SimulationSummary summarize(const EmpiricalSample& sample, const SimulationPlan& plan);

}  // namespace seqtrial::montecarlo
