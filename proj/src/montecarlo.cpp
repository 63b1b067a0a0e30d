#include "seqtrial/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <thread>

#include "seqtrial/distributions.hpp"
#include "seqtrial/random_stream.hpp"

namespace seqtrial::montecarlo {

void SimulationPlan::validate() const {
    if (replicates < 1) throw std::invalid_argument("replicates must be at least 1");
    if (!(ci_halfwidth > 0.0) || !std::isfinite(ci_halfwidth))
        throw std::invalid_argument("ci_halfwidth must be positive and finite");
}

EmpiricalSample run_simulation(const SimulationPlan& plan, unsigned threads) {
    plan.validate();
    const std::size_t m = plan.replicates;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, m));

    std::vector<TrialOutcome> outcomes(m);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto stream = RandomStream::for_replicate(plan.master_seed, i + 1);
            outcomes[i] = run_trial(plan.rule, plan.params, stream);
        }
    };

    if (threads <= 1) {
        work(0, m);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (m + threads - 1) / threads;
        for (std::size_t begin = 0; begin < m; begin += chunk)
            pool.emplace_back(work, begin, std::min(begin + chunk, m));
    }

    EmpiricalSample sample;
    sample.master_seed = plan.master_seed;
    sample.statistics.reserve(m);
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (const auto& o : outcomes) {
        sample.statistics.push_back(o.statistic);
        if (o.sample_size == plan.params.n()) ++sample.stop_count;
        // Welford update in replicate order.
        const double err = o.estimate - plan.params.mu();
        ++k;
        const double delta = err - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (err - mean);
    }
    std::sort(sample.statistics.begin(), sample.statistics.end());
    sample.mean_estimate_error = mean;
    sample.estimate_error_variance = m > 1 ? m2 / static_cast<double>(m - 1) : 0.0;
    return sample;
}

double empirical_kolmogorov(const EmpiricalSample& sample) {
    const auto& s = sample.statistics;
    if (s.empty()) throw std::domain_error("empirical_kolmogorov: empty sample");
    const double m = static_cast<double>(s.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double F = std_normal::cdf(s[i]);
        worst = std::max({worst, std::fabs(F - static_cast<double>(i + 1) / m),
                          std::fabs(F - static_cast<double>(i) / m)});
    }
    return worst;
}

std::size_t coverage_count(const EmpiricalSample& sample, double x) {
    if (!(x > 0.0)) throw std::domain_error("coverage_count: half-width must be positive");
    const auto& s = sample.statistics;
    const auto lo = std::lower_bound(s.begin(), s.end(), -x);
    const auto hi = std::upper_bound(s.begin(), s.end(), x);
    return static_cast<std::size_t>(std::distance(lo, hi));
}

SimulationSummary summarize(const EmpiricalSample& sample, const SimulationPlan& plan) {
    SimulationSummary out;
    out.empirical_kolmogorov = empirical_kolmogorov(sample);
    out.coverage_count = coverage_count(sample, plan.ci_halfwidth);
    out.coverage_rate = static_cast<double>(out.coverage_count) / static_cast<double>(sample.statistics.size());
    out.bias_estimate = sample.mean_estimate_error;
    out.flagged = out.empirical_kolmogorov > kFlagThreshold;
    return out;
}

}  // namespace seqtrial::montecarlo
