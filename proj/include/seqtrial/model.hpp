#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

#include "seqtrial/distributions.hpp"

namespace seqtrial {

// Probit stopping: P[stop after stage one | K_n = k] = Phi(alpha + beta * k / n).
struct Probabilistic {
    double alpha = 0.0;
    double beta = 0.0;
};

// Stop after stage one exactly when K_n > 0.
struct Deterministic {};

class StoppingRule {
public:
    // Throws std::invalid_argument unless alpha is finite and beta is finite and >= 0.
    static StoppingRule probabilistic(double alpha, double beta);
    static StoppingRule deterministic() { return StoppingRule(Deterministic{}); }

    bool is_deterministic() const { return std::holds_alternative<Deterministic>(rule_); }
    // Only meaningful for the probabilistic variant.
    const Probabilistic& probit() const { return std::get<Probabilistic>(rule_); }
    const std::variant<Probabilistic, Deterministic>& variant() const { return rule_; }

    // "0", "10", ... or "inf" for the deterministic rule.
    std::string label() const;

private:
    explicit StoppingRule(std::variant<Probabilistic, Deterministic> rule) : rule_(rule) {}
    std::variant<Probabilistic, Deterministic> rule_;
};

// Population mean and stage size.
class TrialParams {
public:
    // Throws std::invalid_argument if n < 1 or mu is not finite.
    TrialParams(double mu, std::int64_t n);

    double mu() const { return mu_; }
    std::int64_t n() const { return n_; }
    double stage_size() const { return static_cast<double>(n_); }

private:
    double mu_;
    std::int64_t n_;
};

enum class Branch { stage_one, stage_two };

struct TrialOutcome {
    std::int64_t sample_size = 0;
    double sample_sum = 0.0;
    double estimate = 0.0;
    double statistic = 0.0;
};

double stop_probability(const StoppingRule& rule, const TrialParams& params, double sample_sum);

// P[N = n], marginalised over the first-stage sum.
double marginal_stop_probability(const StoppingRule& rule, const TrialParams& params);

// E[mu_hat] for the random-size sample average.
double expected_estimate(const StoppingRule& rule, const TrialParams& params);

TrialOutcome make_outcome(const TrialParams& params, std::int64_t sample_size, double sample_sum);

template <class Stream>
concept TrialStream = requires(Stream& s) {
    { s.normal() } -> std::convertible_to<double>;
    { s.uniform() } -> std::convertible_to<double>;
};

// Consumes n normals, then one uniform (probabilistic rule only), then n
// more normals if the trial continues.
template <TrialStream Stream>
TrialOutcome run_trial(const StoppingRule& rule, const TrialParams& params, Stream& stream) {
    const std::int64_t n = params.n();
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i) sum += params.mu() + std_normal::sample(stream);

    bool stop;
    if (rule.is_deterministic()) {
        stop = sum > 0.0;
    } else {
        stop = stream.uniform() < stop_probability(rule, params, sum);
    }
    if (stop) return make_outcome(params, n, sum);

    for (std::int64_t i = 0; i < n; ++i) sum += params.mu() + std_normal::sample(stream);
    return make_outcome(params, 2 * n, sum);
}

}  // namespace seqtrial
