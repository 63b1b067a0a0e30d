#include "seqtrial/model.hpp"

#include <sstream>
#include <stdexcept>

namespace seqtrial {

StoppingRule StoppingRule::probabilistic(double alpha, double beta) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
    if (!std::isfinite(beta) || beta < 0.0)
        throw std::invalid_argument("beta must be finite and nonnegative");
    return StoppingRule(Probabilistic{alpha, beta});
}

std::string StoppingRule::label() const {
    if (is_deterministic()) return "inf";
    std::ostringstream os;
    os << probit().beta;
    return os.str();
}

TrialParams::TrialParams(double mu, std::int64_t n) : mu_(mu), n_(n) {
    if (!std::isfinite(mu)) throw std::invalid_argument("mu must be finite");
    if (n < 1) throw std::invalid_argument("stage size n must be at least 1");
}

double stop_probability(const StoppingRule& rule, const TrialParams& params, double sample_sum) {
    if (rule.is_deterministic()) return sample_sum > 0.0 ? 1.0 : 0.0;
    const auto& p = rule.probit();
    return std_normal::cdf(p.alpha + p.beta / params.stage_size() * sample_sum);
}

double marginal_stop_probability(const StoppingRule& rule, const TrialParams& params) {
    const double n = params.stage_size();
    if (rule.is_deterministic()) return std_normal::cdf(std::sqrt(n) * params.mu());
    const auto& p = rule.probit();
    const double scale = std::sqrt(1.0 + p.beta * p.beta / n);
    return std_normal::cdf((p.alpha + p.beta * params.mu()) / scale);
}

double expected_estimate(const StoppingRule& rule, const TrialParams& params) {
    const double n = params.stage_size();
    const double mu = params.mu();
    if (rule.is_deterministic()) return mu + std_normal::pdf(std::sqrt(n) * mu) / (2.0 * std::sqrt(n));
    const auto& p = rule.probit();
    const double scale = std::sqrt(1.0 + p.beta * p.beta / n);
    return mu + p.beta / (2.0 * n * scale) * std_normal::pdf((p.alpha + p.beta * mu) / scale);
}

TrialOutcome make_outcome(const TrialParams& params, std::int64_t sample_size, double sample_sum) {
    TrialOutcome out;
    out.sample_size = sample_size;
    out.sample_sum = sample_sum;
    out.estimate = sample_sum / static_cast<double>(sample_size);
    out.statistic = std::sqrt(static_cast<double>(sample_size)) * (out.estimate - params.mu());
    return out;
}

}  // namespace seqtrial
