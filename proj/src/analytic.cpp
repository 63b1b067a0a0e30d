#include "seqtrial/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace seqtrial::analytic {
namespace {

using std_normal::cdf;
using std_normal::pdf;

// The stage-one and stage-two stopping factors are Phi(a + b u) in the
// normalized variable; these are their coefficients.
struct ProbitCoefficients {
    double stage_one_offset;
    double stage_one_slope;
    double stage_two_offset;
    double stage_two_slope;
};

ProbitCoefficients probit_coefficients(const Probabilistic& p, const TrialParams& params) {
    const double n = params.stage_size();
    const double shift = p.alpha + p.beta * params.mu();
    const double inflated = 2.0 * n + p.beta * p.beta;
    return {shift, p.beta / std::sqrt(n), std::sqrt(2.0 * n / inflated) * shift,
            p.beta / std::sqrt(inflated)};
}

// Point where the two probit factors cross, i.e. where |difference| kinks.
std::vector<double> crossing_points(const ProbitCoefficients& c) {
    const double slope_gap = c.stage_one_slope - c.stage_two_slope;
    if (slope_gap == 0.0) return {};
    return {(c.stage_two_offset - c.stage_one_offset) / slope_gap};
}

double deterministic_jump(const TrialParams& params) {
    return -std::sqrt(params.stage_size()) * params.mu();
}

std::vector<double> deterministic_breakpoints(const TrialParams& params) {
    return {deterministic_jump(params)};
}

}  // namespace

double joint_density(const StoppingRule& rule, const TrialParams& params, Branch branch, double k) {
    const double n = params.stage_size();
    const double mu = params.mu();
    if (branch == Branch::stage_one) {
        const double sd = std::sqrt(n);
        const double base = pdf((k - n * mu) / sd) / sd;
        if (rule.is_deterministic()) return k > 0.0 ? base : 0.0;
        const auto& p = rule.probit();
        return base * cdf(p.alpha + p.beta * k / n);
    }
    const double sd = std::sqrt(2.0 * n);
    const double base = pdf((k - 2.0 * n * mu) / sd) / sd;
    if (rule.is_deterministic()) return base * cdf(-k / sd);
    const auto& p = rule.probit();
    const double arg = (p.alpha + p.beta * k / (2.0 * n)) / std::sqrt((2.0 * n + p.beta * p.beta) / (2.0 * n));
    return base * cdf(-arg);
}

std::optional<double> StatisticLaw::discontinuity() const {
    if (rule.is_deterministic()) return deterministic_jump(params);
    return std::nullopt;
}

double statistic_density(const StatisticLaw& law, double u) {
    const double weight = pdf(u);
    if (law.rule.is_deterministic()) {
        const double n = law.params.stage_size();
        const double stage_one = u > deterministic_jump(law.params) ? 1.0 : 0.0;
        return weight * (stage_one + cdf(-(u + std::sqrt(2.0 * n) * law.params.mu())));
    }
    const auto c = probit_coefficients(law.rule.probit(), law.params);
    return weight * (cdf(c.stage_one_offset + c.stage_one_slope * u) +
                     cdf(-(c.stage_two_offset + c.stage_two_slope * u)));
}

quadrature::Integrand density_integrand(const StatisticLaw& law) {
    std::vector<double> breaks;
    if (auto jump = law.discontinuity()) breaks.push_back(*jump);
    return quadrature::Integrand([law](double u) { return statistic_density(law, u); }, breaks);
}

double statistic_cdf(const StatisticLaw& law, double x, double abs_tol) {
    if (std::isnan(x)) throw std::domain_error("statistic_cdf: x is NaN");
    return quadrature::integrate_interval(density_integrand(law), -INFINITY, x, abs_tol).value;
}

double tv_bound(const StoppingRule& rule, const TrialParams& params, double abs_tol) {
    if (rule.is_deterministic()) {
        const double jump = deterministic_jump(params);
        const double shift = std::sqrt(2.0 * params.stage_size()) * params.mu();
        quadrature::Integrand f(
            [=](double u) {
                const double indicator = u > jump ? 1.0 : 0.0;
                return pdf(u) * std::fabs(indicator - cdf(u + shift));
            },
            deterministic_breakpoints(params));
        return quadrature::integrate_real_line(f, abs_tol).value;
    }
    const auto& p = rule.probit();
    if (p.beta == 0.0) return 0.0;
    const auto c = probit_coefficients(p, params);
    quadrature::Integrand f(
        [c](double u) {
            return pdf(u) * std::fabs(cdf(c.stage_two_offset + c.stage_two_slope * u) -
                                      cdf(c.stage_one_offset + c.stage_one_slope * u));
        },
        crossing_points(c));
    return quadrature::integrate_real_line(f, abs_tol).value;
}

double exact_tv_distance(const StatisticLaw& law, double abs_tol) {
    std::vector<double> breaks;
    if (law.rule.is_deterministic()) {
        breaks = deterministic_breakpoints(law.params);
    } else if (law.rule.probit().beta != 0.0) {
        breaks = crossing_points(probit_coefficients(law.rule.probit(), law.params));
    }
    quadrature::Integrand f([law](double u) { return std::fabs(statistic_density(law, u) - pdf(u)); },
                            breaks);
    // Halving the integral halves its error, so the L1 integral may be twice as loose.
    return 0.5 * quadrature::integrate_real_line(f, 2.0 * abs_tol).value;
}

KolmogorovResult exact_kolmogorov(const StatisticLaw& law) {
    constexpr double kStep = 0.01;
    constexpr double kResolution = 1e-6;
    constexpr double kCellTolerance = 1e-13;
    constexpr int kSteps = 1800;
    const double lo = -quadrature::kTruncationRadius;

    std::vector<double> grid;
    grid.reserve(kSteps + 2);
    for (int i = 0; i <= kSteps; ++i) grid.push_back(lo + kStep * i);
    if (auto jump = law.discontinuity(); jump && *jump > grid.front() && *jump < grid.back()) {
        grid.push_back(*jump);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }

    const auto f = density_integrand(law);
    std::vector<double> cumulative(grid.size(), 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i)
        cumulative[i] = cumulative[i - 1] +
                        quadrature::integrate_interval(f, grid[i - 1], grid[i], kCellTolerance).value;

    std::size_t best = 0;
    double best_gap = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double gap = std::fabs(cumulative[i] - cdf(grid[i]));
        if (gap > best_gap) {
            best_gap = gap;
            best = i;
        }
    }

    // Golden-section search for the maximum gap on the cells adjacent to the best grid point.
    const std::size_t anchor = best == 0 ? 0 : best - 1;
    const double anchor_x = grid[anchor];
    const double anchor_cdf = cumulative[anchor];
    auto gap_at = [&](double x) {
        const double mass = quadrature::integrate_interval(f, anchor_x, x, kCellTolerance).value;
        return std::fabs(anchor_cdf + mass - cdf(x));
    };
    double a = anchor_x;
    double b = grid[std::min(best + 1, grid.size() - 1)];
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double g1 = gap_at(x1);
    double g2 = gap_at(x2);
    while (b - a > kResolution) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + ratio * (b - a);
            g2 = gap_at(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - ratio * (b - a);
            g1 = gap_at(x1);
        }
    }

    KolmogorovResult result{best_gap, grid[best]};
    for (auto [x, g] : {std::pair{x1, g1}, std::pair{x2, g2}}) {
        if (g > result.distance) result = {g, x};
    }
    return result;
}

double exact_coverage(const StatisticLaw& law, double x, double abs_tol) {
    if (!(x >= 0.0)) throw std::domain_error("exact_coverage: half-width must be nonnegative");
    if (x == 0.0) return 0.0;
    return quadrature::integrate_interval(density_integrand(law), -x, x, abs_tol).value;
}

bool gaussian_product_identity_check(double k, double z, const TrialParams& params) {
    const double n = params.stage_size();
    const double mu = params.mu();
    const double lhs = pdf((z - n * mu) / std::sqrt(n)) * pdf((k - z - n * mu) / std::sqrt(n));
    const double rhs = pdf((k - 2.0 * n * mu) / std::sqrt(2.0 * n)) * pdf((2.0 * z - k) / std::sqrt(2.0 * n));
    return std::fabs(lhs - rhs) < 1e-12;
}

}  // namespace seqtrial::analytic
