#include "seqtrial/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

namespace seqtrial::quadrature {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule; abscissae on [0, 1],
// index 7 is the center.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the center.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kEvaluationsPerPanel = 15;

// Standard normal upper tail at the truncation radius, an upper bound on the
// mass dropped per side for phi-weighted integrands with |factor| <= 1.
constexpr double kTruncatedTailMass = 1.1285884059538408e-19;

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

Integrand::Integrand(std::function<double(double)> evaluator, std::vector<double> breakpoints)
    : evaluator_(std::move(evaluator)), breakpoints_(std::move(breakpoints)) {
    std::sort(breakpoints_.begin(), breakpoints_.end());
    breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

QuadratureResult integrate_real_line(const Integrand& f, double abs_tol, const Options& options) {
    return integrate_interval(f, -INFINITY, INFINITY, abs_tol, options);
}

QuadratureResult integrate_interval(const Integrand& f, double lo, double hi, double abs_tol,
                                    const Options& options) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
    if (std::isnan(lo) || std::isnan(hi)) throw std::invalid_argument("integration limit is NaN");

    double truncation_error = 0.0;
    if (std::isinf(lo)) {
        if (lo > 0.0) return {};
        lo = options.center - kTruncationRadius;
        truncation_error += kTruncatedTailMass;
    }
    if (std::isinf(hi)) {
        if (hi < 0.0) return {};
        hi = options.center + kTruncationRadius;
        truncation_error += kTruncatedTailMass;
    }
    if (!(lo < hi)) return {};

    std::vector<double> cuts{lo};
    for (double b : f.breakpoints())
        if (b > lo && b < hi) cuts.push_back(b);
    cuts.push_back(hi);

    std::priority_queue<Panel> panels;
    QuadratureResult result;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = gauss_kronrod(f, cuts[i], cuts[i + 1]);
        result.evaluations += kEvaluationsPerPanel;
        value += p.value;
        error += p.error;
        panels.push(p);
    }

    // Panels whose width underflows cannot be refined further; their error
    // stays in the total.
    double frozen_error = 0.0;
    while (error + frozen_error + truncation_error > abs_tol && !panels.empty()) {
        if (result.evaluations + 2 * kEvaluationsPerPanel > options.max_evaluations) break;
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            error -= worst.error;
            frozen_error += worst.error;
            continue;
        }
        Panel left = gauss_kronrod(f, worst.lo, mid);
        Panel right = gauss_kronrod(f, mid, worst.hi);
        result.evaluations += 2 * kEvaluationsPerPanel;
        // The Kronrod and Gauss sums can agree by accident across a jump; the
        // parent-versus-halves discrepancy is a second coarse/fine difference.
        const double refinement_gap = std::fabs(left.value + right.value - worst.value);
        if (refinement_gap > left.error + right.error) {
            left.error = std::max(left.error, 0.5 * refinement_gap);
            right.error = std::max(right.error, 0.5 * refinement_gap);
        }
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    value = 0.0;
    error = frozen_error;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }

    result.value = value;
    result.error_estimate = error + truncation_error;
    if (result.error_estimate > abs_tol) {
        std::ostringstream os;
        os << "quadrature did not reach tolerance " << abs_tol << " (estimate " << result.error_estimate << " after "
           << result.evaluations << " evaluations)";
        throw ConvergenceError(os.str(), result);
    }
    return result;
}

}  // namespace seqtrial::quadrature
