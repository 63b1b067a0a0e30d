#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace seqtrial::quadrature {

// Half-width of the window kept around the Gaussian weight's center when a
// limit is infinite. phi(9) ~ 1e-18.
inline constexpr double kTruncationRadius = 9.0;
inline constexpr std::size_t kDefaultEvaluationBudget = 1'000'000;
inline constexpr double kDefaultBoundTolerance = 1e-9;

// A function on the real line together with the points where it may jump or
// kink. Breakpoints are sorted and deduplicated on construction.
class Integrand {
public:
    Integrand(std::function<double(double)> evaluator, std::vector<double> breakpoints = {});

    double operator()(double u) const { return evaluator_(u); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

private:
    std::function<double(double)> evaluator_;
    std::vector<double> breakpoints_;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

// Raised when the tolerance is not met within the evaluation budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadratureResult& best() const { return best_; }

private:
    QuadratureResult best_;
};

struct Options {
    // Center of the Gaussian weight; infinite limits are replaced by center -+ 9.
    double center = 0.0;
    std::size_t max_evaluations = kDefaultEvaluationBudget;
};

// Integral over (-inf, inf), truncated to [center - 9, center + 9].
QuadratureResult integrate_real_line(const Integrand& f, double abs_tol, const Options& options = {});

// Integral over [lo, hi]; either limit may be infinite. lo >= hi yields 0.
QuadratureResult integrate_interval(const Integrand& f, double lo, double hi, double abs_tol,
                                    const Options& options = {});

}  // namespace seqtrial::quadrature
