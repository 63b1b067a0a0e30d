#pragma once

#include <optional>

#include "seqtrial/model.hpp"
#include "seqtrial/quadrature.hpp"

namespace seqtrial::analytic {

inline constexpr double kDefaultCdfTolerance = 1e-10;

// Joint density of (N, K_N) at (n, k) or (2n, k).
double joint_density(const StoppingRule& rule, const TrialParams& params, Branch branch, double k);

// Law of the normalized statistic sqrt(N) * (mu_hat - mu).
struct StatisticLaw {
    StoppingRule rule;
    TrialParams params;

    // Jump location of the density (deterministic rule only).
    std::optional<double> discontinuity() const;
};

double statistic_density(const StatisticLaw& law, double u);

quadrature::Integrand density_integrand(const StatisticLaw& law);

double statistic_cdf(const StatisticLaw& law, double x, double abs_tol = kDefaultCdfTolerance);

// Upper bound on the total variation distance between the statistic and N(0, 1):
// the L1 distance between their densities, integrated in closed-form-reduced form.
double tv_bound(const StoppingRule& rule, const TrialParams& params,
                double abs_tol = quadrature::kDefaultBoundTolerance);

// Half the L1 distance between statistic_density and phi.
double exact_tv_distance(const StatisticLaw& law, double abs_tol = quadrature::kDefaultBoundTolerance);

struct KolmogorovResult {
    double distance = 0.0;
    double argmax = 0.0;
};

// sup_x |F(x) - Phi(x)| on a 0.01 grid over [-9, 9] (plus the density's jump),
// refined to 1e-6 around the best grid point.
KolmogorovResult exact_kolmogorov(const StatisticLaw& law);

// P[-x <= statistic <= x]. Requires x >= 0.
double exact_coverage(const StatisticLaw& law, double x, double abs_tol = kDefaultCdfTolerance);

// phi((z - n mu)/sqrt n) phi((k - z - n mu)/sqrt n) == phi((k - 2 n mu)/sqrt(2n)) phi((2z - k)/sqrt(2n))
// to within 1e-12.
bool gaussian_product_identity_check(double k, double z, const TrialParams& params);

}  // namespace seqtrial::analytic
