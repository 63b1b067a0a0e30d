#include <doctest.h>

#include <cmath>
#include <vector>

#include "seqtrial/analytic.hpp"
#include "seqtrial/random_stream.hpp"

using namespace seqtrial;
using namespace seqtrial::analytic;
namespace sn = seqtrial::std_normal;

namespace {

// With alpha = mu = 0 the bound integrand is phi(u) |Phi(a u) - Phi(b u)| and
// the integral is (atan a - atan b) / pi.
double bound_at_zero_mean(double beta, double n) {
    return (std::atan(beta / std::sqrt(n)) - std::atan(beta / std::sqrt(2.0 * n + beta * beta))) / M_PI;
}

std::vector<StoppingRule> sweep_rules() {
    return {StoppingRule::probabilistic(0.0, 0.0), StoppingRule::probabilistic(0.0, 1.0),
            StoppingRule::probabilistic(0.0, 10.0), StoppingRule::probabilistic(0.5, 3.0),
            StoppingRule::deterministic()};
}

}  // namespace

TEST_CASE("joint density reference points") {
    CHECK(joint_density(StoppingRule::deterministic(), TrialParams(0.0, 1), Branch::stage_one, -1.0) == 0.0);
    // phi(0) / 2 and phi(0) / (2 sqrt 2), mpmath
    CHECK(std::fabs(joint_density(StoppingRule::probabilistic(0.0, 1.0), TrialParams(0.0, 1), Branch::stage_one,
                                  0.0) -
                    0.199471140200716338969973029967) < 1e-15);
    CHECK(std::fabs(joint_density(StoppingRule::deterministic(), TrialParams(0.0, 1), Branch::stage_two, 0.0) -
                    0.14104739588693907173701986289) < 1e-15);
}

TEST_CASE("joint density normalization and branch mass") {
    std::vector<StoppingRule> rules = {StoppingRule::probabilistic(0.0, 0.0), StoppingRule::probabilistic(0.0, 1.0),
                                       StoppingRule::probabilistic(0.0, 10.0), StoppingRule::deterministic()};
    for (const auto& rule : rules) {
        for (double mu : {-1.0, 0.0, 1.0}) {
            for (std::int64_t n : {1, 10, 100}) {
                const TrialParams params(mu, n);
                const double nn = params.stage_size();
                // Each branch density lives on the K scale; integrate in the normalized variable.
                quadrature::Integrand one(
                    [&](double u) {
                        return std::sqrt(nn) * joint_density(rule, params, Branch::stage_one, nn * mu + std::sqrt(nn) * u);
                    },
                    {-std::sqrt(nn) * mu});
                quadrature::Integrand two([&](double u) {
                    return std::sqrt(2 * nn) *
                           joint_density(rule, params, Branch::stage_two, 2 * nn * mu + std::sqrt(2 * nn) * u);
                });
                const double m1 = quadrature::integrate_real_line(one, 1e-11).value;
                const double m2 = quadrature::integrate_real_line(two, 1e-11).value;
                CHECK(std::fabs(m1 + m2 - 1.0) < 1e-8);
                CHECK(std::fabs(m1 - marginal_stop_probability(rule, params)) < 1e-8);
            }
        }
    }
}

TEST_CASE("statistic density") {
    const StatisticLaw flat{StoppingRule::probabilistic(0.7, 0.0), TrialParams(2.0, 5)};
    for (double u : {-3.0, -0.2, 0.0, 1.1, 4.0}) CHECK(statistic_density(flat, u) == doctest::Approx(sn::pdf(u)));

    const StatisticLaw det{StoppingRule::deterministic(), TrialParams(0.0, 10)};
    // 1.5 phi(0) and 0.5 phi(0) on either side of the jump
    CHECK(std::fabs(statistic_density(det, 1e-12) - 0.598413420602149016909919089902) < 1e-12);
    CHECK(std::fabs(statistic_density(det, -1e-12) - 0.199471140200716338969973029967) < 1e-12);

    for (const auto& rule : sweep_rules()) {
        for (double mu : {-1.0, 0.0, 0.5}) {
            const StatisticLaw law{rule, TrialParams(mu, 10)};
            CHECK(std::fabs(quadrature::integrate_real_line(density_integrand(law), 1e-10).value - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("statistic cdf") {
    const StatisticLaw det{StoppingRule::deterministic(), TrialParams(0.0, 10)};
    CHECK(std::fabs(statistic_cdf(det, 12.0) - 1.0) < 1e-9);
    CHECK(std::fabs(statistic_cdf(det, 0.0) - 0.375) < 1e-9);

    const StatisticLaw flat{StoppingRule::probabilistic(0.0, 0.0), TrialParams(1.0, 10)};
    for (double x : {-2.0, 0.0, 0.5, 3.0}) CHECK(std::fabs(statistic_cdf(flat, x) - sn::cdf(x)) < 1e-9);
}

TEST_CASE("zero-mean deterministic closed forms") {
    const StatisticLaw det{StoppingRule::deterministic(), TrialParams(0.0, 25)};
    for (int i = -40; i <= 40; ++i) {
        const double x = 0.1 * i;
        const double F = sn::cdf(x);
        const double gap = std::fabs(F - statistic_cdf(det, x));
        const double expected = x >= 0.0 ? std::fabs(F * F / 2.0 - F + 0.5) : F * F / 2.0;
        CHECK(std::fabs(gap - expected) < 1e-8);
    }
}

TEST_CASE("tv_bound against independent oracles") {
    CHECK(tv_bound(StoppingRule::probabilistic(0.0, 0.0), TrialParams(0.0, 10)) == 0.0);
    CHECK(tv_bound(StoppingRule::probabilistic(5.0, 0.0), TrialParams(3.0, 10)) == 0.0);

    for (double beta : {1.0, 10.0, 100.0}) {
        for (std::int64_t n : {10, 100, 1000}) {
            const double c = tv_bound(StoppingRule::probabilistic(0.0, beta), TrialParams(0.0, n));
            CHECK(std::fabs(c - bound_at_zero_mean(beta, double(n))) < 1e-9);
        }
    }
    for (std::int64_t n : {1, 10, 1000}) {
        CHECK(std::fabs(tv_bound(StoppingRule::deterministic(), TrialParams(0.0, n)) - 0.25) < 1e-9);
    }

    // mpmath quadrature with the kink split out
    CHECK(std::fabs(tv_bound(StoppingRule::deterministic(), TrialParams(-1.0, 10)) -
                    0.00131950467792739326128315831963) < 1e-9);
    CHECK(std::fabs(tv_bound(StoppingRule::deterministic(), TrialParams(0.1, 10)) -
                    0.237157571266738924333792922111) < 1e-9);
    CHECK(std::fabs(tv_bound(StoppingRule::deterministic(), TrialParams(-0.3, 5)) -
                    0.197195981055919058493700387733) < 1e-9);
    CHECK(std::fabs(tv_bound(StoppingRule::probabilistic(0.5, 2.0), TrialParams(0.3, 5)) -
                    0.0542372392852967742712562783491) < 1e-9);
    CHECK(std::fabs(tv_bound(StoppingRule::probabilistic(0.0, 1.0), TrialParams(-1.0, 10)) -
                    0.0184664303781134031275154478364) < 1e-9);
}

TEST_CASE("tv_bound symmetry and decrease in n") {
    for (double mu : {0.1, 0.5, 1.0, 10.0}) {
        for (std::int64_t n : {10, 100, 1000}) {
            const double up = tv_bound(StoppingRule::deterministic(), TrialParams(mu, n));
            const double down = tv_bound(StoppingRule::deterministic(), TrialParams(-mu, n));
            CHECK(std::fabs(up - down) < 1e-8);
        }
    }
    for (double beta : {1.0, 10.0, 100.0}) {
        for (double mu : {-1.0, 0.0, 1.0}) {
            const auto rule = StoppingRule::probabilistic(0.0, beta);
            CHECK(tv_bound(rule, TrialParams(mu, 1000)) < tv_bound(rule, TrialParams(mu, 10)));
        }
    }
    CHECK(tv_bound(StoppingRule::deterministic(), TrialParams(1.0, 1000)) <
          tv_bound(StoppingRule::deterministic(), TrialParams(1.0, 10)));
}

TEST_CASE("exact distances") {
    const StatisticLaw flat{StoppingRule::probabilistic(0.0, 0.0), TrialParams(0.0, 10)};
    CHECK(exact_tv_distance(flat) < 1e-12);
    CHECK(exact_kolmogorov(flat).distance < 1e-8);

    for (std::int64_t n : {1, 10, 100, 1000}) {
        const StatisticLaw det{StoppingRule::deterministic(), TrialParams(0.0, n)};
        CHECK(std::fabs(exact_tv_distance(det) - 0.125) < 1e-6);
        const auto k = exact_kolmogorov(det);
        CHECK(std::fabs(k.distance - 0.125) < 1e-6);
        CHECK(std::fabs(k.argmax) < 1e-3);
    }
}

TEST_CASE("distance ordering K <= dTV <= C") {
    for (const auto& rule : sweep_rules()) {
        for (double mu : {-1.0, -0.1, 0.0, 0.3, 1.0}) {
            for (std::int64_t n : {1, 10, 100}) {
                const StatisticLaw law{rule, TrialParams(mu, n)};
                const double k = exact_kolmogorov(law).distance;
                const double tv = exact_tv_distance(law);
                const double c = tv_bound(rule, law.params);
                CHECK(k <= tv + 1e-8);
                CHECK(tv <= c + 1e-8);
            }
        }
    }
}

TEST_CASE("exact coverage") {
    const StatisticLaw det{StoppingRule::deterministic(), TrialParams(0.0, 10)};
    CHECK(exact_coverage(det, 0.0) == 0.0);
    CHECK(std::fabs(exact_coverage(det, 1.96) - 0.950004209703559127574352615209) < 1e-8);
    CHECK_THROWS_AS(exact_coverage(det, -1.0), std::domain_error);

    for (const auto& rule : sweep_rules()) {
        for (double mu : {-1.0, 0.0, 1.0}) {
            for (std::int64_t n : {10, 100}) {
                const StatisticLaw law{rule, TrialParams(mu, n)};
                const double gap = std::fabs(exact_coverage(law, 1.96) - (2.0 * sn::cdf(1.96) - 1.0));
                CHECK(gap <= tv_bound(rule, law.params) + 1e-9);
            }
        }
    }
}

TEST_CASE("Gaussian product identity") {
    CHECK(gaussian_product_identity_check(0.0, 0.0, TrialParams(0.0, 1)));
    CHECK(gaussian_product_identity_check(3.7, -1.2, TrialParams(0.5, 7)));

    RandomStream stream(8);
    for (int i = 0; i < 100; ++i) {
        const double k = 5.0 * stream.normal();
        const double z = 5.0 * stream.normal();
        const double mu = stream.normal();
        const auto n = static_cast<std::int64_t>(1 + 50 * stream.uniform());
        CHECK(gaussian_product_identity_check(k, z, TrialParams(mu, n)));
    }
}
