#pragma once

#include <concepts>

namespace seqtrial::std_normal {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

// Standard normal density. Throws std::domain_error on non-finite input.
double pdf(double u);

// Standard normal CDF, built on Cody's rational Chebyshev erf/erfc
// approximations. Accepts +-infinity; throws std::domain_error on NaN.
double cdf(double u);

// Upper tail 1 - cdf(u), computed without cancellation.
double complementary_cdf(double u);

// Quantile function. Requires 0 < p < 1.
double inverse_cdf(double p);

template <class Stream>
concept NormalSource = requires(Stream& s) {
    { s.normal() } -> std::convertible_to<double>;
};

template <NormalSource Stream>
double sample(Stream& stream) {
    return stream.normal();
}

}  // namespace seqtrial::std_normal
