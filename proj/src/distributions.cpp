#include "seqtrial/distributions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace seqtrial::std_normal {
namespace {

// W. J. Cody, "Rational Chebyshev approximations for the error function",
// Math. Comp. 23 (1969). Coefficients as distributed in netlib specfun/erf.
constexpr std::array<double, 5> kErfA = {3.16112374387056560e00, 1.13864154151050156e02,
                                         3.77485237685302021e02, 3.20937758913846947e03,
                                         1.85777706184603153e-1};
constexpr std::array<double, 4> kErfB = {2.36012909523441209e01, 2.44024637934444173e02,
                                         1.28261652607737228e03, 2.84423683343917062e03};
constexpr std::array<double, 9> kErfcC = {
    5.64188496988670089e-1, 8.88314979438837594e00, 6.61191906371416295e01,
    2.98635138197400131e02, 8.81952221241769090e02, 1.71204761263407058e03,
    2.05107837782607147e03, 1.23033935479799725e03, 2.15311535474403846e-8};
constexpr std::array<double, 8> kErfcD = {
    1.57449261107098347e01, 1.17693950891312499e02, 5.37181101862009858e02,
    1.62138957456669019e03, 3.29079923573345963e03, 4.36261909014324716e03,
    3.43936767414372164e03, 1.23033935480374942e03};
constexpr std::array<double, 6> kErfcP = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                          1.25781726111229246e-1, 1.60837851487422766e-2,
                                          6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr std::array<double, 5> kErfcQ = {2.56852019228982242e00, 1.87295284992346047e00,
                                          5.27905102951428412e-1, 6.05183413124413191e-2,
                                          2.33520497626869185e-3};

constexpr double kInvSqrtPi = 5.6418958354775628695e-1;
constexpr double kSmallArgument = 0.46875;
constexpr double kBigArgument = 26.543;

// exp(-y*y) split as exp(-ys*ys) * exp(-(y-ys)(y+ys)) to keep full precision.
double exp_minus_square(double y) {
    const double ys = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ys) * (y + ys);
    return std::exp(-ys * ys) * std::exp(-del);
}

double erf_small(double x) {
    const double y = std::fabs(x);
    const double ysq = y > 1.11e-16 ? y * y : 0.0;
    double num = kErfA[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
        num = (num + kErfA[i]) * ysq;
        den = (den + kErfB[i]) * ysq;
    }
    return x * (num + kErfA[3]) / (den + kErfB[3]);
}

// erfc(y) for y > kSmallArgument.
double erfc_positive(double y) {
    if (y >= kBigArgument) return 0.0;
    double result;
    if (y <= 4.0) {
        double num = kErfcC[8] * y;
        double den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + kErfcC[i]) * y;
            den = (den + kErfcD[i]) * y;
        }
        result = (num + kErfcC[7]) / (den + kErfcD[7]);
    } else {
        const double ysq = 1.0 / (y * y);
        double num = kErfcP[5] * ysq;
        double den = ysq;
        for (int i = 0; i < 4; ++i) {
            num = (num + kErfcP[i]) * ysq;
            den = (den + kErfcQ[i]) * ysq;
        }
        result = ysq * (num + kErfcP[4]) / (den + kErfcQ[4]);
        result = (kInvSqrtPi - result) / y;
    }
    return exp_minus_square(y) * result;
}

// erfc for any finite argument.
double erfc(double x) {
    const double y = std::fabs(x);
    if (y <= kSmallArgument) return 1.0 - erf_small(x);
    const double tail = erfc_positive(y);
    return x < 0.0 ? 2.0 - tail : tail;
}

}  // namespace

double pdf(double u) {
    if (!std::isfinite(u)) throw std::domain_error("std_normal::pdf: argument must be finite");
    return kInvSqrt2Pi * std::exp(-0.5 * u * u);
}

double cdf(double u) {
    if (std::isnan(u)) throw std::domain_error("std_normal::cdf: argument is NaN");
    if (u == std::numeric_limits<double>::infinity()) return 1.0;
    if (u == -std::numeric_limits<double>::infinity()) return 0.0;
    return 0.5 * erfc(-u * M_SQRT1_2);
}

double complementary_cdf(double u) {
    if (std::isnan(u)) throw std::domain_error("std_normal::complementary_cdf: argument is NaN");
    return cdf(-u);
}

double inverse_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("std_normal::inverse_cdf: probability must lie in (0, 1)");

    // Acklam's rational approximation (relative error ~1.15e-9), polished
    // by one Halley step against cdf().
    static constexpr std::array<double, 6> a = {-3.969683028665376e+01, 2.209460984245205e+02,
                                                -2.759285104469687e+02, 1.383577518672690e+02,
                                                -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr std::array<double, 5> b = {-5.447609879822406e+01, 1.615858368580409e+02,
                                                -1.556989798598866e+02, 6.680131188771972e+01,
                                                -1.328068155288572e+01};
    static constexpr std::array<double, 6> c = {-7.784894002430293e-03, -3.223964580411365e-01,
                                                -2.400758277161838e+00, -2.549732539343734e+00,
                                                4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr std::array<double, 4> d = {7.784695709041462e-03, 3.224671290700398e-01,
                                                2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Work in the tail that keeps the residual well conditioned.
    const double e = x < 0.0 ? cdf(x) - p : (1.0 - p) - complementary_cdf(x);
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace seqtrial::std_normal
