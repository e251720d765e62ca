#include "telemax/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace telemax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln Gamma(j/2) for j = 1..59, accumulated in long double from
// Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.
const std::array<double, 60>& half_integer_lgamma_table() {
    static const std::array<double, 60> table = [] {
        std::array<double, 60> t{};
        long double acc_half = 0.5L * std::log(3.14159265358979323846264338328L);
        long double acc_int = 0.0L;
        for (int j = 1; j < 60; ++j) {
            if (j % 2 == 1) {
                t[j] = static_cast<double>(acc_half);
                acc_half += std::log(0.5L * j);
            } else {
                t[j] = static_cast<double>(acc_int);
                acc_int += std::log(0.5L * j);
            }
        }
        return t;
    }();
    return table;
}

// ln n! for n = 0..300 in long double; larger n falls back to lgamma.
const std::array<double, 301>& log_factorial_table() {
    static const std::array<double, 301> table = [] {
        std::array<double, 301> t{};
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int n = 1; n <= 300; ++n) {
            acc += std::log(static_cast<long double>(n));
            t[n] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

void check_order(BesselOrder order) {
    if (order.twice_order < 0)
        throw std::domain_error("bessel_i: order must be >= 0");
}

void check_argument(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("bessel_i: argument must be finite and >= 0");
}

// ln of the power series sum; valid on the series range (x <= ~60).
double log_bessel_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return nu * std::log(0.5 * x) - log_gamma(nu + 1.0) + std::log(sum);
}

// e^{-x} I_nu(x) by the large-argument expansion; terms alternate per the
// sign pattern of (2k-1)^2 - 4 nu^2 and the series terminates for
// half-integer nu.
double bessel_asymptotic_scaled(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (odd * odd - mu) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) break;  // divergence onset
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * 3.14159265358979323846 * x);
}

constexpr double kSeriesCutoff = 50.0;

}  // namespace

double bessel_i(BesselOrder order, double x) {
    check_order(order);
    check_argument(x);
    const double nu = order.value();
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= kSeriesCutoff) return std::exp(log_bessel_series(nu, x));
    return std::exp(x) * bessel_asymptotic_scaled(nu, x);
}

double bessel_i_scaled(BesselOrder order, double x) {
    check_order(order);
    check_argument(x);
    const double nu = order.value();
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= kSeriesCutoff) return std::exp(log_bessel_series(nu, x) - x);
    return bessel_asymptotic_scaled(nu, x);
}

double bessel_i1_over_x(double x) {
    check_argument(x);
    if (x < 1e-3) {
        const double x2 = x * x;
        return 0.5 + x2 / 16.0 + x2 * x2 / 384.0;
    }
    return bessel_i(integer_order(1), x) / x;
}

double bessel_i1_over_x_scaled(double x) {
    check_argument(x);
    if (x < 1e-3) return bessel_i1_over_x(x) * std::exp(-x);
    return bessel_i_scaled(integer_order(1), x) / x;
}

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("log_gamma: argument must be finite and > 0");
    const double twice = 2.0 * x;
    if (twice < 60.0 && twice == std::floor(twice))
        return half_integer_lgamma_table()[static_cast<int>(twice)];
    return std::lgamma(x);
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be >= 0");
    if (n <= 300) return log_factorial_table()[n];
    return std::lgamma(n + 1.0);
}

double log_binomial(int n, int k) {
    if (n < 0) throw std::domain_error("log_binomial: n must be >= 0");
    if (k < 0 || k > n) return kNegInf;
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace telemax
