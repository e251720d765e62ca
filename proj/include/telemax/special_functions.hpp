#pragma once

namespace telemax {

// Order nu = twice_order / 2. Integer and half-integer orders share one
// representation so the moment formulas can ask for I_{(m-1)/2} directly.
struct BesselOrder {
    int twice_order = 0;  // >= 0

    constexpr double value() const { return 0.5 * twice_order; }
};

constexpr BesselOrder integer_order(int r) { return BesselOrder{2 * r}; }
constexpr BesselOrder half_order(int numerator) { return BesselOrder{numerator}; }

/// Modified Bessel function of the first kind I_nu(x), x >= 0.
/// Power series below x = 50, asymptotic expansion above; relative error
/// <= 1e-12 on the series range. Throws std::domain_error for negative or
/// non-finite x.
double bessel_i(BesselOrder order, double x);

/// Exponentially scaled variant e^{-x} I_nu(x). Finite for any x >= 0,
/// including arguments far beyond the overflow point of bessel_i.
double bessel_i_scaled(BesselOrder order, double x);

/// I_1(x) / x, continued through the removable point at x = 0 (value 1/2).
double bessel_i1_over_x(double x);

/// e^{-x} I_1(x) / x.
double bessel_i1_over_x_scaled(double x);

/// ln Gamma(x) for x > 0. Integer and half-integer arguments below 30 come
/// from an extended-precision table so factorial ratios are bit-stable.
double log_gamma(double x);

/// ln n!
double log_factorial(int n);

/// ln C(n, k); returns -infinity for k < 0 or k > n (exact zero mass).
double log_binomial(int n, int k);

}  // namespace telemax
