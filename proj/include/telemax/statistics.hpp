#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace telemax {

// Two-sided Kolmogorov-Smirnov statistic of sorted samples against a model
// CDF: sup_x |F_n(x) - F(x)|. Throws on empty input.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf);

// Asymptotic two-sided critical value sqrt(-ln(alpha/2) / 2) / sqrt(n).
double ks_critical_value(double alpha, std::size_t n);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Pearson statistic sum (O - E)^2 / E over cells with E > 0.
double chi_square_statistic(const std::vector<double>& observed,
                            const std::vector<double>& expected);

// Upper quantile of the chi-square law with dof degrees of freedom,
// inverted from gamma_p by bisection.
double chi_square_critical_value(double alpha, int dof);

// CDF of the running maximum of standard Brownian motion over [0, t]:
// 2 Phi(x / sqrt(t)) - 1 = erf(x / sqrt(2 t)), clamped to 0 for x < 0.
double half_normal_cdf(double x, double t);

// CDF of a mixed law tabulated by segment-wise Gauss-Kronrod integration of
// its continuous density over [lower, upper], linearly interpolated between
// knots; atom masses are added for evaluation points strictly above their
// location (strict CDF convention).
class TabulatedCdf {
public:
    TabulatedCdf(const std::function<double(double)>& density, double lower, double upper,
                 int segments, std::vector<std::pair<double, double>> atoms = {});

    double operator()(double x) const;
    // Continuous mass plus atoms; 1 up to quadrature error for a proper law.
    double total_mass() const { return cumulative_.back() + atom_mass_; }

private:
    double lower_, upper_;
    double step_;
    std::vector<double> cumulative_;  // continuous mass up to each knot
    std::vector<std::pair<double, double>> atoms_;
    double atom_mass_ = 0.0;
};

}  // namespace telemax
