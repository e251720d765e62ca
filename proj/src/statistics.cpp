#include "telemax/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "telemax/quadrature.hpp"
#include "telemax/special_functions.hpp"

namespace telemax {

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double model = cdf(sorted_samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        worst = std::max({worst, model - lo, hi - model});
    }
    return worst;
}

double ks_critical_value(double alpha, std::size_t n) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("ks_critical_value: alpha must be in (0, 1)");
    if (n == 0) throw std::invalid_argument("ks_critical_value: n must be > 0");
    return std::sqrt(-0.5 * std::log(0.5 * alpha)) / std::sqrt(static_cast<double>(n));
}

namespace {

// Series expansion of P(a, x), effective for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= x / (a + k);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Continued fraction for Q(a, x) = 1 - P(a, x), effective for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - log_gamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double chi_square_statistic(const std::vector<double>& observed,
                            const std::vector<double>& expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_statistic: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) continue;
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

double chi_square_critical_value(double alpha, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_critical_value: dof must be >= 1");
    const double target = 1.0 - alpha;
    double lo = 0.0;
    double hi = dof + 20.0 * std::sqrt(2.0 * dof) + 50.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (gamma_p(0.5 * dof, 0.5 * mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double half_normal_cdf(double x, double t) {
    if (x <= 0.0) return 0.0;
    return std::erf(x / std::sqrt(2.0 * t));
}

TabulatedCdf::TabulatedCdf(const std::function<double(double)>& density, double lower,
                           double upper, int segments,
                           std::vector<std::pair<double, double>> atoms)
    : lower_(lower), upper_(upper), atoms_(std::move(atoms)) {
    if (!(lower < upper) || segments < 1)
        throw std::invalid_argument("TabulatedCdf: bad range or segment count");
    step_ = (upper - lower) / segments;
    cumulative_.resize(segments + 1);
    cumulative_[0] = 0.0;
    for (int i = 0; i < segments; ++i) {
        const double a = lower + i * step_;
        const double r = quad(density, a, a + step_, 1e-12, 200).value;
        cumulative_[i + 1] = cumulative_[i] + r;
    }
    for (const auto& [loc, mass] : atoms_) atom_mass_ += mass;
}

double TabulatedCdf::operator()(double x) const {
    double base = 0.0;
    for (const auto& [loc, mass] : atoms_)
        if (x > loc) base += mass;
    if (x <= lower_) return base;
    if (x >= upper_) return base + cumulative_.back();
    const double pos = (x - lower_) / step_;
    const auto idx = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(idx);
    return base + cumulative_[idx] + frac * (cumulative_[idx + 1] - cumulative_[idx]);
}

}  // namespace telemax
