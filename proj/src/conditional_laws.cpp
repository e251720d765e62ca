#include "telemax/conditional_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "telemax/special_functions.hpp"

namespace telemax {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321215;

// j * ln(z) with the 0 * ln(0) = 0 convention used throughout the finite
// sums below.
double pow_log(double z, int j) { return j == 0 ? 0.0 : j * std::log(z); }

void check_scale(double c, double t) {
    if (!(c > 0.0) || !std::isfinite(c) || !(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("law evaluator: c and t must be finite and > 0");
}

// log of (c^2 t^2 - x^2) formed from the factored difference; the factored
// form stays accurate near the support boundary.
double log_support_factor(double x, double c, double t) {
    return std::log(c * t - x) + std::log(c * t + x);
}

}  // namespace

double position_density(double x, int n, Direction v0, double c, double t) {
    check_scale(c, t);
    if (n < 0) throw std::invalid_argument("position_density: n must be >= 0");
    if (n == 0)
        throw std::domain_error(
            "position_density: the n = 0 law is purely atomic at v0*c*t; query the atoms");
    const double ct = c * t;
    if (!(std::abs(x) < ct)) return 0.0;
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        return std::exp(log_factorial(n) - 2.0 * log_factorial(k) +
                        k * log_support_factor(x, c, t) - n * std::log(2.0 * ct));
    }
    const int k = n / 2;
    const int up = v0 == Direction::Up ? k : k - 1;    // exponent on (ct + x)
    const int down = v0 == Direction::Up ? k - 1 : k;  // exponent on (ct - x)
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(k - 1) +
                    pow_log(ct + x, up) + pow_log(ct - x, down) - n * std::log(2.0 * ct));
}

double position_cdf(double x, int n, Direction v0, double c, double t) {
    check_scale(c, t);
    if (n < 0) throw std::invalid_argument("position_cdf: n must be >= 0");
    const double ct = c * t;
    if (n == 0) {
        const double atom_at = direction_sign(v0) * ct;
        return x > atom_at ? 1.0 : 0.0;  // strict P{T(t) < x}
    }
    if (x <= -ct) return 0.0;
    if (x >= ct) return 1.0;
    const int plus_legs = n / 2 + 1;  // order of the plus-time statistic
    if (v0 == Direction::Up) {
        const double z = (x + ct) / (2.0 * ct);
        return beta_cdf_integer(z, plus_legs, n - plus_legs + 1);
    }
    const double w = (ct - x) / (2.0 * ct);
    return 1.0 - beta_cdf_integer(w, plus_legs, n - plus_legs + 1);
}

double max_density(double beta, int n, Direction v0, double c, double t) {
    check_scale(c, t);
    if (n < 0) throw std::invalid_argument("max_density: n must be >= 0");
    const double ct = c * t;
    if (v0 == Direction::Up) {
        if (n == 0)
            throw std::domain_error(
                "max_density: V(0)=+c with n = 0 is purely atomic at ct; query the atoms");
        if (!(beta > 0.0) || !(beta < ct)) return 0.0;
        const int k = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
        return 2.0 * std::exp(log_factorial(2 * k + 1) - 2.0 * log_factorial(k) +
                              k * log_support_factor(beta, c, t) -
                              (2 * k + 1) * std::log(2.0 * ct));
    }
    if (n == 0) return 0.0;  // all mass sits in the atom at 0
    if (!(beta > 0.0) || !(beta < ct)) return 0.0;
    if (n % 2 == 0) {
        const int k = n / 2;
        return 2.0 * std::exp(log_factorial(2 * k) - log_factorial(k) - log_factorial(k - 1) +
                              (k - 1) * log_support_factor(beta, c, t) + std::log(ct - beta) -
                              2 * k * std::log(2.0 * ct));
    }
    const int k = (n - 1) / 2;
    const double second = std::exp(log_factorial(2 * k + 1) - log_factorial(k) -
                                   log_factorial(k + 1) + k * log_support_factor(beta, c, t) -
                                   (2 * k + 1) * std::log(2.0 * ct));
    if (k == 0) return second;  // first term carries 1/Gamma(0) = 0
    const double first = std::exp(log_factorial(2 * k + 1) - log_factorial(k - 1) -
                                  log_factorial(k + 1) +
                                  (k - 1) * log_support_factor(beta, c, t) +
                                  std::log(ct - beta) - 2 * k * std::log(2.0 * ct));
    return first + second;
}

AtomList max_atom(int n, Direction v0, double c, double t) {
    check_scale(c, t);
    if (n < 0) throw std::invalid_argument("max_atom: n must be >= 0");
    if (v0 == Direction::Up) {
        if (n == 0) return {{c * t, 1.0}};
        return {};
    }
    const int k = n / 2;
    const double mass = std::exp(log_binomial(n, k) - n * kLn2);
    return {{0.0, mass}};
}

double max_cdf(double beta, int n, Direction v0, double c, double t) {
    check_scale(c, t);
    if (n < 0) throw std::invalid_argument("max_cdf: n must be >= 0");
    const double ct = c * t;
    if (beta <= 0.0) return 0.0;
    if (beta > ct) return 1.0;
    if (n == 0) {
        if (v0 == Direction::Up) return beta > ct ? 1.0 : 0.0;  // atom at ct, strict CDF
        return 1.0;                                             // atom at 0, beta > 0
    }
    // r_j = C(2j, j) (v/4)^j with v = (c^2 t^2 - beta^2) / (c^2 t^2)
    const double v = ((ct - beta) / ct) * ((ct + beta) / ct);
    const double ratio = beta / ct;
    if (v0 == Direction::Up) {
        const int k = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
        double r = 1.0, sum = 1.0;
        for (int j = 1; j <= k; ++j) {
            r *= v * (2.0 * j - 1.0) / (2.0 * j);
            sum += r;
        }
        return std::min(ratio * sum, 1.0);
    }
    if (n % 2 == 0) {
        const int k = n / 2;
        double r = 1.0, sum = 0.0;
        for (int j = 1; j <= k; ++j) {
            sum += r;  // terms j = 0 .. k-1
            r *= v * (2.0 * j - 1.0) / (2.0 * j);
        }
        return std::min(ratio * sum + r, 1.0);
    }
    const int k = (n - 1) / 2;
    double r = 1.0, sum = 0.0;
    for (int j = 1; j <= k; ++j) {
        sum += r;
        r *= v * (2.0 * j - 1.0) / (2.0 * j);
    }
    const double tail = r / (k + 1.0) * (ratio + 2.0 * k + 1.0) / 2.0;
    return std::min(ratio * sum + tail, 1.0);
}

double max_moment(int m, int n, Direction v0, double c, double t) {
    check_scale(c, t);
    if (m < 1) throw std::invalid_argument("max_moment: m must be >= 1");
    if (n < 0) throw std::invalid_argument("max_moment: n must be >= 0");
    const double log_ct = std::log(c * t);
    if (v0 == Direction::Up) {
        if (n == 0) return std::exp(m * log_ct);  // atom at ct
        const int k = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
        return std::exp(log_factorial(2 * k + 1) - (2 * k + 1) * kLn2 - log_factorial(k) +
                        log_gamma(0.5 * (m + 1)) - log_gamma(k + 1 + 0.5 * (m + 1)) +
                        m * log_ct);
    }
    if (n % 2 == 0) {
        const int k = n / 2;
        if (k == 0) return 0.0;  // max is identically 0
        const double bracket =
            std::exp(log_gamma(0.5 * (m + 1)) - log_gamma(k + 0.5 * (m + 1))) -
            std::exp(log_gamma(0.5 * m + 1.0) - log_gamma(k + 1 + 0.5 * m));
        return std::exp(log_factorial(2 * k) - 2 * k * kLn2 - log_factorial(k) + m * log_ct) *
               bracket;
    }
    const int k = (n - 1) / 2;
    return ((2.0 * k + 1.0) * max_moment(m, 2 * k, Direction::Down, c, t) +
            max_moment(m, 2 * k + 1, Direction::Up, c, t)) /
           (2.0 * k + 2.0);
}

double order_stat_increment_density(double w, int n, int gap, double t) {
    if (n < 1) throw std::invalid_argument("order_stat_increment_density: n must be >= 1");
    if (gap < 1 || gap > n)
        throw std::invalid_argument("order_stat_increment_density: gap must be in [1, n]");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("order_stat_increment_density: t must be finite and > 0");
    if (!(w > 0.0) || !(w < t)) return 0.0;
    return std::exp(log_factorial(n) - log_factorial(gap - 1) - log_factorial(n - gap) +
                    pow_log(w, gap - 1) + pow_log(t - w, n - gap) - n * std::log(t));
}

double arrival_pair_density(double u, double v, int n, int first, int second, double t) {
    if (n < 2) throw std::invalid_argument("arrival_pair_density: n must be >= 2");
    if (first < 1 || second <= first || second > n)
        throw std::invalid_argument("arrival_pair_density: need 1 <= first < second <= n");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("arrival_pair_density: t must be finite and > 0");
    if (!(u > 0.0) || !(u < v) || !(v < t)) return 0.0;
    return std::exp(log_factorial(n) - log_factorial(first - 1) -
                    log_factorial(second - first - 1) - log_factorial(n - second) +
                    pow_log(u, first - 1) + pow_log(v - u, second - first - 1) +
                    pow_log(t - v, n - second) - n * std::log(t));
}

double beta_cdf_integer(double z, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("beta_cdf_integer: a, b must be >= 1");
    if (z <= 0.0) return 0.0;
    if (z >= 1.0) return 1.0;
    const int n = a + b - 1;
    // P{Beta(a,b) <= z} = sum_{j=a}^{n} C(n, j) z^j (1-z)^{n-j}
    double sum = 0.0;
    for (int j = a; j <= n; ++j)
        sum += std::exp(log_binomial(n, j) + pow_log(z, j) + pow_log(1.0 - z, n - j));
    return std::min(sum, 1.0);
}

}  // namespace telemax
