#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "telemax/conditional_laws.hpp"
#include "telemax/quadrature.hpp"
#include "telemax/special_functions.hpp"
#include "telemax/statistics.hpp"

using namespace telemax;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("position density fixed values") {
    // single reversal: constant 1/(2ct) on the support
    CHECK(position_density(0.3, 1, Direction::Up, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(position_density(-0.9, 1, Direction::Down, 1.0, 1.0) == doctest::Approx(0.5));
    // two reversals, upward start: (1+x)/2 at c = t = 1
    CHECK(position_density(0.0, 2, Direction::Up, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(position_density(0.4, 2, Direction::Up, 1.0, 1.0) == doctest::Approx(0.7));
    // mirror symmetry between the starts for even counts
    CHECK(position_density(0.4, 2, Direction::Down, 1.0, 1.0) ==
          doctest::Approx(position_density(-0.4, 2, Direction::Up, 1.0, 1.0)));
    // outside the support
    CHECK(position_density(1.0, 3, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK(position_density(-1.2, 3, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK_THROWS(position_density(0.1, 0, Direction::Up, 1.0, 1.0));
}

TEST_CASE("position density is even in x for odd reversal counts") {
    for (int n : {1, 3, 7, 21})
        for (double x = 0.05; x < 1.0; x += 0.13)
            CHECK(position_density(x, n, Direction::Up, 1.0, 1.0) ==
                  doctest::Approx(position_density(-x, n, Direction::Up, 1.0, 1.0)));
}

TEST_CASE("position cdf differentiates back to the density") {
    const double h = 1e-6;
    for (int n : {1, 2, 5, 8}) {
        for (Direction v0 : {Direction::Up, Direction::Down}) {
            for (double x = -0.7; x < 0.75; x += 0.16) {
                const double fd = (position_cdf(x + h, n, v0, 1.0, 1.0) -
                                   position_cdf(x - h, n, v0, 1.0, 1.0)) /
                                  (2.0 * h);
                CHECK(fd ==
                      doctest::Approx(position_density(x, n, v0, 1.0, 1.0)).epsilon(1e-4));
            }
        }
    }
    CHECK(position_cdf(-1.0, 3, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK(position_cdf(1.0, 3, Direction::Up, 1.0, 1.0) == 1.0);
    CHECK(position_cdf(0.0, 1, Direction::Up, 1.0, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("max density fixed values") {
    // one reversal, upward: uniform on (0, ct)
    CHECK(max_density(0.25, 1, Direction::Up, 1.0, 1.0) == doctest::Approx(1.0));
    // two reversals, downward: (ct - b)/(ct)^2 scaled; 0.5 at b = 0.5
    CHECK(max_density(0.5, 2, Direction::Down, 1.0, 1.0) == doctest::Approx(0.5));
    // one reversal, downward: constant 1/(2ct)
    for (double b = 0.1; b < 1.0; b += 0.2)
        CHECK(max_density(b, 1, Direction::Down, 1.0, 1.0) == doctest::Approx(0.5));
    // boundary convention
    CHECK(max_density(0.0, 3, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK(max_density(1.0, 3, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK(max_density(0.5, 0, Direction::Down, 1.0, 1.0) == 0.0);
    CHECK_THROWS(max_density(0.5, 0, Direction::Up, 1.0, 1.0));
}

TEST_CASE("even reversal count collapses onto the preceding odd law") {
    for (int k = 0; k <= 40; ++k)
        for (double b = 0.1; b < 2.0; b += 0.37)
            CHECK(max_density(b, 2 * k + 2, Direction::Up, 2.0, 1.0) ==
                  max_density(b, 2 * k + 1, Direction::Up, 2.0, 1.0));
}

TEST_CASE("max atoms") {
    const AtomList zero = max_atom(0, Direction::Down, 1.0, 1.0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].location == 0.0);
    CHECK(zero[0].mass == doctest::Approx(1.0));

    CHECK(max_atom(2, Direction::Down, 1.0, 1.0)[0].mass == doctest::Approx(0.5));
    CHECK(max_atom(5, Direction::Down, 1.0, 1.0)[0].mass == doctest::Approx(10.0 / 32.0));

    CHECK(max_atom(3, Direction::Up, 1.0, 1.0).empty());
    const AtomList top = max_atom(0, Direction::Up, 2.0, 3.0);
    REQUIRE(top.size() == 1);
    CHECK(top[0].location == doctest::Approx(6.0));
    CHECK(top[0].mass == 1.0);
}

TEST_CASE("max cdf fixed values") {
    CHECK(max_cdf(0.5, 1, Direction::Up, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(max_cdf(0.5, 3, Direction::Up, 1.0, 1.0) == doctest::Approx(0.6875));
    CHECK(max_cdf(0.5, 2, Direction::Down, 1.0, 1.0) == doctest::Approx(0.875));
    // the atom at zero enters for any beta > 0
    CHECK(max_cdf(1e-12, 1, Direction::Down, 1.0, 1.0) == doctest::Approx(0.5));
    // clamping
    CHECK(max_cdf(-0.2, 4, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK(max_cdf(1.2, 4, Direction::Up, 1.0, 1.0) == 1.0);
    CHECK(max_cdf(1.0, 4, Direction::Up, 1.0, 1.0) == doctest::Approx(1.0));
    // degenerate laws
    CHECK(max_cdf(0.5, 0, Direction::Up, 1.0, 1.0) == 0.0);
    CHECK(max_cdf(1.5, 0, Direction::Up, 1.0, 1.0) == 1.0);
    CHECK(max_cdf(0.5, 0, Direction::Down, 1.0, 1.0) == 1.0);
}

TEST_CASE("normalization: continuous mass plus atoms is one") {
    for (Direction v0 : {Direction::Up, Direction::Down}) {
        for (int n = 0; n <= 60; ++n) {
            double total = 0.0;
            if (!(v0 == Direction::Up && n == 0))
                total += quad([&](double b) { return max_density(b, n, v0, 1.3, 0.7); }, 0.0,
                              1.3 * 0.7, 1e-11)
                             .value;
            for (const auto& atom : max_atom(n, v0, 1.3, 0.7)) total += atom.mass;
            CHECK(std::abs(total - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("weighted-sum identity for the downward odd law") {
    for (int k = 0; k <= 40; ++k) {
        for (double b = 0.05; b < 1.0; b += 0.09) {
            const double lhs = max_density(b, 2 * k + 1, Direction::Down, 1.0, 1.0);
            const double rhs =
                (2.0 * k + 1.0) / (2.0 * k + 2.0) *
                    max_density(b, 2 * k, Direction::Down, 1.0, 1.0) +
                1.0 / (2.0 * k + 2.0) * max_density(b, 2 * k + 1, Direction::Up, 1.0, 1.0);
            if (lhs == 0.0 && rhs == 0.0) continue;
            CHECK(rel_err(lhs, rhs) < 1e-12);
        }
        const double atom_odd = max_atom(2 * k + 1, Direction::Down, 1.0, 1.0)[0].mass;
        const double atom_even = max_atom(2 * k, Direction::Down, 1.0, 1.0)[0].mass;
        CHECK(rel_err(atom_odd, (2.0 * k + 1.0) / (2.0 * k + 2.0) * atom_even) < 1e-12);
    }
}

TEST_CASE("cdf decomposition for the downward even law") {
    for (int k = 1; k <= 40; ++k) {
        for (double b = 0.05; b < 1.0; b += 0.09) {
            const double v = (1.0 - b) * (1.0 + b);
            const double tail = std::exp(log_binomial(2 * k, k) + k * std::log(0.25 * v));
            CHECK(rel_err(max_cdf(b, 2 * k, Direction::Down, 1.0, 1.0),
                          max_cdf(b, 2 * k - 1, Direction::Up, 1.0, 1.0) + tail) < 1e-12);
        }
    }
}

TEST_CASE("zero atom decays like 1/sqrt(pi k)") {
    const int k = 10000;
    const double atom = max_atom(2 * k, Direction::Down, 1.0, 1.0)[0].mass;
    CHECK(std::abs(atom * std::sqrt(3.14159265358979323846 * k) - 1.0) < 2e-3);
}

TEST_CASE("reflection principle: P{max > b} = 2 P{T(t) > b} for upward starts") {
    for (int n : {1, 3, 5, 9}) {
        for (double b : {0.25, 0.5, 0.75}) {
            const double tail =
                quad([&](double x) { return position_density(x, n, Direction::Up, 1.0, 1.0); },
                     b, 1.0, 1e-11)
                    .value;
            CHECK(std::abs(1.0 - max_cdf(b, n, Direction::Up, 1.0, 1.0) - 2.0 * tail) < 1e-8);
        }
    }
}

TEST_CASE("max cdf differentiates back to the density") {
    const double h = 1e-5;
    for (int n = 1; n <= 20; ++n) {
        for (Direction v0 : {Direction::Up, Direction::Down}) {
            for (double b = 0.08; b < 0.8; b += 0.06) {
                const double fd =
                    (max_cdf(b + h, n, v0, 1.0, 1.0) - max_cdf(b - h, n, v0, 1.0, 1.0)) /
                    (2.0 * h);
                const double d = max_density(b, n, v0, 1.0, 1.0);
                CHECK(std::abs(fd - d) / std::max(d, 1e-300) < 1e-6);
            }
        }
    }
}

TEST_CASE("moment fixed values") {
    CHECK(max_moment(1, 1, Direction::Up, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(max_moment(1, 5, Direction::Up, 1.0, 1.0) ==
          doctest::Approx(5.0 / 16.0).epsilon(1e-13));
    CHECK(max_moment(1, 2, Direction::Down, 1.0, 1.0) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(max_moment(1, 0, Direction::Up, 2.0, 3.0) == doctest::Approx(6.0));
    CHECK(max_moment(1, 0, Direction::Down, 1.0, 1.0) == 0.0);
    CHECK(max_moment(3, 0, Direction::Down, 1.0, 1.0) == 0.0);
    for (int k = 0; k <= 20; ++k)
        CHECK(rel_err(max_moment(2, 2 * k + 1, Direction::Up, 1.0, 1.0), 1.0 / (2.0 * k + 3.0)) <
              1e-12);
}

TEST_CASE("moments agree with quadrature of the densities") {
    for (Direction v0 : {Direction::Up, Direction::Down}) {
        for (int n = 1; n <= 20; ++n) {
            for (int m = 1; m <= 6; ++m) {
                const double viaq =
                    quad([&](double b) {
                        return std::pow(b, m) * max_density(b, n, v0, 1.0, 1.0);
                    },
                         0.0, 1.0, 1e-12)
                        .value;
                CHECK(rel_err(max_moment(m, n, v0, 1.0, 1.0), viaq) < 1e-8);
            }
        }
    }
}

TEST_CASE("downward-start even mean peaks at two pairs of reversals") {
    CHECK(rel_err(max_moment(1, 2, Direction::Down, 1.0, 1.0), 1.0 / 6.0) < 1e-12);
    CHECK(rel_err(max_moment(1, 4, Direction::Down, 1.0, 1.0), 0.175) < 1e-12);
    CHECK(rel_err(max_moment(1, 6, Direction::Down, 1.0, 1.0), 20.0 / 64.0 - 1.0 / 7.0) < 1e-12);
    double best = 0.0;
    int argmax = 0;
    for (int k = 1; k <= 10; ++k) {
        const double value = max_moment(1, 2 * k, Direction::Down, 1.0, 1.0);
        if (value > best) {
            best = value;
            argmax = k;
        }
    }
    CHECK(argmax == 2);
}

TEST_CASE("order statistic increment density") {
    CHECK(order_stat_increment_density(0.4, 1, 1, 1.0) == doctest::Approx(1.0));
    CHECK(order_stat_increment_density(0.5, 3, 1, 1.0) == doctest::Approx(0.75));
    CHECK(order_stat_increment_density(-0.1, 3, 1, 1.0) == 0.0);
    CHECK(order_stat_increment_density(1.1, 3, 1, 1.0) == 0.0);
    CHECK_THROWS(order_stat_increment_density(0.5, 3, 4, 1.0));
    // normalization for all gaps up to n = 10
    for (int n = 1; n <= 10; ++n) {
        for (int gap = 1; gap <= n; ++gap) {
            const double mass =
                quad([&](double w) { return order_stat_increment_density(w, n, gap, 2.0); }, 0.0,
                     2.0, 1e-11)
                    .value;
            CHECK(std::abs(mass - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("arrival pair density integrates to one over the wedge") {
    // n = 3, (T_1, T_2): inner integral over u < v done by nested quadrature
    const double t = 2.0;
    const double mass =
        quad(
            [&](double v) {
                return quad([&](double u) { return arrival_pair_density(u, v, 3, 1, 2, t); },
                            0.0, v, 1e-12)
                    .value;
            },
            0.0, t, 1e-9)
            .value;
    CHECK(std::abs(mass - 1.0) < 1e-7);
    CHECK(arrival_pair_density(1.5, 0.5, 3, 1, 2, t) == 0.0);  // requires u < v
}

TEST_CASE("laws stay finite for reversal counts in the thousands") {
    // the coefficient (2k+1)!/k!^2 alone overflows doubles near k = 85; the
    // log-space assembly must carry k = 1e4
    const int n = 20001;  // k = 10000
    const double spike = 1.0 / std::sqrt(10000.0);  // mass concentrates at ~ct/sqrt(k)
    for (Direction v0 : {Direction::Up, Direction::Down}) {
        const double d = max_density(0.5 * spike, n, v0, 1.0, 1.0);
        CHECK(std::isfinite(d));
        CHECK(d > 0.0);
        // far outside the spike the density underflows to an exact zero
        CHECK(max_density(0.9, n, v0, 1.0, 1.0) == 0.0);
        const double mass =
            quad([&](double b) { return max_density(b, n, v0, 1.0, 1.0); }, 0.0, 1.0, 1e-9)
                .value;
        double atoms = 0.0;
        for (const auto& a : max_atom(n, v0, 1.0, 1.0)) atoms += a.mass;
        CHECK(std::abs(mass + atoms - 1.0) < 1e-6);
    }
    // E[max | +c, 2k+1] = C(2k+1,k) ct / 2^{2k+1} ~ ct / sqrt(pi k)
    CHECK(std::isfinite(max_moment(1, n, Direction::Up, 1.0, 1.0)));
    CHECK(max_moment(1, n, Direction::Up, 1.0, 1.0) ==
          doctest::Approx(1.0 / std::sqrt(3.14159265358979 * 10000.0)).epsilon(1e-3));
}

TEST_CASE("randomized law properties") {
    // random (c, t, n, beta): nonnegative densities, monotone cdfs in [0, 1],
    // and the weighted-sum identity off any fixed grid
    Rng rng(0xBEEF);
    for (int trial = 0; trial < 400; ++trial) {
        const double c = 0.2 + 3.0 * rng.uniform();
        const double t = 0.2 + 3.0 * rng.uniform();
        const int n = 1 + static_cast<int>(rng.uniform() * 40.0);
        const int k = n / 2;
        const double b = c * t * rng.uniform_open();
        const Direction v0 = rng.uniform() < 0.5 ? Direction::Up : Direction::Down;

        const double d = max_density(b, n, v0, c, t);
        CHECK(d >= 0.0);
        CHECK(std::isfinite(d));

        const double f1 = max_cdf(b, n, v0, c, t);
        const double f2 = max_cdf(std::min(b * 1.07, c * t), n, v0, c, t);
        CHECK(f1 >= 0.0);
        CHECK(f2 <= 1.0);
        CHECK(f2 >= f1 - 1e-14);

        const double lhs = max_density(b, 2 * k + 1, Direction::Down, c, t);
        const double rhs =
            (2.0 * k + 1.0) / (2.0 * k + 2.0) * max_density(b, 2 * k, Direction::Down, c, t) +
            1.0 / (2.0 * k + 2.0) * max_density(b, 2 * k + 1, Direction::Up, c, t);
        if (lhs != 0.0 || rhs != 0.0) CHECK(rel_err(lhs, rhs) < 1e-12);

        const double pd = position_density(2.0 * b - c * t, n, v0, c, t);
        CHECK(pd >= 0.0);
        const double pf = position_cdf(2.0 * b - c * t, n, v0, c, t);
        CHECK(pf >= 0.0);
        CHECK(pf <= 1.0);
    }
}

TEST_CASE("beta cdf with integer parameters") {
    CHECK(beta_cdf_integer(0.0, 2, 3) == 0.0);
    CHECK(beta_cdf_integer(1.0, 2, 3) == 1.0);
    // Beta(1,1) is uniform
    CHECK(beta_cdf_integer(0.37, 1, 1) == doctest::Approx(0.37));
    // symmetric case at the midpoint
    CHECK(beta_cdf_integer(0.5, 3, 3) == doctest::Approx(0.5));
}
