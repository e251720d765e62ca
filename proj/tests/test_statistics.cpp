#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "telemax/rng.hpp"
#include "telemax/statistics.hpp"

using namespace telemax;

TEST_CASE("ks degenerate cases") {
    CHECK(ks_statistic({0.5}, [](double x) { return x; }) == doctest::Approx(0.5));
    CHECK(ks_statistic({0.1, 0.2, 0.9}, [](double) { return 0.0; }) == doctest::Approx(1.0));
    CHECK_THROWS(ks_statistic({}, [](double x) { return x; }));
}

TEST_CASE("ks critical value asymptotics") {
    // sqrt(-ln(0.005)/2) = 1.6276...
    CHECK(ks_critical_value(0.01, 1) == doctest::Approx(1.6276).epsilon(1e-3));
    CHECK(ks_critical_value(0.01, 100000) == doctest::Approx(1.6276 / std::sqrt(1e5)).epsilon(1e-3));
    CHECK(ks_critical_value(0.05, 10000) == doctest::Approx(1.3581 / 100.0).epsilon(1e-3));
}

TEST_CASE("samples drawn from the model pass their own KS test") {
    Rng rng(12345);
    std::vector<double> samples(100000);
    for (auto& s : samples) s = rng.uniform();
    std::sort(samples.begin(), samples.end());
    const double d = ks_statistic(samples, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(d < ks_critical_value(0.01, samples.size()));
}

TEST_CASE("gamma_p against erf and exponential identities") {
    // P(1/2, x) = erf(sqrt(x));  P(1, x) = 1 - e^{-x}
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        CHECK(gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-12));
        CHECK(gamma_p(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
    }
    CHECK(gamma_p(3.0, 0.0) == 0.0);
}

TEST_CASE("chi-square critical values match reference quantiles") {
    // Classical table entries at alpha = 0.01.
    CHECK(chi_square_critical_value(0.01, 1) == doctest::Approx(6.6349).epsilon(1e-4));
    CHECK(chi_square_critical_value(0.01, 10) == doctest::Approx(23.2093).epsilon(1e-4));
    CHECK(chi_square_critical_value(0.01, 99) == doctest::Approx(134.642).epsilon(1e-4));
}

TEST_CASE("chi-square statistic") {
    CHECK(chi_square_statistic({10, 10}, {10, 10}) == 0.0);
    CHECK(chi_square_statistic({12, 8}, {10, 10}) == doctest::Approx(0.8));
}

TEST_CASE("half-normal cdf") {
    CHECK(half_normal_cdf(-1.0, 1.0) == 0.0);
    CHECK(half_normal_cdf(0.0, 1.0) == 0.0);
    CHECK(half_normal_cdf(1.0, 1.0) == doctest::Approx(std::erf(1.0 / std::sqrt(2.0))));
    CHECK(half_normal_cdf(1.0, 4.0) == doctest::Approx(std::erf(0.5 / std::sqrt(2.0))));
}

TEST_CASE("tabulated cdf reproduces a closed form with atoms") {
    TabulatedCdf cdf([](double) { return 0.5; }, 0.0, 1.0, 64, {{0.0, 0.5}});
    CHECK(cdf.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cdf(-0.1) == 0.0);
    CHECK(cdf(0.0) == 0.0);                       // strict convention: atom excluded at its location
    CHECK(cdf(0.5) == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(cdf(2.0) == doctest::Approx(1.0).epsilon(1e-10));
}
