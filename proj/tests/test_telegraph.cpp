#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "telemax/conditional_laws.hpp"
#include "telemax/statistics.hpp"
#include "telemax/telegraph.hpp"

using namespace telemax;

TEST_CASE("parameter validation") {
    CHECK_THROWS(ProcessParams(0.0, 1.0));
    CHECK_THROWS(ProcessParams(1.0, -2.0));
    CHECK_THROWS(ProcessParams(std::nan(""), 1.0));
    CHECK_THROWS(SamplePath(Direction::Up, 1.0, 1.0, {0.5, 0.4}));
    CHECK_THROWS(SamplePath(Direction::Up, 1.0, 1.0, {1.5}));
}

TEST_CASE("position walks the piecewise-linear trajectory exactly") {
    const SamplePath path(Direction::Up, 1.0, 1.0, {0.3, 0.5});
    CHECK(path.position(0.0) == 0.0);
    CHECK(path.position(0.4) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(path.position(1.0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(path.position(0.3) == doctest::Approx(0.3).epsilon(1e-15));  // continuous at a reversal
    CHECK_THROWS(path.position(1.5));
    CHECK_THROWS(path.position(-0.1));
}

TEST_CASE("running max sits on the vertex set") {
    CHECK(SamplePath(Direction::Up, 1.0, 1.0, {0.3, 0.5}).running_max() ==
          doctest::Approx(0.6).epsilon(1e-15));
    // a downward start that never crosses back above zero peaks at the origin
    CHECK(SamplePath(Direction::Down, 1.0, 1.0, {0.8}).running_max() == 0.0);
    // no reversals: deterministic linear flight
    CHECK(SamplePath(Direction::Up, 2.0, 3.0, {}).running_max() == doctest::Approx(6.0));
}

TEST_CASE("plus time bookkeeping") {
    CHECK(SamplePath(Direction::Up, 1.0, 1.0, {0.3, 0.5}).plus_time() ==
          doctest::Approx(0.8).epsilon(1e-15));
    CHECK(SamplePath(Direction::Down, 1.0, 2.0, {}).plus_time() == doctest::Approx(2.0));
}

TEST_CASE("plus-time identity: position(t) = v0 c (2 T+ - t) on random paths") {
    Rng rng(777);
    const ProcessParams params(1.3, 0.8);
    const double t = 2.5;
    for (int i = 0; i < 10000; ++i) {
        const Direction v0 = i % 2 == 0 ? Direction::Up : Direction::Down;
        const SamplePath path = sample_path(params, t, v0, rng);
        const double lhs = path.position(t);
        const double rhs = direction_sign(v0) * params.c * (2.0 * path.plus_time() - t);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * t);
        CHECK(std::abs(lhs) <= params.c * t * (1.0 + 1e-12));
        CHECK(path.running_max() >= lhs - 1e-15);
        CHECK(path.running_max() >= 0.0);
    }
}

TEST_CASE("fixed seed reproduces the same path; different streams differ") {
    const ProcessParams params(2.0, 1.0);
    Rng a(42), b(42), c(42, 1);
    const SamplePath pa = sample_path(params, 3.0, Direction::Up, a);
    const SamplePath pb = sample_path(params, 3.0, Direction::Up, b);
    CHECK(pa.events() == pb.events());
    const SamplePath pc = sample_path(params, 3.0, Direction::Up, c);
    CHECK(pa.events() != pc.events());
}

TEST_CASE("event count statistics match the Poisson law") {
    // Nearly-empty regime: P{N = 0} = e^{-lambda t}
    {
        Rng rng(1001);
        const ProcessParams params(1.0, 1.0);
        const double t = 1e-4;
        const int n = 1000000;
        int zero = 0;
        for (int i = 0; i < n; ++i)
            if (sample_path(params, t, Direction::Up, rng).event_count() == 0) ++zero;
        const double p = std::exp(-1e-4);
        const double sigma = std::sqrt(p * (1.0 - p) / n);
        CHECK(std::abs(static_cast<double>(zero) / n - p) < 3.0 * sigma);
    }
    // Unit regime: E[N] = lambda t = 1 within 0.004 over 1e6 paths
    {
        Rng rng(1002);
        const ProcessParams params(1.0, 1.0);
        const int n = 1000000;
        long long total = 0;
        for (int i = 0; i < n; ++i)
            total += sample_path(params, 1.0, Direction::Up, rng).event_count();
        CHECK(std::abs(static_cast<double>(total) / n - 1.0) < 0.004);
    }
}

TEST_CASE("conditional sampler basics") {
    Rng rng(55);
    CHECK(sample_path_conditional(0, 1.0, 1.0, Direction::Up, rng).events().empty());
    const SamplePath path = sample_path_conditional(5, 1.0, 2.0, Direction::Down, rng);
    CHECK(path.event_count() == 5);
    CHECK(std::is_sorted(path.events().begin(), path.events().end()));

    // single uniform event on (0,1): mean 1/2 within 0.003 over 1e6 draws
    double total = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i)
        total += sample_path_conditional(1, 1.0, 1.0, Direction::Up, rng).events()[0];
    CHECK(std::abs(total / n - 0.5) < 0.003);
}

TEST_CASE("k-th conditional event follows the order-statistic law") {
    // n = 5, t = 2: T_(k) ~ t * Beta(k, n-k+1)
    Rng rng(2024);
    const int n = 5, samples = 100000;
    const double t = 2.0;
    std::vector<std::vector<double>> events(n);
    for (int i = 0; i < samples; ++i) {
        const SamplePath path = sample_path_conditional(n, 1.0, t, Direction::Up, rng);
        for (int k = 0; k < n; ++k) events[k].push_back(path.events()[k]);
    }
    for (int k = 1; k <= n; ++k) {
        auto& data = events[k - 1];
        std::sort(data.begin(), data.end());
        const double d = ks_statistic(
            data, [&](double x) { return beta_cdf_integer(x / t, k, n - k + 1); });
        CHECK(d < ks_critical_value(0.01, data.size()));
    }
}

TEST_CASE("adjacent increments share one law independent of the slot") {
    // increment density (n/t)(1 - w/t)^{n-1} for every adjacent pair
    Rng rng(91);
    const double t = 1.0;
    for (int n : {2, 5, 10}) {
        std::vector<std::vector<double>> inc(n);
        for (int i = 0; i < 100000; ++i) {
            const SamplePath path = sample_path_conditional(n, 1.0, t, Direction::Up, rng);
            double prev = 0.0;
            for (int k = 0; k < n; ++k) {
                inc[k].push_back(path.events()[k] - prev);
                prev = path.events()[k];
            }
        }
        for (int k = 0; k < n; ++k) {
            std::sort(inc[k].begin(), inc[k].end());
            const double d = ks_statistic(inc[k], [&](double w) {
                return 1.0 - std::pow(1.0 - w / t, n);
            });
            CHECK(d < ks_critical_value(0.01, inc[k].size()));
        }
    }
}

TEST_CASE("plus time is distributed as the (n/2+1)-th order statistic") {
    Rng rng(3771);
    const double t = 1.5;
    for (int n : {3, 4}) {
        std::vector<double> values;
        for (int i = 0; i < 100000; ++i)
            values.push_back(
                sample_path_conditional(n, 1.0, t, Direction::Up, rng).plus_time());
        std::sort(values.begin(), values.end());
        const int order = n / 2 + 1;
        const double d = ks_statistic(values, [&](double z) {
            return beta_cdf_integer(z / t, order, n - order + 1);
        });
        CHECK(d < ks_critical_value(0.01, values.size()));
    }
}
