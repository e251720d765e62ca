#include "telemax/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>

#include "telemax/special_functions.hpp"

namespace telemax {

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

// ---------------------------------------------------------------------------
// Monte Carlo verification
// ---------------------------------------------------------------------------

struct WorkerTally {
    std::vector<double> continuous;
    std::int64_t kept = 0;
    std::int64_t at_zero = 0;    // running max exactly 0 (downward start, never positive)
    std::int64_t at_top = 0;     // value == +ct (zero-event path)
    std::int64_t at_bottom = 0;  // value == -ct (zero-event path, position only)
    double sum1 = 0.0;
    double sum2 = 0.0;
};

void tally_value(WorkerTally& tally, double value, bool is_atom_zero, bool is_atom_top,
                 bool is_atom_bottom) {
    ++tally.kept;
    tally.sum1 += value;
    tally.sum2 += value * value;
    if (is_atom_zero)
        ++tally.at_zero;
    else if (is_atom_top)
        ++tally.at_top;
    else if (is_atom_bottom)
        ++tally.at_bottom;
    else
        tally.continuous.push_back(value);
}

void simulate_worker(const LawSelector& regime, const ProcessParams& params, double t,
                     std::int64_t count, std::uint64_t seed, std::uint64_t stream,
                     WorkerTally& tally) {
    Rng rng(seed, stream);
    const bool want_max = regime.quantity == Quantity::RunningMax;
    const bool symmetric_start = regime.quantity == Quantity::Position && !regime.exact_count &&
                                 !regime.parity;
    for (std::int64_t i = 0; i < count; ++i) {
        Direction v0 = regime.v0;
        if (symmetric_start) v0 = rng.uniform() < 0.5 ? Direction::Up : Direction::Down;
        SamplePath path = regime.exact_count
                              ? sample_path_conditional(*regime.exact_count, params.c, t, v0, rng)
                              : sample_path(params, t, v0, rng);
        if (regime.parity) {
            const bool even = path.event_count() % 2 == 0;
            if ((*regime.parity == EventParity::Even) != even) continue;
        }
        if (want_max) {
            const double m = path.running_max();
            // Exact comparisons are safe: a strictly positive vertex is bounded
            // away from 0 by event-time arithmetic, and max == ct happens only
            // on zero-event upward paths.
            const bool zero = v0 == Direction::Down && m <= 0.0;
            const bool top = v0 == Direction::Up && path.event_count() == 0;
            tally_value(tally, zero ? 0.0 : m, zero, top, false);
        } else {
            const double x = path.position(t);
            const bool no_events = path.event_count() == 0;
            const bool top = no_events && v0 == Direction::Up;
            const bool bottom = no_events && v0 == Direction::Down;
            tally_value(tally, x, false, top, bottom);
        }
    }
}

struct ReferenceLaw {
    std::function<double(double)> continuous_cdf;  // conditional on missing every atom
    std::vector<Atom> atoms;                       // expected atom masses, law scale
    double atom_normalizer = 1.0;                  // P(conditioning event), for parity regimes
    std::function<double(int)> moment;             // full-law m-th moment
};

double quad_moment(const std::function<double(double)>& density, double lo, double hi, int m) {
    return quad([&](double x) { return std::pow(x, m) * density(x); }, lo, hi, 1e-10).value;
}

ReferenceLaw build_reference(const LawSelector& regime, const ProcessParams& params, double t) {
    ReferenceLaw ref;
    const double c = params.c;
    const double ct = c * t;
    if (regime.quantity == Quantity::RunningMax) {
        if (regime.exact_count) {
            const int n = *regime.exact_count;
            const Direction v0 = regime.v0;
            const AtomList atoms = max_atom(n, v0, c, t);
            ref.atoms = atoms;
            double atom_total = 0.0;
            for (const auto& a : atoms) atom_total += a.mass;
            // max_cdf already counts the atom at 0 for beta > 0; remove it and
            // renormalize to the continuous part.
            const double cont_mass = 1.0 - atom_total;
            ref.continuous_cdf = [=](double b) {
                if (cont_mass <= 0.0) return 1.0;
                double a_below = 0.0;
                for (const auto& a : atoms)
                    if (b > a.location) a_below += a.mass;
                return std::clamp((max_cdf(b, n, v0, c, t) - a_below) / cont_mass, 0.0, 1.0);
            };
            ref.moment = [=](int m) { return max_moment(m, n, v0, c, t); };
            return ref;
        }
        if (regime.parity) {
            const EventParity parity = *regime.parity;
            const Direction v0 = regime.v0;
            ref.atoms = max_parity_atoms(v0, parity, params, t);
            ref.atom_normalizer = parity_probability(parity, params.lambda * t);
            auto density = [=](double b) {
                return max_parity_density(b, v0, parity, params, t);
            };
            double atom_total = 0.0;
            for (const auto& a : ref.atoms) atom_total += a.mass;
            auto table = std::make_shared<TabulatedCdf>(density, 0.0, ct, 2048);
            const double cont_mass = ref.atom_normalizer - atom_total;
            ref.continuous_cdf = [=](double b) {
                return std::clamp((*table)(b) / cont_mass, 0.0, 1.0);
            };
            const double norm = ref.atom_normalizer;
            ref.moment = [=, atoms = ref.atoms](int m) {
                double v = quad_moment(density, 0.0, ct, m);
                for (const auto& a : atoms) v += std::pow(a.location, m) * a.mass;
                return v / norm;
            };
            return ref;
        }
        const Direction v0 = regime.v0;
        auto density = [=](double b) { return max_law(b, v0, params, t).density; };
        ref.atoms = max_law(0.5 * ct, v0, params, t).atoms;
        double atom_total = 0.0;
        for (const auto& a : ref.atoms) atom_total += a.mass;
        auto table = std::make_shared<TabulatedCdf>(density, 0.0, ct, 2048);
        const double cont_mass = 1.0 - atom_total;
        ref.continuous_cdf = [=](double b) {
            return std::clamp((*table)(b) / cont_mass, 0.0, 1.0);
        };
        ref.moment = [=, atoms = ref.atoms](int m) {
            if (v0 == Direction::Up) return max_moment_unconditional(m, v0, params, t);
            double v = quad_moment(density, 0.0, ct, m);
            for (const auto& a : atoms) v += std::pow(a.location, m) * a.mass;
            return v;
        };
        return ref;
    }
    // Position regimes.
    if (regime.parity)
        throw std::invalid_argument(
            "mc_verify: no closed-form position law conditioned on parity alone");
    if (regime.exact_count) {
        const int n = *regime.exact_count;
        const Direction v0 = regime.v0;
        if (n == 0) {
            ref.atoms = {{direction_sign(v0) * ct, 1.0}};
            ref.continuous_cdf = [](double) { return 1.0; };
            ref.moment = [=](int m) { return std::pow(direction_sign(v0) * ct, m); };
            return ref;
        }
        ref.continuous_cdf = [=](double x) { return position_cdf(x, n, v0, c, t); };
        auto density = [=](double x) { return position_density(x, n, v0, c, t); };
        ref.moment = [=](int m) { return quad_moment(density, -ct, ct, m); };
        return ref;
    }
    const double atom_mass = 0.5 * std::exp(-params.lambda * t);
    ref.atoms = {{-ct, atom_mass}, {ct, atom_mass}};
    auto density = [=](double x) { return position_law(x, params, t).density; };
    auto table = std::make_shared<TabulatedCdf>(density, -ct, ct, 2048);
    const double cont_mass = 1.0 - 2.0 * atom_mass;
    ref.continuous_cdf = [=](double x) {
        return std::clamp((*table)(x) / cont_mass, 0.0, 1.0);
    };
    ref.moment = [=, atoms = ref.atoms](int m) {
        double v = quad_moment(density, -ct, ct, m);
        for (const auto& a : atoms) v += std::pow(a.location, m) * a.mass;
        return v;
    };
    return ref;
}

}  // namespace

MCSummary mc_verify(const LawSelector& regime, const ProcessParams& params, double t,
                    std::int64_t n_samples, std::uint64_t seed, int workers) {
    if (n_samples < 1000)
        throw std::invalid_argument("mc_verify: need at least 1000 samples");
    if (workers < 1) throw std::invalid_argument("mc_verify: workers must be >= 1");
    if (regime.exact_count && regime.parity)
        throw std::invalid_argument("mc_verify: exact count and parity are exclusive");
    if (regime.quantity == Quantity::Position && regime.parity)
        throw std::invalid_argument(
            "mc_verify: no closed-form position law conditioned on parity alone");

    std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
    {
        std::vector<std::thread> pool;
        const std::int64_t base = n_samples / workers;
        const std::int64_t extra = n_samples % workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t count = base + (w < extra ? 1 : 0);
            pool.emplace_back(simulate_worker, std::cref(regime), std::cref(params), t, count,
                              seed, static_cast<std::uint64_t>(w), std::ref(tallies[w]));
        }
        for (auto& th : pool) th.join();
    }

    MCSummary summary;
    summary.regime = regime;
    summary.n_samples = n_samples;
    summary.seed = seed;
    summary.workers = workers;

    std::vector<double> values;
    std::int64_t kept = 0, at_zero = 0, at_top = 0, at_bottom = 0;
    double sum1 = 0.0, sum2 = 0.0;
    for (const auto& tally : tallies) {  // merged in worker order
        values.insert(values.end(), tally.continuous.begin(), tally.continuous.end());
        kept += tally.kept;
        at_zero += tally.at_zero;
        at_top += tally.at_top;
        at_bottom += tally.at_bottom;
        sum1 += tally.sum1;
        sum2 += tally.sum2;
    }
    std::sort(values.begin(), values.end());
    summary.n_continuous = static_cast<std::int64_t>(values.size());

    const ReferenceLaw ref = build_reference(regime, params, t);
    if (!values.empty()) summary.ks = ks_statistic(values, ref.continuous_cdf);

    for (const auto& atom : ref.atoms) {
        std::int64_t hits = 0;
        if (atom.location == 0.0)
            hits = at_zero;
        else if (atom.location > 0.0)
            hits = at_top;
        else
            hits = at_bottom;
        const double expected = atom.mass / ref.atom_normalizer;
        const double freq = kept > 0 ? static_cast<double>(hits) / kept : 0.0;
        const double se = std::sqrt(std::max(expected * (1.0 - expected), 1e-300) / kept);
        summary.atom_freqs.push_back({atom.location, freq, expected, (freq - expected) / se});
    }

    for (int m = 1; m <= 2; ++m) {
        const double emp = (m == 1 ? sum1 : sum2) / kept;
        summary.moments.push_back({m, emp, ref.moment(m)});
    }

    if (!values.empty()) {
        const std::size_t n = values.size();
        for (int i = 0; i <= 100; ++i) {
            const std::size_t idx = std::min(n - 1, i * (n - 1) / 100);
            summary.ecdf.emplace_back(values[idx],
                                      static_cast<double>(idx + 1) / static_cast<double>(n));
        }
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Recurrence identity
// ---------------------------------------------------------------------------

double recurrence_residual(int n, double beta, double c, double t, double quad_tol) {
    if (n < 2) throw std::invalid_argument("recurrence_residual: n must be >= 2");
    if (!(c > 0.0) || !(t > 0.0))
        throw std::invalid_argument("recurrence_residual: c and t must be > 0");
    const double ct = c * t;
    if (!(beta > 0.0) || !(beta < ct))
        throw std::invalid_argument("recurrence_residual: beta must lie in (0, ct)");

    auto pair_density = [&](double t1, double t2) {
        return arrival_pair_density(t1, t2, n, 1, 2, t);
    };
    const double reach_limit = (ct + beta) / (2.0 * c);  // last t2 from which beta is reachable
    const double offset = (ct - beta) / (2.0 * c);

    // Case 3: the first leg peaks exactly at beta and the second reversal is
    // so late the particle can never return.
    const QuadratureResult term3 = quad(
        [&](double t2) { return pair_density(beta / c, t2) / c; }, reach_limit, t, quad_tol);

    double term1 = 0.0, term2 = 0.0;
    if (n == 2) {
        // The residual piece has no reversals, so the overall maximum hits
        // beta only along the line t2 = t1 + offset; the double integral of
        // case 1 collapses onto it with weight 1/(2c). Case 2 needs the
        // residual to stay below beta, which a straight ray cannot.
        term1 = quad([&](double t1) { return pair_density(t1, t1 + offset) / (2.0 * c); }, 0.0,
                     beta / c, quad_tol)
                    .value;
    } else {
        term1 = quad(
                    [&](double t1) {
                        return quad(
                                   [&](double t2) {
                                       const double shifted = beta - 2.0 * c * t1 + c * t2;
                                       return max_density(shifted, n - 2, Direction::Up, c,
                                                          t - t2) *
                                              pair_density(t1, t2);
                                   },
                                   t1, t1 + offset, quad_tol)
                            .value;
                    },
                    0.0, beta / c, quad_tol * 10.0)
                    .value;
        term2 = quad(
                    [&](double t2) {
                        return max_cdf(c * t2 - beta, n - 2, Direction::Up, c, t - t2) *
                               pair_density(beta / c, t2) / c;
                    },
                    beta / c, reach_limit, quad_tol)
                    .value;
    }
    const double rhs = term1 + term2 + term3.value;
    return std::abs(rhs - max_density(beta, n, Direction::Up, c, t));
}

// ---------------------------------------------------------------------------
// Diffusive limit
// ---------------------------------------------------------------------------

std::vector<KacRow> kac_check(const std::vector<double>& c_values, double t, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("kac_check: grid_size must be >= 2");
    std::vector<KacRow> rows;
    for (double c : c_values) {
        const ProcessParams params(c * c, c);
        const double ct = c * t;
        const double range = std::min(ct, 8.0 * std::sqrt(t));
        KacRow row{c, 0.0, 0.0};
        for (Direction v0 : {Direction::Up, Direction::Down}) {
            auto density = [&](double b) { return max_law(b, v0, params, t).density; };
            const AtomList atoms = max_law(0.5 * ct, v0, params, t).atoms;
            std::vector<std::pair<double, double>> atom_pairs;
            for (const auto& a : atoms) atom_pairs.emplace_back(a.location, a.mass);
            const TabulatedCdf cdf(density, 0.0, range, grid_size, atom_pairs);
            double worst = 0.0;
            for (int i = 0; i <= grid_size; ++i) {
                const double b = range * i / grid_size;
                const double model = cdf(b);
                worst = std::max(worst, std::abs(model - half_normal_cdf(b, t)));
            }
            (v0 == Direction::Up ? row.distance_up : row.distance_down) = worst;
        }
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Check suites
// ---------------------------------------------------------------------------

namespace {

CheckResult make_check(std::string name, double observed, double tolerance) {
    const bool pass = observed <= tolerance;
    return {std::move(name), observed, tolerance, pass};
}

struct ParamSet {
    double lambda, c, t;
};

const std::vector<ParamSet>& verification_params() {
    static const std::vector<ParamSet> sets = {{1.0, 1.0, 1.0}, {2.0, 0.5, 3.0}, {0.7, 2.0, 1.5}};
    return sets;
}

std::vector<double> interior_grid(double lo, double hi, int count) {
    std::vector<double> pts;
    for (int i = 1; i <= count; ++i)
        pts.push_back(lo + (hi - lo) * i / (count + 1.0));
    return pts;
}

// Poisson(mean) pmf values until the tail mass drops below ~1e-18.
std::vector<double> poisson_weights(double mean) {
    std::vector<double> w;
    double p = std::exp(-mean);
    double cumulative = p;
    w.push_back(p);
    for (int n = 1; n < 400; ++n) {
        p *= mean / n;
        w.push_back(p);
        cumulative += p;
        if (n > mean && 1.0 - cumulative < 1e-18) break;
    }
    return w;
}

}  // namespace

std::vector<CheckResult> run_normalization_suite() {
    std::vector<CheckResult> checks;
    char name[128];
    for (const auto& ps : verification_params()) {
        const double c = ps.c, t = ps.t, ct = c * t;
        for (Direction v0 : {Direction::Up, Direction::Down}) {
            double worst_max = 0.0, worst_pos = 0.0;
            for (int n = 0; n <= 60; ++n) {
                double total = 0.0;
                if (!(v0 == Direction::Up && n == 0))
                    total += quad([&](double b) { return max_density(b, n, v0, c, t); }, 0.0,
                                  ct, 1e-11)
                                 .value;
                for (const auto& a : max_atom(n, v0, c, t)) total += a.mass;
                worst_max = std::max(worst_max, std::abs(total - 1.0));
                if (n >= 1) {
                    const double mass =
                        quad([&](double x) { return position_density(x, n, v0, c, t); }, -ct,
                             ct, 1e-11)
                            .value;
                    worst_pos = std::max(worst_pos, std::abs(mass - 1.0));
                }
            }
            std::snprintf(name, sizeof(name), "normalization/max/v0=%s/c=%g,t=%g",
                          v0 == Direction::Up ? "plus" : "minus", c, t);
            checks.push_back(make_check(name, worst_max, 1e-8));
            std::snprintf(name, sizeof(name), "normalization/position/v0=%s/c=%g,t=%g",
                          v0 == Direction::Up ? "plus" : "minus", c, t);
            checks.push_back(make_check(name, worst_pos, 1e-8));
        }
        // Unconditional and parity-restricted laws.
        const ProcessParams params(ps.lambda, ps.c);
        double total_pos =
            quad([&](double x) { return position_law(x, params, t).density; }, -ct, ct, 1e-11)
                .value;
        for (const auto& a : position_law(0.0, params, t).atoms) total_pos += a.mass;
        std::snprintf(name, sizeof(name), "normalization/position/unconditional/lt=%g",
                      ps.lambda * t);
        checks.push_back(make_check(name, std::abs(total_pos - 1.0), 1e-8));
        for (Direction v0 : {Direction::Up, Direction::Down}) {
            double total =
                quad([&](double b) { return max_law(b, v0, params, t).density; }, 0.0, ct, 1e-11)
                    .value;
            for (const auto& a : max_law(0.5 * ct, v0, params, t).atoms) total += a.mass;
            std::snprintf(name, sizeof(name), "normalization/max/unconditional/v0=%s/lt=%g",
                          v0 == Direction::Up ? "plus" : "minus", ps.lambda * t);
            checks.push_back(make_check(name, std::abs(total - 1.0), 1e-8));
            double worst_parity = 0.0;
            for (EventParity parity : {EventParity::Even, EventParity::Odd}) {
                double mass = quad([&](double b) {
                                  return max_parity_density(b, v0, parity, params, t);
                              },
                                  0.0, ct, 1e-11)
                                  .value;
                for (const auto& a : max_parity_atoms(v0, parity, params, t)) mass += a.mass;
                worst_parity = std::max(
                    worst_parity,
                    std::abs(mass - parity_probability(parity, ps.lambda * t)));
            }
            std::snprintf(name, sizeof(name), "normalization/max/parity/v0=%s/lt=%g",
                          v0 == Direction::Up ? "plus" : "minus", ps.lambda * t);
            checks.push_back(make_check(name, worst_parity, 1e-8));
        }
    }
    return checks;
}

std::vector<CheckResult> run_identity_suite() {
    std::vector<CheckResult> checks;
    const std::vector<std::pair<double, double>> scales = {{1.0, 1.0}, {1.3, 0.7}};

    // Even/odd equality and the weighted-sum identity (densities and atoms).
    for (const auto& [c, t] : scales) {
        const double ct = c * t;
        const auto grid = interior_grid(0.0, ct, 17);
        double worst_even_odd = 0.0, worst_weighted = 0.0, worst_cdf_dec = 0.0;
        for (int k = 0; k <= 40; ++k) {
            for (double b : grid) {
                worst_even_odd =
                    std::max(worst_even_odd, rel_diff(max_density(b, 2 * k + 2, Direction::Up, c, t),
                                                      max_density(b, 2 * k + 1, Direction::Up, c, t)));
                const double lhs = max_density(b, 2 * k + 1, Direction::Down, c, t);
                const double rhs =
                    (2.0 * k + 1.0) / (2.0 * k + 2.0) * max_density(b, 2 * k, Direction::Down, c, t) +
                    1.0 / (2.0 * k + 2.0) * max_density(b, 2 * k + 1, Direction::Up, c, t);
                if (lhs != 0.0 || rhs != 0.0)
                    worst_weighted = std::max(worst_weighted, rel_diff(lhs, rhs));
                if (k >= 1) {
                    const double v = ((ct - b) / ct) * ((ct + b) / ct);
                    const double tail =
                        std::exp(log_binomial(2 * k, k) + k * std::log(0.25 * v));
                    worst_cdf_dec = std::max(
                        worst_cdf_dec,
                        rel_diff(max_cdf(b, 2 * k, Direction::Down, c, t),
                                 max_cdf(b, 2 * k - 1, Direction::Up, c, t) + tail));
                }
            }
        }
        char name[128];
        std::snprintf(name, sizeof(name), "identity/even-odd-equality/c=%g,t=%g", c, t);
        checks.push_back(make_check(name, worst_even_odd, 1e-12));
        std::snprintf(name, sizeof(name), "identity/weighted-sum-density/c=%g,t=%g", c, t);
        checks.push_back(make_check(name, worst_weighted, 1e-12));
        std::snprintf(name, sizeof(name), "identity/cdf-decomposition/c=%g,t=%g", c, t);
        checks.push_back(make_check(name, worst_cdf_dec, 1e-12));
    }

    {
        double worst_atom = 0.0, worst_atom_shift = 0.0;
        for (int k = 0; k <= 40; ++k) {
            const double odd = max_atom(2 * k + 1, Direction::Down, 1.0, 1.0)[0].mass;
            const double even = max_atom(2 * k, Direction::Down, 1.0, 1.0)[0].mass;
            const double next_even = max_atom(2 * k + 2, Direction::Down, 1.0, 1.0)[0].mass;
            worst_atom = std::max(worst_atom,
                                  rel_diff(odd, (2.0 * k + 1.0) / (2.0 * k + 2.0) * even));
            worst_atom_shift = std::max(worst_atom_shift, rel_diff(odd, next_even));
        }
        checks.push_back(make_check("identity/weighted-sum-atom", worst_atom, 1e-12));
        checks.push_back(make_check("identity/atom-odd-equals-next-even", worst_atom_shift, 1e-12));
    }

    {
        // Stirling decay of the zero atom.
        const int k = 10000;
        const double atom = max_atom(2 * k, Direction::Down, 1.0, 1.0)[0].mass;
        checks.push_back(
            make_check("identity/atom-asymptotics-k=1e4", std::abs(atom * std::sqrt(kPi * k) - 1.0),
                       2e-3));
    }

    // Reflection principle: P{max > b} = 2 P{T(t) > b} for upward starts, odd n.
    {
        double worst = 0.0;
        const double c = 1.0, t = 1.0, ct = 1.0;
        for (int n : {1, 3, 5, 9, 15}) {
            for (double frac : {0.25, 0.5, 0.75}) {
                const double b = frac * ct;
                const double tail =
                    quad([&](double x) { return position_density(x, n, Direction::Up, c, t); },
                         b, ct, 1e-11)
                        .value;
                worst = std::max(
                    worst, std::abs(1.0 - max_cdf(b, n, Direction::Up, c, t) - 2.0 * tail));
            }
        }
        checks.push_back(make_check("identity/reflection-principle", worst, 1e-8));
    }

    // Centered finite difference of the CDF against the density.
    {
        double worst = 0.0;
        const double c = 1.0, t = 1.0, ct = 1.0;
        const double h = 1e-5;
        for (int n = 1; n <= 20; ++n) {
            for (Direction v0 : {Direction::Up, Direction::Down}) {
                for (double b : interior_grid(0.05 * ct, 0.8 * ct, 20)) {
                    const double fd =
                        (max_cdf(b + h, n, v0, c, t) - max_cdf(b - h, n, v0, c, t)) / (2.0 * h);
                    const double d = max_density(b, n, v0, c, t);
                    worst = std::max(worst, std::abs(fd - d) / std::max(d, 1e-300));
                }
            }
        }
        checks.push_back(make_check("identity/cdf-density-consistency", worst, 1e-6));
    }

    // Quadrature of every conditional density reproduces its CDF.
    {
        double worst = 0.0;
        const double c = 1.2, t = 0.9, ct = c * t;
        for (int n = 1; n <= 10; ++n) {
            for (Direction v0 : {Direction::Up, Direction::Down}) {
                double atoms = 0.0;
                for (const auto& a : max_atom(n, v0, c, t)) atoms += a.mass;
                for (double b : interior_grid(0.0, ct, 10)) {
                    const double mass =
                        quad([&](double x) { return max_density(x, n, v0, c, t); }, 0.0, b,
                             1e-10)
                            .value;
                    worst = std::max(worst,
                                     std::abs(mass + atoms - max_cdf(b, n, v0, c, t)));
                }
                for (double x : interior_grid(-ct, ct, 10)) {
                    const double mass =
                        quad([&](double u) { return position_density(u, n, v0, c, t); }, -ct, x,
                             1e-10)
                            .value;
                    worst = std::max(worst, std::abs(mass - position_cdf(x, n, v0, c, t)));
                }
            }
        }
        checks.push_back(make_check("identity/cdf-from-quadrature", worst, 1e-7));
    }

    // The time derivative of I0(eta) used by every Bessel-mixture law is
    // expanded analytically to (l c t / W) I1(eta); confirm against a centered
    // finite difference in t.
    {
        double worst = 0.0;
        const double h = 1e-6;
        for (const auto& ps : verification_params()) {
            for (double frac : {0.15, 0.45, 0.85}) {
                const double x = frac * ps.c * ps.t;
                auto i0_of_t = [&](double tt) {
                    const double w = std::sqrt((ps.c * tt - x) * (ps.c * tt + x));
                    return bessel_i(integer_order(0), ps.lambda / ps.c * w);
                };
                const double fd = (i0_of_t(ps.t + h) - i0_of_t(ps.t - h)) / (2.0 * h);
                const double w = std::sqrt((ps.c * ps.t - x) * (ps.c * ps.t + x));
                const double analytic = ps.lambda * ps.c * ps.t / w *
                                        bessel_i(integer_order(1), ps.lambda / ps.c * w);
                worst = std::max(worst, rel_diff(fd, analytic));
            }
        }
        checks.push_back(make_check("identity/bessel-time-derivative", worst, 1e-7));
    }

    // The power-integral closed form behind the CDF corollaries:
    // int_0^b (c^2t^2 - x^2)^k dx = b (2ct)^{2k} k!^2/(2k+1)! sum_j C(2j,j)(v/4)^j.
    {
        double worst = 0.0;
        const double c = 1.1, t = 1.3, ct = c * t;
        for (int k = 0; k <= 10; ++k) {
            for (double b : interior_grid(0.0, ct, 7)) {
                const double direct =
                    quad([&](double x) { return std::pow((ct - x) * (ct + x), k); }, 0.0, b,
                         1e-12)
                        .value;
                const double v = ((ct - b) / ct) * ((ct + b) / ct);
                double r = 1.0, sum = 1.0;
                for (int j = 1; j <= k; ++j) {
                    r *= v * (2.0 * j - 1.0) / (2.0 * j);
                    sum += r;
                }
                const double closed = b * sum *
                                      std::exp(2.0 * k * std::log(2.0 * ct) +
                                               2.0 * log_factorial(k) -
                                               log_factorial(2 * k + 1));
                worst = std::max(worst, rel_diff(direct, closed));
            }
        }
        checks.push_back(make_check("identity/power-integral-closed-form", worst, 1e-8));
    }

    // Unconditional-law identities on a (lambda t, beta) grid.
    {
        double worst_parity_sum = 0.0, worst_unreduced = 0.0, worst_odd_identity = 0.0;
        for (const auto& ps : verification_params()) {
            const ProcessParams params(ps.lambda, ps.c);
            const double t = ps.t, ct = ps.c * t;
            for (double b : interior_grid(0.0, ct, 13)) {
                for (Direction v0 : {Direction::Up, Direction::Down}) {
                    const double even =
                        max_parity_density(b, v0, EventParity::Even, params, t);
                    const double odd = max_parity_density(b, v0, EventParity::Odd, params, t);
                    worst_parity_sum = std::max(
                        worst_parity_sum, rel_diff(even + odd, max_law(b, v0, params, t).density));
                }
                const double down_odd =
                    max_parity_density(b, Direction::Down, EventParity::Odd, params, t);
                worst_unreduced = std::max(
                    worst_unreduced, rel_diff(down_odd, max_parity_density_unreduced(b, params, t)));
                const double up_odd =
                    max_parity_density(b, Direction::Up, EventParity::Odd, params, t);
                const double down_even =
                    max_parity_density(b, Direction::Down, EventParity::Even, params, t);
                const double via_others = ct / (ct + b) * up_odd -
                                          ps.c / (ps.lambda * (ct + b)) * down_even;
                worst_odd_identity = std::max(worst_odd_identity, rel_diff(down_odd, via_others));
            }
        }
        checks.push_back(make_check("identity/parity-decomposition", worst_parity_sum, 1e-12));
        checks.push_back(
            make_check("identity/bessel-recurrence-elimination", worst_unreduced, 1e-12));
        checks.push_back(make_check("identity/down-odd-via-up-odd-and-down-even",
                                    worst_odd_identity, 1e-12));
    }
    return checks;
}

std::vector<CheckResult> run_recurrence_suite() {
    std::vector<CheckResult> checks;
    char name[96];
    for (int n : {2, 3, 4, 5}) {
        for (double frac : {0.25, 0.5, 0.75}) {
            const double residual = recurrence_residual(n, frac, 1.0, 1.0);
            std::snprintf(name, sizeof(name), "recurrence/n=%d/beta=%.2f", n, frac);
            checks.push_back(make_check(name, residual, 1e-6));
        }
    }
    return checks;
}

std::vector<CheckResult> run_mixture_suite() {
    std::vector<CheckResult> checks;
    const std::vector<ParamSet> sets = {{0.5, 1.0, 1.0}, {1.0, 1.0, 1.0}, {2.5, 2.0, 1.0}};
    char name[128];
    for (const auto& ps : sets) {
        const ProcessParams params(ps.lambda, ps.c);
        const double t = ps.t, ct = ps.c * t;
        const auto weights = poisson_weights(ps.lambda * t);
        double worst = 0.0;
        for (double b : interior_grid(0.0, ct, 9)) {
            double mix_up_even = 0.0, mix_up_odd = 0.0, mix_down_even = 0.0,
                   mix_down_odd = 0.0, mix_pos = 0.0;
            for (std::size_t n = 1; n < weights.size(); ++n) {
                const int ni = static_cast<int>(n);
                const double up = weights[n] * max_density(b, ni, Direction::Up, ps.c, t);
                const double down = weights[n] * max_density(b, ni, Direction::Down, ps.c, t);
                if (n % 2 == 0) {
                    mix_up_even += up;
                    mix_down_even += down;
                } else {
                    mix_up_odd += up;
                    mix_down_odd += down;
                }
                mix_pos += weights[n] * 0.5 *
                           (position_density(b, ni, Direction::Up, ps.c, t) +
                            position_density(b, ni, Direction::Down, ps.c, t));
            }
            worst = std::max(
                worst, std::abs(mix_up_even - max_parity_density(b, Direction::Up,
                                                                 EventParity::Even, params, t)));
            worst = std::max(
                worst, std::abs(mix_up_odd - max_parity_density(b, Direction::Up,
                                                                EventParity::Odd, params, t)));
            worst = std::max(worst,
                             std::abs(mix_down_even -
                                      max_parity_density(b, Direction::Down, EventParity::Even,
                                                         params, t)));
            worst = std::max(worst,
                             std::abs(mix_down_odd -
                                      max_parity_density(b, Direction::Down, EventParity::Odd,
                                                         params, t)));
            worst = std::max(worst, std::abs(mix_up_even + mix_up_odd -
                                             max_law(b, Direction::Up, params, t).density));
            worst = std::max(worst, std::abs(mix_down_even + mix_down_odd -
                                             max_law(b, Direction::Down, params, t).density));
            worst = std::max(worst, std::abs(mix_pos - position_law(b, params, t).density));
        }
        std::snprintf(name, sizeof(name), "mixture/lt=%g", ps.lambda * t);
        checks.push_back(make_check(name, worst, 1e-10));
    }
    return checks;
}

std::vector<CheckResult> run_moment_suite() {
    std::vector<CheckResult> checks;
    char name[128];

    // Closed forms against quadrature of the densities plus atom contributions.
    for (const auto& [c, t] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.5, 2.0}}) {
        const double ct = c * t;
        for (Direction v0 : {Direction::Up, Direction::Down}) {
            double worst = 0.0;
            for (int n = 0; n <= 20; ++n) {
                for (int m = 1; m <= 6; ++m) {
                    double reference = 0.0;
                    if (!(v0 == Direction::Up && n == 0))
                        reference += quad(
                                         [&, n, m](double b) {
                                             return std::pow(b, m) * max_density(b, n, v0, c, t);
                                         },
                                         0.0, ct, 1e-12)
                                         .value;
                    for (const auto& a : max_atom(n, v0, c, t))
                        reference += std::pow(a.location, m) * a.mass;
                    const double closed = max_moment(m, n, v0, c, t);
                    if (closed == 0.0 && reference == 0.0) continue;
                    worst = std::max(worst, rel_diff(closed, reference));
                }
            }
            std::snprintf(name, sizeof(name), "moment/conditional-vs-quadrature/v0=%s/c=%g,t=%g",
                          v0 == Direction::Up ? "plus" : "minus", c, t);
            checks.push_back(make_check(name, worst, 1e-8));
        }
    }

    {
        // Second moment c^2 t^2 / (2k+3) and the table of first moments.
        double worst = 0.0;
        for (int k = 0; k <= 20; ++k)
            worst = std::max(worst, rel_diff(max_moment(2, 2 * k + 1, Direction::Up, 2.0, 0.5),
                                             1.0 / (2.0 * k + 3.0)));
        checks.push_back(make_check("moment/second-moment-identity", worst, 1e-12));

        const double mean1 = max_moment(1, 1, Direction::Up, 1.0, 1.0);
        const double mean3 = max_moment(1, 3, Direction::Up, 1.0, 1.0);
        const double mean5 = max_moment(1, 5, Direction::Up, 1.0, 1.0);
        const double worst_table = std::max(
            {rel_diff(mean1, 0.5), rel_diff(mean3, 3.0 / 8.0), rel_diff(mean5, 5.0 / 16.0)});
        checks.push_back(make_check("moment/upward-mean-table", worst_table, 1e-12));
    }

    {
        // The downward-start even mean peaks at k = 2.
        const double m1 = max_moment(1, 2, Direction::Down, 1.0, 1.0);
        const double m2 = max_moment(1, 4, Direction::Down, 1.0, 1.0);
        const double m3 = max_moment(1, 6, Direction::Down, 1.0, 1.0);
        const double frozen = std::max({rel_diff(m1, 1.0 / 6.0), rel_diff(m2, 0.175),
                                        rel_diff(m3, 20.0 / 64.0 - 1.0 / 7.0)});
        checks.push_back(make_check("moment/down-even-mean-values", frozen, 1e-12));
        double peak = 0.0;
        int argmax = 0;
        for (int k = 1; k <= 8; ++k) {
            const double value = max_moment(1, 2 * k, Direction::Down, 1.0, 1.0);
            if (value > peak) {
                peak = value;
                argmax = k;
            }
        }
        checks.push_back(make_check("moment/down-even-mean-peak-at-k=2",
                                    std::abs(static_cast<double>(argmax) - 2.0), 0.0));
    }

    // Unconditional upward moments against quadrature plus the atom at ct.
    for (const auto& ps : std::vector<ParamSet>{{1.0, 1.0, 1.0}, {2.0, 0.5, 3.0}}) {
        const ProcessParams params(ps.lambda, ps.c);
        const double t = ps.t, ct = ps.c * t;
        double worst = 0.0;
        for (int m = 1; m <= 6; ++m) {
            const double reference =
                quad([&, m](double b) {
                    return std::pow(b, m) * max_law(b, Direction::Up, params, t).density;
                },
                     0.0, ct, 1e-12)
                    .value +
                std::pow(ct, m) * std::exp(-ps.lambda * t);
            worst = std::max(
                worst, rel_diff(max_moment_unconditional(m, Direction::Up, params, t), reference));
        }
        std::snprintf(name, sizeof(name), "moment/unconditional-vs-quadrature/lt=%g",
                      ps.lambda * t);
        checks.push_back(make_check(name, worst, 1e-8));
    }
    return checks;
}

std::vector<CheckResult> run_mc_suite(std::uint64_t seed, std::int64_t samples_per_regime,
                                      int workers) {
    std::vector<CheckResult> checks;
    const ProcessParams params(1.0, 1.0);
    const double t = 1.0;
    char name[160];

    // Each regime draws from its own derived seed so checks fail independently
    // rather than on one shared path sequence.
    std::uint64_t regime_index = 0;
    auto push_regime = [&](const LawSelector& regime, const char* label) {
        const std::uint64_t regime_seed = seed + 1000003ull * ++regime_index;
        const MCSummary summary =
            mc_verify(regime, params, t, samples_per_regime, regime_seed, workers);
        if (summary.n_continuous > 0) {
            std::snprintf(name, sizeof(name), "mc/%s/ks", label);
            checks.push_back(make_check(name, summary.ks, summary.ks_critical(0.01)));
        }
        for (const auto& atom : summary.atom_freqs) {
            std::snprintf(name, sizeof(name), "mc/%s/atom@%g", label, atom.location);
            checks.push_back(make_check(name, std::abs(atom.z_score), 3.0));
        }
    };

    char label[96];
    for (Direction v0 : {Direction::Up, Direction::Down}) {
        for (int n = 1; n <= 6; ++n) {
            LawSelector regime{Quantity::RunningMax, v0, n, std::nullopt};
            std::snprintf(label, sizeof(label), "max/v0=%s/n=%d",
                          v0 == Direction::Up ? "plus" : "minus", n);
            push_regime(regime, label);
        }
        LawSelector unconditional{Quantity::RunningMax, v0, std::nullopt, std::nullopt};
        std::snprintf(label, sizeof(label), "max/v0=%s/unconditional",
                      v0 == Direction::Up ? "plus" : "minus");
        push_regime(unconditional, label);
    }
    for (int n = 1; n <= 6; ++n) {
        LawSelector regime{Quantity::Position, Direction::Up, n, std::nullopt};
        std::snprintf(label, sizeof(label), "position/v0=plus/n=%d", n);
        push_regime(regime, label);
    }
    push_regime(LawSelector{Quantity::Position, Direction::Down, 2, std::nullopt},
                "position/v0=minus/n=2");
    push_regime(LawSelector{Quantity::Position, Direction::Up, std::nullopt, std::nullopt},
                "position/unconditional");
    return checks;
}

std::vector<CheckResult> run_kac_suite() {
    std::vector<CheckResult> checks;
    const auto rows = kac_check({10.0, 30.0, 100.0}, 1.0, 512);
    char name[96];
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::snprintf(name, sizeof(name), "kac/up/monotone/c=%g->%g", rows[i - 1].c, rows[i].c);
        checks.push_back(
            make_check(name, rows[i].distance_up - rows[i - 1].distance_up, 0.0));
        std::snprintf(name, sizeof(name), "kac/down/monotone/c=%g->%g", rows[i - 1].c, rows[i].c);
        checks.push_back(
            make_check(name, rows[i].distance_down - rows[i - 1].distance_down, 0.0));
    }
    checks.push_back(make_check("kac/up/distance-at-c=100", rows.back().distance_up, 0.02));
    checks.push_back(make_check("kac/down/distance-at-c=100", rows.back().distance_down, 0.02));
    return checks;
}

std::vector<CheckResult> run_order_stats_suite(std::uint64_t seed, std::int64_t n_samples) {
    std::vector<CheckResult> checks;
    const double t = 2.0;
    char name[128];

    // Adjacent increments: one law per n, independent of the slot.
    for (int n : {2, 5, 10}) {
        Rng rng(seed, 100 + n);
        std::vector<std::vector<double>> increments(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n_samples; ++i) {
            const SamplePath path = sample_path_conditional(n, 1.0, t, Direction::Up, rng);
            double prev = 0.0;
            for (int k = 0; k < n; ++k) {
                increments[k].push_back(path.events()[k] - prev);
                prev = path.events()[k];
            }
        }
        double worst_ratio = 0.0;  // KS over its critical value, worst slot
        for (int k = 0; k < n; ++k) {
            std::sort(increments[k].begin(), increments[k].end());
            const double ks = ks_statistic(increments[k], [&](double w) {
                return 1.0 - std::pow(1.0 - w / t, n);
            });
            worst_ratio = std::max(
                worst_ratio, ks / ks_critical_value(0.01, increments[k].size()));
        }
        std::snprintf(name, sizeof(name), "order-stats/adjacent-increments/n=%d", n);
        checks.push_back(make_check(name, worst_ratio, 1.0));
    }

    // Wider gaps follow the Beta(gap, n-gap+1) law.
    for (const auto& [n, k, l] : std::vector<std::array<int, 3>>{{5, 2, 4}, {10, 3, 7}}) {
        Rng rng(seed, 200 + n);
        std::vector<double> diffs;
        diffs.reserve(static_cast<std::size_t>(n_samples));
        for (std::int64_t i = 0; i < n_samples; ++i) {
            const SamplePath path = sample_path_conditional(n, 1.0, t, Direction::Up, rng);
            diffs.push_back(path.events()[l - 1] - path.events()[k - 1]);
        }
        std::sort(diffs.begin(), diffs.end());
        const int gap = l - k;
        const double ks = ks_statistic(diffs, [&](double w) {
            return beta_cdf_integer(w / t, gap, n - gap + 1);
        });
        std::snprintf(name, sizeof(name), "order-stats/gap-increment/n=%d/gap=%d", n, gap);
        checks.push_back(make_check(name, ks, ks_critical_value(0.01, diffs.size())));
    }

    // Bivariate arrival law through its Rosenblatt transform, chi-square on a
    // 10x10 equiprobable grid.
    for (const auto& [n, k, l] : std::vector<std::array<int, 3>>{{3, 1, 2}, {5, 2, 4}}) {
        Rng rng(seed, 300 + n);
        std::vector<double> counts(100, 0.0);
        for (std::int64_t i = 0; i < n_samples; ++i) {
            const SamplePath path = sample_path_conditional(n, 1.0, t, Direction::Up, rng);
            const double u = path.events()[k - 1];
            const double v = path.events()[l - 1];
            const double pu = beta_cdf_integer(u / t, k, n - k + 1);
            const double pv = beta_cdf_integer((v - u) / (t - u), l - k, n - l + 1);
            const int iu = std::min(9, static_cast<int>(pu * 10.0));
            const int iv = std::min(9, static_cast<int>(pv * 10.0));
            counts[iu * 10 + iv] += 1.0;
        }
        const std::vector<double> expected(100, static_cast<double>(n_samples) / 100.0);
        const double stat = chi_square_statistic(counts, expected);
        std::snprintf(name, sizeof(name), "order-stats/bivariate-chisq/n=%d/(%d,%d)", n, k, l);
        checks.push_back(make_check(name, stat, chi_square_critical_value(0.01, 99)));
    }

    // Plus-time matches the order-statistic law Y_(n+), n+ = floor(n/2) + 1.
    for (const auto& [n, v0] : std::vector<std::pair<int, Direction>>{
             {3, Direction::Up}, {4, Direction::Down}}) {
        Rng rng(seed, 400 + n);
        std::vector<double> plus_times;
        plus_times.reserve(static_cast<std::size_t>(n_samples));
        for (std::int64_t i = 0; i < n_samples; ++i) {
            const SamplePath path = sample_path_conditional(n, 1.0, t, v0, rng);
            plus_times.push_back(path.plus_time());
        }
        std::sort(plus_times.begin(), plus_times.end());
        const int order = n / 2 + 1;
        const double ks = ks_statistic(plus_times, [&](double z) {
            return beta_cdf_integer(z / t, order, n - order + 1);
        });
        std::snprintf(name, sizeof(name), "order-stats/plus-time/n=%d/v0=%s", n,
                      v0 == Direction::Up ? "plus" : "minus");
        checks.push_back(make_check(name, ks, ks_critical_value(0.01, plus_times.size())));
    }
    return checks;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

}  // namespace telemax
