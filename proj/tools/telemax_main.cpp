// Command-line front end: evaluate the telegraph running-maximum and position
// laws on grids, compute moments, run seeded simulations, and execute the
// verification suites. Exit codes: 0 success, 1 check failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "telemax/conditional_laws.hpp"
#include "telemax/quadrature.hpp"
#include "telemax/statistics.hpp"
#include "telemax/unconditional_laws.hpp"
#include "telemax/verification.hpp"

namespace {

using namespace telemax;

constexpr const char* kSchemaVersion = "1";
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

std::string fmt_json(double v) { return fmt(v, 17); }
std::string fmt_csv(double v) { return fmt(v, 12); }

// Minimal JSON assembly; every number is emitted with 17 significant digits
// so a re-parse reproduces the value exactly.
class JsonObject {
public:
    void add_string(const std::string& key, const std::string& value) {
        entry(key) << '"' << value << '"';
    }
    void add_number(const std::string& key, double value) { entry(key) << fmt_json(value); }
    void add_integer(const std::string& key, long long value) { entry(key) << value; }
    void add_bool(const std::string& key, bool value) { entry(key) << (value ? "true" : "false"); }
    void add_null(const std::string& key) { entry(key) << "null"; }
    void add_raw(const std::string& key, const std::string& raw) { entry(key) << raw; }

    std::string str() const { return "{" + body_.str() + "}"; }

private:
    std::ostringstream& entry(const std::string& key) {
        if (!first_) body_ << ',';
        first_ = false;
        body_ << '"' << key << "\":";
        return body_;
    }
    std::ostringstream body_;
    bool first_ = true;
};

std::string json_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += items[i];
    }
    return out + "]";
}

struct CommonFlags {
    std::string quantity = "max";
    std::string v0 = "plus";
    std::optional<int> n;
    std::optional<std::string> parity;
    std::optional<double> lambda;
    double c = 1.0;
    double t = 1.0;
    std::string format = "csv";
};

void add_law_flags(CLI::App* cmd, CommonFlags& flags, bool with_count = true) {
    cmd->add_option("--quantity", flags.quantity, "Random quantity: position or max")
        ->check(CLI::IsMember({"position", "max"}));
    cmd->add_option("--v0", flags.v0, "Initial direction: plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    if (with_count) cmd->add_option("--n", flags.n, "Condition on exactly n reversals");
    cmd->add_option("--parity", flags.parity, "Condition on the reversal-count parity")
        ->check(CLI::IsMember({"even", "odd"}));
    cmd->add_option("--lambda", flags.lambda, "Poisson reversal rate");
    cmd->add_option("--c", flags.c, "Speed");
    cmd->add_option("--t", flags.t, "Horizon");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

Direction parse_v0(const std::string& v0) {
    return v0 == "plus" ? Direction::Up : Direction::Down;
}

EventParity parse_parity(const std::string& p) {
    return p == "even" ? EventParity::Even : EventParity::Odd;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

bool parse_grid(const std::string& spec, std::vector<double>& points) {
    double a = 0.0, b = 0.0;
    int count = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &a, &b, &count, &extra) != 3 || count < 1 ||
        !(a < b))
        return false;
    points.clear();
    for (int i = 0; i <= count; ++i) points.push_back(a + (b - a) * i / count);
    return true;
}

void echo_common(JsonObject& params, const CommonFlags& flags) {
    params.add_string("quantity", flags.quantity);
    params.add_string("v0", flags.v0);
    if (flags.n)
        params.add_integer("n", *flags.n);
    else
        params.add_null("n");
    if (flags.parity)
        params.add_string("parity", *flags.parity);
    else
        params.add_null("parity");
    if (flags.lambda)
        params.add_number("lambda", *flags.lambda);
    else
        params.add_null("lambda");
    params.add_number("c", flags.c);
    params.add_number("t", flags.t);
    params.add_string("format", flags.format);
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalRow {
    double point;
    double density;
    double cdf;
};

struct EvaluatedLaw {
    std::vector<EvalRow> rows;
    AtomList atoms;
};

int run_eval(const CommonFlags& flags, const std::string& grid_spec,
             const std::optional<double>& scalar) {
    const Quantity quantity = flags.quantity == "max" ? Quantity::RunningMax : Quantity::Position;
    const Direction v0 = parse_v0(flags.v0);
    const double c = flags.c, t = flags.t, ct = c * t;

    if (flags.n && flags.parity) return usage_error("--n and --parity are exclusive");
    if (flags.parity && quantity == Quantity::Position)
        return usage_error("parity conditioning is only defined for --quantity max");
    const bool needs_lambda = !flags.n.has_value();
    if (needs_lambda && !flags.lambda)
        return usage_error("--lambda is required for unconditional or parity-conditioned laws");
    if (flags.n && *flags.n < 0) return usage_error("--n must be >= 0");

    std::vector<double> points;
    if (!grid_spec.empty()) {
        if (!parse_grid(grid_spec, points)) return usage_error("bad --grid spec, expected a:b:n");
    } else if (scalar) {
        points.push_back(*scalar);
    }

    // Purely atomic conditional laws reject density requests and otherwise
    // emit their atoms.
    if (flags.n && *flags.n == 0) {
        const bool purely_atomic_error =
            quantity == Quantity::Position || v0 == Direction::Up;
        if (!points.empty() && purely_atomic_error) {
            const double loc = quantity == Quantity::Position ? direction_sign(v0) * ct : ct;
            return usage_error("law with n = 0 is purely atomic: single atom of mass 1 at " +
                               fmt(loc, 12) + "; omit the grid to list atoms");
        }
    }

    EvaluatedLaw law;
    std::unique_ptr<TabulatedCdf> table;  // cumulative CDF for Bessel-mixture laws

    if (flags.n) {
        const int n = *flags.n;
        if (quantity == Quantity::RunningMax) {
            law.atoms = max_atom(n, v0, c, t);
            for (double p : points) {
                const double density =
                    (v0 == Direction::Up && n == 0) ? 0.0 : max_density(p, n, v0, c, t);
                law.rows.push_back({p, density, max_cdf(p, n, v0, c, t)});
            }
        } else {
            if (n == 0) law.atoms = {{direction_sign(v0) * ct, 1.0}};
            for (double p : points)
                law.rows.push_back(
                    {p, position_density(p, n, v0, c, t), position_cdf(p, n, v0, c, t)});
        }
    } else {
        const ProcessParams params(flags.lambda.value(), c);
        if (flags.parity) {
            const EventParity parity = parse_parity(*flags.parity);
            law.atoms = max_parity_atoms(v0, parity, params, t);
            auto density = [&](double b) { return max_parity_density(b, v0, parity, params, t); };
            if (!points.empty()) {
                std::vector<std::pair<double, double>> atom_pairs;
                for (const auto& a : law.atoms) atom_pairs.emplace_back(a.location, a.mass);
                table = std::make_unique<TabulatedCdf>(density, 0.0, ct, 2048, atom_pairs);
            }
            for (double p : points) law.rows.push_back({p, density(p), (*table)(p)});
        } else if (quantity == Quantity::RunningMax) {
            law.atoms = max_law(0.5 * ct, v0, params, t).atoms;
            if (!points.empty()) {
                std::vector<std::pair<double, double>> atom_pairs;
                for (const auto& a : law.atoms) atom_pairs.emplace_back(a.location, a.mass);
                table = std::make_unique<TabulatedCdf>(
                    [&](double b) { return max_law(b, v0, params, t).density; }, 0.0, ct, 2048,
                    atom_pairs);
            }
            for (double p : points)
                law.rows.push_back({p, max_law(p, v0, params, t).density, (*table)(p)});
        } else {
            law.atoms = position_law(0.0, params, t).atoms;
            if (!points.empty()) {
                std::vector<std::pair<double, double>> atom_pairs;
                for (const auto& a : law.atoms) atom_pairs.emplace_back(a.location, a.mass);
                table = std::make_unique<TabulatedCdf>(
                    [&](double x) { return position_law(x, params, t).density; }, -ct, ct, 2048,
                    atom_pairs);
            }
            for (double p : points)
                law.rows.push_back({p, position_law(p, params, t).density, (*table)(p)});
        }
    }

    if (law.rows.empty() && law.atoms.empty())
        return usage_error("no evaluation points: give --grid or --beta/--x");

    if (flags.format == "csv") {
        std::cout << "beta,density,cdf,atom_loc,atom_mass\n";
        for (const auto& row : law.rows)
            std::cout << fmt_csv(row.point) << ',' << fmt_csv(row.density) << ','
                      << fmt_csv(row.cdf) << ",,\n";
        for (const auto& atom : law.atoms)
            std::cout << ",,," << fmt_csv(atom.location) << ',' << fmt_csv(atom.mass) << "\n";
        return 0;
    }

    JsonObject params_json;
    echo_common(params_json, flags);
    if (!grid_spec.empty()) params_json.add_string("grid", grid_spec);
    if (scalar) params_json.add_number("point", *scalar);
    std::vector<std::string> row_items;
    for (const auto& row : law.rows) {
        JsonObject r;
        r.add_number("beta", row.point);
        r.add_number("density", row.density);
        r.add_number("cdf", row.cdf);
        row_items.push_back(r.str());
    }
    std::vector<std::string> atom_items;
    for (const auto& atom : law.atoms) {
        JsonObject a;
        a.add_number("location", atom.location);
        a.add_number("mass", atom.mass);
        atom_items.push_back(a.str());
    }
    JsonObject doc;
    doc.add_string("schema_version", kSchemaVersion);
    doc.add_string("command", "eval");
    doc.add_raw("params", params_json.str());
    doc.add_raw("rows", json_array(row_items));
    doc.add_raw("atoms", json_array(atom_items));
    std::cout << doc.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// moments
// ---------------------------------------------------------------------------

double moment_by_quadrature(Quantity quantity, Direction v0, std::optional<int> n,
                            const std::optional<ProcessParams>& params, double c, double t,
                            int m) {
    const double ct = c * t;
    if (quantity == Quantity::RunningMax) {
        if (n) return max_moment(m, *n, v0, c, t);
        if (v0 == Direction::Up) return max_moment_unconditional(m, v0, *params, t);
        // No closed form for the downward start: integrate the mixed law.
        // The atom sits at 0 and contributes nothing for m >= 1.
        return quad([&](double b) { return std::pow(b, m) * max_law(b, v0, *params, t).density; },
                    0.0, ct, 1e-11)
            .value;
    }
    if (n) {
        if (*n == 0) return std::pow(direction_sign(v0) * ct, m);
        return quad([&](double x) { return std::pow(x, m) * position_density(x, *n, v0, c, t); },
                    -ct, ct, 1e-11)
            .value;
    }
    double value =
        quad([&](double x) { return std::pow(x, m) * position_law(x, *params, t).density; }, -ct,
             ct, 1e-11)
            .value;
    for (const auto& atom : position_law(0.0, *params, t).atoms)
        value += std::pow(atom.location, m) * atom.mass;
    return value;
}

int run_moments(const CommonFlags& flags, std::vector<int>& n_list, std::vector<int>& m_list) {
    const Quantity quantity = flags.quantity == "max" ? Quantity::RunningMax : Quantity::Position;
    const Direction v0 = parse_v0(flags.v0);
    if (m_list.empty()) return usage_error("--m is required");
    if (flags.parity) return usage_error("moments support exact-count or no conditioning only");
    std::optional<ProcessParams> params;
    if (n_list.empty()) {
        if (!flags.lambda) return usage_error("--lambda is required for unconditional moments");
        params.emplace(*flags.lambda, flags.c);
    }

    struct Row {
        std::optional<int> n;
        int m;
        double value;
    };
    std::vector<Row> rows;
    if (n_list.empty()) {
        for (int m : m_list)
            rows.push_back({std::nullopt, m,
                            moment_by_quadrature(quantity, v0, std::nullopt, params, flags.c,
                                                 flags.t, m)});
    } else {
        for (int n : n_list)
            for (int m : m_list)
                rows.push_back({n, m,
                                moment_by_quadrature(quantity, v0, n, params, flags.c, flags.t,
                                                     m)});
    }

    if (flags.format == "csv") {
        std::cout << "n,m,moment\n";
        for (const auto& row : rows) {
            if (row.n)
                std::cout << *row.n;
            std::cout << ',' << row.m << ',' << fmt_csv(row.value) << "\n";
        }
        return 0;
    }
    JsonObject params_json;
    echo_common(params_json, flags);
    std::vector<std::string> row_items;
    for (const auto& row : rows) {
        JsonObject r;
        if (row.n)
            r.add_integer("n", *row.n);
        else
            r.add_null("n");
        r.add_integer("m", row.m);
        r.add_number("moment", row.value);
        row_items.push_back(r.str());
    }
    JsonObject doc;
    doc.add_string("schema_version", kSchemaVersion);
    doc.add_string("command", "moments");
    doc.add_raw("params", params_json.str());
    doc.add_raw("rows", json_array(row_items));
    std::cout << doc.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int run_simulate(const CommonFlags& flags, std::int64_t samples, std::uint64_t seed,
                 int workers) {
    const Quantity quantity = flags.quantity == "max" ? Quantity::RunningMax : Quantity::Position;
    LawSelector regime;
    regime.quantity = quantity;
    regime.v0 = parse_v0(flags.v0);
    regime.exact_count = flags.n;
    if (flags.parity) regime.parity = parse_parity(*flags.parity);
    if (regime.exact_count && regime.parity)
        return usage_error("--n and --parity are exclusive");
    if (regime.parity && quantity == Quantity::Position)
        return usage_error("parity conditioning is only defined for --quantity max");
    // Conditional sampling never uses the rate; default it so ProcessParams
    // validates.
    const double lambda = flags.lambda.value_or(1.0);
    if (!flags.n && !flags.lambda)
        return usage_error("--lambda is required for unconditional simulation");
    const ProcessParams params(lambda, flags.c);

    MCSummary summary;
    try {
        summary = mc_verify(regime, params, flags.t, samples, seed, workers);
    } catch (const std::invalid_argument& err) {
        return usage_error(err.what());
    }

    if (flags.format == "csv") {
        std::cout << "key,value\n";
        std::cout << "n_samples," << summary.n_samples << "\n";
        std::cout << "seed," << summary.seed << "\n";
        std::cout << "workers," << summary.workers << "\n";
        std::cout << "n_continuous," << summary.n_continuous << "\n";
        std::cout << "ks_statistic," << fmt_csv(summary.ks) << "\n";
        if (summary.n_continuous > 0)
            std::cout << "ks_critical_alpha_0.01," << fmt_csv(summary.ks_critical(0.01)) << "\n";
        for (const auto& atom : summary.atom_freqs) {
            std::cout << "atom_freq@" << fmt_csv(atom.location) << ','
                      << fmt_csv(atom.empirical) << "\n";
            std::cout << "atom_expected@" << fmt_csv(atom.location) << ','
                      << fmt_csv(atom.expected) << "\n";
            std::cout << "atom_zscore@" << fmt_csv(atom.location) << ',' << fmt_csv(atom.z_score)
                      << "\n";
        }
        for (const auto& moment : summary.moments) {
            std::cout << "moment_" << moment.order << "_empirical," << fmt_csv(moment.empirical)
                      << "\n";
            std::cout << "moment_" << moment.order << "_expected," << fmt_csv(moment.expected)
                      << "\n";
        }
        return 0;
    }

    JsonObject params_json;
    echo_common(params_json, flags);
    params_json.add_integer("samples", samples);
    params_json.add_integer("seed", static_cast<long long>(seed));
    params_json.add_integer("workers", workers);
    JsonObject doc;
    doc.add_string("schema_version", kSchemaVersion);
    doc.add_string("command", "simulate");
    doc.add_raw("params", params_json.str());
    doc.add_integer("n_samples", summary.n_samples);
    doc.add_integer("n_continuous", summary.n_continuous);
    doc.add_number("ks_statistic", summary.ks);
    if (summary.n_continuous > 0)
        doc.add_number("ks_critical_alpha_0.01", summary.ks_critical(0.01));
    std::vector<std::string> atom_items;
    for (const auto& atom : summary.atom_freqs) {
        JsonObject a;
        a.add_number("location", atom.location);
        a.add_number("empirical", atom.empirical);
        a.add_number("expected", atom.expected);
        a.add_number("z_score", atom.z_score);
        atom_items.push_back(a.str());
    }
    doc.add_raw("atom_freqs", json_array(atom_items));
    std::vector<std::string> moment_items;
    for (const auto& moment : summary.moments) {
        JsonObject m;
        m.add_integer("order", moment.order);
        m.add_number("empirical", moment.empirical);
        m.add_number("expected", moment.expected);
        moment_items.push_back(m.str());
    }
    doc.add_raw("moments", json_array(moment_items));
    std::vector<std::string> ecdf_items;
    for (const auto& [value, freq] : summary.ecdf) {
        JsonObject e;
        e.add_number("value", value);
        e.add_number("cdf", freq);
        ecdf_items.push_back(e.str());
    }
    doc.add_raw("ecdf", json_array(ecdf_items));
    std::cout << doc.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& format, std::optional<int> n,
               std::optional<double> beta, std::optional<std::uint64_t> seed,
               std::int64_t samples, int workers) {
    std::vector<CheckResult> checks;
    const bool randomized = suite == "mc" || suite == "all";
    if (randomized && !seed) return usage_error("--seed is required for the mc suite");

    if (suite == "recurrence" && (n || beta)) {
        if (!n || !beta) return usage_error("--n and --beta must be given together");
        char name[64];
        std::snprintf(name, sizeof(name), "recurrence/n=%d/beta=%g", *n, *beta);
        checks.push_back({name, recurrence_residual(*n, *beta, 1.0, 1.0), 1e-6, false});
        checks.back().pass = checks.back().observed <= checks.back().tolerance;
    } else if (suite == "normalization") {
        checks = run_normalization_suite();
    } else if (suite == "identities") {
        checks = run_identity_suite();
        for (auto& extra : run_mixture_suite()) checks.push_back(extra);
    } else if (suite == "recurrence") {
        checks = run_recurrence_suite();
    } else if (suite == "moments") {
        checks = run_moment_suite();
    } else if (suite == "mc") {
        checks = run_mc_suite(*seed, samples, workers);
        for (auto& extra : run_order_stats_suite(*seed, std::min<std::int64_t>(samples, 100000)))
            checks.push_back(extra);
    } else if (suite == "kac") {
        checks = run_kac_suite();
    } else if (suite == "all") {
        checks = run_normalization_suite();
        for (auto& extra : run_identity_suite()) checks.push_back(extra);
        for (auto& extra : run_mixture_suite()) checks.push_back(extra);
        for (auto& extra : run_recurrence_suite()) checks.push_back(extra);
        for (auto& extra : run_moment_suite()) checks.push_back(extra);
        for (auto& extra : run_kac_suite()) checks.push_back(extra);
        for (auto& extra : run_mc_suite(*seed, samples, workers)) checks.push_back(extra);
        for (auto& extra : run_order_stats_suite(*seed, std::min<std::int64_t>(samples, 100000)))
            checks.push_back(extra);
    } else {
        return usage_error("unknown suite: " + suite);
    }

    if (format == "json") {
        std::vector<std::string> items;
        for (const auto& check : checks) {
            JsonObject c;
            c.add_string("name", check.name);
            c.add_number("observed", check.observed);
            c.add_number("tolerance", check.tolerance);
            c.add_bool("pass", check.pass);
            items.push_back(c.str());
        }
        JsonObject params_json;
        params_json.add_string("suite", suite);
        if (seed) params_json.add_integer("seed", static_cast<long long>(*seed));
        params_json.add_integer("samples", samples);
        params_json.add_integer("workers", workers);
        JsonObject doc;
        doc.add_string("schema_version", kSchemaVersion);
        doc.add_string("command", "verify");
        doc.add_raw("params", params_json.str());
        doc.add_raw("checks", json_array(items));
        doc.add_bool("all_pass", all_pass(checks));
        std::cout << doc.str() << "\n";
    } else {
        for (const auto& check : checks)
            std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name
                      << "  observed=" << fmt(check.observed, 6)
                      << "  tol=" << fmt(check.tolerance, 6) << "\n";
        std::cout << (all_pass(checks) ? "all checks passed" : "CHECKS FAILED") << " ("
                  << checks.size() << " checks)\n";
    }
    return all_pass(checks) ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Telegraph-process running-maximum laws: evaluation, simulation, verification"};
    app.require_subcommand(1);

    CommonFlags eval_flags;
    std::string grid_spec;
    std::optional<double> scalar_beta, scalar_x;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a law on a grid");
    add_law_flags(eval_cmd, eval_flags);
    eval_cmd->add_option("--grid", grid_spec, "Grid a:b:n (n+1 inclusive points)");
    eval_cmd->add_option("--beta", scalar_beta, "Single evaluation point");
    eval_cmd->add_option("--x", scalar_x, "Alias for --beta on position laws");

    CommonFlags moment_flags;
    std::vector<int> n_list, m_list;
    auto* moments_cmd = app.add_subcommand("moments", "Closed-form and quadrature moments");
    add_law_flags(moments_cmd, moment_flags, /*with_count=*/false);
    moments_cmd->add_option("--n", n_list, "Reversal counts (omit for unconditional)")
        ->delimiter(',');
    moments_cmd->add_option("--m", m_list, "Moment orders")->delimiter(',');

    CommonFlags sim_flags;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo verification run");
    add_law_flags(sim_cmd, sim_flags);
    sim_cmd->add_option("--samples", samples, "Number of simulated paths")->required();
    auto* seed_opt = sim_cmd->add_option("--seed", seed, "RNG seed (required)")->required();
    sim_cmd->add_option("--workers", workers, "Parallel substreams");

    std::string suite, verify_format = "text";
    std::optional<int> rec_n;
    std::optional<double> rec_beta;
    std::optional<std::uint64_t> verify_seed;
    std::int64_t verify_samples = 200000;
    int verify_workers = 2;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "normalization|identities|recurrence|moments|mc|kac|all")
        ->required();
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--n", rec_n, "Single recurrence order");
    verify_cmd->add_option("--beta", rec_beta, "Single recurrence level");
    verify_cmd->add_option("--seed", verify_seed, "RNG seed for the mc suite");
    verify_cmd->add_option("--samples", verify_samples, "Paths per regime in the mc suite");
    verify_cmd->add_option("--workers", verify_workers, "Parallel substreams in the mc suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    (void)seed_opt;
    try {
        if (eval_cmd->parsed()) {
            std::optional<double> scalar = scalar_beta ? scalar_beta : scalar_x;
            return run_eval(eval_flags, grid_spec, scalar);
        }
        if (moments_cmd->parsed()) return run_moments(moment_flags, n_list, m_list);
        if (sim_cmd->parsed()) return run_simulate(sim_flags, samples, seed, workers);
        if (verify_cmd->parsed())
            return run_verify(suite, verify_format, rec_n, rec_beta, verify_seed, verify_samples,
                              verify_workers);
    } catch (const std::invalid_argument& err) {
        return usage_error(err.what());
    } catch (const std::domain_error& err) {
        return usage_error(err.what());
    }
    return 0;
}
