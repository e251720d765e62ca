#include "telemax/unconditional_laws.hpp"

#include <cmath>
#include <stdexcept>

#include "telemax/special_functions.hpp"

namespace telemax {

namespace {

// Shared Bessel geometry at one evaluation point. All unconditional laws are
// e^{-lt} times Bessel factors in eta = (l/c) sqrt((ct-b)(ct+b)); they are
// assembled from scaled values S_nu = e^{-eta} I_nu(eta) and the prefactor
// e^{eta - lt} <= 1 so nothing overflows under diffusive scaling.
struct BesselPoint {
    double eta = 0.0;
    double prefactor = 0.0;  // e^{eta - l t}
    double s0 = 0.0;         // e^{-eta} I0(eta)
    double s1 = 0.0;         // e^{-eta} I1(eta)
    double s1_over_eta = 0.0;
};

BesselPoint make_point(double x, const ProcessParams& params, double t) {
    BesselPoint p;
    const double ct = params.c * t;
    const double w = std::sqrt((ct - x) * (ct + x));
    p.eta = params.lambda / params.c * w;
    p.prefactor = std::exp(p.eta - params.lambda * t);
    p.s0 = bessel_i_scaled(integer_order(0), p.eta);
    p.s1 = bessel_i_scaled(integer_order(1), p.eta);
    p.s1_over_eta = bessel_i1_over_x_scaled(p.eta);
    return p;
}

void check_horizon(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("unconditional law: t must be finite and > 0");
}

}  // namespace

MixedLawValue position_law(double x, const ProcessParams& params, double t) {
    check_horizon(t);
    const double ct = params.c * t;
    const double atom_mass = 0.5 * std::exp(-params.lambda * t);
    MixedLawValue out;
    out.atoms = {{-ct, atom_mass}, {ct, atom_mass}};
    if (!(std::abs(x) < ct)) return out;
    const BesselPoint p = make_point(x, params, t);
    const double lt = params.lambda * t;
    out.density = params.lambda / (2.0 * params.c) * p.prefactor *
                  (p.s0 + lt * p.s1_over_eta);
    return out;
}

double max_parity_density(double beta, Direction v0, EventParity parity,
                          const ProcessParams& params, double t) {
    check_horizon(t);
    const double ct = params.c * t;
    if (!(beta > 0.0) || !(beta < ct)) return 0.0;
    const BesselPoint p = make_point(beta, params, t);
    const double lt = params.lambda * t;
    if (v0 == Direction::Up) {
        if (parity == EventParity::Odd)
            return params.lambda / params.c * p.prefactor * p.s0;
        return lt * params.lambda / params.c * p.prefactor * p.s1_over_eta;
    }
    if (parity == EventParity::Even)
        return (1.0 - beta / ct) * lt * params.lambda / params.c * p.prefactor *
               p.s1_over_eta;
    return p.prefactor / (ct + beta) *
           (lt * p.s0 - std::sqrt((ct - beta) / (ct + beta)) * p.s1);
}

double max_parity_density_unreduced(double beta, const ProcessParams& params, double t) {
    check_horizon(t);
    const double ct = params.c * t;
    if (!(beta > 0.0) || !(beta < ct)) return 0.0;
    const BesselPoint p = make_point(beta, params, t);
    const double lt = params.lambda * t;
    const double s2 = bessel_i_scaled(integer_order(2), p.eta);
    return p.prefactor *
           (params.lambda / params.c * p.s1_over_eta + lt / (ct + beta) * s2);
}

AtomList max_parity_atoms(Direction v0, EventParity parity, const ProcessParams& params,
                          double t) {
    check_horizon(t);
    const double lt = params.lambda * t;
    if (v0 == Direction::Up) {
        if (parity == EventParity::Even) return {{params.c * t, std::exp(-lt)}};
        return {};
    }
    if (parity == EventParity::Even) return {{0.0, bessel_i_scaled(integer_order(0), lt)}};
    return {{0.0, bessel_i_scaled(integer_order(1), lt)}};
}

MixedLawValue max_law(double beta, Direction v0, const ProcessParams& params, double t) {
    check_horizon(t);
    const double ct = params.c * t;
    const double lt = params.lambda * t;
    MixedLawValue out;
    if (v0 == Direction::Up) {
        out.atoms = {{ct, std::exp(-lt)}};
        if (!(beta > 0.0) || !(beta < ct)) return out;
        out.density = 2.0 * position_law(beta, params, t).density;
        return out;
    }
    out.atoms = {{0.0, bessel_i_scaled(integer_order(0), lt) +
                           bessel_i_scaled(integer_order(1), lt)}};
    if (!(beta > 0.0) || !(beta < ct)) return out;
    const BesselPoint p = make_point(beta, params, t);
    out.density = p.prefactor *
                  (lt / (ct + beta) * p.s0 +
                   std::sqrt((ct - beta) / (ct + beta)) *
                       (params.lambda / params.c - 1.0 / (ct + beta)) * p.s1);
    return out;
}

double max_moment_unconditional(int m, Direction v0, const ProcessParams& params, double t) {
    check_horizon(t);
    if (m < 1) throw std::invalid_argument("max_moment_unconditional: m must be >= 1");
    if (v0 == Direction::Down)
        throw std::invalid_argument(
            "max_moment_unconditional: no closed form for V(0) = -c; integrate max_law");
    const double lt = params.lambda * t;
    const double bessel_sum =
        bessel_i_scaled(half_order(m - 1), lt) + bessel_i_scaled(half_order(m + 1), lt);
    return std::exp(m * std::log(params.c * t) + log_gamma(0.5 * (m + 1)) +
                    0.5 * (m - 1) * (std::log(2.0) - std::log(lt))) *
           bessel_sum;
}

double parity_probability(EventParity parity, double lambda_t) {
    const double e = std::exp(-2.0 * lambda_t);
    return parity == EventParity::Even ? 0.5 * (1.0 + e) : 0.5 * (1.0 - e);
}

}  // namespace telemax
