#pragma once

#include "telemax/conditional_laws.hpp"

namespace telemax {

// Continuous density at one point plus the finite atomic part of the law.
struct MixedLawValue {
    double density = 0.0;
    AtomList atoms;
};

// Unconditional position law at the horizon (symmetric random initial
// direction): atoms e^{-lt}/2 at +-ct and, for |x| < ct, density
//   (e^{-lt}/2c) [ l I0(eta) + d/dt I0(eta) ],  eta = (l/c) sqrt(c^2t^2-x^2),
// with d/dt I0(eta) expanded analytically to (l c t / sqrt(c^2t^2-x^2)) I1(eta).
// Bessel factors are evaluated in exponentially scaled form, so large l*t
// (diffusive scaling) does not overflow.
MixedLawValue position_law(double x, const ProcessParams& params, double t);

// Joint density P{max in db, N(t) has the given parity | V(0) = v0} / db:
//   +c even:  e^{-lt} l t I1(eta) / sqrt(c^2t^2-b^2)
//   +c odd:   (l/c) e^{-lt} I0(eta)
//   -c even:  (1 - b/ct) times the +c even value
//   -c odd:   e^{-lt}/(ct+b) [ l t I0(eta) - sqrt((ct-b)/(ct+b)) I1(eta) ]
double max_parity_density(double beta, Direction v0, EventParity parity,
                          const ProcessParams& params, double t);

// The -c odd joint density in its pre-simplification I1/I2 form (before the
// three-term Bessel recurrence eliminates I2). Kept for cross-validation.
double max_parity_density_unreduced(double beta, const ProcessParams& params, double t);

// Atomic part of the joint (parity-restricted) maximum law.
AtomList max_parity_atoms(Direction v0, EventParity parity, const ProcessParams& params,
                          double t);

// Unconditional maximum law.
//   V(0) = +c: density 2 * position density, atom e^{-lt} at ct
//              (the reflection principle folds the position law)
//   V(0) = -c: the I0/I1 combination over (ct+beta), atom
//              e^{-lt}[I0(lt) + I1(lt)] at 0
MixedLawValue max_law(double beta, Direction v0, const ProcessParams& params, double t);

// m-th moment of the unconditional maximum for V(0) = +c, atom included:
//   e^{-lt} (ct)^m (2/lt)^{(m-1)/2} Gamma((m+1)/2) [I_{(m-1)/2} + I_{(m+1)/2}](lt)
// For V(0) = -c no closed form exists; integrate max_law instead (the CLI
// moments command does). Requesting it here is an error.
double max_moment_unconditional(int m, Direction v0, const ProcessParams& params, double t);

// P{N(t) even | anything} = e^{-lt} cosh(lt) and the odd complement.
double parity_probability(EventParity parity, double lambda_t);

}  // namespace telemax
