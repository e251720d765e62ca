#pragma once

#include <optional>
#include <vector>

#include "telemax/telegraph.hpp"

namespace telemax {

enum class Quantity { Position, RunningMax };
enum class EventParity { Even, Odd };

// Which law is being addressed: the random quantity, the initial direction,
// and the conditioning on the reversal count (exact n, parity, or none).
// At most one of exact_count / parity may be set.
struct LawSelector {
    Quantity quantity = Quantity::RunningMax;
    Direction v0 = Direction::Up;
    std::optional<int> exact_count;
    std::optional<EventParity> parity;
};

struct Atom {
    double location;
    double mass;
};
using AtomList = std::vector<Atom>;

// ---------------------------------------------------------------------------
// Position of the process at the horizon, conditional on N(t) = n.
//
// n = 2k+1 (either direction):   (2k+1)!/k!^2 (c^2t^2-x^2)^k / (2ct)^{2k+1}
// n = 2k, V(0) = +c:             (2k)!/(k!(k-1)!) (ct+x)^k (ct-x)^{k-1} / (2ct)^{2k}
// n = 2k, V(0) = -c:             mirror image (exponents swapped)
//
// n = 0 is purely atomic at v0 * c * t and is rejected here; query the atoms.
// ---------------------------------------------------------------------------
double position_density(double x, int n, Direction v0, double c, double t);

// P{T(t) < x | N(t) = n, V(0) = v0}. Follows from the plus-time
// representation T(t) = v0 * c * (2 T+ - t) with T+ distributed as the
// (k+1)-th order statistic of n uniforms, a Beta law with integer parameters.
double position_cdf(double x, int n, Direction v0, double c, double t);

// ---------------------------------------------------------------------------
// Running maximum over [0, t], conditional on N(t) = n. Four regimes:
//
//   V(0) = +c, n = 2k+1:  2 (2k+1)!/k!^2 (c^2t^2-b^2)^k / (2ct)^{2k+1}
//   V(0) = +c, n = 2k+2:  identical to the 2k+1 case
//   V(0) = -c, n = 2k:    2 (2k)!/(k!(k-1)!) (c^2t^2-b^2)^{k-1}(ct-b) / (2ct)^{2k}
//   V(0) = -c, n = 2k+1:  two-term form; the 1/Gamma(0) = 0 convention makes
//                         it valid at k = 0 where it reduces to 1/(2ct)
//
// The continuous density is 0 outside (0, ct) and exactly 0 at the endpoints.
// (V(0)=+c, n=0) is purely atomic at ct and is rejected; (V(0)=-c, n=0) is
// purely atomic at 0 and yields density 0.
// ---------------------------------------------------------------------------
double max_density(double beta, int n, Direction v0, double c, double t);

// Atomic part of the conditional maximum law:
//   V(0) = +c, n = 0:   mass 1 at ct
//   V(0) = -c, n = 2k:  mass C(2k, k) / 2^{2k} at 0
//   V(0) = -c, n = 2k+1: mass C(2k+1, k) / 2^{2k+1} at 0
AtomList max_atom(int n, Direction v0, double c, double t);

// P{max < beta | N(t) = n, V(0) = v0}, strict inequality; atoms at 0 are
// included for any beta > 0. Clamped to 0 below the support and 1 above it.
double max_cdf(double beta, int n, Direction v0, double c, double t);

// m-th moment of the conditional maximum, atoms included. The V(0) = -c odd
// case is assembled through the weighted-sum identity
//   law(-c, 2k+1) = (2k+1)/(2k+2) law(-c, 2k) + 1/(2k+2) law(+c, 2k+1).
double max_moment(int m, int n, Direction v0, double c, double t);

// ---------------------------------------------------------------------------
// Uniform order statistics / Poisson arrival laws conditional on N(t) = n.
// ---------------------------------------------------------------------------

// Density of Y_(k+gap) - Y_(k) for n i.i.d. uniforms on (0, t); depends only
// on the gap:  n! / ((gap-1)! (n-gap)!) w^{gap-1} (t-w)^{n-gap} / t^n.
double order_stat_increment_density(double w, int n, int gap, double t);

// Joint density of the `first`-th and `second`-th arrival times (1-based,
// first < second) given N(t) = n, at 0 < u < v < t.
double arrival_pair_density(double u, double v, int n, int first, int second, double t);

// Binomial-tail form of the regularized incomplete beta with integer
// parameters: P{Beta(a, b) <= z} for a, b >= 1 integers.
double beta_cdf_integer(double z, int a, int b);

}  // namespace telemax
