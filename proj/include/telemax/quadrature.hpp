#pragma once

#include <functional>

namespace telemax {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod 7-15 over (a, b). All nodes are interior, so
// integrands with jumps or mild endpoint behaviour (e.g. (ct-b)^{k-1}) never
// see the endpoints. Splits the worst interval first; gives up with
// converged = false and the partial estimate once max_intervals is reached.
QuadratureResult quad(const std::function<double(double)>& f, double a, double b,
                      double abs_tol = 1e-10, int max_intervals = 20000);

}  // namespace telemax
