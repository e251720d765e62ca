#pragma once

#include <vector>

#include "telemax/rng.hpp"

namespace telemax {

enum class Direction : int { Up = +1, Down = -1 };

inline int direction_sign(Direction d) { return static_cast<int>(d); }
inline Direction opposite(Direction d) {
    return d == Direction::Up ? Direction::Down : Direction::Up;
}

// Reversal rate lambda and speed c, both strictly positive and finite.
struct ProcessParams {
    double lambda;
    double c;

    ProcessParams(double lambda_, double c_);
};

// One realized trajectory: the initial direction, the speed, the horizon and
// the sorted reversal times strictly inside (0, horizon). Immutable after
// construction; queries are exact piecewise-linear arithmetic.
class SamplePath {
public:
    SamplePath(Direction v0, double speed, double horizon, std::vector<double> events);

    Direction v0() const { return v0_; }
    double speed() const { return speed_; }
    double horizon() const { return horizon_; }
    const std::vector<double>& events() const { return events_; }
    int event_count() const { return static_cast<int>(events_.size()); }

    // Position at time s in [0, horizon]. At a reversal time the path is
    // continuous; the left segment is used.
    double position(double s) const;

    // max over [0, horizon]; equals the max of position over the vertex set
    // {0, T_1, ..., T_n, horizon} because local maxima sit at odd reversals.
    double running_max() const;

    // Lebesgue time spent moving in the initial direction. Satisfies
    // position(horizon) = v0 * speed * (2 * plus_time() - horizon).
    double plus_time() const;

private:
    Direction v0_;
    double speed_;
    double horizon_;
    std::vector<double> events_;
};

// Unconditional sampling: reversal times are partial sums of Exponential(lambda)
// gaps truncated at t, so the event count is Poisson(lambda * t).
SamplePath sample_path(const ProcessParams& params, double t, Direction v0, Rng& rng);

// Conditional sampling given N(t) = n: reversal times are n sorted uniform
// draws on (0, t).
SamplePath sample_path_conditional(int n, double speed, double t, Direction v0, Rng& rng);

}  // namespace telemax
