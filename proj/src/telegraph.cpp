#include "telemax/telegraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telemax {

ProcessParams::ProcessParams(double lambda_, double c_) : lambda(lambda_), c(c_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("ProcessParams: lambda must be finite and > 0");
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("ProcessParams: c must be finite and > 0");
}

SamplePath::SamplePath(Direction v0, double speed, double horizon, std::vector<double> events)
    : v0_(v0), speed_(speed), horizon_(horizon), events_(std::move(events)) {
    if (!(speed_ > 0.0) || !std::isfinite(speed_))
        throw std::invalid_argument("SamplePath: speed must be finite and > 0");
    if (!(horizon_ > 0.0) || !std::isfinite(horizon_))
        throw std::invalid_argument("SamplePath: horizon must be finite and > 0");
    double prev = 0.0;
    for (double e : events_) {
        if (!(e > 0.0) || !(e < horizon_) || e < prev)
            throw std::invalid_argument("SamplePath: events must be sorted inside (0, horizon)");
        prev = e;
    }
}

double SamplePath::position(double s) const {
    if (!(s >= 0.0) || !(s <= horizon_))
        throw std::domain_error("SamplePath::position: s outside [0, horizon]");
    double pos = 0.0;
    double dir = direction_sign(v0_);
    double prev = 0.0;
    for (double e : events_) {
        if (e >= s) break;
        pos += dir * speed_ * (e - prev);
        prev = e;
        dir = -dir;
    }
    return pos + dir * speed_ * (s - prev);
}

double SamplePath::running_max() const {
    double best = 0.0;  // vertex at s = 0
    double pos = 0.0;
    double dir = direction_sign(v0_);
    double prev = 0.0;
    for (double e : events_) {
        pos += dir * speed_ * (e - prev);
        best = std::max(best, pos);
        prev = e;
        dir = -dir;
    }
    pos += dir * speed_ * (horizon_ - prev);
    return std::max(best, pos);
}

double SamplePath::plus_time() const {
    double total = 0.0;
    double prev = 0.0;
    bool initial_leg = true;
    for (double e : events_) {
        if (initial_leg) total += e - prev;
        prev = e;
        initial_leg = !initial_leg;
    }
    if (initial_leg) total += horizon_ - prev;
    return total;
}

SamplePath sample_path(const ProcessParams& params, double t, Direction v0, Rng& rng) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("sample_path: t must be finite and > 0");
    std::vector<double> events;
    double s = rng.exponential(params.lambda);
    while (s < t) {
        events.push_back(s);
        s += rng.exponential(params.lambda);
    }
    return SamplePath(v0, params.c, t, std::move(events));
}

SamplePath sample_path_conditional(int n, double speed, double t, Direction v0, Rng& rng) {
    if (n < 0) throw std::invalid_argument("sample_path_conditional: n must be >= 0");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("sample_path_conditional: t must be finite and > 0");
    std::vector<double> events(static_cast<std::size_t>(n));
    for (auto& e : events) e = t * rng.uniform_open();
    std::sort(events.begin(), events.end());
    return SamplePath(v0, speed, t, std::move(events));
}

}  // namespace telemax
