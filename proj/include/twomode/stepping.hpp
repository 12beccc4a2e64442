// stepping.hpp: fixed-step RK4 on a uniform output grid

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "twomode/errors.hpp"
#include "twomode/model.hpp"

namespace twomode {

/// Largest step allowed for `params`: fraction * min(1/omega, 1/omega_l, 1/omega_m).
double max_step(const ModelParams& params, double fraction);

/// Sample times t0, t0 + dt, ... up to t_end; t_end is appended when the
/// grid does not land on it.
inline std::vector<double> output_times(double t0, double t_end, double dt_out) {
    if (!(dt_out > 0.0)) throw NegativeParameter("dt_out must be positive");
    if (!(t_end > t0)) throw NegativeParameter("t_end must exceed the start time");
    const double span = t_end - t0;
    const auto n = static_cast<long>(std::floor(span / dt_out * (1.0 + 1e-12)));
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(n) + 2);
    for (long k = 0; k <= n; ++k) times.push_back(t0 + static_cast<double>(k) * dt_out);
    if (t_end - times.back() > 1e-12 * std::max(1.0, std::abs(t_end))) times.push_back(t_end);
    else times.back() = std::min(times.back(), t_end);
    return times;
}

inline int substeps(double interval, double h_max) {
    return std::max(1, static_cast<int>(std::ceil(interval / h_max - 1e-9)));
}

template <class State, class Rhs>
State rk4_step(const State& y, double h, Rhs&& rhs) {
    const State k1 = rhs(y);
    const State k2 = rhs(State(y + (0.5 * h) * k1));
    const State k3 = rhs(State(y + (0.5 * h) * k2));
    const State k4 = rhs(State(y + h * k3));
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Integrates from times.front() through every entry of `times`, handing each
/// sample (including the initial one) to `observe(index, state)`. `project`
/// runs after every step.
template <class State, class Rhs, class Project, class Observe>
void integrate_grid(State y, const std::vector<double>& times, double h_max, Rhs&& rhs,
                    Project&& project, Observe&& observe) {
    observe(std::size_t{0}, y);
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double interval = times[k] - times[k - 1];
        const int n = substeps(interval, h_max);
        const double h = interval / n;
        for (int s = 0; s < n; ++s) {
            y = rk4_step(y, h, rhs);
            project(y);
        }
        observe(k, y);
    }
}

} // namespace twomode
