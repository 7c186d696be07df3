#include "smartcup/pneuma/valve.hpp"

#include <algorithm>
#include <limits>

namespace smartcup::pneuma {

namespace {

ValveState base_from(const ValveConfig& cfg) {
    ValveState v;
    v.duty = cfg.duty;
    v.frequency_hz = cfg.frequency_hz;
    v.t_on = cfg.t_on;
    v.t_off = cfg.t_off;
    return v;
}

// Next PWM edge strictly after tt, or +inf when the command is constant.
double next_edge(const ValveState& v, double tt) {
    if (v.duty <= 0.0 || v.duty >= 1.0) return std::numeric_limits<double>::infinity();
    const double period = 1.0 / v.frequency_hz;
    double ph = std::fmod(tt, period);
    if (ph < 0) ph += period;
    const double cycle_start = tt - ph;
    const double on_end = cycle_start + v.duty * period;
    if (ph < v.duty * period) return on_end;
    return cycle_start + period;
}

} // namespace

ValveState ValveState::from_config(const ValveConfig& cfg) { return base_from(cfg); }

double ValveState::advance(double dt) {
    double remaining = dt;
    while (remaining > 1e-15) {
        const double tgt = target(t);
        const double edge = next_edge(*this, t);
        const double seg = std::min(remaining, edge - t);
        const double tau = tgt > open_fraction ? t_on : t_off;
        open_fraction = tgt + (open_fraction - tgt) * std::exp(-seg / tau);
        t += seg;
        remaining -= seg;
    }
    open_fraction = std::clamp(open_fraction, 0.0, 1.0);
    return open_fraction;
}

ValveSamples sample_and_advance(ValveState& v, double dt) {
    ValveSamples s{};
    s.at0 = v.open_fraction;
    v.advance(0.5 * dt);
    s.at_half = v.open_fraction;
    v.advance(0.5 * dt);
    s.at1 = v.open_fraction;
    return s;
}

} // namespace smartcup::pneuma
