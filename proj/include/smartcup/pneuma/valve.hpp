#pragma once

#include "smartcup/pneuma/config.hpp"

namespace smartcup::pneuma {

// Solenoid valve under PWM. The opening follows a first-order lag toward the
// commanded square wave, with separate rise and fall time constants.
struct ValveState {
    double duty = 0.3;
    double frequency_hz = 30.0;
    double t_on = 3.5e-3;
    double t_off = 2.0e-3;
    double open_fraction = 0.0;
    double t = 0.0;  // time within the run, drives the PWM phase

    static ValveState from_config(const ValveConfig& cfg);

    static ValveState full_open(const ValveConfig& cfg) {
        ValveState v = from_config(cfg);
        v.duty = 1.0;
        v.open_fraction = 1.0;
        return v;
    }
    static ValveState closed(const ValveConfig& cfg) {
        ValveState v = from_config(cfg);
        v.duty = 0.0;
        v.open_fraction = 0.0;
        return v;
    }
    static ValveState pwm(const ValveConfig& cfg) { return from_config(cfg); }

    /// Commanded square wave at time tt.
    double target(double tt) const {
        if (duty >= 1.0) return 1.0;
        if (duty <= 0.0) return 0.0;
        const double period = 1.0 / frequency_hz;
        double ph = std::fmod(tt, period);
        if (ph < 0) ph += period;
        return ph < duty * period ? 1.0 : 0.0;
    }

    /// Advance by dt using the exact exponential solution, splitting at PWM
    /// edges inside the interval. Returns the new open fraction.
    double advance(double dt);
};

/// Open fractions at the three RK4 sample offsets (0, dt/2, dt) for the step
/// starting at the valve's current time. Advances the valve by dt.
struct ValveSamples {
    double at0, at_half, at1;
};
ValveSamples sample_and_advance(ValveState& v, double dt);

} // namespace smartcup::pneuma
