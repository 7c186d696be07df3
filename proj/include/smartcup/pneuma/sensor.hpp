#pragma once

#include <cmath>

#include "smartcup/common/rng.hpp"
#include "smartcup/pneuma/config.hpp"

namespace smartcup::pneuma {

// Pressure transducer front-end: additive Gaussian noise, then quantization
// to the ADC resolution. Every emitted sample is an integer count times the
// resolution.
struct SensorModel {
    SensorConfig cfg;

    double sample(double true_value_pa, Rng& rng) const {
        double v = true_value_pa;
        if (cfg.noise_enabled) v += cfg.noise_rms_pa * rng.gaussian();
        return std::round(v / cfg.resolution_pa) * cfg.resolution_pa;
    }
};

} // namespace smartcup::pneuma
