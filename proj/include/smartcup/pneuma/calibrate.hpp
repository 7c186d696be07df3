#pragma once

#include <string>

#include "smartcup/pneuma/scenario.hpp"

namespace smartcup::pneuma {

struct CalibrationReport {
    CupConfig config;            // tuned result
    double sealed_pvac = 0.0;    // full vacuum, no leaks (structural: source level)
    double grit600_pvac = 0.0;   // target 74 kPa
    double grit120_pvac = 0.0;   // chosen 48 kPa anchor (no quoted value exists)
    double pwm_ratio_600 = 0.0;  // full/pwm mean ratio, target 25
    double pwm_ratio_120 = 0.0;
    double vertical_diff_pa = 0.0;  // single-leak chamber spread, target 400 Pa
    double horizontal_diff_pa = 0.0;

    std::string summary() const;
};

/// Bracketed scalar searches for the default conductances: uniform grit leaks
/// against the full-vacuum means, the ejector vent against the pwm/full mean
/// ratio, and the single-orifice leak against the inter-chamber spread.
CalibrationReport calibrate(CupConfig base);

/// Steady full-vacuum mean vacuum under a uniform per-chamber leak.
double steady_mean_vacuum(const CupConfig& cfg, double uniform_leak_g);

/// Mean vacuum of a texture run over its settled tail.
double texture_mean_vacuum(const CupConfig& cfg, int grit, VacuumMode mode);

/// max-min steady chamber vacuum for a single vertical orifice at chamber 0.
double vertical_leak_spread(const CupConfig& cfg, double leak_g);

} // namespace smartcup::pneuma
