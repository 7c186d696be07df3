#pragma once

#include <cstdint>
#include <variant>

#include "smartcup/pneuma/network.hpp"
#include "smartcup/pneuma/trace.hpp"

namespace smartcup::pneuma {

struct TextureParams {
    int grit = 400;
};

struct SlideParams {
    std::string surfaces = "wavy";  // wavy | ribbed; paired with a smooth zone
    double speed_m_s = 6.5e-3;
    double texture_len_m = 0.035;
};

struct PalpateParams {
    double tip_radius_m = 0.011;
    double angle_deg = 0.0;
    double preload_n = 1.0;
};

struct DetachParams {
    double phi_deg = 0.0;    // twist-axis elevation from the plate plane
    double theta_deg = 0.0;  // twist-axis azimuth step around the plate normal
    double omega_deg_s = 30.0;
    std::array<double, 3> velocity_m_s = {0.0, 0.0, 0.012};
    double preroll_s = 0.4;  // sealed hold before the twist starts
};

struct Scenario {
    std::string kind;  // texture | slide | palpate | detach
    VacuumMode mode = VacuumMode::Full;
    double duration_s = 3.0;
    std::variant<TextureParams, SlideParams, PalpateParams, DetachParams> params;

    static Scenario texture(int grit, VacuumMode mode) {
        return {"texture", mode, 3.0, TextureParams{grit}};
    }
    static Scenario slide(const std::string& surfaces) {
        Scenario s{"slide", VacuumMode::Pwm, 9.6, SlideParams{}};
        std::get<SlideParams>(s.params).surfaces = surfaces;
        return s;
    }
    static Scenario palpate(double tip_radius_m, double angle_deg, double preload_n) {
        return {"palpate", VacuumMode::Pwm, 3.5,
                PalpateParams{tip_radius_m, angle_deg, preload_n}};
    }
    static Scenario detach(const DetachParams& p, double duration_s = 1.8) {
        return {"detach", VacuumMode::Full, duration_s, p};
    }
};

/// Expand the scenario into leak/contact/wrench schedules and simulate on the
/// fixed integrator grid, sampling sensors every 6 ms. Deterministic in
/// (config, scenario, seed).
Trace run_scenario(const Scenario& s, std::uint64_t seed, const CupConfig& cfg);

/// Azimuth of the twist axis in the plate plane for detach parameters;
/// theta = 0 peels quadrant 2 first (and its diagonal chamber 4 sees the
/// fastest vacuum drop).
double detach_axis_azimuth_deg(double theta_deg);

} // namespace smartcup::pneuma
