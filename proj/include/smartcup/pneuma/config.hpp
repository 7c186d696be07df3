#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace smartcup::pneuma {

constexpr double kAtmPa = 101325.0;
constexpr double kGasRT = 287.05 * 293.15;  // specific gas constant x temperature, Pa*m^3/kg
constexpr double kSimDt = 1e-4;             // integrator step, s
constexpr double kSamplePeriod = 6e-3;      // sensor timeline, s (60 sim steps)
constexpr double kSampleRateHz = 1000.0 / 6.0;
constexpr int kStepsPerSample = 60;

// Chamber layout around the lip, degrees. Chambers 1 and 2 sit on the -x
// (trailing) side, 3 and 4 on +x. Adjacent pairs share a wall; 1-3 and 2-4
// are diagonal.
constexpr std::array<double, 4> kChamberCenterDeg = {135.0, 225.0, 315.0, 45.0};

inline int diagonal_of(int chamber) { return (chamber + 2) % 4; }

/// Chamber index (0..3) owning azimuth `deg` once the cup yaw is removed.
inline int chamber_of_azimuth(double deg, double yaw_deg = 0.0) {
    double a = std::fmod(deg - yaw_deg - 90.0, 360.0);
    if (a < 0) a += 360.0;
    return static_cast<int>(a / 90.0) % 4;
}

struct ValveConfig {
    double frequency_hz = 30.0;
    double duty = 0.3;
    double t_on = 3.5e-3;   // first-order rise time constant, s
    double t_off = 2.0e-3;  // fall time constant, s
};

struct SensorConfig {
    double resolution_pa = 0.01;
    double noise_rms_pa = 5.0;
    bool noise_enabled = true;
};

// All conductances in kg s^-1 Pa^-1/2 (orifice law), volumes in m^3.
struct CupConfig {
    double chamber_volume = 1.5e-6;
    double plenum_volume = 4.0e-6;
    double g_neck = 1.8e-7;
    double g_crosstalk = 4.0e-8;
    double g_tube = 5.5e-7;
    double g_vent = 1.1e-6;       // ejector exhaust path, active while the valve is shut
    double source_vacuum = 85000.0;
    // Below this |dp| the orifice law is linearized; keeps the equilibrium
    // dynamics Lipschitz and inside the RK4 stability region at kSimDt for
    // the largest leak conductances in use.
    double flow_eps_pa = 100.0;

    // Default single-orifice leak used by the localization runs.
    double g_leak_single = 6.0e-9;
    // Fraction of a peeled-lip (horizontal) leak that lands on the chamber
    // diagonal to the orifice; the rest enters at the orifice itself.
    double horizontal_diag_weight = 0.8;

    // Grit -> uniform lip conductance endpoints; log-linear in grit number.
    double g_grit_120 = 1.0e-7;
    double g_grit_600 = 4.2e-8;

    // Slide surfaces.
    double g_surface_smooth = 2.0e-8;
    double g_surface_wavy = 1.0e-7;
    double g_surface_ribbed = 2.2e-7;
    double g_offplate = 3.0e-6;
    // Leak conductance below which residual flow is treated as an inward
    // (under-lip) stream feeding the diagonal chamber.
    double g_vertical_threshold = 1.0e-6;

    // Palpation.
    double lip_radius_m = 0.015;
    double palp_radius_m = 0.010;        // effective contact-line radius on the tip
    double palp_stiffness = 250.0;       // N/m of engagement depth
    double palp_gap_ref_m = 5.0e-4;      // cubic gap->conductance scale
    double palp_g_scale = 3.0e-8;
    double palp_g_floor = 8.0e-9;        // micro-leak of an engaged lip

    // Detachment / peel.
    double lip_stiffness = 3000.0;       // N/m, holds the lip down under vacuum
    double gap_max_m = 1.5e-3;           // gap at which lip conductance saturates
    double g_lip_max = 2.5e-6;           // per-quadrant saturated peel conductance
    double peel_exponent = 1.5;
    double cup_area_m2 = 4.5e-4;         // effective suction area

    // Wrench synthesis: linear spring-damper on the commanded twist.
    double wrench_k_lin = 600.0;   // N/m
    double wrench_c_lin = 8.0;     // N s/m
    double wrench_k_rot = 3.0;     // N m/rad
    double wrench_c_rot = 0.05;    // N m s/rad
    double ft_noise_force = 0.02;  // N rms
    double ft_noise_torque = 1e-3; // N m rms

    ValveConfig valve;
    SensorConfig sensor;

    void validate() const {
        if (chamber_volume <= 0 || plenum_volume <= 0)
            throw std::invalid_argument("cup config: volumes must be positive");
        for (double g : {g_neck, g_crosstalk, g_tube, g_vent, g_leak_single,
                         g_grit_120, g_grit_600, g_surface_smooth, g_surface_wavy,
                         g_surface_ribbed, g_offplate})
            if (g < 0 || !std::isfinite(g))
                throw std::invalid_argument("cup config: conductances must be >= 0");
        if (g_neck == 0 || g_tube == 0)
            throw std::invalid_argument("cup config: neck/tube conductance of 0 disconnects the graph");
        if (source_vacuum < 0 || source_vacuum > kAtmPa)
            throw std::invalid_argument("cup config: source vacuum out of range");
        if (flow_eps_pa <= 0)
            throw std::invalid_argument("cup config: flow_eps_pa must be positive");
    }

    /// Uniform lip conductance for a sandpaper grit; log-linear between the
    /// 120 and 600 endpoints, decreasing with smoothness.
    double grit_conductance(int grit) const {
        static constexpr std::array<int, 6> known = {120, 180, 240, 320, 400, 600};
        bool ok = false;
        for (int k : known) ok |= (k == grit);
        if (!ok) throw std::invalid_argument("unknown grit " + std::to_string(grit));
        const double f = (grit - 120.0) / (600.0 - 120.0);
        return g_grit_120 * std::pow(g_grit_600 / g_grit_120, f);
    }
};

// ---- JSON ------------------------------------------------------------------

inline void to_json(nlohmann::json& j, const ValveConfig& v) {
    j = {{"frequency_hz", v.frequency_hz}, {"duty", v.duty}, {"t_on", v.t_on}, {"t_off", v.t_off}};
}
inline void from_json(const nlohmann::json& j, ValveConfig& v) {
    j.at("frequency_hz").get_to(v.frequency_hz);
    j.at("duty").get_to(v.duty);
    j.at("t_on").get_to(v.t_on);
    j.at("t_off").get_to(v.t_off);
}
inline void to_json(nlohmann::json& j, const SensorConfig& s) {
    j = {{"resolution_pa", s.resolution_pa},
         {"noise_rms_pa", s.noise_rms_pa},
         {"noise_enabled", s.noise_enabled}};
}
inline void from_json(const nlohmann::json& j, SensorConfig& s) {
    j.at("resolution_pa").get_to(s.resolution_pa);
    j.at("noise_rms_pa").get_to(s.noise_rms_pa);
    j.at("noise_enabled").get_to(s.noise_enabled);
}

#define SMARTCUP_CFG_FIELDS(X)                                                   \
    X(chamber_volume) X(plenum_volume) X(g_neck) X(g_crosstalk) X(g_tube)        \
    X(g_vent) X(source_vacuum) X(flow_eps_pa) X(g_leak_single)                   \
    X(horizontal_diag_weight) X(g_grit_120) X(g_grit_600) X(g_surface_smooth)    \
    X(g_surface_wavy) X(g_surface_ribbed) X(g_offplate) X(g_vertical_threshold)  \
    X(lip_radius_m) X(palp_radius_m) X(palp_stiffness) X(palp_gap_ref_m)         \
    X(palp_g_scale) X(palp_g_floor) X(lip_stiffness) X(gap_max_m) X(g_lip_max)   \
    X(peel_exponent)                                                             \
    X(cup_area_m2) X(wrench_k_lin) X(wrench_c_lin) X(wrench_k_rot)               \
    X(wrench_c_rot) X(ft_noise_force) X(ft_noise_torque)

inline void to_json(nlohmann::json& j, const CupConfig& c) {
    j = nlohmann::json::object();
#define X(f) j[#f] = c.f;
    SMARTCUP_CFG_FIELDS(X)
#undef X
    j["valve"] = c.valve;
    j["sensor"] = c.sensor;
}
inline void from_json(const nlohmann::json& j, CupConfig& c) {
#define X(f) if (j.contains(#f)) j.at(#f).get_to(c.f);
    SMARTCUP_CFG_FIELDS(X)
#undef X
    if (j.contains("valve")) j.at("valve").get_to(c.valve);
    if (j.contains("sensor")) j.at("sensor").get_to(c.sensor);
    c.validate();
}
#undef SMARTCUP_CFG_FIELDS

} // namespace smartcup::pneuma
