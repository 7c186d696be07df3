#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace smartcup::pneuma {

enum class VacuumMode { Full, Pwm };

inline std::string to_string(VacuumMode m) { return m == VacuumMode::Full ? "full" : "pwm"; }

struct TraceMeta {
    std::string scenario;          // texture | slide | palpate | detach
    VacuumMode mode = VacuumMode::Full;
    std::uint64_t seed = 0;
    nlohmann::json params;         // scenario-specific details
};

// Time-aligned multichannel record on the 6 ms sensor timeline. Pressures
// are vacuum values (ambient minus chamber, Pa), already noise+quantized.
struct Trace {
    std::vector<double> t;
    std::array<std::vector<double>, 4> p_vac;
    std::array<std::vector<double>, 6> ft;       // fx fy fz tx ty tz
    std::array<std::vector<double>, 4> contact;  // ground truth, [0,1]
    TraceMeta meta;

    // Extra detach bookkeeping, not part of the CSV contract: cup yaw (rad)
    // and seal-ring center drift (px) per sample, for frame rendering.
    std::vector<double> yaw;
    std::vector<std::array<double, 2>> center_px;

    std::size_t size() const { return t.size(); }

    void push_sample(double time, const std::array<double, 4>& p,
                     const std::array<double, 6>& wrench,
                     const std::array<double, 4>& c) {
        t.push_back(time);
        for (int i = 0; i < 4; ++i) p_vac[i].push_back(p[i]);
        for (int i = 0; i < 6; ++i) ft[i].push_back(wrench[i]);
        for (int i = 0; i < 4; ++i) contact[i].push_back(c[i]);
    }

    /// `t,p1..p4,fx..tz,c1..c4` with fixed formatting (byte-stable reruns).
    void save_csv(const std::string& path) const;
    static Trace load_csv(const std::string& path);

    void save_meta(const std::string& path) const;
    void load_meta(const std::string& path);
};

} // namespace smartcup::pneuma
