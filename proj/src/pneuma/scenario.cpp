#include "smartcup/pneuma/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>

#include "smartcup/common/rng.hpp"
#include "smartcup/pneuma/sensor.hpp"

namespace smartcup::pneuma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kArcPoints = 16;  // lip samples per chamber arc

double deg2rad(double d) { return d * kPi / 180.0; }

double arc_azimuth_rad(int chamber, int j) {
    const double start = kChamberCenterDeg[chamber] - 45.0;
    return deg2rad(start + (j + 0.5) * 90.0 / kArcPoints);
}

// Split each quadrant's leak between its own chamber (vertical inflow) and
// the diagonal chamber (inward under-lip stream) and sum per destination.
std::array<double, 4> route_leaks(const std::array<double, 4>& g,
                                  const std::array<double, 4>& vertical_share) {
    std::array<double, 4> eff{};
    for (int q = 0; q < 4; ++q) {
        eff[q] += g[q] * vertical_share[q];
        eff[diagonal_of(q)] += g[q] * (1.0 - vertical_share[q]);
    }
    return eff;
}

// Per-step scenario model: fills leak conductances (already routed), ground
// truth contact, and the noiseless wrench.
using ModelFn = std::function<void(double t, const CupNetwork& net,
                                   std::array<double, 4>& lip_g,
                                   std::array<double, 4>& contact,
                                   std::array<double, 6>& wrench)>;

Trace simulate(const Scenario& s, const CupConfig& cfg, std::uint64_t seed,
               double vacuum_on_t, const ModelFn& model,
               const std::function<void(double, Trace&)>& extra_sample = nullptr) {
    CupNetwork net = build_network(cfg);
    ValveState valve = ValveState::closed(cfg.valve);
    const double active_duty = s.mode == VacuumMode::Full ? 1.0 : cfg.valve.duty;
    Rng rng = Rng::for_trial(seed, 0);
    SensorModel sensor{cfg.sensor};

    Trace tr;
    tr.meta.scenario = s.kind;
    tr.meta.mode = s.mode;
    tr.meta.seed = seed;

    const int n_samples = static_cast<int>(std::llround(s.duration_s / kSamplePeriod));
    std::array<double, 4> lip_g{}, contact{};
    std::array<double, 6> wrench{};
    bool vacuum_on = false;

    for (int k = 0; k < n_samples; ++k) {
        const double t = k * kSamplePeriod;
        model(t, net, lip_g, contact, wrench);

        std::array<double, 4> pv;
        for (int i = 0; i < 4; ++i) pv[i] = sensor.sample(net.vacuum(i), rng);
        std::array<double, 6> ft = wrench;
        if (cfg.sensor.noise_enabled) {
            for (int i = 0; i < 3; ++i) ft[i] += cfg.ft_noise_force * rng.gaussian();
            for (int i = 3; i < 6; ++i) ft[i] += cfg.ft_noise_torque * rng.gaussian();
        }
        for (int i = 0; i < 4; ++i) contact[i] = std::clamp(contact[i], 0.0, 1.0);
        tr.push_sample(t, pv, ft, contact);
        if (extra_sample) extra_sample(t, tr);

        for (int j = 0; j < kStepsPerSample; ++j) {
            const double tt = t + j * kSimDt;
            if (!vacuum_on && tt + 0.5 * kSimDt >= vacuum_on_t) {
                valve.duty = active_duty;
                valve.t = 0.0;  // PWM phase starts when the vacuum engages
                vacuum_on = true;
            }
            model(tt, net, lip_g, contact, wrench);
            step(net, valve, lip_g);
        }
    }
    return tr;
}

// ---- texture ---------------------------------------------------------------

Trace run_texture(const Scenario& s, const TextureParams& p, std::uint64_t seed,
                  const CupConfig& cfg) {
    const double g = cfg.grit_conductance(p.grit);  // throws on unknown grit
    auto model = [&cfg, g](double, const CupNetwork& net, std::array<double, 4>& lip,
                           std::array<double, 4>& c, std::array<double, 6>& w) {
        lip = {g, g, g, g};
        c = {1.0, 1.0, 1.0, 1.0};
        double pv = 0.0;
        for (int i = 0; i < 4; ++i) pv += net.vacuum(i);
        w = {0.0, 0.0, 0.5 + 0.25 * pv * cfg.cup_area_m2, 0.0, 0.0, 0.0};
    };
    Trace tr = simulate(s, cfg, seed, 0.3, model);
    tr.meta.params = {{"grit", p.grit}, {"t_vacuum_on", 0.3}};
    return tr;
}

// ---- slide -----------------------------------------------------------------

Trace run_slide(const Scenario& s, const SlideParams& p, std::uint64_t seed,
                const CupConfig& cfg) {
    const double g_tex = p.surfaces == "ribbed" ? cfg.g_surface_ribbed
                       : p.surfaces == "wavy"   ? cfg.g_surface_wavy
                                                : throw std::invalid_argument(
                                                      "slide: unknown surface pair '" +
                                                      p.surfaces + "'");
    const double t_on = 0.6;
    const double t_slide = 1.1;
    const double r = cfg.lip_radius_m;

    auto model = [&, g_tex](double t, const CupNetwork& net, std::array<double, 4>& lip,
                            std::array<double, 4>& c, std::array<double, 6>& w) {
        const double xc = p.speed_m_s * std::max(0.0, t - t_slide);
        std::array<double, 4> g{}, vshare{};
        for (int q = 0; q < 4; ++q) {
            double gsum = 0.0;
            int on_plate = 0;
            for (int j = 0; j < kArcPoints; ++j) {
                const double x = xc + r * std::cos(arc_azimuth_rad(q, j));
                if (x < 0.0) {
                    gsum += cfg.g_offplate;
                } else {
                    gsum += x < p.texture_len_m ? g_tex : cfg.g_surface_smooth;
                    ++on_plate;
                }
            }
            g[q] = gsum / kArcPoints;
            c[q] = static_cast<double>(on_plate) / kArcPoints;
            vshare[q] = std::clamp(g[q] / cfg.g_vertical_threshold, 0.0, 1.0);
        }
        lip = route_leaks(g, vshare);
        double pv = 0.0;
        for (int i = 0; i < 4; ++i) pv += net.vacuum(i);
        const double fz = 0.5 + 0.25 * pv * cfg.cup_area_m2;
        w = {0.2 * fz, 0.0, fz, 0.0, 0.0, 0.0};
        (void)net;
    };

    Trace tr = simulate(s, cfg, seed, t_on, model);
    tr.meta.params = {{"surfaces", p.surfaces},
                      {"speed_m_s", p.speed_m_s},
                      {"t_vacuum_on", t_on},
                      {"t_slide_start", t_slide},
                      {"t_full_texture", t_slide + r / p.speed_m_s},
                      {"t_texture_smooth", t_slide + p.texture_len_m / p.speed_m_s},
                      {"t_fully_smooth", t_slide + (p.texture_len_m + r) / p.speed_m_s}};
    return tr;
}

// ---- palpate ---------------------------------------------------------------

Trace run_palpate(const Scenario& s, const PalpateParams& p, std::uint64_t seed,
                  const CupConfig& cfg) {
    const double rp = cfg.palp_radius_m;
    const double base_gap = rp * rp / (2.0 * p.tip_radius_m) -
                            p.preload_n / cfg.palp_stiffness;
    const double tilt = rp * std::tan(deg2rad(p.angle_deg));

    // Static contact: precompute the per-quadrant leak once.
    std::array<double, 4> g{}, cq{}, vshare{};
    for (int q = 0; q < 4; ++q) {
        double acc = 0.0;
        int sealed = 0;
        for (int j = 0; j < kArcPoints; ++j) {
            const double gap = std::max(0.0, base_gap + tilt * std::cos(arc_azimuth_rad(q, j)));
            const double u = gap / cfg.palp_gap_ref_m;
            acc += u * u * u;
            if (gap < 2e-4) ++sealed;
        }
        g[q] = cfg.palp_g_floor + cfg.palp_g_scale * acc / kArcPoints;
        cq[q] = static_cast<double>(sealed) / kArcPoints;
        vshare[q] = std::clamp(g[q] / cfg.g_vertical_threshold, 0.0, 1.0);
    }
    const auto lip_static = route_leaks(g, vshare);

    auto model = [&, lip_static, cq](double, const CupNetwork& net,
                                     std::array<double, 4>& lip, std::array<double, 4>& c,
                                     std::array<double, 6>& w) {
        lip = lip_static;
        c = cq;
        double pv = 0.0;
        for (int i = 0; i < 4; ++i) pv += net.vacuum(i);
        w = {0.0, 0.0, p.preload_n + 0.25 * pv * cfg.cup_area_m2, 0.0,
             cfg.wrench_k_rot * deg2rad(p.angle_deg), 0.0};
    };

    Trace tr = simulate(s, cfg, seed, 0.3, model);
    tr.meta.params = {{"tip_radius_m", p.tip_radius_m},
                      {"angle_deg", p.angle_deg},
                      {"preload_n", p.preload_n},
                      {"t_vacuum_on", 0.3}};
    return tr;
}

// ---- detach ----------------------------------------------------------------

struct DetachModel {
    const CupConfig& cfg;
    DetachParams p;
    std::array<double, 3> axis{};
    double omega_rad = 0.0;
    double collapse_t = -1.0;  // time the overall vacuum gave out

    explicit DetachModel(const CupConfig& c, const DetachParams& dp) : cfg(c), p(dp) {
        const double psi = deg2rad(detach_axis_azimuth_deg(p.theta_deg));
        const double el = deg2rad(p.phi_deg);
        axis = {std::cos(el) * std::cos(psi), std::cos(el) * std::sin(psi), std::sin(el)};
        omega_rad = deg2rad(p.omega_deg_s);
    }

    double beta(double t) const { return omega_rad * std::max(0.0, t - p.preroll_s); }
    double yaw(double t) const { return beta(t) * axis[2]; }
    std::array<double, 2> translation_xy(double t) const {
        const double tw = std::max(0.0, t - p.preroll_s);
        return {p.velocity_m_s[0] * tw, p.velocity_m_s[1] * tw};
    }

    void operator()(double t, const CupNetwork& net, std::array<double, 4>& lip,
                    std::array<double, 4>& c, std::array<double, 6>& w) {
        const double tw = std::max(0.0, t - p.preroll_s);
        const double b = beta(t);
        const double sb = std::sin(b), cb = std::cos(b);
        const double dz = p.velocity_m_s[2] * tw;
        const double r = cfg.lip_radius_m;

        std::array<double, 4> g{}, vshare{};
        double pv_mean = 0.0;
        for (int i = 0; i < 4; ++i) pv_mean += 0.25 * net.vacuum(i);

        for (int q = 0; q < 4; ++q) {
            const double hold = std::max(0.0, net.vacuum(q)) * (cfg.cup_area_m2 / 4.0) /
                                cfg.lip_stiffness;
            double gap_acc = 0.0;
            for (int j = 0; j < kArcPoints; ++j) {
                const double a = arc_azimuth_rad(q, j);
                const double sa = std::sin(a), ca = std::cos(a);
                const double z_rot = r * (sb * (axis[0] * sa - axis[1] * ca) +
                                          axis[2] * (1.0 - cb) * (axis[0] * ca + axis[1] * sa));
                gap_acc += std::max(0.0, z_rot + dz - hold);
            }
            const double gap = gap_acc / kArcPoints;
            const double u = std::min(gap / cfg.gap_max_m, 1.0);
            g[q] = cfg.g_lip_max * std::pow(u, cfg.peel_exponent);
            c[q] = std::clamp(1.0 - gap / cfg.gap_max_m, 0.0, 1.0);
            // Peeling flow enters under the lip and crosses to the diagonal
            // chamber; once the quadrant is fully open it vents in place.
            const double horiz = cfg.horizontal_diag_weight *
                                 std::clamp(2.0 - gap / cfg.gap_max_m, 0.0, 1.0);
            vshare[q] = 1.0 - horiz;
        }
        lip = route_leaks(g, vshare);

        // Total vacuum loss releases the stretched cup everywhere.
        if (collapse_t < 0.0 && t > p.preroll_s && pv_mean < 2000.0) collapse_t = t;
        if (collapse_t >= 0.0) {
            const double rel = std::clamp(1.0 - (t - collapse_t) / 0.15, 0.0, 1.0);
            for (int q = 0; q < 4; ++q) c[q] *= rel;
        }

        double c_mean = 0.0;
        for (int q = 0; q < 4; ++q) c_mean += 0.25 * c[q];
        const auto dxy = translation_xy(t);
        w[0] = c_mean * (cfg.wrench_k_lin * dxy[0] + cfg.wrench_c_lin * p.velocity_m_s[0]);
        w[1] = c_mean * (cfg.wrench_k_lin * dxy[1] + cfg.wrench_c_lin * p.velocity_m_s[1]);
        w[2] = c_mean * (4.41 + cfg.wrench_k_lin * dz + cfg.wrench_c_lin * p.velocity_m_s[2]);
        const double wmag = tw > 0.0 ? omega_rad : 0.0;
        for (int i = 0; i < 3; ++i)
            w[3 + i] = c_mean * (cfg.wrench_k_rot * b + cfg.wrench_c_rot * wmag) * axis[i];
    }
};

Trace run_detach(const Scenario& s, const DetachParams& p, std::uint64_t seed,
                 const CupConfig& cfg) {
    auto shared = std::make_shared<DetachModel>(cfg, p);
    auto model = [shared](double t, const CupNetwork& net, std::array<double, 4>& lip,
                          std::array<double, 4>& c, std::array<double, 6>& w) {
        (*shared)(t, net, lip, c, w);
    };
    constexpr double kPxPerM = 48.0 / 0.015;
    constexpr double kRingDriftRatio = 0.15;  // contact line moves less than the arm
    auto extra = [shared](double t, Trace& tr) {
        tr.yaw.push_back(shared->yaw(t));
        const auto dxy = shared->translation_xy(t);
        tr.center_px.push_back({64.0 + kRingDriftRatio * kPxPerM * dxy[0],
                                64.0 + kRingDriftRatio * kPxPerM * dxy[1]});
    };
    Trace tr = simulate(s, cfg, seed, 0.0, model, extra);
    tr.meta.params = {{"phi_deg", p.phi_deg},
                      {"theta_deg", p.theta_deg},
                      {"omega_deg_s", p.omega_deg_s},
                      {"velocity_m_s", p.velocity_m_s},
                      {"preroll_s", p.preroll_s}};
    return tr;
}

} // namespace

double detach_axis_azimuth_deg(double theta_deg) { return theta_deg + 135.0; }

Trace run_scenario(const Scenario& s, std::uint64_t seed, const CupConfig& cfg) {
    cfg.validate();
    if (s.kind == "texture") return run_texture(s, std::get<TextureParams>(s.params), seed, cfg);
    if (s.kind == "slide") return run_slide(s, std::get<SlideParams>(s.params), seed, cfg);
    if (s.kind == "palpate") return run_palpate(s, std::get<PalpateParams>(s.params), seed, cfg);
    if (s.kind == "detach") return run_detach(s, std::get<DetachParams>(s.params), seed, cfg);
    throw std::invalid_argument("unknown scenario kind '" + s.kind + "'");
}

} // namespace smartcup::pneuma
