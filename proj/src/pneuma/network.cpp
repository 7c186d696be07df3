#include "smartcup/pneuma/network.hpp"

#include <algorithm>
#include <cmath>

namespace smartcup::pneuma {

double mass_flow(double g, double p_from, double p_to, double eps_pa) {
    const double dp = p_from - p_to;
    const double a = std::fabs(dp);
    if (a < eps_pa) return g * dp / std::sqrt(eps_pa);
    return g * (dp > 0 ? 1.0 : -1.0) * std::sqrt(a);
}

CupNetwork build_network(const CupConfig& config) {
    config.validate();
    CupNetwork net;
    net.config = config;

    auto& n = net.nodes;
    n[CupNetwork::kPlenum] = {kAtmPa, config.plenum_volume, NodeKind::Plenum, "plenum"};
    for (int i = 0; i < 4; ++i)
        n[CupNetwork::kChamber0 + i] = {kAtmPa, config.chamber_volume, NodeKind::Chamber,
                                        "chamber" + std::to_string(i + 1)};
    n[CupNetwork::kAmbient] = {kAtmPa, 0.0, NodeKind::Ambient, "ambient"};
    n[CupNetwork::kSource] = {kAtmPa - config.source_vacuum, 0.0, NodeKind::Source, "source"};

    for (int i = 0; i < 4; ++i)
        net.edges.push_back({CupNetwork::kChamber0 + i, CupNetwork::kPlenum,
                             config.g_neck, EdgeKind::Neck});
    for (int i = 0; i < 4; ++i)
        net.edges.push_back({CupNetwork::kAmbient, CupNetwork::kChamber0 + i,
                             0.0, EdgeKind::LipLeak});
    for (int i = 0; i < 4; ++i)  // ring: 1-2, 2-3, 3-4, 4-1
        net.edges.push_back({CupNetwork::kChamber0 + i,
                             CupNetwork::kChamber0 + (i + 1) % 4,
                             config.g_crosstalk, EdgeKind::Crosstalk});
    net.edges.push_back({CupNetwork::kSource, CupNetwork::kPlenum, config.g_tube,
                         EdgeKind::Tube});
    net.edges.push_back({CupNetwork::kAmbient, CupNetwork::kPlenum, config.g_vent,
                         EdgeKind::Vent});
    return net;
}

std::array<double, CupNetwork::kNodeCount> CupNetwork::net_inflow(
    const std::array<double, 4>& lip_g, double open_fraction) const {
    std::array<double, kNodeCount> inflow{};
    const double eps = config.flow_eps_pa;
    for (const auto& e : edges) {
        double g = e.g;
        switch (e.kind) {
            case EdgeKind::LipLeak: g = lip_g[e.to - kChamber0]; break;
            case EdgeKind::Tube: g = e.g * open_fraction; break;
            case EdgeKind::Vent: g = e.g * (1.0 - open_fraction); break;
            default: break;
        }
        if (g == 0.0) continue;
        const double q = mass_flow(g, nodes[e.from].pressure, nodes[e.to].pressure, eps);
        inflow[e.from] -= q;
        inflow[e.to] += q;
    }
    return inflow;
}

namespace {

using State = std::array<double, 5>;  // plenum + 4 chambers

State get_state(const CupNetwork& net) {
    State s;
    s[0] = net.nodes[CupNetwork::kPlenum].pressure;
    for (int i = 0; i < 4; ++i) s[1 + i] = net.nodes[CupNetwork::kChamber0 + i].pressure;
    return s;
}

void set_state(CupNetwork& net, const State& s) {
    net.nodes[CupNetwork::kPlenum].pressure = s[0];
    for (int i = 0; i < 4; ++i) net.nodes[CupNetwork::kChamber0 + i].pressure = s[1 + i];
}

State derivative(CupNetwork& net, const State& s, const std::array<double, 4>& lip_g,
                 double open_fraction) {
    set_state(net, s);
    const auto inflow = net.net_inflow(lip_g, open_fraction);
    State d;
    d[0] = kGasRT / net.nodes[CupNetwork::kPlenum].volume * inflow[CupNetwork::kPlenum];
    for (int i = 0; i < 4; ++i)
        d[1 + i] = kGasRT / net.nodes[CupNetwork::kChamber0 + i].volume *
                   inflow[CupNetwork::kChamber0 + i];
    return d;
}

} // namespace

void step(CupNetwork& net, ValveState& valve, const std::array<double, 4>& lip_g,
          double dt) {
    for (double g : lip_g)
        if (g < 0) throw std::invalid_argument("step: negative lip conductance");

    const ValveSamples vs = sample_and_advance(valve, dt);
    const State y0 = get_state(net);

    const State k1 = derivative(net, y0, lip_g, vs.at0);
    State y;
    for (int i = 0; i < 5; ++i) y[i] = y0[i] + 0.5 * dt * k1[i];
    const State k2 = derivative(net, y, lip_g, vs.at_half);
    for (int i = 0; i < 5; ++i) y[i] = y0[i] + 0.5 * dt * k2[i];
    const State k3 = derivative(net, y, lip_g, vs.at_half);
    for (int i = 0; i < 5; ++i) y[i] = y0[i] + dt * k3[i];
    const State k4 = derivative(net, y, lip_g, vs.at1);

    State y1;
    for (int i = 0; i < 5; ++i) {
        y1[i] = y0[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (std::fabs(y1[i] - y0[i]) > 5000.0)
            throw IntegratorError("step: |dP| > 5 kPa in one step; conductances too "
                                  "large for dt");
    }
    set_state(net, y1);
}

SteadyResult steady_state(CupNetwork net, ValveState valve,
                          const std::array<double, 4>& lip_g) {
    constexpr double kTolPaPerS = 0.1;
    constexpr double kMaxSimTime = 10.0;

    double t = 0.0;
    double max_dpdt = 0.0;
    while (true) {
        const State s = get_state(net);
        const State d = derivative(net, s, lip_g, valve.open_fraction);
        set_state(net, s);
        max_dpdt = 0.0;
        for (double v : d) max_dpdt = std::max(max_dpdt, std::fabs(v));
        if (max_dpdt < kTolPaPerS) break;
        if (t >= kMaxSimTime)
            throw IntegratorError("steady_state: no convergence after 10 s; residual " +
                                  std::to_string(max_dpdt) + " Pa/s");
        step(net, valve, lip_g);
        t += kSimDt;
    }

    SteadyResult r;
    for (int i = 0; i < 4; ++i) {
        r.chamber_pressure[i] = net.chamber_pressure(i);
        r.p_vac[i] = net.vacuum(i);
    }
    r.plenum_pressure = net.nodes[CupNetwork::kPlenum].pressure;
    r.sim_time = t;
    r.max_dpdt = max_dpdt;
    const auto inflow = net.net_inflow(lip_g, valve.open_fraction);
    double residual = 0.0;
    for (int i = 0; i <= 4; ++i) residual += inflow[i];
    r.mass_residual = residual;
    return r;
}

} // namespace smartcup::pneuma
