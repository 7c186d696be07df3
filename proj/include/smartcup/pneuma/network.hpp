#pragma once

#include <array>
#include <string>
#include <vector>

#include "smartcup/pneuma/config.hpp"
#include "smartcup/pneuma/valve.hpp"

namespace smartcup::pneuma {

enum class NodeKind { Plenum, Chamber, Ambient, Source };
enum class EdgeKind { Neck, Crosstalk, LipLeak, Tube, Vent };

struct GasNode {
    double pressure = kAtmPa;  // absolute, Pa
    double volume = 0.0;       // m^3; boundary nodes carry 0
    NodeKind kind = NodeKind::Ambient;
    std::string label;
};

struct FlowEdge {
    int from = 0;
    int to = 0;
    double g = 0.0;  // kg s^-1 Pa^-1/2
    EdgeKind kind = EdgeKind::Neck;
};

/// Orifice mass flow from `p_from` toward `p_to`:
/// g * sign(dp) * sqrt(|dp|), linearized below eps_pa so the ODE stays
/// Lipschitz at equal pressures. Antisymmetric in its endpoints.
double mass_flow(double g, double p_from, double p_to, double eps_pa = 100.0);

struct IntegratorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Node order: 0 plenum, 1..4 chambers, 5 ambient, 6 source.
struct CupNetwork {
    static constexpr int kPlenum = 0;
    static constexpr int kChamber0 = 1;
    static constexpr int kAmbient = 5;
    static constexpr int kSource = 6;
    static constexpr int kNodeCount = 7;

    std::array<GasNode, kNodeCount> nodes;
    std::vector<FlowEdge> edges;  // 4 necks, 4 lip leaks, 4 crosstalk, tube, vent
    CupConfig config;

    double chamber_pressure(int i) const { return nodes[kChamber0 + i].pressure; }
    double vacuum(int i) const { return kAtmPa - chamber_pressure(i); }
    std::array<double, 4> vacuums() const {
        return {vacuum(0), vacuum(1), vacuum(2), vacuum(3)};
    }

    /// Net mass inflow per node (kg/s) for given lip conductances and valve
    /// opening; the basis of every derivative evaluation.
    std::array<double, kNodeCount> net_inflow(const std::array<double, 4>& lip_g,
                                              double open_fraction) const;
};

CupNetwork build_network(const CupConfig& config);

/// One fixed RK4 step of dt over the internal pressures. `lip_g` are the
/// per-chamber ambient leak conductances; the valve advances with the step.
/// Throws IntegratorError when any node moves more than 5 kPa in one step.
void step(CupNetwork& net, ValveState& valve, const std::array<double, 4>& lip_g,
          double dt = kSimDt);

struct SteadyResult {
    std::array<double, 4> chamber_pressure;  // absolute Pa
    std::array<double, 4> p_vac;
    double plenum_pressure = 0.0;
    double sim_time = 0.0;
    double max_dpdt = 0.0;          // Pa/s at exit
    double mass_residual = 0.0;     // net inflow over internal nodes, kg/s
};

/// Run with frozen leaks and valve until max |dP/dt| < 0.1 Pa/s, or fail
/// after 10 simulated seconds.
SteadyResult steady_state(CupNetwork net, ValveState valve,
                          const std::array<double, 4>& lip_g);

} // namespace smartcup::pneuma
