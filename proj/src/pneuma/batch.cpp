#include "smartcup/pneuma/batch.hpp"

#include <stdexcept>
#include <thread>

namespace smartcup::pneuma {

DetachParams detach_params_for_trial(int trial_index, int n, std::uint64_t seed) {
    (void)n;
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial_index));
    const int cell = trial_index % kGridCells;
    const int phi_i = cell / kThetaCells;
    const int theta_i = cell % kThetaCells;

    DetachParams p;
    p.phi_deg = phi_i * 22.5 + rng.uniform(-11.25, 11.25);
    p.theta_deg = theta_i * 30.0 + rng.uniform(-15.0, 15.0);
    p.omega_deg_s = 30.0 + rng.uniform(-5.0, 5.0);
    p.velocity_m_s = {rng.uniform(-0.01, 0.01), rng.uniform(-0.01, 0.01),
                      rng.uniform(0.006, 0.02)};
    p.preroll_s = rng.uniform(0.3, 0.5);
    return p;
}

std::vector<Trace> sample_detach_batch(int n, std::uint64_t seed, const CupConfig& cfg,
                                       int threads) {
    if (n < 1) throw std::invalid_argument("detach batch: n must be >= 1");
    std::vector<Trace> out(n);

    auto worker = [&](int begin, int stride) {
        for (int i = begin; i < n; i += stride) {
            const DetachParams p = detach_params_for_trial(i, n, seed);
            out[i] = run_scenario(Scenario::detach(p), seed + 1000003ULL * i, cfg);
            out[i].meta.params["trial"] = i;
        }
    };

    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& th : pool) th.join();
    }
    return out;
}

} // namespace smartcup::pneuma
