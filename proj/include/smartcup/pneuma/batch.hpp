#pragma once

#include <vector>

#include "smartcup/pneuma/scenario.hpp"

namespace smartcup::pneuma {

/// Detachment twist grid: phi in [0,180] step 22.5, theta in [0,330] step 30.
constexpr int kPhiCells = 9;
constexpr int kThetaCells = 12;
constexpr int kGridCells = kPhiCells * kThetaCells;

/// Deterministic detach parameters for one batch element: grid cell by
/// round-robin, jittered by up to half an increment, randomized twist rate,
/// translation velocity and preroll. Trial `i` of a batch of n draws from the
/// stream hash(seed, i), so parallel and serial generation agree.
DetachParams detach_params_for_trial(int trial_index, int n, std::uint64_t seed);

/// n detach traces covering the grid as evenly as possible (every cell gets
/// at least floor(n/108) repetitions). Each trace ends fully detached.
std::vector<Trace> sample_detach_batch(int n, std::uint64_t seed, const CupConfig& cfg,
                                       int threads = 1);

} // namespace smartcup::pneuma
