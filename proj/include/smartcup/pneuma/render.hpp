#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "smartcup/common/rng.hpp"

namespace smartcup::pneuma {

constexpr int kFrameSize = 128;
constexpr double kRingRadiusPx = 48.0;
constexpr double kRingHalfWidthPx = 8.0;   // flat-top band half width
constexpr double kBlendHalfDeg = 5.0;      // cosine blend across quadrant seams

// 8-bit grayscale raster of the seal ring.
struct Frame {
    std::array<std::uint8_t, kFrameSize * kFrameSize> px{};
    int index = 0;
    double t = 0.0;

    std::uint8_t at(int x, int y) const { return px[y * kFrameSize + x]; }

    void save_pgm(const std::string& path) const;
    static Frame load_pgm(const std::string& path);
};

/// Render the ring: band intensity at azimuth a equals the contact value of
/// the quadrant owning a (cosine-blended across seams, rotated by yaw), with
/// additive pixel noise of sigma 0.02 full scale. Throws when the center is
/// outside the raster.
Frame render_seal_frame(const std::array<double, 4>& contact,
                        const std::array<double, 2>& center_px, Rng& rng,
                        double yaw_rad = 0.0, bool noise = true);

} // namespace smartcup::pneuma
