#include "smartcup/pneuma/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "smartcup/pneuma/config.hpp"

namespace smartcup::pneuma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEdgeSoftPx = 3.0;  // cosine falloff outside the flat band

double radial_profile(double rho) {
    const double d = std::fabs(rho - kRingRadiusPx);
    if (d <= kRingHalfWidthPx) return 1.0;
    const double e = d - kRingHalfWidthPx;
    if (e >= kEdgeSoftPx) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * e / kEdgeSoftPx));
}

double blended_contact(const std::array<double, 4>& c, double azimuth_deg,
                       double yaw_deg) {
    double u = std::fmod(azimuth_deg - yaw_deg - 90.0, 90.0);
    if (u < 0) u += 90.0;
    const int q = chamber_of_azimuth(azimuth_deg, yaw_deg);
    if (u < kBlendHalfDeg) {
        const int qn = (q + 3) % 4;
        const double w = 0.5 * (1.0 - std::cos(kPi * (u + kBlendHalfDeg) /
                                               (2.0 * kBlendHalfDeg)));
        return c[qn] + (c[q] - c[qn]) * w;
    }
    if (u > 90.0 - kBlendHalfDeg) {
        const int qn = (q + 1) % 4;
        const double w = 0.5 * (1.0 - std::cos(kPi * (90.0 - u + kBlendHalfDeg) /
                                               (2.0 * kBlendHalfDeg)));
        return c[qn] + (c[q] - c[qn]) * w;
    }
    return c[q];
}

} // namespace

Frame render_seal_frame(const std::array<double, 4>& contact,
                        const std::array<double, 2>& center_px, Rng& rng,
                        double yaw_rad, bool noise) {
    for (double v : contact)
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("render: contact values must be in [0,1]");
    if (center_px[0] < 0 || center_px[0] >= kFrameSize || center_px[1] < 0 ||
        center_px[1] >= kFrameSize)
        throw std::invalid_argument("render: center outside the raster");

    const double yaw_deg = yaw_rad * 180.0 / kPi;
    Frame f;
    for (int y = 0; y < kFrameSize; ++y) {
        for (int x = 0; x < kFrameSize; ++x) {
            const double dx = x - center_px[0];
            const double dy = y - center_px[1];
            const double rho = std::sqrt(dx * dx + dy * dy);
            double v = 0.0;
            const double rp = radial_profile(rho);
            if (rp > 0.0) {
                const double az = std::atan2(dy, dx) * 180.0 / kPi;
                v = rp * blended_contact(contact, az, yaw_deg);
            }
            if (noise) v += 0.02 * rng.gaussian();
            const int q = static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
            f.px[y * kFrameSize + x] = static_cast<std::uint8_t>(q);
        }
    }
    return f;
}

void Frame::save_pgm(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P5\n" << kFrameSize << ' ' << kFrameSize << "\n255\n";
    out.write(reinterpret_cast<const char*>(px.data()), px.size());
}

Frame Frame::load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (magic != "P5" || w != kFrameSize || h != kFrameSize || maxval != 255)
        throw std::runtime_error("unsupported PGM (want P5 128x128/255): " + path);
    in.get();  // single whitespace after header
    Frame f;
    in.read(reinterpret_cast<char*>(f.px.data()), f.px.size());
    if (!in) throw std::runtime_error("truncated PGM: " + path);
    return f;
}

} // namespace smartcup::pneuma
