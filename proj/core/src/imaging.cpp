#include "projinv/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace projinv {

AnalyticField::AnalyticField(std::vector<GaussianBump> bumps) : bumps_(std::move(bumps)) {
    for (const GaussianBump& b : bumps_)
        if (!(b.width > 0)) throw std::invalid_argument("GaussianBump width must be positive");
}

double AnalyticField::value(double x, double y) const {
    double u = 0.0;
    for (const GaussianBump& b : bumps_) {
        const double dx = x - b.cx, dy = y - b.cy;
        u += b.amplitude * std::exp(-(dx * dx + dy * dy) / (b.width * b.width));
    }
    return u;
}

std::array<double, 2> AnalyticField::gradient(double x, double y) const {
    double gx = 0.0, gy = 0.0;
    for (const GaussianBump& b : bumps_) {
        const double dx = x - b.cx, dy = y - b.cy;
        const double s2 = b.width * b.width;
        const double e = b.amplitude * std::exp(-(dx * dx + dy * dy) / s2);
        gx += e * (-2.0 * dx / s2);
        gy += e * (-2.0 * dy / s2);
    }
    return {gx, gy};
}

namespace {
/// Adjugate as a homography: represents the inverse map (projectively equal
/// to H^{-1}, and the affine rational map is scale-invariant).
Homography<double> inverse_map(const Homography<double>& h) {
    auto adj = h.adjugate();
    return Homography<double>::from_rows(adj[0], adj[1], adj[2]);
}
}  // namespace

PullbackField::PullbackField(const Homography<double>& h, AnalyticField base)
    : inverse_(inverse_map(h)), base_(std::move(base)) {}

double PullbackField::value(double x, double y) const {
    auto [sx, sy] = apply_point(inverse_, x, y);
    return base_.value(sx, sy);
}

std::array<double, 2> PullbackField::gradient(double x, double y) const {
    auto [sx, sy] = apply_point(inverse_, x, y);
    std::array<double, 2> g = base_.gradient(sx, sy);
    auto j = map_jacobian(inverse_, x, y);
    return {g[0] * j[0][0] + g[1] * j[1][0], g[0] * j[0][1] + g[1] * j[1][1]};
}

bool PullbackField::in_domain(double x, double y) const {
    return w_at(inverse_, x, y) != 0.0;
}

// ---------------------------------------------------------------------------

RasterField::RasterField(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width_ < 1 || height_ < 1)
        throw std::invalid_argument("RasterField: dimensions must be positive");
    if (data_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_))
        throw std::invalid_argument("RasterField: data size does not match dimensions");
}

double RasterField::value(double x, double y) const {
    const int x0 = std::clamp(static_cast<int>(std::floor(x)), 0, width_ - 1);
    const int y0 = std::clamp(static_cast<int>(std::floor(y)), 0, height_ - 1);
    const int x1 = std::min(x0 + 1, width_ - 1);
    const int y1 = std::min(y0 + 1, height_ - 1);
    const double fx = x - x0, fy = y - y0;
    return pixel(x0, y0) * (1 - fx) * (1 - fy) + pixel(x1, y0) * fx * (1 - fy) +
           pixel(x0, y1) * (1 - fx) * fy + pixel(x1, y1) * fx * fy;
}

std::array<double, 2> RasterField::gradient(double x, double y) const {
    auto central = [](double lo_ok, double hi_ok, double vlo, double vmid, double vhi) {
        if (lo_ok && hi_ok) return (vhi - vlo) / 2.0;
        if (hi_ok) return vhi - vmid;
        if (lo_ok) return vmid - vlo;
        return 0.0;
    };
    const double v = value(x, y);
    const bool xlo = x - 1 >= 0, xhi = x + 1 <= width_ - 1;
    const bool ylo = y - 1 >= 0, yhi = y + 1 <= height_ - 1;
    const double gx = central(xlo, xhi, xlo ? value(x - 1, y) : 0, v, xhi ? value(x + 1, y) : 0);
    const double gy = central(ylo, yhi, ylo ? value(x, y - 1) : 0, v, yhi ? value(x, y + 1) : 0);
    return {gx, gy};
}

bool RasterField::in_domain(double x, double y) const {
    return x >= 1.0 && x <= width_ - 2.0 && y >= 1.0 && y <= height_ - 2.0;
}

RasterField warp_raster(const Homography<double>& h, const RasterField& r) {
    const Homography<double> inv = [&] {
        auto adj = h.adjugate();
        return Homography<double>::from_rows(adj[0], adj[1], adj[2]);
    }();
    std::vector<double> out(static_cast<std::size_t>(r.width()) * r.height(), 0.0);
    for (int y = 0; y < r.height(); ++y) {
        for (int x = 0; x < r.width(); ++x) {
            const double w = w_at(inv, static_cast<double>(x), static_cast<double>(y));
            if (w == 0.0) continue;  // preimage at infinity stays background
            auto [sx, sy] = apply_point(inv, static_cast<double>(x), static_cast<double>(y));
            if (sx < 0 || sx > r.width() - 1 || sy < 0 || sy > r.height() - 1) continue;
            out[static_cast<std::size_t>(y) * r.width() + x] = r.value(sx, sy);
        }
    }
    return {r.width(), r.height(), std::move(out)};
}

}  // namespace projinv
