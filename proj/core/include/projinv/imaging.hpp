#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "projinv/geometry.hpp"
#include "projinv/invariants.hpp"

namespace projinv {

struct Keypoint {
    double x, y;
};
using KeypointSet = std::vector<Keypoint>;

// ---------------------------------------------------------------------------
// Analytic fields
// ---------------------------------------------------------------------------

struct GaussianBump {
    double amplitude;
    double cx, cy;
    double width;  // > 0
};

/// Smooth scalar field u(x, y) = sum_k a_k exp(-((x-cx_k)^2 + (y-cy_k)^2) / s_k^2)
/// with closed-form partial derivatives.
class AnalyticField {
public:
    explicit AnalyticField(std::vector<GaussianBump> bumps);

    double value(double x, double y) const;
    std::array<double, 2> gradient(double x, double y) const;
    bool in_domain(double, double) const { return true; }

    const std::vector<GaussianBump>& bumps() const { return bumps_; }

private:
    std::vector<GaussianBump> bumps_;
};

/// View of a field precomposed with the inverse of a homography:
/// u~(X, Y) = u(T^{-1}(X, Y)). Values come straight from that definition;
/// gradients from the chain rule through the inverse map's 2x2 derivative,
/// an independent route from the prolongation formulas.
class PullbackField {
public:
    PullbackField(const Homography<double>& h, AnalyticField base);

    double value(double x, double y) const;
    std::array<double, 2> gradient(double x, double y) const;
    bool in_domain(double x, double y) const;

private:
    Homography<double> inverse_;  // adjugate of the forward map
    AnalyticField base_;
};

inline PullbackField pullback_field(const Homography<double>& h, const AnalyticField& f) {
    return {h, f};
}

// ---------------------------------------------------------------------------
// Raster fields (PGM pipeline)
// ---------------------------------------------------------------------------

/// Row-major intensity grid with values in [0, 1], sampled bilinearly.
/// Gradients use central differences at unit pixel spacing, one-sided at
/// the borders.
class RasterField {
public:
    RasterField(int width, int height, std::vector<double> data);

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<double>& data() const { return data_; }

    double pixel(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }

    double value(double x, double y) const;
    std::array<double, 2> gradient(double x, double y) const;

    /// Strictly inside with one pixel of margin, so central differences and
    /// bilinear lookups stay in bounds.
    bool in_domain(double x, double y) const;

    friend bool operator==(const RasterField& a, const RasterField& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.data_ == b.data_;
    }

private:
    int width_, height_;
    std::vector<double> data_;
};

/// Decodes binary PGM ("P5", maxval <= 255, '#' comments allowed in the
/// header). Intensities are normalized by maxval.
RasterField load_pgm(std::string_view bytes);
RasterField load_pgm_file(const std::string& path);

/// Encodes as P5 with maxval 255. load(save(r)) is bit-exact whenever r's
/// intensities are multiples of 1/255, in particular for any loaded image.
std::string save_pgm(const RasterField& r);
void save_pgm_file(const RasterField& r, const std::string& path);

/// Inverse-mapping warp with bilinear interpolation; destination pixels whose
/// preimage falls outside the source (or on the line at infinity) become 0.
RasterField warp_raster(const Homography<double>& h, const RasterField& r);

// ---------------------------------------------------------------------------
// Sampling and signatures
// ---------------------------------------------------------------------------

/// One gradient sample per keypoint. Zero-gradient samples are representable;
/// genericity is enforced by signature_extract, not here.
template <class Field>
Configuration<double> sample_config(const Field& f, const KeypointSet& pts) {
    Configuration<double> c;
    c.samples.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!f.in_domain(pts[i].x, pts[i].y)) throw OutOfDomain(static_cast<int>(i) + 1);
        std::array<double, 2> g = f.gradient(pts[i].x, pts[i].y);
        c.samples.push_back({pts[i].x, pts[i].y, g[0], g[1]});
    }
    return c;
}

/// Signature over the generating set of |pts| points.
template <class Field>
Signature<double> signature_extract(const Field& f, const KeypointSet& pts) {
    if (pts.size() < 2) throw ConfigTooSmall(2, static_cast<int>(pts.size()));
    Configuration<double> c = sample_config(f, pts);
    std::vector<std::string> violations = genericity_violations(c);
    if (!violations.empty()) throw NonGenericConfiguration(std::move(violations));
    return evaluate(c, generating_set(c.size()));
}

}  // namespace projinv
