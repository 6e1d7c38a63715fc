#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "projinv/errors.hpp"
#include "projinv/scalar.hpp"

namespace projinv {

// ---------------------------------------------------------------------------
// Homogeneous 3-vectors, points, lines
// ---------------------------------------------------------------------------

template <class S>
struct Vec3 {
    std::array<S, 3> v;

    const S& operator[](std::size_t i) const { return v[i]; }
    S& operator[](std::size_t i) { return v[i]; }

    bool is_zero() const { return v[0] == S(0) && v[1] == S(0) && v[2] == S(0); }

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.v[0] == b.v[0] && a.v[1] == b.v[1] && a.v[2] == b.v[2];
    }
};

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
    return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Determinant of the 3x3 matrix with rows r0, r1, r2.
template <class S>
S det3(const Vec3<S>& r0, const Vec3<S>& r1, const Vec3<S>& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

/// Point of the projective plane, stored as one homogeneous representative.
template <class S>
struct ProjPoint {
    Vec3<S> h;
};

/// Line of the projective plane, stored as one covector representative (p, q, r).
template <class S>
struct ProjLine {
    Vec3<S> h;
};

/// Affine chart embedding (x, y) -> (x : y : 1).
template <class S>
ProjPoint<S> embed(const S& x, const S& y) {
    return {{{x, y, S(1)}}};
}

/// Line through two points; the zero covector when the points coincide.
template <class S>
ProjLine<S> join(const ProjPoint<S>& a, const ProjPoint<S>& b) {
    return {cross(a.h, b.h)};
}

/// Intersection of two lines; the zero vector when the lines coincide.
template <class S>
ProjPoint<S> meet(const ProjLine<S>& l1, const ProjLine<S>& l2) {
    return {cross(l1.h, l2.h)};
}

/// Incidence form l·A; zero iff the point lies on the line.
template <class S>
S incidence(const ProjLine<S>& l, const ProjPoint<S>& a) {
    return dot(l.h, a.h);
}

// ---------------------------------------------------------------------------
// Samples and configurations
// ---------------------------------------------------------------------------

/// One planar point (x, y) with first-order data (p, q) = (du/dx, du/dy).
template <class S>
struct GradientSample {
    S x, y, p, q;

    bool zero_gradient() const { return p == S(0) && q == S(0); }
};

/// The line through (x, y) orthogonal to the gradient: (p, q, -p x - q y).
/// A zero gradient yields the zero covector; genericity checks reject that upstream.
template <class S>
ProjLine<S> gradient_line(const GradientSample<S>& s) {
    return {{{s.p, s.q, -s.p * s.x - s.q * s.y}}};
}

template <class S>
ProjPoint<S> sample_point(const GradientSample<S>& s) {
    return embed(s.x, s.y);
}

/// Ordered list of n >= 2 samples. Indices are 1-based at every public surface.
template <class S>
struct Configuration {
    std::vector<GradientSample<S>> samples;

    int size() const { return static_cast<int>(samples.size()); }

    const GradientSample<S>& at1(int i) const {
        if (i < 1 || i > size())
            throw IndexError("sample index " + std::to_string(i) + " outside 1.." +
                             std::to_string(size()));
        return samples[static_cast<std::size_t>(i - 1)];
    }
};

template <class S>
void check_distinct_indices(const Configuration<S>& c, std::initializer_list<int> idx) {
    std::vector<int> seen;
    for (int i : idx) {
        c.at1(i);  // range check
        for (int j : seen)
            if (i == j) throw IndexError("indices must be distinct, got " + std::to_string(i) + " twice");
        seen.push_back(i);
    }
}

/// Signed double area of the triangle (A_i, A_j, A_k); zero iff collinear.
template <class S>
S delta(const Configuration<S>& c, int i, int j, int k) {
    check_distinct_indices(c, {i, j, k});
    return det3(sample_point(c.at1(i)).h, sample_point(c.at1(j)).h, sample_point(c.at1(k)).h);
}

/// Human-readable genericity diagnostics: coincident points and zero gradients.
template <class S>
std::vector<std::string> genericity_violations(const Configuration<S>& c) {
    std::vector<std::string> out;
    const int n = c.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (c.at1(i).x == c.at1(j).x && c.at1(i).y == c.at1(j).y)
                out.push_back("points " + std::to_string(i) + " and " + std::to_string(j) +
                              " coincide");
    for (int i = 1; i <= n; ++i)
        if (c.at1(i).zero_gradient()) out.push_back("gradient at point " + std::to_string(i) + " is zero");
    return out;
}

// ---------------------------------------------------------------------------
// Homographies and the prolonged action
// ---------------------------------------------------------------------------

/// Invertible 3x3 matrix acting on the projective plane. Rows are named after
/// the classical parametrization a = (a1,a2,a3), b, c; det is cached.
template <class S>
struct Homography {
    std::array<Vec3<S>, 3> m;
    S det;

    static Homography from_rows(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
        Homography h{{a, b, c}, det3(a, b, c)};
        if (h.det == S(0)) throw SingularMatrixError();
        return h;
    }

    static Homography identity() {
        return from_rows({{S(1), S(0), S(0)}}, {{S(0), S(1), S(0)}}, {{S(0), S(0), S(1)}});
    }

    const Vec3<S>& row(std::size_t i) const { return m[i]; }

    /// adj(M) with adj(M)·M = det(M)·I; entry (i, j) is the cofactor C_ji.
    std::array<Vec3<S>, 3> adjugate() const {
        const auto& a = m;
        auto cof = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) -> S {
            return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        };
        std::array<Vec3<S>, 3> adj;
        adj[0] = {{cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)}};
        adj[1] = {{-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)}};
        adj[2] = {{cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)}};
        return adj;
    }

    ProjPoint<S> apply(const ProjPoint<S>& pt) const {
        return {{{dot(m[0], pt.h), dot(m[1], pt.h), dot(m[2], pt.h)}}};
    }

    friend Homography operator*(const Homography& g, const Homography& h) {
        std::array<Vec3<S>, 3> r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                r[i][j] = g.m[i][0] * h.m[0][j] + g.m[i][1] * h.m[1][j] + g.m[i][2] * h.m[2][j];
        return from_rows(r[0], r[1], r[2]);
    }
};

/// Third homogeneous coordinate of H·(x, y, 1). Vanishes exactly on the
/// preimage of the line at infinity, where the affine chart breaks down.
template <class S>
S w_at(const Homography<S>& h, const S& x, const S& y) {
    return h.m[2][0] * x + h.m[2][1] * y + h.m[2][2];
}

/// The rational map (x, y) -> ((a·A)/(c·A), (b·A)/(c·A)).
template <class S>
std::pair<S, S> apply_point(const Homography<S>& h, const S& x, const S& y) {
    S w = w_at(h, x, y);
    if (w == S(0)) throw DegenerateTransform();
    return {(h.m[0][0] * x + h.m[0][1] * y + h.m[0][2]) / w,
            (h.m[1][0] * x + h.m[1][1] * y + h.m[1][2]) / w};
}

/// Jacobian determinant of the rational map at (x, y): det / w^3.
template <class S>
S local_jacobian(const Homography<S>& h, const S& x, const S& y) {
    S w = w_at(h, x, y);
    if (w == S(0)) throw DegenerateTransform();
    return h.det / (w * w * w);
}

/// 2x2 matrix of partial derivatives of the rational map at (x, y):
/// rows d(x~)/d(x,y) and d(y~)/d(x,y), obtained by the quotient rule.
template <class S>
std::array<std::array<S, 2>, 2> map_jacobian(const Homography<S>& h, const S& x, const S& y) {
    S w = w_at(h, x, y);
    if (w == S(0)) throw DegenerateTransform();
    const Vec3<S>&a = h.m[0], &b = h.m[1], &c = h.m[2];
    S a12 = a[0] * c[1] - a[1] * c[0], a13 = a[0] * c[2] - a[2] * c[0],
      a23 = a[1] * c[2] - a[2] * c[1];
    S b12 = b[0] * c[1] - b[1] * c[0], b13 = b[0] * c[2] - b[2] * c[0],
      b23 = b[1] * c[2] - b[2] * c[1];
    S w2 = w * w;
    return {{{(a12 * y + a13) / w2, (-a12 * x + a23) / w2},
             {(b12 * y + b13) / w2, (-b12 * x + b23) / w2}}};
}

/// First prolongation: transports a sample together with its gradient.
/// The gradient formulas come from solving the chain-rule system
///   u_x = p~ d(x~)/dx + q~ d(y~)/dx,  u_y = p~ d(x~)/dy + q~ d(y~)/dy
/// for (p~, q~); they are degree-2 minor combinations of the rows (b, c)
/// and (a, c) with prefactor w/det.
template <class S>
GradientSample<S> prolong(const Homography<S>& h, const GradientSample<S>& s) {
    S w = w_at(h, s.x, s.y);
    if (w == S(0)) throw DegenerateTransform();
    auto [xt, yt] = apply_point(h, s.x, s.y);
    const Vec3<S>&a = h.m[0], &b = h.m[1], &c = h.m[2];
    S a12 = a[0] * c[1] - a[1] * c[0], a13 = a[0] * c[2] - a[2] * c[0],
      a23 = a[1] * c[2] - a[2] * c[1];
    S b12 = b[0] * c[1] - b[1] * c[0], b13 = b[0] * c[2] - b[2] * c[0],
      b23 = b[1] * c[2] - b[2] * c[1];
    S radial = s.p * s.x + s.q * s.y;
    S pt = (w / h.det) * (-b12 * radial + b23 * s.p - b13 * s.q);
    S qt = (w / h.det) * (a12 * radial - a23 * s.p + a13 * s.q);
    return {xt, yt, pt, qt};
}

/// Covector action l -> l·H^{-1}, computed as (l·adj)/det so the exact
/// realization divides by the determinant once and by nothing else.
template <class S>
ProjLine<S> pushforward_line(const Homography<S>& h, const ProjLine<S>& l) {
    auto adj = h.adjugate();
    Vec3<S> r;
    for (std::size_t k = 0; k < 3; ++k)
        r[k] = (l.h[0] * adj[0][k] + l.h[1] * adj[1][k] + l.h[2] * adj[2][k]) / h.det;
    return {r};
}

/// Diagonal action on a configuration; reports the first offending sample.
template <class S>
Configuration<S> transform_config(const Homography<S>& h, const Configuration<S>& c) {
    Configuration<S> out;
    out.samples.reserve(c.samples.size());
    for (int i = 1; i <= c.size(); ++i) {
        const GradientSample<S>& s = c.at1(i);
        if (w_at(h, s.x, s.y) == S(0)) throw DegenerateTransform(i);
        out.samples.push_back(prolong(h, s));
    }
    return out;
}

/// Product of the pointwise Jacobians: det^n / prod_i w_i^3.
template <class S>
S total_jacobian(const Homography<S>& h, const Configuration<S>& c) {
    S j(1);
    for (int i = 1; i <= c.size(); ++i) {
        const GradientSample<S>& s = c.at1(i);
        if (w_at(h, s.x, s.y) == S(0)) throw DegenerateTransform(i);
        j *= local_jacobian(h, s.x, s.y);
    }
    return j;
}

}  // namespace projinv
