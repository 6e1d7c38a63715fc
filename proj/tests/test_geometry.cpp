#include <doctest.h>

#include <cmath>

#include <projinv/geometry.hpp>
#include <projinv/randomness.hpp>
#include <projinv/verification.hpp>

using namespace projinv;

namespace {

Rational rat(long n, long d = 1) { return make_rational(n, d); }

GradientSample<Rational> sample(long x, long y, long p, long q) {
    return {Rational(x), Rational(y), Rational(p), Rational(q)};
}

Vec3<Rational> vec(long a, long b, long c) { return {{Rational(a), Rational(b), Rational(c)}}; }

}  // namespace

TEST_CASE("gradient_line pinned values") {
    CHECK(gradient_line(sample(0, 0, 1, 0)).h == vec(1, 0, 0));
    CHECK(gradient_line(sample(1, 0, 0, 1)).h == vec(0, 1, 0));
    CHECK(gradient_line(sample(0, 1, 1, 1)).h == vec(1, 1, -1));
    // the line passes through its own sample point
    GradientSample<Rational> s{rat(3, 2), rat(-5, 3), rat(7), rat(2)};
    CHECK(incidence(gradient_line(s), sample_point(s)) == Rational(0));
}

TEST_CASE("join and meet are the cross product") {
    ProjPoint<Rational> a{vec(0, 0, 1)}, b{vec(1, 0, 1)};
    CHECK(join(a, b).h == vec(0, 1, 0));  // the line y = 0
    ProjLine<Rational> l1{vec(1, 0, 0)}, l2{vec(0, 1, 0)};
    CHECK(meet(l1, l2).h == vec(0, 0, 1));  // the origin
    CHECK(join(a, a).h.is_zero());
}

TEST_CASE("delta: pinned value, degenerate cases, antisymmetry") {
    Configuration<Rational> c{{sample(0, 0, 1, 1), sample(1, 0, 1, 1), sample(0, 1, 1, 1)}};
    CHECK(delta(c, 1, 2, 3) == Rational(1));
    CHECK(delta(c, 1, 3, 2) == Rational(-1));  // swap negates
    CHECK_THROWS_AS(delta(c, 1, 2, 2), IndexError);
    CHECK_THROWS_AS(delta(c, 1, 2, 4), IndexError);

    // two equal points (distinct indices) give a repeated column
    Configuration<Rational> dup{{sample(2, 3, 1, 0), sample(2, 3, 0, 1), sample(0, 1, 1, 1)}};
    CHECK(delta(dup, 1, 2, 3) == Rational(0));

    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Configuration<Rational> rc = random_config(4, derive_seed(11, t));
        CHECK(delta(rc, 1, 2, 3) == -delta(rc, 2, 1, 3));
        CHECK(delta(rc, 1, 2, 3) == delta(rc, 2, 3, 1));  // cyclic = even
    }
}

TEST_CASE("apply_point: identity, scaling, degenerate chart") {
    auto id = Homography<Rational>::identity();
    auto [x, y] = apply_point(id, rat(3, 7), rat(-2, 5));
    CHECK(x == rat(3, 7));
    CHECK(y == rat(-2, 5));

    auto scale = Homography<Rational>::from_rows(vec(2, 0, 0), vec(0, 1, 0), vec(0, 0, 1));
    auto [sx, sy] = apply_point(scale, Rational(3), Rational(5));
    CHECK(sx == Rational(6));
    CHECK(sy == Rational(5));

    // c-row (1, 0, 0): w vanishes on the whole axis x = 0
    auto h = Homography<Rational>::from_rows(vec(0, 0, 1), vec(0, 1, 0), vec(1, 0, 0));
    CHECK_THROWS_AS(apply_point(h, Rational(0), Rational(4)), DegenerateTransform);
}

TEST_CASE("local_jacobian: pinned values and finite-difference oracle") {
    auto id = Homography<Rational>::identity();
    CHECK(local_jacobian(id, Rational(2), Rational(3)) == Rational(1));

    auto scale = Homography<Rational>::from_rows(vec(2, 0, 0), vec(0, 1, 0), vec(0, 0, 1));
    CHECK(local_jacobian(scale, Rational(9), Rational(-4)) == Rational(2));

    // generic H: compare against det of the 2x2 finite-difference map derivative
    Configuration<Rational> c = random_config(2, 31337);
    Homography<Rational> hr = random_homography(91, c);
    Homography<double> h = to_double_homography(hr);
    const double x0 = to_double(c.at1(1).x), y0 = to_double(c.at1(1).y);
    const double eps = 1e-6;
    auto at = [&](double x, double y) { return apply_point(h, x, y); };
    const double dxx = (at(x0 + eps, y0).first - at(x0 - eps, y0).first) / (2 * eps);
    const double dxy = (at(x0, y0 + eps).first - at(x0, y0 - eps).first) / (2 * eps);
    const double dyx = (at(x0 + eps, y0).second - at(x0 - eps, y0).second) / (2 * eps);
    const double dyy = (at(x0, y0 + eps).second - at(x0, y0 - eps).second) / (2 * eps);
    const double fd_det = dxx * dyy - dxy * dyx;
    const double exact = local_jacobian(h, x0, y0);
    CHECK(std::fabs(fd_det - exact) / std::max(std::fabs(exact), 1e-12) < 1e-5);
}

TEST_CASE("map_jacobian matches finite differences") {
    Configuration<Rational> c = random_config(2, 424242);
    Homography<double> h = to_double_homography(random_homography(7, c));
    const double x0 = to_double(c.at1(1).x), y0 = to_double(c.at1(1).y);
    auto j = map_jacobian(h, x0, y0);
    const double eps = 1e-6;
    auto at = [&](double x, double y) { return apply_point(h, x, y); };
    CHECK(std::fabs(j[0][0] - (at(x0 + eps, y0).first - at(x0 - eps, y0).first) / (2 * eps)) < 1e-5);
    CHECK(std::fabs(j[0][1] - (at(x0, y0 + eps).first - at(x0, y0 - eps).first) / (2 * eps)) < 1e-5);
    CHECK(std::fabs(j[1][0] - (at(x0 + eps, y0).second - at(x0 - eps, y0).second) / (2 * eps)) < 1e-5);
    CHECK(std::fabs(j[1][1] - (at(x0, y0 + eps).second - at(x0, y0 - eps).second) / (2 * eps)) < 1e-5);
}

TEST_CASE("prolong: identity, axis scaling, translation") {
    auto id = Homography<Rational>::identity();
    GradientSample<Rational> s{rat(1, 3), rat(2), rat(-5, 2), rat(4)};
    GradientSample<Rational> ps = prolong(id, s);
    CHECK(ps.x == s.x);
    CHECK(ps.y == s.y);
    CHECK(ps.p == s.p);
    CHECK(ps.q == s.q);

    // u~(x~, y~) = u(x~/2, y~) has gradient (p/2, q)
    auto scale = Homography<Rational>::from_rows(vec(2, 0, 0), vec(0, 1, 0), vec(0, 0, 1));
    GradientSample<Rational> sc = prolong(scale, s);
    CHECK(sc.x == Rational(2) * s.x);
    CHECK(sc.p == s.p / Rational(2));
    CHECK(sc.q == s.q);

    // a translation moves the point and keeps the gradient
    auto shift = Homography<Rational>::from_rows(vec(1, 0, 7), vec(0, 1, -3), vec(0, 0, 1));
    GradientSample<Rational> sh = prolong(shift, s);
    CHECK(sh.x == s.x + Rational(7));
    CHECK(sh.y == s.y - Rational(3));
    CHECK(sh.p == s.p);
    CHECK(sh.q == s.q);
    // and the carried line term shifts consistently
    CHECK(gradient_line(sh).h[2] == -sh.p * sh.x - sh.q * sh.y);
}

TEST_CASE("prolongation consistency identity, exact") {
    for (int t = 0; t < 25; ++t) {
        Configuration<Rational> c = random_config(2, derive_seed(55, t));
        Homography<Rational> h = random_homography(derive_seed(56, t), c);
        const GradientSample<Rational>& s = c.at1(1);
        ProjLine<Rational> direct = gradient_line(prolong(h, s));
        ProjLine<Rational> pushed = pushforward_line(h, gradient_line(s));
        Rational w = w_at(h, s.x, s.y);
        for (int k = 0; k < 3; ++k) CHECK(direct.h[k] == w * pushed.h[k]);
    }
}

TEST_CASE("pushforward_line: identity, incidence, scale freedom") {
    auto id = Homography<Rational>::identity();
    ProjLine<Rational> l{vec(3, -2, 5)};
    CHECK(pushforward_line(id, l).h == l.h);

    // incidence preserved on 100 random incident (H, l, A)
    for (int t = 0; t < 100; ++t) {
        Configuration<Rational> c = random_config(2, derive_seed(77, t));
        Homography<Rational> h = random_homography(derive_seed(78, t), c);
        ProjPoint<Rational> a = sample_point(c.at1(1));
        ProjLine<Rational> line = join(a, sample_point(c.at1(2)));
        REQUIRE(incidence(line, a) == Rational(0));
        CHECK(incidence(pushforward_line(h, line), h.apply(a)) == Rational(0));
    }

    // kH pushes to a proportional covector
    Configuration<Rational> c = random_config(2, 123);
    Homography<Rational> h = random_homography(5, c);
    Rational k = rat(-3, 2);
    Homography<Rational> kh = Homography<Rational>::from_rows(
        {{k * h.m[0][0], k * h.m[0][1], k * h.m[0][2]}},
        {{k * h.m[1][0], k * h.m[1][1], k * h.m[1][2]}},
        {{k * h.m[2][0], k * h.m[2][1], k * h.m[2][2]}});
    ProjLine<Rational> l1 = pushforward_line(h, gradient_line(c.at1(1)));
    ProjLine<Rational> l2 = pushforward_line(kh, gradient_line(c.at1(1)));
    CHECK(cross(l1.h, l2.h).is_zero());
}

TEST_CASE("projective well-definedness: kH acts identically on points and samples") {
    Configuration<Rational> c = random_config(3, 2718);
    Homography<Rational> h = random_homography(9, c);
    Rational k = rat(5, 7);
    Homography<Rational> kh = Homography<Rational>::from_rows(
        {{k * h.m[0][0], k * h.m[0][1], k * h.m[0][2]}},
        {{k * h.m[1][0], k * h.m[1][1], k * h.m[1][2]}},
        {{k * h.m[2][0], k * h.m[2][1], k * h.m[2][2]}});
    for (int i = 1; i <= 3; ++i) {
        GradientSample<Rational> a = prolong(h, c.at1(i));
        GradientSample<Rational> b = prolong(kh, c.at1(i));
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.p == b.p);
        CHECK(a.q == b.q);
    }
}

TEST_CASE("transform_config: identity, composition, degenerate index report") {
    Configuration<Rational> c = random_config(4, 1618);
    auto id = Homography<Rational>::identity();
    Configuration<Rational> tc = transform_config(id, c);
    for (int i = 1; i <= 4; ++i) {
        CHECK(tc.at1(i).x == c.at1(i).x);
        CHECK(tc.at1(i).q == c.at1(i).q);
    }

    Homography<Rational> h1 = random_homography(21, c);
    Configuration<Rational> mid = transform_config(h1, c);
    Homography<Rational> h2 = random_homography(22, mid);
    Configuration<Rational> two_step = transform_config(h2, mid);
    Configuration<Rational> composed = transform_config(h2 * h1, c);
    for (int i = 1; i <= 4; ++i) {
        CHECK(two_step.at1(i).x == composed.at1(i).x);
        CHECK(two_step.at1(i).y == composed.at1(i).y);
        CHECK(two_step.at1(i).p == composed.at1(i).p);
        CHECK(two_step.at1(i).q == composed.at1(i).q);
    }

    // w vanishes exactly at sample 3 of this hand-made configuration
    Configuration<Rational> cc{{sample(0, 0, 1, 0), sample(1, 0, 0, 1), sample(2, 5, 1, 1)}};
    auto bad = Homography<Rational>::from_rows(vec(0, 0, 1), vec(0, 1, 0), vec(1, 0, -2));
    try {
        transform_config(bad, cc);
        FAIL("expected DegenerateTransform");
    } catch (const DegenerateTransform& e) {
        CHECK(e.index == 3);
    }
}

TEST_CASE("total_jacobian: identity, diagonal, closed form") {
    Configuration<Rational> c = random_config(4, 31);
    CHECK(total_jacobian(Homography<Rational>::identity(), c) == Rational(1));

    auto scale = Homography<Rational>::from_rows(vec(2, 0, 0), vec(0, 1, 0), vec(0, 0, 1));
    CHECK(total_jacobian(scale, c) == Rational(16));  // 2^4

    // closed form D^n / prod w_i^3 is an independent route
    Homography<Rational> h = random_homography(77, c);
    Rational expect = pow_int(h.det, 4);
    for (int i = 1; i <= 4; ++i) expect /= pow_int(w_at(h, c.at1(i).x, c.at1(i).y), 3);
    CHECK(total_jacobian(h, c) == expect);
}

TEST_CASE("genericity diagnostics") {
    Configuration<Rational> ok = random_config(3, 404);
    CHECK(genericity_violations(ok).empty());

    Configuration<Rational> bad{{sample(1, 1, 0, 0), sample(1, 1, 1, 0)}};
    auto v = genericity_violations(bad);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == "points 1 and 2 coincide");
    CHECK(v[1] == "gradient at point 1 is zero");
}
