#include <doctest.h>

#include <cmath>
#include <iostream>

#include <projinv/imaging.hpp>
#include <projinv/randomness.hpp>
#include <projinv/verification.hpp>

using namespace projinv;

namespace {

AnalyticField two_bumps() {
    return AnalyticField({{1.0, 0.0, 0.0, 2.0}, {-0.6, 1.5, -0.8, 1.3}});
}

Homography<double> mild_homography(std::uint64_t seed) {
    Rng rng(seed);
    auto noise = [&] { return static_cast<double>(rng.uniform(-20, 20)) / 100.0; };
    for (;;) {
        Vec3<double> r0{{1.0 + noise(), noise(), noise()}};
        Vec3<double> r1{{noise(), 1.0 + noise(), noise()}};
        Vec3<double> r2{{noise() / 4, noise() / 4, 1.0 + noise()}};
        const double det = det3(r0, r1, r2);
        if (std::fabs(det) < 0.2) continue;
        return Homography<double>::from_rows(r0, r1, r2);
    }
}

}  // namespace

TEST_CASE("analytic gradients: closed form vs central differences") {
    AnalyticField f = two_bumps();
    Rng rng(33);
    const double h = 1e-6;
    for (int t = 0; t < 40; ++t) {
        const double x = static_cast<double>(rng.uniform(-300, 300)) / 100.0;
        const double y = static_cast<double>(rng.uniform(-300, 300)) / 100.0;
        auto g = f.gradient(x, y);
        const double fdx = (f.value(x + h, y) - f.value(x - h, y)) / (2 * h);
        const double fdy = (f.value(x, y + h) - f.value(x, y - h)) / (2 * h);
        CHECK(std::fabs(g[0] - fdx) / std::max({std::fabs(g[0]), std::fabs(fdx), 1.0}) < 1e-6);
        CHECK(std::fabs(g[1] - fdy) / std::max({std::fabs(g[1]), std::fabs(fdy), 1.0}) < 1e-6);
    }
}

TEST_CASE("unit bump gradient at (1, 0) is (-2/e, 0)") {
    AnalyticField f({{1.0, 0.0, 0.0, 1.0}});
    auto g = f.gradient(1.0, 0.0);
    CHECK(g[0] == doctest::Approx(-2.0 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("sampling at a critical point is representable but flagged") {
    AnalyticField f({{1.0, 0.0, 0.0, 1.0}});
    Configuration<double> c = sample_config(f, {{0.0, 0.0}, {1.0, 0.0}});
    CHECK(c.at1(1).p == 0.0);
    CHECK(c.at1(1).q == 0.0);
    auto v = genericity_violations(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "gradient at point 1 is zero");
}

TEST_CASE("constant raster has zero gradients everywhere") {
    RasterField r(8, 8, std::vector<double>(64, 0.5));
    Configuration<double> c = sample_config(r, {{2.0, 2.0}, {5.0, 3.5}});
    for (int i = 1; i <= 2; ++i) {
        CHECK(c.at1(i).p == 0.0);
        CHECK(c.at1(i).q == 0.0);
    }
    CHECK_FALSE(genericity_violations(c).empty());
}

TEST_CASE("pullback by the identity changes nothing") {
    AnalyticField f = two_bumps();
    PullbackField pb = pullback_field(Homography<double>::identity(), f);
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const double x = static_cast<double>(rng.uniform(-200, 200)) / 100.0;
        const double y = static_cast<double>(rng.uniform(-200, 200)) / 100.0;
        CHECK(pb.value(x, y) == doctest::Approx(f.value(x, y)).epsilon(1e-15));
        auto g1 = pb.gradient(x, y);
        auto g2 = f.gradient(x, y);
        CHECK(g1[0] == doctest::Approx(g2[0]).epsilon(1e-14));
        CHECK(g1[1] == doctest::Approx(g2[1]).epsilon(1e-14));
    }
}

TEST_CASE("pullback commutes with prolongation (the module's core identity)") {
    AnalyticField f = two_bumps();
    const KeypointSet pts{{0.3, -0.4}, {1.1, 0.6}, {-0.7, 0.9}, {0.2, 1.4}};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Homography<double> h = mild_homography(seed);
        Configuration<double> direct = transform_config(h, sample_config(f, pts));

        PullbackField pb = pullback_field(h, f);
        KeypointSet moved;
        for (const Keypoint& k : pts) {
            auto [mx, my] = apply_point(h, k.x, k.y);
            moved.push_back({mx, my});
        }
        Configuration<double> via_field = sample_config(pb, moved);

        for (int i = 1; i <= 4; ++i) {
            const auto &a = direct.at1(i), &b = via_field.at1(i);
            CHECK(std::fabs(a.x - b.x) / std::max(std::fabs(a.x), 1.0) < 1e-10);
            CHECK(std::fabs(a.y - b.y) / std::max(std::fabs(a.y), 1.0) < 1e-10);
            CHECK(std::fabs(a.p - b.p) / std::max({std::fabs(a.p), std::fabs(b.p), 1e-6}) < 1e-10);
            CHECK(std::fabs(a.q - b.q) / std::max({std::fabs(a.q), std::fabs(b.q), 1e-6}) < 1e-10);
        }
    }
}

TEST_CASE("signatures survive analytic pullback to 1e-8") {
    AnalyticField f = two_bumps();
    const KeypointSet pts{{0.3, -0.4}, {1.1, 0.6}, {-0.7, 0.9}};
    Signature<double> before = signature_extract(f, pts);
    for (std::uint64_t seed = 20; seed < 23; ++seed) {
        Homography<double> h = mild_homography(seed);
        PullbackField pb = pullback_field(h, f);
        KeypointSet moved;
        for (const Keypoint& k : pts) {
            auto [mx, my] = apply_point(h, k.x, k.y);
            moved.push_back({mx, my});
        }
        Signature<double> after = signature_extract(pb, moved);
        REQUIRE(after.entries.size() == before.entries.size());
        for (std::size_t i = 0; i < before.entries.size(); ++i) {
            const double a = before.entries[i].second, b = after.entries[i].second;
            CHECK(std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-12}) < 1e-8);
        }
    }
}

TEST_CASE("PGM decode: pinned 2x2 example and header comments") {
    const std::string bytes = std::string("P5\n2 2\n255\n") + '\x00' + '\xff' + '\xff' + '\x00';
    RasterField r = load_pgm(bytes);
    CHECK(r.width() == 2);
    CHECK(r.height() == 2);
    CHECK(r.pixel(0, 0) == 0.0);
    CHECK(r.pixel(1, 0) == 1.0);
    CHECK(r.pixel(0, 1) == 1.0);
    CHECK(r.pixel(1, 1) == 0.0);

    const std::string commented =
        std::string("P5 # magic\n# a header comment\n2 1 # size\n255\n") + '\x10' + '\x20';
    RasterField rc = load_pgm(commented);
    CHECK(rc.width() == 2);
    CHECK(rc.pixel(0, 0) == doctest::Approx(16.0 / 255.0));

    // maxval scaling uses the declared maxval
    const std::string half = std::string("P5\n1 1\n100\n") + '\x32';
    CHECK(load_pgm(half).pixel(0, 0) == 0.5);
}

TEST_CASE("PGM decode: malformed inputs are rejected") {
    CHECK_THROWS_AS(load_pgm("P2\n2 2\n255\n0000"), MalformedImage);
    CHECK_THROWS_AS(load_pgm("P5\n2 2\n255\n" + std::string(3, '\0')), MalformedImage);  // short
    CHECK_THROWS_AS(load_pgm("P5\n2 2\n300\n" + std::string(4, '\0')), MalformedImage);
    CHECK_THROWS_AS(load_pgm("P5\n0 2\n255\n"), MalformedImage);
    CHECK_THROWS_AS(load_pgm("P5\n2\n"), MalformedImage);
    CHECK_THROWS_AS(load_pgm("P5\n2 x\n255\n" + std::string(4, '\0')), MalformedImage);
    CHECK_THROWS_AS(load_pgm(""), MalformedImage);
}

TEST_CASE("PGM round-trip is bit-exact") {
    Rng rng(808);
    std::vector<double> data;
    for (int i = 0; i < 12 * 9; ++i) data.push_back(static_cast<double>(rng.uniform(0, 255)) / 255.0);
    RasterField r(12, 9, data);
    RasterField back = load_pgm(save_pgm(r));
    CHECK(back == r);
    // and saving the reload reproduces the same bytes
    CHECK(save_pgm(back) == save_pgm(r));
}

TEST_CASE("warp by the identity is bit-identical") {
    Rng rng(606);
    std::vector<double> data;
    for (int i = 0; i < 16 * 16; ++i) data.push_back(static_cast<double>(rng.uniform(0, 255)) / 255.0);
    RasterField r(16, 16, data);
    CHECK(warp_raster(Homography<double>::identity(), r) == r);
}

TEST_CASE("warp round-trip blur stays small on a smooth image (reported)") {
    // sampled smooth field; warp by diag(2,1,1) and back
    AnalyticField f({{1.0, 32.0, 32.0, 18.0}});
    std::vector<double> data;
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) data.push_back(f.value(x, y));
    RasterField r(64, 64, data);

    auto stretch = Homography<double>::from_rows({{2, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}});
    auto shrink = Homography<double>::from_rows({{1, 0, 0}}, {{0, 2, 0}}, {{0, 0, 2}});  // = diag(1/2,1,1) up to scale
    RasterField round = warp_raster(shrink, warp_raster(stretch, r));

    double mae = 0.0;
    int counted = 0;
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 32; ++x) {  // the half that survives both warps
            mae += std::fabs(round.pixel(x, y) - r.pixel(x, y));
            ++counted;
        }
    mae /= counted;
    std::cout << "[report] warp round-trip mean absolute error: " << mae << "\n";
}

namespace {

// Any type with value/gradient/in_domain works as a field; a polynomial
// u = x^2 + x y exercises that seam.
struct PolyField {
    double value(double x, double y) const { return x * x + x * y; }
    std::array<double, 2> gradient(double x, double y) const { return {2 * x + y, x}; }
    bool in_domain(double, double) const { return true; }
};

}  // namespace

TEST_CASE("polynomial fields satisfy the same evaluator contract") {
    PolyField f;
    Signature<double> sig = signature_extract(f, {{1.0, 0.5}, {-0.5, 2.0}, {0.4, -1.2}});
    CHECK(sig.entries.size() == 4);
    Configuration<double> c = sample_config(f, {{1.0, 0.5}});
    CHECK(c.at1(1).p == 2.5);
    CHECK(c.at1(1).q == 1.0);
}

TEST_CASE("raster gradients fall back to one-sided differences at borders") {
    // linear ramp u = x/8 on a 9-wide strip: every difference sees slope 1/8
    std::vector<double> data;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 9; ++x) data.push_back(x / 8.0);
    RasterField r(9, 3, data);
    CHECK(r.gradient(4.0, 1.0)[0] == doctest::Approx(1.0 / 8.0));  // central
    CHECK(r.gradient(0.0, 1.0)[0] == doctest::Approx(1.0 / 8.0));  // one-sided right
    CHECK(r.gradient(8.0, 1.0)[0] == doctest::Approx(1.0 / 8.0));  // one-sided left
    CHECK(r.gradient(4.0, 0.0)[1] == doctest::Approx(0.0));
}

TEST_CASE("signature_extract: size, genericity, domain errors") {
    AnalyticField f = two_bumps();
    Signature<double> sig = signature_extract(f, {{0.3, -0.4}, {1.1, 0.6}, {-0.7, 0.9}});
    CHECK(sig.entries.size() == 4);  // three keypoints give the 4-element set

    CHECK_THROWS_AS(signature_extract(f, {{0.3, -0.4}}), ConfigTooSmall);

    AnalyticField bump({{1.0, 0.0, 0.0, 1.0}});
    CHECK_THROWS_AS(signature_extract(bump, {{0.0, 0.0}, {1.0, 0.0}}), NonGenericConfiguration);

    RasterField r(8, 8, std::vector<double>(64, 0.25));
    CHECK_THROWS_AS(sample_config(r, KeypointSet{{0.5, 4.0}, {4.0, 4.0}}), OutOfDomain);
    try {
        sample_config(r, KeypointSet{{4.0, 4.0}, {7.5, 4.0}});
        FAIL("expected OutOfDomain");
    } catch (const OutOfDomain& e) {
        CHECK(e.index == 2);
    }
}
