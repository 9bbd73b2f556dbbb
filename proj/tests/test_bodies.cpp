#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hypwidth/bodies.hpp"

using namespace hypwidth;

namespace {

std::mt19937_64 rng(77123ull);

Geodesic random_line() {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    const double t1 = ang(rng);
    double t2 = ang(rng);
    while (std::fabs(std::remainder(t1 - t2, 2.0 * kPi)) < 0.2) t2 = ang(rng);
    return Geodesic(IdealPoint(t1), IdealPoint(t2));
}

// brute-force strip extremes: dense parameter grid plus golden refinement on
// the raw boundary_point/signed_dist path, independent of the closed-form
// per-piece extreme logic
std::pair<double, double> brute_strip(const ConvexBody& body, const Geodesic& g, int m) {
    auto sd_at = [&](double t) { return signed_dist(body.boundary_point(t), g); };
    std::vector<double> params;
    for (int i = 0; i < m; ++i) params.push_back(static_cast<double>(i) / m);
    for (double j : body.junction_params()) params.push_back(j);
    double lo = 1e300, hi = -1e300, tlo = 0, thi = 0;
    for (double t : params) {
        const double sd = sd_at(t);
        if (sd < lo) { lo = sd; tlo = t; }
        if (sd > hi) { hi = sd; thi = t; }
    }
    const double w = 1.5 / m, gr = 0.6180339887498949;
    for (int pass = 0; pass < 2; ++pass) {
        const bool maximize = pass == 0;
        double a = (maximize ? thi : tlo) - w, b = (maximize ? thi : tlo) + w;
        auto f = [&](double t) { return maximize ? sd_at(t) : -sd_at(t); };
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a), f1 = f(x1), f2 = f(x2);
        while (b - a > 1e-13) {
            if (f1 < f2) { a = x1; x1 = x2; f1 = f2; x2 = a + gr * (b - a); f2 = f(x2); }
            else { b = x2; x2 = x1; f2 = f1; x1 = b - gr * (b - a); f1 = f(x1); }
        }
        const double v = sd_at(0.5 * (a + b));
        if (maximize) hi = std::max(hi, v);
        else lo = std::min(lo, v);
    }
    return {hi, -lo};
}

HPoint geodesic_midpoint(const HPoint& a, const HPoint& b) {
    return project(unit_timelike(a.lift() + b.lift()));
}

const Geodesic x_axis{IdealPoint(kPi), IdealPoint(0.0)};

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(ConvexBody::circle(HPoint(0, 0), 0.0), BodyConstructionError);
    CHECK_THROWS_AS(ConvexBody::segment(HPoint(0.1, 0.1), HPoint(0.1, 0.1)),
                    BodyConstructionError);
    CHECK_THROWS_AS(ConvexBody::reuleaux(4, 1.0), BodyConstructionError);
    CHECK_THROWS_AS(ConvexBody::reuleaux(3, -1.0), BodyConstructionError);
    CHECK_THROWS_AS(ConvexBody::hypercycle_domain(0.0, 0.5), BodyConstructionError);
    CHECK_THROWS_AS(ConvexBody::regular_polygon(2, 1.0), BodyConstructionError);
    // clockwise vertex order is rejected
    CHECK_THROWS_AS(ConvexBody::polygon({HPoint(0.5, 0), HPoint(-0.3, -0.3), HPoint(0, 0.5)}),
                    BodyConstructionError);
}

TEST_CASE("boundary_samples") {
    const ConvexBody c = ConvexBody::circle(HPoint(0, 0), 1.0);
    for (const HPoint& p : c.boundary_samples(16))
        CHECK(dist(p, HPoint(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(c.boundary_samples(4), BodyConstructionError);

    const ConvexBody s = ConvexBody::segment(HPoint(-0.4, 0), HPoint(0.4, 0));
    const auto pts = s.boundary_samples(17);
    CHECK(dist(pts.front(), HPoint(-0.4, 0)) < 1e-12);
    CHECK(dist(pts.back(), HPoint(0.4, 0)) < 1e-12);
    for (const HPoint& p : pts) CHECK(std::fabs(p.y()) < 1e-14);

    const ConvexBody poly = ConvexBody::regular_polygon(5, 0.8);
    const auto ps = poly.boundary_samples(64);
    double mean = 0.0;
    std::vector<double> gaps;
    for (size_t i = 0; i < ps.size(); ++i) {
        gaps.push_back(dist(ps[i], ps[(i + 1) % ps.size()]));
        mean += gaps.back();
    }
    mean /= gaps.size();
    for (double g : gaps) CHECK(std::fabs(g - mean) < 0.2 * mean);
}

TEST_CASE("support_strip: circle closed form") {
    const ConvexBody c = ConvexBody::circle(HPoint(0.2, -0.1), 0.7);
    int hits = 0;
    while (hits < 50) {
        const Geodesic g = random_line();
        const double s = signed_dist(HPoint(0.2, -0.1), g);
        if (std::fabs(s) >= 0.65) continue;
        ++hits;
        const Strip strip = c.support_strip(g);
        CHECK(strip.d_plus == doctest::Approx(s + 0.7).epsilon(1e-12));
        CHECK(strip.d_minus == doctest::Approx(0.7 - s).epsilon(1e-12));
        CHECK(strip.width() == doctest::Approx(1.4).epsilon(1e-12));
        // witnesses attain the extremes
        CHECK(signed_dist(strip.touch_plus, g) == doctest::Approx(strip.d_plus).epsilon(1e-9));
        CHECK(signed_dist(strip.touch_minus, g) == doctest::Approx(-strip.d_minus).epsilon(1e-9));
    }
}

TEST_CASE("support_strip: segment and misses") {
    const double d = 1.2;
    const double ck = std::tanh(d / 2);
    const ConvexBody s = ConvexBody::segment(HPoint(-ck, 0), HPoint(ck, 0));
    const Geodesic bisector{IdealPoint(kPi / 2), IdealPoint(3 * kPi / 2)};
    const Strip strip = s.support_strip(bisector);
    CHECK(strip.d_plus == doctest::Approx(d / 2).epsilon(1e-12));
    CHECK(strip.d_minus == doctest::Approx(d / 2).epsilon(1e-12));

    const Geodesic far = geodesic_through(HPoint(0, 0.9), HPoint(0.1, 0.9));
    CHECK_THROWS_AS(s.support_strip(far), LineMissesBody);
}

TEST_CASE("support_strip: polygon extremes sit at vertices") {
    const ConvexBody poly = ConvexBody::regular_polygon(7, 0.9);
    const auto* pv = std::get_if<ConvexBody::Polygon>(&poly.variant());
    REQUIRE(pv != nullptr);
    int done = 0;
    while (done < 25) {
        const Geodesic g = random_line();
        FormExtent e = poly.extent(g.normal());
        if (!(e.min_value < 0 && e.max_value > 0)) continue;
        ++done;
        const Strip strip = poly.support_strip(g);
        // brute force over a dense sampling agrees to 1e-9
        const auto [bp, bm] = brute_strip(poly, g, 4096);
        CHECK(strip.d_plus >= bp - 1e-12);
        CHECK(strip.d_minus >= bm - 1e-12);
        CHECK(std::fabs(strip.d_plus - bp) < 1e-9);
        CHECK(std::fabs(strip.d_minus - bm) < 1e-9);
        // and the attaining samples are vertices
        double vmax = -1e300, vmin = 1e300;
        for (const HPoint& v : pv->vertices) {
            const double sd = signed_dist(v, g);
            vmax = std::max(vmax, sd);
            vmin = std::min(vmin, sd);
        }
        CHECK(strip.d_plus == doctest::Approx(vmax).epsilon(1e-12));
        CHECK(strip.d_minus == doctest::Approx(-vmin).epsilon(1e-12));
    }
}

TEST_CASE("support_strip: smooth families match dense brute force") {
    const ConvexBody bodies[] = {ConvexBody::reuleaux(3, 1.0),
                                 ConvexBody::reuleaux(5, 0.8),
                                 ConvexBody::magic_quadrangle(),
                                 ConvexBody::circle(HPoint(0.1, 0.2), 0.6),
                                 sample_disk_intersection({HPoint(0.2, 0.0), HPoint(-0.1, 0.15),
                                                           HPoint(0.0, -0.2)},
                                                          {1.0, 0.9, 1.1}, 1024)};
    for (const ConvexBody& body : bodies) {
        int done = 0;
        while (done < 15) {
            const Geodesic g = random_line();
            FormExtent e = body.extent(g.normal());
            if (!(e.min_value < -0.05 && e.max_value > 0.05)) continue;
            ++done;
            const Strip strip = body.support_strip(g);
            const auto [bp, bm] = brute_strip(body, g, 4096);
            // the sampled oracle can only under-estimate the true extremes
            CHECK(strip.d_plus >= bp - 1e-11);
            CHECK(strip.d_minus >= bm - 1e-11);
            CHECK(std::fabs(strip.d_plus - bp) < 1e-9);
            CHECK(std::fabs(strip.d_minus - bm) < 1e-9);
        }
    }
}

TEST_CASE("regular polygon geometry") {
    const double r = 0.8;
    const ConvexBody sq = ConvexBody::regular_polygon(4, r);
    const auto& vs = std::get<ConvexBody::Polygon>(sq.variant()).vertices;
    CHECK(dist(vs[0], vs[2]) == doctest::Approx(2 * r).epsilon(1e-12));

    const double rq = std::log(1.0 + std::sqrt(2.0));
    const ConvexBody sq2 = ConvexBody::regular_polygon(4, rq);
    const auto& vs2 = std::get<ConvexBody::Polygon>(sq2.variant()).vertices;
    CHECK(dist(vs2[0], vs2[2]) == doctest::Approx(2 * rq).epsilon(1e-12));

    // side length: sinh(side/2) = sinh(r) sin(pi/n)
    for (int n : {3, 4, 5, 8}) {
        const ConvexBody p = ConvexBody::regular_polygon(n, r);
        const auto& pv = std::get<ConvexBody::Polygon>(p.variant()).vertices;
        const double side = dist(pv[0], pv[1]);
        CHECK(std::sinh(side / 2) ==
              doctest::Approx(std::sinh(r) * std::sin(kPi / n)).epsilon(1e-12));
    }
}

TEST_CASE("reuleaux geometry") {
    for (int n : {3, 5, 7}) {
        for (double d : {0.5, 1.0, 2.0}) {
            const ConvexBody b = ConvexBody::reuleaux(n, d);
            const int k = (n + 1) / 2;
            // the long diagonal connects vertex i with vertex i+k-1
            const auto junct = b.junction_params();
            REQUIRE(static_cast<int>(junct.size()) == n);
            std::vector<HPoint> vertices;
            for (double t : junct) vertices.push_back(b.boundary_point(t));
            for (int i = 0; i < n; ++i)
                CHECK(dist(vertices[i], vertices[(i + k - 1) % n]) ==
                      doctest::Approx(d).epsilon(1e-10));
            // circumradius relation sinh(d/2) = sinh(rc) sin((k-1)pi/n)
            const double rc = dist(HPoint(0, 0), vertices[0]);
            CHECK(std::sinh(d / 2) ==
                  doctest::Approx(std::sinh(rc) * std::sin((k - 1) * kPi / n)).epsilon(1e-12));
            // every vertex sees the whole opposite arc at distance exactly d
            for (int i = 0; i < n; ++i) {
                const int arc = (i - k + n) % n;  // arc piece centered at vertex i
                const double t0 = junct[arc];
                const double t1 = arc + 1 < n ? junct[arc + 1] : 1.0;
                for (int s = 0; s <= 32; ++s) {
                    const double t = t0 + (t1 - t0) * s / 32.0;
                    CHECK(dist(vertices[i], b.boundary_point(t)) ==
                          doctest::Approx(d).epsilon(1e-10));
                }
            }
            CHECK(b.diameter().value == doctest::Approx(d).epsilon(1e-9));
        }
    }
}

TEST_CASE("hypercycle domain geometry") {
    const double a = std::acosh(std::sqrt(4.0 / 3.0));
    const double h = std::acosh(std::sqrt(1.5));
    const ConvexBody dom = ConvexBody::hypercycle_domain(a, h);

    // corners sit at the junctions of the four pieces
    const auto junct = dom.junction_params();
    REQUIRE(junct.size() == 4);
    std::vector<HPoint> corners;
    for (double t : junct) corners.push_back(dom.boundary_point(t));
    // both diagonals have cosh(diag/2) = cosh(a) cosh(h)
    const double diag = 2 * std::acosh(std::cosh(a) * std::cosh(h));
    CHECK(diag == doctest::Approx(2 * std::acosh(std::sqrt(2.0))).epsilon(1e-12));
    CHECK(dist(corners[0], corners[2]) == doctest::Approx(diag).epsilon(1e-10));
    CHECK(dist(corners[1], corners[3]) == doctest::Approx(diag).epsilon(1e-10));
    CHECK(dist(corners[0], corners[2]) == doctest::Approx(dist(corners[1], corners[3])).epsilon(1e-12));

    // every boundary point has |signed distance to the leading line| <= h,
    // with equality exactly on the two hypercycle arcs
    for (int i = 0; i < 512; ++i) {
        const double t = i / 512.0;
        const double sd = std::fabs(signed_dist(dom.boundary_point(t), x_axis));
        CHECK(sd <= h + 1e-10);
        const bool on_tops = (t >= junct[0] && t < junct[1]) || (t >= junct[2] && t < junct[3]);
        if (on_tops && t > 1e-9)
            CHECK(sd == doctest::Approx(h).epsilon(1e-10));
    }
    CHECK(dom.diameter().value == doctest::Approx(diag).epsilon(1e-9));
}

TEST_CASE("diameter basics") {
    CHECK(ConvexBody::circle(HPoint(0.1, 0), 0.45).diameter().value ==
          doctest::Approx(0.9).epsilon(1e-12));
    const ConvexBody s = ConvexBody::segment(HPoint(-0.3, 0.1), HPoint(0.5, -0.2));
    CHECK(s.diameter().value ==
          doctest::Approx(dist(HPoint(-0.3, 0.1), HPoint(0.5, -0.2))).epsilon(1e-12));
    // witness pair attains the value
    const ConvexBody r = ConvexBody::reuleaux(5, 1.0);
    const DiameterResult dr = r.diameter();
    CHECK(dist(dr.p, dr.q) == doctest::Approx(dr.value).epsilon(1e-12));
    // no sampled pair exceeds it
    const auto pts = r.boundary_samples(512);
    for (size_t i = 0; i < pts.size(); i += 7)
        for (size_t j = i + 1; j < pts.size(); j += 11)
            CHECK(dist(pts[i], pts[j]) <= dr.value + 1e-9);
}

TEST_CASE("contains") {
    const ConvexBody c = ConvexBody::circle(HPoint(0.2, 0.1), 0.5);
    CHECK(c.contains(HPoint(0.2, 0.1)));
    const MVec dir{1, 0, 0};
    const HPoint outside = project(HPoint(0.2, 0.1).lift() * std::cosh(0.6) + dir * std::sinh(0.6));
    CHECK_FALSE(c.contains(outside));

    const ConvexBody poly = ConvexBody::regular_polygon(5, 0.7);
    for (const auto& v : std::get<ConvexBody::Polygon>(poly.variant()).vertices)
        CHECK(poly.contains(v, 1e-9));  // boundary counts
    CHECK(poly.contains(HPoint(0, 0)));
    CHECK_FALSE(poly.contains(HPoint(0.9, 0)));
}

TEST_CASE("convexity: geodesic midpoints of boundary pairs stay inside") {
    const ConvexBody bodies[] = {ConvexBody::circle(HPoint(0.1, -0.2), 0.8),
                                 ConvexBody::regular_polygon(6, 0.9),
                                 ConvexBody::reuleaux(3, 1.2),
                                 ConvexBody::magic_quadrangle()};
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const ConvexBody& b : bodies) {
        for (int i = 0; i < 300; ++i) {
            const HPoint p = b.boundary_point(uni(rng));
            const HPoint q = b.boundary_point(uni(rng));
            CHECK(b.contains(geodesic_midpoint(p, q), 1e-9));
        }
    }
}

TEST_CASE("sample_disk_intersection") {
    const std::vector<HPoint> centers{HPoint(0.2, 0.0), HPoint(-0.15, 0.18), HPoint(0.0, -0.2)};
    const std::vector<double> radii{1.0, 0.9, 1.1};
    const ConvexBody body = sample_disk_intersection(centers, radii, 512);
    CHECK(body.h_convex());
    const auto& pts = std::get<ConvexBody::Sampled>(body.variant()).boundary;
    REQUIRE(pts.size() == 512);
    for (const HPoint& p : pts) {
        double closest = 1e300;
        for (size_t i = 0; i < centers.size(); ++i) {
            CHECK(dist(p, centers[i]) <= radii[i] + 1e-9);
            closest = std::min(closest, radii[i] - dist(p, centers[i]));
        }
        CHECK(closest < 1e-9);  // each sample lies on some disk boundary
    }
    CHECK_THROWS_AS(sample_disk_intersection({HPoint(0.9, 0)}, {0.3}, 64),
                    BodyConstructionError);
}

TEST_CASE("poses and rotation") {
    const ConvexBody r0 = ConvexBody::reuleaux(3, 1.0);
    const ConvexBody r1 = rotated_about_origin(r0, 0.7);
    CHECK(r1.diameter().value == doctest::Approx(1.0).epsilon(1e-9));

    const Pose pose{HPoint(0.3, -0.1), 0.4};
    const ConvexBody dom = ConvexBody::hypercycle_domain(0.5, 0.4, pose);
    CHECK(dom.contains(HPoint(0.3, -0.1)));
    // diagonal length is pose invariant
    CHECK(dom.diameter().value ==
          doctest::Approx(2 * std::acosh(std::cosh(0.5) * std::cosh(0.4))).epsilon(1e-9));
}

TEST_CASE("support_at and tangent lines") {
    const ConvexBody c = ConvexBody::circle(HPoint(0, 0), 1.0);
    const SupportAt sa = c.support_at(0.25);
    CHECK_FALSE(sa.corner);
    const Geodesic tan = c.tangent_line(0.25);
    // ccw travel keeps the body on the left: tangent extent is [0, 2r]
    const FormExtent e = c.extent(tan.normal());
    CHECK(std::fabs(std::asinh(e.min_value)) < 1e-9);
    CHECK(std::asinh(e.max_value) == doctest::Approx(2.0).epsilon(1e-9));

    const ConvexBody poly = ConvexBody::regular_polygon(4, 0.8);
    const SupportAt corner = poly.support_at(poly.junction_params()[1]);
    CHECK(corner.corner);
    CHECK_THROWS_AS(poly.tangent_line(poly.junction_params()[1]), Error);
}

TEST_CASE("locate_boundary_param") {
    const ConvexBody r = ConvexBody::reuleaux(5, 1.0);
    for (double t : {0.07, 0.33, 0.61, 0.98}) {
        const HPoint p = r.boundary_point(t);
        const double back = r.locate_boundary_param(p);
        CHECK(dist(r.boundary_point(back), p) < 1e-9);
    }
    CHECK_THROWS_AS(r.locate_boundary_param(HPoint(0, 0)), PointNotOnBoundary);
}
