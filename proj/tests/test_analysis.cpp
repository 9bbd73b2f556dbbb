#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypwidth/analysis.hpp"

using namespace hypwidth;

namespace {

const double magic_h = std::acosh(std::sqrt(1.5));
const double magic_d = 2.0 * std::acosh(std::sqrt(2.0));

ConvexBody axis_segment(double d) {
    const double ck = std::tanh(d / 2);
    return ConvexBody::segment(HPoint(-ck, 0), HPoint(ck, 0));
}

}  // namespace

TEST_CASE("constant width verdicts") {
    const ConvexBody c = ConvexBody::circle(HPoint(0, 0), 0.8);
    const ConstancyVerdict vc = is_constant_width(c, 1e-3, 90);
    CHECK(vc.constant);
    CHECK(vc.value == doctest::Approx(1.6).epsilon(1e-8));

    const ConstancyVerdict vr = is_constant_width(ConvexBody::reuleaux(5, 1.0), 1e-3, 90);
    CHECK(vr.constant);
    CHECK(vr.value == doctest::Approx(1.0).epsilon(1e-3));

    const ConstancyVerdict vs = is_constant_width(axis_segment(1.0), 1e-3, 90);
    CHECK_FALSE(vs.constant);
    CHECK(vs.min == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(vs.max == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("constant shadow verdicts") {
    const ConstancyVerdict vc = is_constant_shadow(ConvexBody::circle(HPoint(0, 0), 0.7), 1e-6, 1000);
    CHECK(vc.constant);
    CHECK(vc.max - vc.min < 1e-6);
    CHECK(vc.value == doctest::Approx(1.4).epsilon(1e-9));

    const ConstancyVerdict vm = is_constant_shadow(ConvexBody::magic_quadrangle(), 1e-3, 1000);
    CHECK_FALSE(vm.constant);
    CHECK(vm.min <= 2 * magic_h + 1e-6);
    REQUIRE(vm.witness_line.has_value());
    // the witness line reproduces the deviation in isolation
    const double w = strip_width(ConvexBody::magic_quadrangle(), *vm.witness_line);
    CHECK(std::fabs(w - vm.value) >= std::fabs(vm.max - vm.min) / 2 - 1e-9);

    CHECK_FALSE(is_constant_shadow(axis_segment(1.0), 1e-3, 1000).constant);
}

TEST_CASE("constant diameter verdicts") {
    CHECK(is_constant_diameter(ConvexBody::circle(HPoint(0, 0), 0.6), 1e-3, 256).constant);
    CHECK(is_constant_diameter(ConvexBody::reuleaux(3, 1.0), 1e-3, 256).constant);

    const ConstancyVerdict vm = is_constant_diameter(ConvexBody::magic_quadrangle(), 1e-3, 256);
    CHECK_FALSE(vm.constant);
    CHECK(vm.value == doctest::Approx(magic_d).epsilon(1e-8));
    CHECK(vm.min < magic_d - 0.2);  // interior arc points see nothing at full diameter
}

TEST_CASE("double normal check") {
    const ConvexBody c = ConvexBody::circle(HPoint(0, 0), 0.8);
    const HPoint east = c.boundary_point(0.0), west = c.boundary_point(0.5);
    CHECK(double_normal_check(c, east, west, 1e-6));
    const HPoint north = c.boundary_point(0.25);
    CHECK_FALSE(double_normal_check(c, east, north, 1e-3));
    CHECK(double_normal_residual(c, east, north) > 0.1);

    // every vertex-to-opposite-arc chord of a Reuleaux polygon is a double
    // normal: orthogonal to the arc, inside the support cone at the vertex
    const ConvexBody r = ConvexBody::reuleaux(3, 1.0);
    const auto junct = r.junction_params();
    for (int i = 0; i < 3; ++i) {
        const HPoint vertex = r.boundary_point(junct[i]);
        const int arc = (i + 1) % 3;  // piece centered at vertex i
        const double t0 = junct[arc], t1 = arc + 1 < 3 ? junct[arc + 1] : 1.0;
        for (double f : {0.15, 0.5, 0.85}) {
            const HPoint q = r.boundary_point(t0 + f * (t1 - t0));
            CHECK(double_normal_check(r, vertex, q, 1e-6));
        }
    }

    CHECK_THROWS_AS(double_normal_check(c, HPoint(0, 0), east, 1e-6), PointNotOnBoundary);
}

TEST_CASE("regular polygon minimal radii match the published values") {
    CHECK(regular_polygon_rmin_tanh(3) ==
          doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-12));
    CHECK(regular_polygon_rmin_tanh(4) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    const double published[] = {0.7321, 0.8165, 0.5309, 0.5547, 0.4080,
                                0.4091, 0.3286, 0.3233, 0.2739, 0.2673};
    for (int n = 3; n <= 12; ++n)
        CHECK(std::fabs(regular_polygon_rmin_tanh(n) - published[n - 3]) < 5e-5);
}

TEST_CASE("table1") {
    const Table1 t = table1();
    REQUIRE(t.rows.size() == 10);
    const double published[] = {0.7321, 0.8165, 0.5309, 0.5547, 0.4080,
                                0.4091, 0.3286, 0.3233, 0.2739, 0.2673};
    for (int i = 0; i < 10; ++i) {
        CHECK(t.rows[i].n == i + 3);
        CHECK(std::fabs(t.rows[i].tanh_rmin - published[i]) < 5e-5);
    }
    // even entries top their odd predecessors up to n = 8, first drop at n = 10
    CHECK(t.rows[5].tanh_rmin > t.rows[4].tanh_rmin);  // 0.4091 > 0.4080
    CHECK(t.rows[7].tanh_rmin < t.rows[6].tanh_rmin);  // 0.3233 < 0.3286
    CHECK(t.sign_change_n == 10);
    // monotone decreasing tail from n = 9
    for (int i = 7; i < 10; ++i) CHECK(t.rows[i].tanh_rmin < t.rows[i - 1].tanh_rmin);
    CHECK_FALSE(t.note.empty());
}

TEST_CASE("regular polygon width report flags the formula/geometry conflict") {
    const double rq = std::log(1.0 + std::sqrt(2.0));
    const PolygonWidthReport rep = regular_polygon_width_report(4, rq);
    CHECK(rep.d_geometric == doctest::Approx(2 * rq).epsilon(1e-10));
    CHECK(rep.discrepancy);
    CHECK(rep.d_formula != doctest::Approx(rep.d_geometric).epsilon(1e-6));

    // published anchor points of the printed formula at r = rmin
    const PolygonWidthReport r3 =
        regular_polygon_width_report(3, std::atanh(regular_polygon_rmin_tanh(3)));
    CHECK(r3.sinh_half_d_formula == doctest::Approx(1.2408).epsilon(1e-4));
    const PolygonWidthReport r4 =
        regular_polygon_width_report(4, std::atanh(regular_polygon_rmin_tanh(4)));
    CHECK(r4.sinh_half_d_formula == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("blaschke inscribed radius") {
    CHECK(blaschke_inscribed_radius(2.0, 2.0) == doctest::Approx(0.2504).epsilon(1e-3));
    const double small = blaschke_inscribed_radius(0.01, 0.01);
    CHECK(small == doctest::Approx(0.01 / 3.0).epsilon(1e-3));
    CHECK(std::fabs(small / 0.01 - 1.0 / 3.0) < 1e-4);

    // monotone increasing in t for fixed d
    double prev = 0.0;
    for (double t = 0.1; t <= 1.5; t += 0.1) {
        const double r = blaschke_inscribed_radius(t, 1.5);
        CHECK(r > prev);
        prev = r;
    }
    CHECK_THROWS_AS(blaschke_inscribed_radius(2.0, 1.0), ArgumentOutOfRange);
    CHECK_THROWS_AS(blaschke_inscribed_radius(0.0, 1.0), ArgumentOutOfRange);
}

TEST_CASE("inradius") {
    const InradiusResult ic = inradius(ConvexBody::circle(HPoint(0.15, -0.1), 0.6));
    CHECK(ic.value == doctest::Approx(0.6).epsilon(2e-4));
    CHECK(dist(ic.center, HPoint(0.15, -0.1)) < 2e-3);

    const InradiusResult ir = inradius(ConvexBody::reuleaux(3, 1.0));
    CHECK(ir.value < 1.0);
    CHECK(ir.value > 0.2);
}

TEST_CASE("blaschke_verify") {
    for (double r : {0.1, 0.5, 1.0}) {
        const BlaschkeCheck chk = blaschke_verify(ConvexBody::circle(HPoint(0, 0), r), 90);
        CHECK(chk.holds);
        CHECK(chk.thickness == doctest::Approx(2 * r).epsilon(1e-6));
        CHECK(chk.diameter == doctest::Approx(2 * r).epsilon(1e-12));
        CHECK(chk.margin > 0.0);
    }
    CHECK_THROWS_AS(blaschke_verify(ConvexBody::regular_polygon(5, 0.7), 90), NotHConvex);
    CHECK_THROWS_AS(blaschke_verify(ConvexBody::magic_quadrangle(), 90), NotHConvex);
}

TEST_CASE("regular polygons: constancy switches with the circumradius") {
    // small polygons behave like their Euclidean counterparts (not constant);
    // large ones reach constant width once the plateau arcs of consecutive
    // long diagonals cover the ideal circle
    const ConstancyVerdict small = is_constant_width(ConvexBody::regular_polygon(5, 0.2), 1e-3, 180);
    CHECK_FALSE(small.constant);
    const ConstancyVerdict big = is_constant_width(ConvexBody::regular_polygon(5, 0.65), 1e-3, 180);
    CHECK(big.constant);
    const ConstancyVerdict sq = is_constant_width(ConvexBody::regular_polygon(4, 1.2), 1e-3, 180);
    CHECK(sq.constant);
    CHECK(sq.value == doctest::Approx(2.4).epsilon(1e-9));  // the diagonal through the center
    // constant width without constant diameter: side midpoints reach nothing
    // at diagonal length
    CHECK_FALSE(is_constant_diameter(ConvexBody::regular_polygon(4, 1.2), 1e-3, 256).constant);
}

TEST_CASE("magic quadrangle separation: width yes, diameter no, shadow no") {
    const ConvexBody magic = ConvexBody::magic_quadrangle();
    const ConstancyVerdict w = is_constant_width(magic, 1e-3, 120);
    CHECK(w.constant);
    CHECK(w.value == doctest::Approx(magic_d).epsilon(1e-3));
    CHECK_FALSE(is_constant_diameter(magic, 1e-3, 256).constant);
    CHECK_FALSE(is_constant_shadow(magic, 1e-3, 1000).constant);
}
