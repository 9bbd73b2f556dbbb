#include "hypwidth/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypwidth {

ConstancyVerdict is_constant_width(const ConvexBody& K, double tol, int directions,
                                   const SupOptions& opt) {
    const WidthProfile p = width_profile(K, directions, opt);
    ConstancyVerdict v;
    v.kind = ConstancyKind::Width;
    v.min = p.inf();
    v.max = p.sup();
    v.value = 0.5 * (v.min + v.max);
    v.tolerance = tol;
    v.constant = (v.max - v.min) <= tol;
    // the direction deviating most from the midpoint
    double worst = -1.0;
    for (size_t i = 0; i < p.values.size(); ++i) {
        const double dev = std::fabs(p.values[i] - v.value);
        if (dev > worst) { worst = dev; v.witness_theta = p.thetas[i]; }
    }
    return v;
}

ConstancyVerdict is_constant_shadow(const ConvexBody& K, double tol, int min_lines) {
    int grid = std::max(16, static_cast<int>(std::ceil(std::sqrt(4.0 * min_lines))));
    if (grid % 2) ++grid;  // keep diameters like (0, pi) on the grid
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<MVec> nulls(grid);
        for (int i = 0; i < grid; ++i) nulls[i] = IdealPoint(2.0 * kPi * i / grid).null_vector();
        int count = 0;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        int lo_i = 0, lo_j = 0, hi_i = 0, hi_j = 0;
        for (int i = 0; i < grid; ++i) {
            for (int j = i + 1; j < grid; ++j) {
                const MVec n = mcross(nulls[i], nulls[j]);
                const double norm2 = mdot(n, n);
                if (!(norm2 > 1e-24)) continue;
                const FormExtent e = K.extent(n * (1.0 / std::sqrt(norm2)));
                if (!(e.min_value <= 1e-12 && e.max_value >= -1e-12)) continue;
                ++count;
                const double w = std::asinh(e.max_value) - std::asinh(e.min_value);
                if (w < lo) { lo = w; lo_i = i; lo_j = j; }
                if (w > hi) { hi = w; hi_i = i; hi_j = j; }
            }
        }
        if (count < min_lines) { grid += grid / 2 + (grid / 2) % 2; continue; }
        ConstancyVerdict v;
        v.kind = ConstancyKind::Shadow;
        v.min = lo;
        v.max = hi;
        v.value = 0.5 * (lo + hi);
        v.tolerance = tol;
        v.constant = (hi - lo) <= tol;
        const bool low_side = (v.value - lo) >= (hi - v.value);
        const int wi = low_side ? lo_i : hi_i, wj = low_side ? lo_j : hi_j;
        v.witness_line = Geodesic(IdealPoint(2.0 * kPi * wi / grid),
                                  IdealPoint(2.0 * kPi * wj / grid));
        v.witness_theta = 2.0 * kPi * wi / grid;
        return v;
    }
    throw Error("is_constant_shadow: could not sample enough intersecting lines");
}

ConstancyVerdict is_constant_diameter(const ConvexBody& K, double tol, int samples) {
    const std::vector<HPoint> pts = K.boundary_samples(std::max(samples, 256));
    std::vector<MVec> lifts;
    lifts.reserve(pts.size());
    for (const auto& p : pts) lifts.push_back(p.lift());
    const double diam = K.diameter().value;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    size_t worst = 0;
    for (size_t i = 0; i < lifts.size(); ++i) {
        double far = 1.0;
        for (size_t j = 0; j < lifts.size(); ++j)
            if (j != i) far = std::max(far, -mdot(lifts[i], lifts[j]));
        const double pointwise = std::acosh(far);
        if (pointwise < lo) { lo = pointwise; worst = i; }
        hi = std::max(hi, pointwise);
    }
    ConstancyVerdict v;
    v.kind = ConstancyKind::Diameter;
    v.min = lo;
    v.max = std::max(hi, diam);
    v.value = diam;
    v.tolerance = tol;
    v.constant = (diam - lo) <= tol;
    v.witness_point = pts[worst];
    return v;
}

namespace {

double endpoint_residual(const ConvexBody& K, const HPoint& p, const HPoint& q) {
    const double t = K.locate_boundary_param(p, 1e-6);
    const SupportAt s = K.support_at(t);
    const MVec chord = tangent_toward(p, q);
    const double a_out = angle_between(chord, s.dir_out);
    const double a_in = angle_between(chord, s.dir_in);
    const double half = kPi / 2;
    if ((a_out - half) * (a_in - half) <= 0.0) return 0.0;  // inside the support cone
    return std::min(std::fabs(a_out - half), std::fabs(a_in - half));
}

}  // namespace

double double_normal_residual(const ConvexBody& K, const HPoint& p, const HPoint& q) {
    return std::max(endpoint_residual(K, p, q), endpoint_residual(K, q, p));
}

bool double_normal_check(const ConvexBody& K, const HPoint& p, const HPoint& q, double tol) {
    return double_normal_residual(K, p, q) <= tol;
}

double regular_polygon_rmin_tanh(int n) {
    if (n < 3) throw ArgumentOutOfRange("regular_polygon_rmin_tanh: n must be >= 3");
    if (n % 2) {
        const int k = (n + 1) / 2;
        const double a = (k - 1) * kPi / n;
        return (-1.0 + std::sqrt(1.0 + 4.0 * std::sin(kPi / n) / std::tan(a))) /
               (2.0 * std::cos(a));
    }
    const int k = n / 2;
    const double a = (k - 1) * kPi / n;
    const double c = std::cos(a), t = std::tan(a);
    return 1.0 / std::sqrt(c * c + t * t);
}

PolygonWidthReport regular_polygon_width_report(int n, double r, int profile_dirs,
                                                const SupOptions& opt) {
    if (n < 3) throw ArgumentOutOfRange("regular_polygon_width_report: n must be >= 3");
    if (!(r > 0)) throw ArgumentOutOfRange("regular_polygon_width_report: r must be positive");
    PolygonWidthReport rep;
    rep.n = n;
    rep.tanh_rmin = regular_polygon_rmin_tanh(n);
    rep.rmin = std::atanh(rep.tanh_rmin);
    const int k = (n + 1) / 2;
    const double angle = (k - 1) * kPi / n;  // (k-1)pi/(2k-1) resp. (k-1)pi/(2k)
    rep.sinh_half_d_formula = std::sinh(r) / std::sin(angle);
    rep.d_formula = 2.0 * std::asinh(rep.sinh_half_d_formula);

    const ConvexBody poly = ConvexBody::regular_polygon(n, r);
    const auto& vs = std::get<ConvexBody::Polygon>(poly.variant()).vertices;
    const int offset = n % 2 ? (k - 1) : n / 2;
    rep.d_geometric = dist(vs[0], vs[offset % n]);
    rep.discrepancy = std::fabs(rep.d_formula - rep.d_geometric) > 1e-9;

    if (profile_dirs > 0) {
        const WidthProfile p = width_profile(poly, profile_dirs, opt);
        rep.profile_min = p.inf();
        rep.profile_max = p.sup();
    }
    return rep;
}

double blaschke_inscribed_radius(double thickness, double diameter) {
    if (!(thickness > 0) || thickness > diameter + 1e-12)
        throw ArgumentOutOfRange("blaschke_inscribed_radius: need 0 < thickness <= diameter");
    const double st = std::sinh(thickness), ct = std::cosh(thickness);
    const double cd = std::cosh(std::max(thickness, diameter));
    const double arg = st * ct / (3.0 * cd * cd + st * st);
    // arg < 1 holds for every t <= d: 3 cosh^2 d + sinh^2 t > sinh t cosh t
    return std::atanh(arg);
}

InradiusResult inradius(const ConvexBody& K, int boundary_samples, int grid) {
    const std::vector<HPoint> pts = K.boundary_samples(boundary_samples);
    std::vector<MVec> lifts;
    lifts.reserve(pts.size());
    for (const auto& p : pts) lifts.push_back(p.lift());
    auto depth = [&](const HPoint& c) {  // min distance to the sampled boundary
        const MVec cl = c.lift();
        double closest = std::numeric_limits<double>::infinity();
        for (const MVec& b : lifts) closest = std::min(closest, -mdot(cl, b));
        return std::acosh(std::max(1.0, closest));
    };

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& p : pts) {
        x0 = std::min(x0, p.x());
        x1 = std::max(x1, p.x());
        y0 = std::min(y0, p.y());
        y1 = std::max(y1, p.y());
    }
    HPoint best = K.interior_point();
    double best_depth = depth(best);
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const double x = x0 + (x1 - x0) * (i + 0.5) / grid;
            const double y = y0 + (y1 - y0) * (j + 0.5) / grid;
            if (x * x + y * y >= 1.0 - 1e-9) continue;
            const HPoint c(x, y);
            if (!K.contains(c, 1e-12)) continue;
            const double d = depth(c);
            if (d > best_depth) { best_depth = d; best = c; }
        }
    }
    // coordinate descent in the chart
    double h = std::max(x1 - x0, y1 - y0) / grid;
    while (h > 1e-8) {
        bool improved = false;
        const double cand[4][2] = {{h, 0}, {-h, 0}, {0, h}, {0, -h}};
        for (const auto& step : cand) {
            const double nx = best.x() + step[0], ny = best.y() + step[1];
            if (nx * nx + ny * ny >= 1.0) continue;
            const HPoint c(nx, ny);
            if (!K.contains(c, 1e-12)) continue;
            const double d = depth(c);
            if (d > best_depth) {
                best_depth = d;
                best = c;
                improved = true;
            }
        }
        if (!improved) h *= 0.5;
    }
    return {best_depth, best};
}

BlaschkeCheck blaschke_verify(const ConvexBody& K, int thickness_directions,
                              const SupOptions& opt) {
    if (!K.h_convex())
        throw NotHConvex("blaschke_verify: the bound assumes an h-convex body");
    BlaschkeCheck out;
    out.diameter = K.diameter().value;
    out.thickness = std::min(thickness(K, thickness_directions, opt).value, out.diameter);
    out.bound_radius = blaschke_inscribed_radius(out.thickness, out.diameter);
    out.inradius = inradius(K).value;
    out.margin = out.inradius - out.bound_radius;
    out.holds = out.margin >= -1e-6;
    return out;
}

Table1 table1() {
    Table1 t;
    for (int n = 3; n <= 12; ++n) t.rows.push_back({n, regular_polygon_rmin_tanh(n)});
    t.sign_change_n = 0;
    for (size_t i = 1; i < t.rows.size(); i += 2) {
        if (t.rows[i].tanh_rmin < t.rows[i - 1].tanh_rmin) {
            t.sign_change_n = t.rows[i].n;
            break;
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "each even entry exceeds its odd predecessor until n = %d; the merged "
                  "sequence is monotone decreasing from n = %d on",
                  t.sign_change_n, t.sign_change_n - 1);
    t.note = buf;
    return t;
}

}  // namespace hypwidth
