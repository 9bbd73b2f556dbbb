#include "hypwidth/widths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "golden.hpp"

namespace hypwidth {

namespace {

// strip width extended continuously across tangency (max - min of the signed
// distance over the boundary)
double extended_width(const ConvexBody& K, const MVec& normal) {
    const FormExtent e = K.extent(normal);
    return std::asinh(e.max_value) - std::asinh(e.min_value);
}

struct ArcProblem {
    const ConvexBody& K;
    double theta_x;

    Geodesic chord(double psi) const {
        return Geodesic(IdealPoint(theta_x + psi), IdealPoint(theta_x));
    }
    double value(double psi) const { return extended_width(K, chord(psi).normal()); }
    bool hit(double psi) const {
        const FormExtent e = K.extent(chord(psi).normal());
        return e.min_value <= 1e-12 && e.max_value >= -1e-12;
    }
};

struct Arc {
    double lo, hi, seed;
};

// Feasible Y angles (offsets from theta_x) for which the chord YX meets K:
// a closed arc around the chord through an interior point, found by
// bisection against the hit predicate.
Arc feasible_arc(const ArcProblem& prob) {
    const HPoint& inside = prob.K.interior_point();
    const MVec t = tangent_toward(inside, IdealPoint(prob.theta_x));
    const Geodesic through = geodesic_from_normal(mcross(inside.lift(), t));
    double seed = through.from().theta() - prob.theta_x;
    seed -= 2.0 * kPi * std::floor(seed / (2.0 * kPi));
    seed = std::min(std::max(seed, 1e-9), 2.0 * kPi - 1e-9);

    const double eps = 1e-9;
    double lo = seed, hi = seed;
    if (!prob.hit(eps)) {
        double a = eps, b = seed;  // a misses, b hits
        for (int i = 0; i < 60; ++i) {
            const double m = 0.5 * (a + b);
            (prob.hit(m) ? b : a) = m;
        }
        lo = b;
    } else {
        lo = eps;
    }
    if (!prob.hit(2.0 * kPi - eps)) {
        double a = seed, b = 2.0 * kPi - eps;  // a hits, b misses
        for (int i = 0; i < 60; ++i) {
            const double m = 0.5 * (a + b);
            (prob.hit(m) ? a : b) = m;
        }
        hi = a;
    } else {
        hi = 2.0 * kPi - eps;
    }
    return {lo, hi, seed};
}

DirectionWidth optimize_over_arc(const ConvexBody& K, const IdealPoint& X, const SupOptions& opt,
                                 bool maximize) {
    const ArcProblem prob{K, X.theta()};
    const Arc arc = feasible_arc(prob);
    const double sign = maximize ? 1.0 : -1.0;
    auto f = [&](double psi) { return sign * prob.value(psi); };

    std::vector<std::pair<double, double>> cand;  // (signed value, psi)
    cand.emplace_back(f(arc.seed), arc.seed);
    if (arc.hi - arc.lo > 1e-13) {
        const int n = std::max(2, opt.y_grid);
        std::vector<double> psis(n), vals(n);
        for (int i = 0; i < n; ++i) {
            psis[i] = arc.lo + (arc.hi - arc.lo) * i / (n - 1);
            vals[i] = f(psis[i]);
        }
        std::vector<int> peaks;
        for (int i = 0; i < n; ++i) {
            const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
            const bool right_ok = i == n - 1 || vals[i] >= vals[i + 1];
            if (left_ok && right_ok) peaks.push_back(i);
        }
        std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vals[a] > vals[b]; });
        if (static_cast<int>(peaks.size()) > opt.refine_brackets)
            peaks.resize(opt.refine_brackets);
        for (int i : peaks) {
            cand.emplace_back(vals[i], psis[i]);
            const double a = psis[std::max(0, i - 1)];
            const double b = psis[std::min(n - 1, i + 1)];
            const double r = detail::golden_max(f, a, b, opt.param_tol);
            cand.emplace_back(f(r), r);
        }
        cand.emplace_back(vals[0], psis[0]);
        cand.emplace_back(vals[n - 1], psis[n - 1]);
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [v, psi] : cand) best = std::max(best, v);
    // plateau ties resolve to the smallest witness angle
    double best_theta = std::numeric_limits<double>::infinity();
    for (const auto& [v, psi] : cand) {
        if (v >= best - opt.value_tie)
            best_theta = std::min(best_theta, IdealPoint(prob.theta_x + psi).theta());
    }
    return {sign * best, IdealPoint(best_theta)};
}

}  // namespace

double strip_width(const ConvexBody& K, const Geodesic& g, double tol) {
    return K.support_strip(g, tol).width();
}

DirectionWidth width(const ConvexBody& K, const IdealPoint& X, const SupOptions& opt) {
    return optimize_over_arc(K, X, opt, true);
}

DirectionWidth thickness_toward(const ConvexBody& K, const IdealPoint& X, const SupOptions& opt) {
    return optimize_over_arc(K, X, opt, false);
}

ThicknessResult thickness(const ConvexBody& K, int directions, const SupOptions& opt) {
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (int i = 0; i < directions; ++i) {
        const double th = 2.0 * kPi * i / directions;
        const double v = thickness_toward(K, IdealPoint(th), opt).value;
        if (v < best) { best = v; best_theta = th; }
    }
    const double step = 2.0 * kPi / directions;
    const double refined = detail::golden_min(
        [&](double th) { return thickness_toward(K, IdealPoint(th), opt).value; },
        best_theta - step, best_theta + step, 1e-7);
    const DirectionWidth at_refined = thickness_toward(K, IdealPoint(refined), opt);
    if (at_refined.value <= best)
        return {at_refined.value, IdealPoint(refined), at_refined.witness_y};
    return {best, IdealPoint(best_theta),
            thickness_toward(K, IdealPoint(best_theta), opt).witness_y};
}

WidthProfile width_profile(const ConvexBody& K, int m, const SupOptions& opt) {
    if (m < 8) throw ArgumentOutOfRange("width_profile: needs at least 8 directions");
    WidthProfile p;
    p.thetas.reserve(m);
    p.values.reserve(m);
    p.witness_y_thetas.reserve(m);
    for (int i = 0; i < m; ++i) {
        const double th = 2.0 * kPi * i / m;
        const DirectionWidth w = width(K, IdealPoint(th), opt);
        p.thetas.push_back(th);
        p.values.push_back(w.value);
        p.witness_y_thetas.push_back(w.witness_y.theta());
        if (w.value > p.values[p.sup_index]) p.sup_index = i;
        if (w.value < p.values[p.inf_index]) p.inf_index = i;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Prior width concepts

IdealPoint ray_ideal(const HPoint& base, double theta) {
    const double ux = std::cos(theta), uy = std::sin(theta);
    const double bu = base.x() * ux + base.y() * uy;
    const double c = base.x() * base.x() + base.y() * base.y() - 1.0;
    const double t = -bu + std::sqrt(bu * bu - c);
    return IdealPoint(std::atan2(base.y() + t * uy, base.x() + t * ux));
}

double santalo_breadth(const ConvexBody& K, const HPoint& z, const Geodesic& support_line,
                       double support_tol) {
    const FormExtent e = K.extent(support_line.normal());
    const double smin = std::asinh(e.min_value), smax = std::asinh(e.max_value);
    if (smin < -support_tol && smax > support_tol)
        throw NotSupporting("santalo_breadth: line crosses the body");

    const HPoint foot = foot_of_perpendicular(z, support_line);
    const Geodesic normal_line = perpendicular_at(support_line, foot, 1e-6);
    const MVec along = tangent_toward(foot, normal_line.to());
    const MVec nn = normal_line.normal();
    // foot coordinate along the normal line, measured from z's foot
    auto coord = [&](const MVec& w) {
        const MVec f = unit_timelike(w - nn * mdot(w, nn));
        return std::asinh(mdot(f, along));
    };
    const double sgn = coord(K.interior_point().lift()) >= 0 ? 1.0 : -1.0;

    auto at = [&](double t) { return sgn * coord(K.boundary_lift(t)); };
    const int grid = 1024;
    double best = -std::numeric_limits<double>::infinity();
    double bt = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / grid;
        const double v = at(t);
        if (v > best) { best = v; bt = t; }
    }
    for (double j : K.junction_params()) {
        const double v = at(j);
        if (v > best) { best = v; bt = j; }
    }
    const double r = detail::golden_max(at, bt - 1.5 / grid, bt + 1.5 / grid, 1e-12);
    return std::max(best, at(r));
}

FillmoreWidth fillmore_width(const ConvexBody& K, double theta, const HPoint& base) {
    // |OP| + |OQ|: the tangent paracycles based at the two opposite ideal
    // points of the line through base, each measured along that line.  The
    // value genuinely depends on the base point.
    const MVec b = base.lift();
    auto side = [&](double th) {
        const MVec xi = ray_ideal(base, th).null_vector();
        const FormExtent e = K.extent(xi);
        // max of B_X over the body: log(-min <P, xi>) - log(-<base, xi>)
        return std::log(e.min_value / mdot(b, xi));
    };
    return {side(theta) + side(theta + kPi), !K.h_convex()};
}

Geodesic leichtweiss_leading_line(const HPoint& base, double theta) {
    const IdealPoint X = ray_ideal(base, theta);
    const MVec ray_normal = mcross(base.lift(), tangent_toward(base, X));
    return geodesic_from_normal(mcross(base.lift(), ray_normal));
}

double leichtweiss_width(const ConvexBody& K, double theta, const HPoint& base) {
    if (!K.contains(base, 1e-9))
        throw BaseOutsideBody("leichtweiss_width: base point must lie in the body");
    return extended_width(K, leichtweiss_leading_line(base, theta).normal());
}

std::vector<OppositePoint> opposite_point_widths(const ConvexBody& K, double z_param,
                                                 const OppositeOptions& opt) {
    const double delta = opt.tangent_halfstep > 0 ? opt.tangent_halfstep : 1.0 / 1024;
    auto tangent_geo = [&](double t) {
        return geodesic_through(K.boundary_point(t - delta), K.boundary_point(t + delta));
    };
    const HPoint zp = K.boundary_point(z_param);
    const Geodesic gz = tangent_geo(z_param);
    const MVec vz = tangent_toward(zp, gz.to());

    auto residual = [&](double w) {
        const HPoint wp = K.boundary_point(w);
        const double az = angle_between(tangent_toward(zp, wp), vz);
        const Geodesic gw = tangent_geo(w);
        const double aw = angle_between(tangent_toward(wp, zp), tangent_toward(wp, gw.to()));
        return az - aw;
    };

    const int n = std::max(8, opt.scan);
    const double a0 = z_param + opt.exclusion;
    const double a1 = z_param + 1.0 - opt.exclusion;
    std::vector<double> roots;
    double prev_w = a0, prev_r = residual(a0);
    for (int i = 1; i < n; ++i) {
        const double w = a0 + (a1 - a0) * i / (n - 1);
        const double r = residual(w);
        if (prev_r == 0.0) {
            roots.push_back(prev_w);
        } else if (prev_r * r < 0.0) {
            double lo = prev_w, hi = w, flo = prev_r;
            for (int it = 0; it < opt.bisect_iters; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = residual(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; }
                else hi = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_w = w;
        prev_r = r;
    }

    std::vector<OppositePoint> out;
    for (double r : roots) {
        try {
            const double w = line_line_distance(gz, tangent_geo(r));
            const double t = r - std::floor(r);
            out.push_back({w, t, K.boundary_point(t)});
        } catch (const LinesIntersect&) {
        } catch (const LinesAsymptotic&) {
        }
    }
    if (out.empty())
        throw NoOppositeFound("opposite_point_widths: no alternate-angle sign change found");
    std::sort(out.begin(), out.end(),
              [](const OppositePoint& a, const OppositePoint& b) { return a.param < b.param; });
    return out;
}

// ---------------------------------------------------------------------------
// Segment closed forms

double segment_width_closed_form(const SegmentWidthParams& p) {
    if (!(p.length > 0)) throw ArgumentOutOfRange("segment width: length must be positive");
    switch (p.branch) {
        case SegmentBranch::AtForwardIdeal:
        case SegmentBranch::AtBackwardIdeal:
            if (std::fabs(p.angle) > kAngleTol)
                throw BranchMismatch("segment width: ideal-point branches have angle 0");
            return 0.0;
        case SegmentBranch::Plateau:
            return p.length;
        case SegmentBranch::Alpha:
        case SegmentBranch::Beta: {
            if (!(p.angle > 0.0) || p.angle > kPi / 2 + 1e-12)
                throw BranchMismatch("segment width: slant branch needs an angle in (0, pi/2]");
            const double sd = std::sinh(p.length), cd = std::cosh(p.length);
            return std::asinh(std::sin(p.angle) * sd / (cd - std::cos(p.angle) * sd));
        }
    }
    throw BranchMismatch("segment width: unknown branch");
}

SegmentWidthParams segment_direction_params(double length, double theta) {
    if (!(length > 0)) throw ArgumentOutOfRange("segment width: length must be positive");
    double th = theta - 2.0 * kPi * std::floor(theta / (2.0 * kPi));
    if (th > kPi) th = 2.0 * kPi - th;  // width extends symmetrically below the axis
    if (th < 1e-12) return {length, 0.0, SegmentBranch::AtForwardIdeal};
    if (kPi - th < 1e-12) return {length, 0.0, SegmentBranch::AtBackwardIdeal};

    const double ck = std::tanh(length / 2);
    const HPoint a(-ck, 0.0), b(ck, 0.0);
    const IdealPoint x(th);
    const double alpha = angle_at(a, b, x).radians;
    const double beta = angle_at(b, a, x).radians;
    const double pa = parallel_angle(length).radians;
    if (alpha <= pa + 1e-12) return {length, alpha, SegmentBranch::Alpha};
    if (beta <= pa + 1e-12) return {length, beta, SegmentBranch::Beta};
    return {length, alpha, SegmentBranch::Plateau};
}

double segment_crossing_width(double length, double alpha, double t) {
    if (t < 0.0 || t > length)
        throw ArgumentOutOfRange("segment_crossing_width: t must lie in [0, length]");
    const double sin_delta = std::sin(alpha) / (std::cosh(t) - std::cos(alpha) * std::sinh(t));
    return std::asinh(sin_delta * std::sinh(t)) + std::asinh(sin_delta * std::sinh(length - t));
}

double segment_crossing_maximizer(double length, double alpha) {
    const double c = std::cos(alpha);
    if (c <= 0.0) return 0.0;
    return std::min(length, std::atanh(c));
}

// ---------------------------------------------------------------------------
// Hypercycle domain closed forms

HypDomainWidthForms hypercycle_domain_width_forms(double half_chord, double height) {
    if (!(half_chord > 0) || !(height > 0))
        throw ArgumentOutOfRange("hypercycle_domain_width_forms: parameters must be positive");
    const double ca = std::cosh(half_chord), sa = std::sinh(half_chord);
    const double ch = std::cosh(height), sh = std::sinh(height), th = std::tanh(height);
    const double cosh_half_d = ca * ch;
    const double sinh_half_d = std::sqrt(cosh_half_d * cosh_half_d - 1.0);
    HypDomainWidthForms out;
    out.diagonal = 2.0 * std::acosh(cosh_half_d);
    out.compact_form = std::asinh(th * (ca + sa) / sinh_half_d);
    out.sin_alpha = th * (ca - sa) / sinh_half_d;
    out.cos_alpha = (ca * sh * sh + sa) / (ch * sinh_half_d);
    const double sinh_d = 2.0 * sinh_half_d * cosh_half_d;
    const double cosh_d = 2.0 * cosh_half_d * cosh_half_d - 1.0;
    out.alpha_chain = std::asinh(out.sin_alpha * sinh_d / (cosh_d - out.cos_alpha * sinh_d));
    out.discrepancy = std::fabs(out.compact_form - out.alpha_chain) > 1e-9;
    return out;
}

}  // namespace hypwidth
