#include "hypwidth/klein.hpp"

#include <algorithm>

namespace hypwidth {

namespace {

double clamp_unit(double v) { return std::min(1.0, std::max(-1.0, v)); }

}  // namespace

Geodesic geodesic_from_normal(const MVec& n) {
    // Ideal endpoints solve n.x cos(theta) + n.y sin(theta) = n.t.
    const double r = std::hypot(n.x, n.y);
    const double phi = std::atan2(n.y, n.x);
    const double delta = std::acos(clamp_unit(n.t / r));
    Geodesic g(IdealPoint(phi - delta), IdealPoint(phi + delta));
    if (mdot(g.normal(), n) < 0) g = g.reversed();
    return g;
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
    const MVec c = mcross(p.lift(), q.lift());
    const double n2 = mdot(c, c);
    if (!(n2 > 0))
        throw DegenerateRay("geodesic_through requires two distinct points");
    return geodesic_from_normal(c * (1.0 / std::sqrt(n2)));
}

HPoint foot_of_perpendicular(const HPoint& p, const Geodesic& g) {
    const MVec lifted = p.lift();
    const MVec f = lifted - g.normal() * mdot(lifted, g.normal());
    return project(unit_timelike(f));
}

Geodesic perpendicular_at(const Geodesic& g, const HPoint& p, double tol) {
    if (std::fabs(signed_dist(p, g)) > tol)
        throw PointNotOnGeodesic("perpendicular_at: point is off the geodesic");
    // mcross(P, n) is automatically unit: <P,n> = 0, <P,P> = -1, <n,n> = 1.
    return geodesic_from_normal(mcross(p.lift(), g.normal()));
}

MVec tangent_toward(const HPoint& p, const HPoint& q) {
    const MVec P = p.lift(), Q = q.lift();
    const MVec u = Q + P * mdot(P, Q);
    const double n2 = mdot(u, u);
    if (!(n2 > 1e-28)) throw DegenerateRay("tangent_toward: coincident points");
    return u * (1.0 / std::sqrt(n2));
}

MVec tangent_toward(const HPoint& p, const IdealPoint& X) {
    const MVec P = p.lift(), xi = X.null_vector();
    const MVec u = xi + P * mdot(P, xi);
    return unit_spacelike(u);
}

double angle_between(const MVec& u, const MVec& v) {
    return std::acos(clamp_unit(mdot(u, v) / std::sqrt(mdot(u, u) * mdot(v, v))));
}

Angle angle_at(const HPoint& p, const HPoint& q, const HPoint& r) {
    return {angle_between(tangent_toward(p, q), tangent_toward(p, r))};
}

Angle angle_at(const HPoint& p, const HPoint& q, const IdealPoint& r) {
    return {angle_between(tangent_toward(p, q), tangent_toward(p, r))};
}

Angle angle_at(const HPoint& p, const IdealPoint& q, const IdealPoint& r) {
    return {angle_between(tangent_toward(p, q), tangent_toward(p, r))};
}

Angle parallel_angle(double d) {
    if (d < 0) throw Error("parallel_angle: negative distance");
    return {std::acos(std::tanh(d))};
}

double busemann(const IdealPoint& X, const HPoint& p, const HPoint& base) {
    const MVec xi = X.null_vector();
    // <P, xi> < 0 for every interior point, so both logs are defined.
    return std::log(-mdot(p.lift(), xi)) - std::log(-mdot(base.lift(), xi));
}

double line_line_distance(const Geodesic& g1, const Geodesic& g2, double tol) {
    const double c = std::fabs(mdot(g1.normal(), g2.normal()));
    if (std::fabs(c - 1.0) <= tol)
        throw LinesAsymptotic("lines share an ideal point: distance is an unattained infimum");
    if (c < 1.0)
        throw LinesIntersect("lines cross inside the disk");
    return std::acosh(c);
}

}  // namespace hypwidth
