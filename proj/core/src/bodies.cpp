#include "hypwidth/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "golden.hpp"

namespace hypwidth {

namespace detail {

void Piece::prepare() {
    if (kind == Kind::Cosh) {
        ch_u = std::cosh(ulen);
        sh_u = std::sinh(ulen);
        th_u = std::tanh(ulen);
        has_offset = mdot(offset, offset) != 0.0 || offset.t != 0.0;
    } else {
        cos0 = std::cos(phi0);
        sin0 = std::sin(phi0);
        cos1 = std::cos(phi0 + phispan);
        sin1 = std::sin(phi0 + phispan);
    }
}

double Piece::arclength() const {
    return kind == Kind::Cosh ? scale * ulen : sinh_r * phispan;
}

MVec Piece::point_at_arc(double s) const {
    if (kind == Kind::Cosh) {
        const double u = s / scale;
        return (P0 * std::cosh(u) + T0 * std::sinh(u)) * scale + offset;
    }
    const double phi = phi0 + s / sinh_r;
    return C * cosh_r + (E1 * std::cos(phi) + E2 * std::sin(phi)) * sinh_r;
}

MVec Piece::unit_velocity_at_arc(double s) const {
    if (kind == Kind::Cosh) {
        const double u = s / scale;
        return P0 * std::sinh(u) + T0 * std::cosh(u);
    }
    const double phi = phi0 + s / sinh_r;
    return E1 * (-std::sin(phi)) + E2 * std::cos(phi);
}

void Piece::extend(const MVec& v, double& lo, double& hi, double& s_lo, double& s_hi) const {
    auto consider = [&](double value, double s) {
        if (value > hi) { hi = value; s_hi = s; }
        if (value < lo) { lo = value; s_lo = s; }
    };
    if (kind == Kind::Cosh) {
        const double a = scale * mdot(P0, v);
        const double b = scale * mdot(T0, v);
        const double d = has_offset ? mdot(offset, v) : 0.0;
        consider(a + d, 0.0);
        consider(a * ch_u + b * sh_u + d, scale * ulen);
        // interior critical point at tanh(u) = -b/a, value sign(a) sqrt(a^2-b^2)
        if (a * b < 0.0 && std::fabs(b) < std::fabs(a) * th_u) {
            const double vs = std::copysign(std::sqrt(a * a - b * b), a) + d;
            if (vs > hi || vs < lo) consider(vs, scale * std::atanh(-b / a));
        }
    } else {
        const double k = cosh_r * mdot(C, v);
        const double a = sinh_r * mdot(E1, v);
        const double b = sinh_r * mdot(E2, v);
        consider(k + a * cos0 + b * sin0, 0.0);
        consider(k + a * cos1 + b * sin1, sinh_r * phispan);
        const double r = std::hypot(a, b);
        if (k + r > hi || k - r < lo) {
            const double phistar = std::atan2(b, a);
            for (double base : {phistar, phistar + kPi}) {
                double c = base + 2.0 * kPi * std::ceil((phi0 - base) / (2.0 * kPi));
                for (; c < phi0 + phispan; c += 2.0 * kPi)
                    if (c > phi0)
                        consider(k + a * std::cos(c) + b * std::sin(c), sinh_r * (c - phi0));
            }
        }
    }
}

void Piece::apply(const Isometry& iso) {
    P0 = iso(P0);
    T0 = iso(T0);
    offset = iso(offset);
    C = iso(C);
    E1 = iso(E1);
    E2 = iso(E2);
}

namespace {

Piece geodesic_arc(const HPoint& from, const HPoint& to) {
    Piece p;
    p.kind = Piece::Kind::Cosh;
    p.P0 = from.lift();
    p.T0 = tangent_toward(from, to);
    p.ulen = dist(from, to);
    return p;
}

Isometry pose_isometry(const Pose& pose) {
    return Isometry::translation_to(pose.center) * Isometry::rotation(pose.rotation);
}

double turn_cross(const HPoint& a, const HPoint& b, const HPoint& c) {
    const double ux = b.x() - a.x(), uy = b.y() - a.y();
    const double vx = c.x() - b.x(), vy = c.y() - b.y();
    return ux * vy - uy * vx;
}

}  // namespace

}  // namespace detail

using detail::Piece;

// ---------------------------------------------------------------------------
// Builders

void ConvexBody::finalize() {
    cum_arc_.clear();
    junctions_.clear();
    double s = 0.0;
    for (auto& p : pieces_) {
        p.prepare();
        junctions_.push_back(s);
        s += p.arclength();
        cum_arc_.push_back(s);
    }
    total_arc_ = s;
    for (auto& j : junctions_) j /= total_arc_;

    bool all_plain_geodesics = pieces_.size() >= 8;
    for (const auto& p : pieces_)
        all_plain_geodesics = all_plain_geodesics && p.kind == Piece::Kind::Cosh &&
                              p.scale == 1.0 && !p.has_offset;
    if (all_plain_geodesics) {
        auto flat = std::make_shared<detail::FlatEdges>();
        const size_t n = pieces_.size();
        for (auto* vec : {&flat->px, &flat->py, &flat->pt, &flat->tx, &flat->ty, &flat->tt,
                          &flat->ch, &flat->sh, &flat->th, &flat->cum})
            vec->reserve(n);
        double base = 0.0;
        for (const auto& p : pieces_) {
            flat->px.push_back(p.P0.x);
            flat->py.push_back(p.P0.y);
            flat->pt.push_back(p.P0.t);
            flat->tx.push_back(p.T0.x);
            flat->ty.push_back(p.T0.y);
            flat->tt.push_back(p.T0.t);
            flat->ch.push_back(p.ch_u);
            flat->sh.push_back(p.sh_u);
            flat->th.push_back(p.th_u);
            flat->cum.push_back(base);
            base += p.ulen;
        }
        flat_ = std::move(flat);
    }
}

ConvexBody ConvexBody::circle(const HPoint& center, double r) {
    if (!(r > 0)) throw BodyConstructionError("circle: radius must be positive");
    ConvexBody b;
    b.v_ = Circle{center, r};
    b.h_convex_ = true;
    b.interior_ = center;
    Piece p;
    p.kind = Piece::Kind::Circle;
    const Isometry m = Isometry::translation_to(center);
    p.C = m(MVec{0, 0, 1});
    p.E1 = m(MVec{1, 0, 0});
    p.E2 = m(MVec{0, 1, 0});
    p.cosh_r = std::cosh(r);
    p.sinh_r = std::sinh(r);
    p.phi0 = 0.0;
    p.phispan = 2.0 * kPi;
    b.pieces_.push_back(p);
    b.finalize();
    return b;
}

ConvexBody ConvexBody::segment(const HPoint& a, const HPoint& b) {
    if (dist(a, b) < 1e-12) throw BodyConstructionError("segment: endpoints coincide");
    ConvexBody body;
    body.v_ = Segment{a, b};
    body.h_convex_ = false;
    body.interior_ = project(unit_timelike(a.lift() + b.lift()));
    body.pieces_.push_back(detail::geodesic_arc(a, b));
    body.pieces_.push_back(detail::geodesic_arc(b, a));
    body.finalize();
    return body;
}

ConvexBody ConvexBody::polygon(std::vector<HPoint> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw BodyConstructionError("polygon: needs at least 3 vertices");
    // strict convexity + counterclockwise order: every vertex strictly to the
    // left of every non-incident directed edge
    for (int i = 0; i < n; ++i) {
        const HPoint& a = vertices[i];
        const HPoint& b = vertices[(i + 1) % n];
        if (dist(a, b) < 1e-12) throw BodyConstructionError("polygon: repeated vertex");
        const Geodesic edge = geodesic_through(a, b);
        for (int j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n) continue;
            if (!(signed_dist(vertices[j], edge) > 1e-14))
                throw BodyConstructionError(
                    "polygon: vertices must be strictly convex in counterclockwise order");
        }
    }
    ConvexBody body;
    MVec sum{0, 0, 0};
    for (const auto& v : vertices) sum = sum + v.lift();
    body.interior_ = project(unit_timelike(sum));
    for (int i = 0; i < n; ++i)
        body.pieces_.push_back(detail::geodesic_arc(vertices[i], vertices[(i + 1) % n]));
    body.v_ = Polygon{std::move(vertices)};
    body.h_convex_ = false;
    body.finalize();
    return body;
}

ConvexBody ConvexBody::regular_polygon(int n, double circumradius) {
    if (n < 3) throw BodyConstructionError("regular_polygon: n must be >= 3");
    if (!(circumradius > 0))
        throw BodyConstructionError("regular_polygon: radius must be positive");
    const double rk = std::tanh(circumradius);
    std::vector<HPoint> vs;
    vs.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        vs.emplace_back(rk * std::cos(t), rk * std::sin(t));
    }
    return polygon(std::move(vs));
}

ConvexBody ConvexBody::reuleaux(int n, double width, const Pose& pose) {
    if (n < 3 || n % 2 == 0) throw BodyConstructionError("reuleaux: n must be odd and >= 3");
    if (!(width > 0)) throw BodyConstructionError("reuleaux: width must be positive");
    const int k = (n + 1) / 2;
    // circumradius from the long diagonal: sinh(d/2) = sinh(r) sin((k-1)pi/(2k-1))
    const double rc = std::asinh(std::sinh(width / 2) / std::sin((k - 1) * kPi / n));
    const double rk = std::tanh(rc);
    std::vector<HPoint> vs;
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        vs.emplace_back(rk * std::cos(t), rk * std::sin(t));
    }
    ConvexBody body;
    body.v_ = ReuleauxPolygon{n, width, pose};
    body.h_convex_ = false;
    body.interior_ = pose.center;
    const Isometry m = detail::pose_isometry(pose);
    for (int j = 0; j < n; ++j) {
        // the arc from V_j to V_{j+1} is centered at the opposite vertex V_{j+k}
        const HPoint& c = vs[(j + k) % n];
        const Isometry frame = Isometry::translation_to(c);
        Piece p;
        p.kind = Piece::Kind::Circle;
        p.C = frame(MVec{0, 0, 1});
        p.E1 = frame(MVec{1, 0, 0});
        p.E2 = frame(MVec{0, 1, 0});
        p.cosh_r = std::cosh(width);
        p.sinh_r = std::sinh(width);
        auto frame_angle = [&](const HPoint& q) {
            const MVec u = q.lift() + p.C * mdot(p.C, q.lift());
            return std::atan2(mdot(u, p.E2), mdot(u, p.E1));
        };
        const double a0 = frame_angle(vs[j]);
        double a1 = frame_angle(vs[(j + 1) % n]);
        while (a1 <= a0) a1 += 2.0 * kPi;
        p.phi0 = a0;
        p.phispan = a1 - a0;
        p.apply(m);
        body.pieces_.push_back(p);
    }
    body.finalize();
    return body;
}

ConvexBody ConvexBody::hypercycle_domain(double half_chord, double height, const Pose& pose) {
    if (!(half_chord > 0) || !(height > 0))
        throw BodyConstructionError("hypercycle_domain: half_chord and height must be positive");
    const double a = half_chord, h = height;
    ConvexBody body;
    body.v_ = HypercycleDomain{a, h, pose};
    body.h_convex_ = false;
    body.interior_ = pose.center;

    // canonical frame: leading line = x axis, normal (0, 1, 0)
    auto leading_point = [](double u) { return MVec{std::sinh(u), 0.0, std::cosh(u)}; };
    auto leading_vel = [](double u) { return MVec{std::cosh(u), 0.0, std::sinh(u)}; };
    const MVec n_l{0, 1, 0};
    const double sh = std::sinh(h), ch = std::cosh(h);
    auto corner = [&](double u, double s) {
        return project(leading_point(u) * ch + n_l * s);
    };
    const HPoint c_mp = corner(-a, sh), c_mm = corner(-a, -sh);
    const HPoint c_pm = corner(a, -sh), c_pp = corner(a, sh);

    Piece top;  // (a, +h) -> (-a, +h)
    top.kind = Piece::Kind::Cosh;
    top.P0 = leading_point(a);
    top.T0 = leading_vel(a) * -1.0;
    top.offset = n_l * sh;
    top.scale = ch;
    top.ulen = 2 * a;

    Piece bottom;  // (-a, -h) -> (a, -h)
    bottom.kind = Piece::Kind::Cosh;
    bottom.P0 = leading_point(-a);
    bottom.T0 = leading_vel(-a);
    bottom.offset = n_l * (-sh);
    bottom.scale = ch;
    bottom.ulen = 2 * a;

    body.pieces_.push_back(top);
    body.pieces_.push_back(detail::geodesic_arc(c_mp, c_mm));
    body.pieces_.push_back(bottom);
    body.pieces_.push_back(detail::geodesic_arc(c_pm, c_pp));

    const Isometry m = detail::pose_isometry(pose);
    for (auto& p : body.pieces_) p.apply(m);
    body.finalize();
    return body;
}

ConvexBody ConvexBody::magic_quadrangle() {
    return hypercycle_domain(std::acosh(std::sqrt(4.0 / 3.0)), std::acosh(std::sqrt(1.5)));
}

ConvexBody ConvexBody::sampled(std::vector<HPoint> boundary, bool declared_h_convex) {
    const int n = static_cast<int>(boundary.size());
    if (n < 16) throw BodyConstructionError("sampled: needs at least 16 boundary points");
    double turn_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double c =
            detail::turn_cross(boundary[i], boundary[(i + 1) % n], boundary[(i + 2) % n]);
        if (c < -1e-12)
            throw BodyConstructionError("sampled: boundary points must be in convex position");
        turn_sum += c;
    }
    if (!(turn_sum > 0))
        throw BodyConstructionError("sampled: boundary points must be counterclockwise");
    ConvexBody body;
    MVec sum{0, 0, 0};
    for (const auto& v : boundary) sum = sum + v.lift();
    body.interior_ = project(unit_timelike(sum));
    for (int i = 0; i < n; ++i) {
        const HPoint& a = boundary[i];
        const HPoint& b = boundary[(i + 1) % n];
        if (dist(a, b) < 1e-13) throw BodyConstructionError("sampled: repeated boundary point");
        body.pieces_.push_back(detail::geodesic_arc(a, b));
    }
    body.v_ = Sampled{std::move(boundary), declared_h_convex};
    body.h_convex_ = declared_h_convex;
    body.finalize();
    return body;
}

// ---------------------------------------------------------------------------
// Boundary interface

MVec ConvexBody::boundary_lift(double t) const {
    t -= std::floor(t);
    const double s = t * total_arc_;
    const auto it = std::upper_bound(cum_arc_.begin(), cum_arc_.end(), s);
    const size_t i = std::min<size_t>(it - cum_arc_.begin(), pieces_.size() - 1);
    const double s0 = i == 0 ? 0.0 : cum_arc_[i - 1];
    return pieces_[i].point_at_arc(std::min(s - s0, pieces_[i].arclength()));
}

HPoint ConvexBody::boundary_point(double t) const { return project(boundary_lift(t)); }

std::vector<HPoint> ConvexBody::boundary_samples(int m) const {
    if (m < 16) throw BodyConstructionError("boundary_samples: m must be >= 16");
    if (const auto* s = std::get_if<Sampled>(&v_))
        if (static_cast<int>(s->boundary.size()) == m) return s->boundary;
    std::vector<HPoint> out;
    out.reserve(m);
    if (const auto* seg = std::get_if<Segment>(&v_)) {
        // both endpoints included, equally spaced along the chord
        const MVec a = seg->a.lift();
        const MVec t = tangent_toward(seg->a, seg->b);
        const double len = dist(seg->a, seg->b);
        for (int i = 0; i < m; ++i) {
            const double s = len * i / (m - 1);
            out.push_back(project(a * std::cosh(s) + t * std::sinh(s)));
        }
        return out;
    }
    if (pieces_.size() == 1) {
        for (int i = 0; i < m; ++i) out.push_back(boundary_point(static_cast<double>(i) / m));
        return out;
    }
    // piece-aligned: corners are sampled exactly, spacing stays near-uniform
    const int n = static_cast<int>(pieces_.size());
    std::vector<int> counts(n);
    int assigned = 0;
    for (int i = 0; i < n; ++i) {
        counts[i] = std::max(1, static_cast<int>(std::floor(m * pieces_[i].arclength() / total_arc_)));
        assigned += counts[i];
    }
    for (int i = 0; assigned < m; i = (i + 1) % n, ++assigned) ++counts[i];
    for (int i = 0; assigned > m && counts[i % n] > 1; ++i)
        if (counts[i % n] > 1) { --counts[i % n]; --assigned; }
    for (int i = 0; i < n; ++i) {
        const double len = pieces_[i].arclength();
        for (int j = 0; j < counts[i]; ++j)
            out.push_back(project(pieces_[i].point_at_arc(len * j / counts[i])));
    }
    return out;
}

FormExtent ConvexBody::extent(const MVec& v) const {
    if (flat_) return flat_extent(v);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double s_lo = 0.0, s_hi = 0.0;
    double base = 0.0;
    for (const auto& p : pieces_) {
        double plo = std::numeric_limits<double>::infinity();
        double phi = -std::numeric_limits<double>::infinity();
        double pslo = 0.0, pshi = 0.0;
        p.extend(v, plo, phi, pslo, pshi);
        if (phi > hi) { hi = phi; s_hi = base + pshi; }
        if (plo < lo) { lo = plo; s_lo = base + pslo; }
        base += p.arclength();
    }
    return FormExtent{hi, lo, s_hi / total_arc_, s_lo / total_arc_};
}

FormExtent ConvexBody::flat_extent(const MVec& v) const {
    const detail::FlatEdges& f = *flat_;
    const int n = static_cast<int>(f.px.size());
    auto vertex_val = [&](int i) { return f.px[i] * v.x + f.py[i] * v.y - f.pt[i] * v.t; };

    // the vertex pairing is cyclically unimodal on a convex boundary: locate
    // the two runs with a strided scan, then do an exact pass in windows
    const int stride = n > 192 ? n / 96 : 1;
    int imax = 0, imin = 0;
    double vmax = -std::numeric_limits<double>::infinity(), vmin = -vmax;
    for (int i = 0; i < n; i += stride) {
        const double a = vertex_val(i);
        if (a > vmax) { vmax = a; imax = i; }
        if (a < vmin) { vmin = a; imin = i; }
    }

    double hi = -std::numeric_limits<double>::infinity(), lo = -hi;
    double s_hi = 0.0, s_lo = 0.0;
    auto scan = [&](int lo_k, int hi_k) {
        for (int k = lo_k; k <= hi_k; ++k) {
            const int i = ((k % n) + n) % n;
            const double a = vertex_val(i);
            const double b = f.tx[i] * v.x + f.ty[i] * v.y - f.tt[i] * v.t;
            if (a > hi) { hi = a; s_hi = f.cum[i]; }
            if (a < lo) { lo = a; s_lo = f.cum[i]; }
            const double v1 = a * f.ch[i] + b * f.sh[i];
            const double s1 = i + 1 < n ? f.cum[i + 1] : total_arc_;
            if (v1 > hi) { hi = v1; s_hi = s1; }
            if (v1 < lo) { lo = v1; s_lo = s1; }
            if (a * b < 0.0 && std::fabs(b) < std::fabs(a) * f.th[i]) {
                const double vs = std::copysign(std::sqrt(a * a - b * b), a);
                if (vs > hi || vs < lo) {
                    const double s = f.cum[i] + std::atanh(-b / a);
                    if (vs > hi) { hi = vs; s_hi = s; }
                    if (vs < lo) { lo = vs; s_lo = s; }
                }
            }
        }
    };
    if (stride == 1) {
        scan(0, n - 1);
    } else {
        scan(imax - stride - 1, imax + stride + 1);
        scan(imin - stride - 1, imin + stride + 1);
    }
    return FormExtent{hi, lo, s_hi / total_arc_, s_lo / total_arc_};
}

Strip ConvexBody::support_strip(const Geodesic& g, double tol) const {
    const FormExtent e = extent(g.normal());
    const double smax = std::asinh(e.max_value), smin = std::asinh(e.min_value);
    if (!(smin <= 0.0 && smax >= 0.0) && std::min(std::fabs(smin), std::fabs(smax)) > tol)
        throw LineMissesBody("support_strip: leading line does not meet the body");
    return Strip{g, smax, -smin, boundary_point(e.max_param), boundary_point(e.min_param)};
}

bool ConvexBody::left_of_all_edges(const HPoint& p, double tol) const {
    const MVec q = p.lift();
    for (const auto& piece : pieces_) {
        const double sd = std::asinh(mdot(q, mcross(piece.P0, piece.T0)));
        if (sd < -tol) return false;
    }
    return true;
}

bool ConvexBody::contains(const HPoint& p, double tol) const {
    struct Visitor {
        const ConvexBody& body;
        const HPoint& p;
        double tol;
        bool operator()(const Circle& c) const { return dist(p, c.center) <= c.radius + tol; }
        bool operator()(const Segment& s) const {
            return dist(s.a, p) + dist(p, s.b) <= dist(s.a, s.b) + tol;
        }
        bool operator()(const Polygon&) const { return body.left_of_all_edges(p, tol); }
        bool operator()(const HypercycleDomain& d) const {
            const MVec q = detail::pose_isometry(d.pose).inverse()(p.lift());
            const double sd = std::asinh(q.y);
            const double u = std::atanh(q.x / q.t);
            return std::fabs(sd) <= d.height + tol && std::fabs(u) <= d.half_chord + tol;
        }
        bool operator()(const ReuleauxPolygon& r) const {
            const HPoint q = detail::pose_isometry(r.pose).inverse()(p);
            const int k = (r.sides + 1) / 2;
            const double rc =
                std::asinh(std::sinh(r.width / 2) / std::sin((k - 1) * kPi / r.sides));
            const double rk = std::tanh(rc);
            for (int j = 0; j < r.sides; ++j) {
                const double t = 2.0 * kPi * j / r.sides;
                if (dist(q, HPoint(rk * std::cos(t), rk * std::sin(t))) > r.width + tol)
                    return false;
            }
            return true;
        }
        bool operator()(const Sampled&) const { return body.left_of_all_edges(p, tol); }
    };
    return std::visit(Visitor{*this, p, tol}, v_);
}

DiameterResult ConvexBody::diameter() const {
    if (const auto* c = std::get_if<Circle>(&v_))
        return {2 * c->radius, boundary_point(0.0), boundary_point(0.5), 0.0, 0.5};
    if (const auto* s = std::get_if<Segment>(&v_))
        return {dist(s->a, s->b), s->a, s->b, 0.0, 0.5};
    if (const auto* poly = std::get_if<Polygon>(&v_)) {
        const int n = static_cast<int>(poly->vertices.size());
        DiameterResult best{0.0, poly->vertices[0], poly->vertices[0], 0.0, 0.0};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double d = dist(poly->vertices[i], poly->vertices[j]);
                if (d > best.value)
                    best = {d, poly->vertices[i], poly->vertices[j], junctions_[i], junctions_[j]};
            }
        return best;
    }

    // dense pairwise scan over samples and junctions, then local refinement
    std::vector<double> params;
    const int grid = junctions_.size() > 1024 ? 1024 : 512;
    params.reserve(grid + junctions_.size());
    for (int i = 0; i < grid; ++i) params.push_back(static_cast<double>(i) / grid);
    if (junctions_.size() <= 1024)
        for (double j : junctions_) params.push_back(j);
    std::vector<MVec> lifts;
    lifts.reserve(params.size());
    for (double t : params) lifts.push_back(boundary_lift(t));
    double best = 1.0;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < lifts.size(); ++i)
        for (size_t j = i + 1; j < lifts.size(); ++j) {
            const double c = -mdot(lifts[i], lifts[j]);
            if (c > best) { best = c; bi = i; bj = j; }
        }
    double t1 = params[bi], t2 = params[bj];
    const double w = 1.5 / grid;
    for (int round = 0; round < 4; ++round) {
        const MVec l2 = boundary_lift(t2);
        t1 = detail::golden_max([&](double t) { return -mdot(boundary_lift(t), l2); }, t1 - w,
                                t1 + w, 1e-13);
        const MVec l1 = boundary_lift(t1);
        t2 = detail::golden_max([&](double t) { return -mdot(l1, boundary_lift(t)); }, t2 - w,
                                t2 + w, 1e-13);
    }
    t1 -= std::floor(t1);
    t2 -= std::floor(t2);
    const HPoint p = boundary_point(t1), q = boundary_point(t2);
    return {dist(p, q), p, q, t1, t2};
}

SupportAt ConvexBody::support_at(double t, double corner_tol) const {
    t -= std::floor(t);
    const double s = t * total_arc_;
    const auto it = std::upper_bound(cum_arc_.begin(), cum_arc_.end(), s);
    size_t i = std::min<size_t>(it - cum_arc_.begin(), pieces_.size() - 1);
    const double s0 = i == 0 ? 0.0 : cum_arc_[i - 1];
    double local = s - s0;
    const double len = pieces_[i].arclength();
    if (local > len - corner_tol) {
        i = (i + 1) % pieces_.size();
        local = 0.0;
    }
    SupportAt out;
    if (local < corner_tol) {
        const size_t prev = (i + pieces_.size() - 1) % pieces_.size();
        out.point = pieces_[i].point_at_arc(0.0);
        out.dir_out = pieces_[i].unit_velocity_at_arc(0.0);
        out.dir_in = pieces_[prev].unit_velocity_at_arc(pieces_[prev].arclength());
        out.corner = angle_between(out.dir_in, out.dir_out) > kAngleTol;
    } else {
        out.point = pieces_[i].point_at_arc(local);
        out.dir_out = out.dir_in = pieces_[i].unit_velocity_at_arc(local);
        out.corner = false;
    }
    return out;
}

Geodesic ConvexBody::tangent_line(double t) const {
    const SupportAt s = support_at(t);
    if (s.corner) throw Error("tangent_line: boundary corner has no unique tangent");
    return geodesic_from_normal(mcross(unit_timelike(s.point), s.dir_out));
}

double ConvexBody::locate_boundary_param(const HPoint& p, double tol) const {
    // maximizing <P(t), lift(p)> minimizes the distance, and extent() solves
    // that exactly piece by piece
    const double t = extent(p.lift()).max_param;
    if (dist(boundary_point(t), p) > tol)
        throw PointNotOnBoundary("locate_boundary_param: point is not on the boundary");
    return t;
}

ConvexBody rotated_about_origin(const ConvexBody& body, double phi) {
    const Isometry rot = Isometry::rotation(phi);
    struct Visitor {
        const Isometry& rot;
        double phi;
        ConvexBody operator()(const ConvexBody::Circle& c) const {
            return ConvexBody::circle(rot(c.center), c.radius);
        }
        ConvexBody operator()(const ConvexBody::Segment& s) const {
            return ConvexBody::segment(rot(s.a), rot(s.b));
        }
        ConvexBody operator()(const ConvexBody::Polygon& p) const {
            std::vector<HPoint> vs;
            vs.reserve(p.vertices.size());
            for (const auto& v : p.vertices) vs.push_back(rot(v));
            return ConvexBody::polygon(std::move(vs));
        }
        ConvexBody operator()(const ConvexBody::HypercycleDomain& d) const {
            return ConvexBody::hypercycle_domain(
                d.half_chord, d.height, Pose{rot(d.pose.center), d.pose.rotation + phi});
        }
        ConvexBody operator()(const ConvexBody::ReuleauxPolygon& r) const {
            return ConvexBody::reuleaux(r.sides, r.width,
                                        Pose{rot(r.pose.center), r.pose.rotation + phi});
        }
        ConvexBody operator()(const ConvexBody::Sampled& s) const {
            std::vector<HPoint> vs;
            vs.reserve(s.boundary.size());
            for (const auto& v : s.boundary) vs.push_back(rot(v));
            return ConvexBody::sampled(std::move(vs), s.declared_h_convex);
        }
    };
    return std::visit(Visitor{rot, phi}, body.variant());
}

ConvexBody sample_disk_intersection(const std::vector<HPoint>& centers,
                                    const std::vector<double>& radii, int m) {
    if (centers.empty() || centers.size() != radii.size())
        throw BodyConstructionError("sample_disk_intersection: centers/radii mismatch");
    if (m < 16) throw BodyConstructionError("sample_disk_intersection: m must be >= 16");
    const size_t k = centers.size();
    std::vector<double> b(k), phi_c(k);
    for (size_t i = 0; i < k; ++i) {
        b[i] = dist(HPoint(0, 0), centers[i]);
        phi_c[i] = std::atan2(centers[i].y(), centers[i].x());
        if (!(b[i] < radii[i] - 1e-6))
            throw BodyConstructionError(
                "sample_disk_intersection: origin must lie inside every disk");
    }
    std::vector<HPoint> pts;
    pts.reserve(m);
    for (int j = 0; j < m; ++j) {
        const double phi = 2.0 * kPi * j / m;
        double exit = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < k; ++i) {
            // along the ray, cosh(dist to center_i) = A cosh(s) - B sinh(s)
            const double a = std::cosh(b[i]);
            const double bb = std::sinh(b[i]) * std::cos(phi - phi_c[i]);
            const double root = std::sqrt(a * a - bb * bb);
            const double s =
                std::atanh(bb / a) + std::acosh(std::max(1.0, std::cosh(radii[i]) / root));
            exit = std::min(exit, s);
        }
        pts.emplace_back(std::tanh(exit) * std::cos(phi), std::tanh(exit) * std::sin(phi));
    }
    return ConvexBody::sampled(std::move(pts), true);
}

}  // namespace hypwidth
