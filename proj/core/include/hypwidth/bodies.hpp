#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "hypwidth/klein.hpp"

// Convex body families and their uniform boundary interface.
//
// Every family compiles its boundary into a counterclockwise list of pieces:
// geodesic arcs, hyperbolic circle arcs and hypercycle arcs.  Along any such
// piece the pairing <P(s), v> with a fixed Minkowski vector v is of the form
// A cosh u + B sinh u + D  (or K + R cos(phi - phi0) on circle arcs), so the
// extreme signed distances to a line -- and extreme Busemann values -- are
// closed-form per piece.  Everything downstream (strips, widths, thickness)
// runs on that one primitive.

namespace hypwidth {

struct BodyConstructionError : Error { using Error::Error; };
struct LineMissesBody : Error { using Error::Error; };
struct PointNotOnBoundary : Error { using Error::Error; };

namespace detail {

struct Piece {
    enum class Kind { Cosh, Circle };
    Kind kind = Kind::Cosh;

    // Cosh pieces: P(u) = (P0 cosh u + T0 sinh u) * scale + offset, u in [0, ulen].
    // Geodesic arcs have scale = 1, offset = 0; hypercycle arcs have
    // scale = cosh(h) and offset = n_leading * sinh(+-h).
    MVec P0, T0, offset;
    double scale = 1.0;
    double ulen = 0.0;
    bool has_offset = false;

    // Circle pieces: P(phi) = C cosh_r + (E1 cos phi + E2 sin phi) sinh_r,
    // phi in [phi0, phi0 + phispan], counterclockwise.
    MVec C, E1, E2;
    double cosh_r = 1.0, sinh_r = 0.0, phi0 = 0.0, phispan = 0.0;

    // precomputed endpoint data so extreme scans stay transcendental-free
    double ch_u = 1.0, sh_u = 0.0, th_u = 0.0;
    double cos0 = 1.0, sin0 = 0.0, cos1 = 1.0, sin1 = 0.0;

    void prepare();
    double arclength() const;
    MVec point_at_arc(double s) const;
    MVec unit_velocity_at_arc(double s) const;
    // Folds the extremes of <P(.), v> over this piece into (lo, hi).
    void extend(const MVec& v, double& lo, double& hi, double& s_lo, double& s_hi) const;
    void apply(const Isometry& iso);
};

// Structure-of-arrays view of an all-geodesic boundary (polygons, sampled
// bodies); extremes are located by a strided scan over the vertex pairing
// (cyclically unimodal on a convex boundary) plus an exact window pass.
struct FlatEdges {
    std::vector<double> px, py, pt, tx, ty, tt, ch, sh, th, cum;
};

}  // namespace detail

struct Pose {
    HPoint center{};
    double rotation = 0.0;
};

// Extremes of <P(t), v> over the whole boundary, with arclength-fraction
// parameters of the attaining points.
struct FormExtent {
    double max_value, min_value;
    double max_param, min_param;
};

// Supporting strip of a leading line: the body lies between the hypercycles
// at signed distances +d_plus and -d_minus.
struct Strip {
    Geodesic leading;
    double d_plus, d_minus;
    HPoint touch_plus, touch_minus;
    double width() const { return d_plus + d_minus; }
};

struct DiameterResult {
    double value;
    HPoint p, q;
    double param_p, param_q;
};

// Boundary support data at a parameter: outgoing/incoming unit tangent
// directions (equal at smooth points).
struct SupportAt {
    bool corner;
    MVec point;    // lifted boundary point
    MVec dir_out;  // unit tangent leaving the point (ccw travel)
    MVec dir_in;   // unit tangent arriving at the point (ccw travel)
};

class ConvexBody {
  public:
    struct Circle {
        HPoint center;
        double radius;
    };
    struct Segment {
        HPoint a, b;
    };
    struct Polygon {
        std::vector<HPoint> vertices;  // counterclockwise, strictly convex
    };
    struct HypercycleDomain {
        double half_chord;  // a: half length of the chord on the leading line
        double height;      // h: distance of the two hypercycle arcs
        Pose pose;
    };
    struct ReuleauxPolygon {
        int sides;     // odd, >= 3
        double width;  // common length of the long diagonals
        Pose pose;
    };
    struct Sampled {
        std::vector<HPoint> boundary;  // counterclockwise, convex position
        bool declared_h_convex;
    };
    using Variant =
        std::variant<Circle, Segment, Polygon, HypercycleDomain, ReuleauxPolygon, Sampled>;

    static ConvexBody circle(const HPoint& center, double r);
    static ConvexBody segment(const HPoint& a, const HPoint& b);
    static ConvexBody polygon(std::vector<HPoint> vertices);
    static ConvexBody regular_polygon(int n, double circumradius);
    static ConvexBody reuleaux(int n, double width, const Pose& pose = {});
    static ConvexBody hypercycle_domain(double half_chord, double height, const Pose& pose = {});
    // The constant-width quadrangle domain with degenerate width plateaus:
    // a = acosh(sqrt(4/3)), h = acosh(sqrt(3/2)), diagonal 2 acosh(sqrt 2).
    static ConvexBody magic_quadrangle();
    static ConvexBody sampled(std::vector<HPoint> boundary, bool declared_h_convex);

    const Variant& variant() const { return v_; }
    bool h_convex() const { return h_convex_; }
    const HPoint& interior_point() const { return interior_; }

    double boundary_length() const { return total_arc_; }
    HPoint boundary_point(double t) const;  // t in [0,1), ccw arclength fraction
    MVec boundary_lift(double t) const;
    std::vector<HPoint> boundary_samples(int m) const;
    // Arclength-fraction parameters of piece junctions (candidate corners).
    const std::vector<double>& junction_params() const { return junctions_; }

    FormExtent extent(const MVec& v) const;
    Strip support_strip(const Geodesic& g, double tol = 1e-9) const;
    bool contains(const HPoint& p, double tol = 1e-9) const;
    DiameterResult diameter() const;
    SupportAt support_at(double t, double corner_tol = 1e-9) const;
    // Oriented tangent geodesic at a smooth boundary parameter.
    Geodesic tangent_line(double t) const;
    // Nearest boundary parameter; throws PointNotOnBoundary beyond tol.
    double locate_boundary_param(const HPoint& p, double tol = 1e-6) const;

  private:
    ConvexBody() = default;
    void finalize();  // builds cumulative arclengths, junctions, fast path
    bool left_of_all_edges(const HPoint& p, double tol) const;
    FormExtent flat_extent(const MVec& v) const;

    Variant v_;
    bool h_convex_ = false;
    HPoint interior_{};
    std::vector<detail::Piece> pieces_;
    std::vector<double> cum_arc_;
    std::vector<double> junctions_;
    double total_arc_ = 0.0;
    std::shared_ptr<const detail::FlatEdges> flat_;  // set for all-geodesic boundaries
};

// Body rotated by phi about the model center.
ConvexBody rotated_about_origin(const ConvexBody& body, double phi);

// Samples the boundary of an intersection of hyperbolic disks by radial
// marching from the origin; the origin must lie inside every disk.  The
// result is declared h-convex (disks have curvature above horocyclic).
ConvexBody sample_disk_intersection(const std::vector<HPoint>& centers,
                                    const std::vector<double>& radii, int m);

}  // namespace hypwidth
