#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypwidth/widths.hpp"

// Theorem-level checkers: constancy verdicts for width / shadow / diameter,
// double-normal tests, the regular-polygon minimal radii, the inscribed
// circle bound for a given thickness and diameter, and the inradius needed to
// verify it numerically.

namespace hypwidth {

struct NotHConvex : Error { using Error::Error; };

enum class ConstancyKind { Width, Shadow, Diameter };

struct ConstancyVerdict {
    ConstancyKind kind;
    bool constant;
    double value;  // midpoint of the observed range
    double min, max;
    double tolerance;
    // the worst deviation, reproducible in isolation: a direction for width,
    // a line for shadow, a boundary point for diameter
    double witness_theta = 0.0;
    std::optional<Geodesic> witness_line;
    std::optional<HPoint> witness_point;
};

ConstancyVerdict is_constant_width(const ConvexBody& K, double tol = 1e-3, int directions = 360,
                                   const SupOptions& opt = {});
ConstancyVerdict is_constant_shadow(const ConvexBody& K, double tol = 1e-3, int min_lines = 1000);
ConstancyVerdict is_constant_diameter(const ConvexBody& K, double tol = 1e-3, int samples = 256);

// Distance of the chord [p, q] from being orthogonal to a supporting
// direction at each endpoint (0 when orthogonality is reachable within the
// corner's support cone).
double double_normal_residual(const ConvexBody& K, const HPoint& p, const HPoint& q);
bool double_normal_check(const ConvexBody& K, const HPoint& p, const HPoint& q,
                         double tol = 1e-6);

// Minimal circumscribed-circle radius (as tanh r) from which the regular
// n-gon keeps constant width, in the printed odd/even closed forms.
double regular_polygon_rmin_tanh(int n);

// The printed width formula d(r) next to the measured long diagonal; the two
// disagree (the formula divides where chord geometry multiplies), so both are
// reported and flagged, never silently merged.
struct PolygonWidthReport {
    int n;
    double tanh_rmin;
    double rmin;
    double sinh_half_d_formula;  // sinh(r)/sin(branch angle), as printed
    double d_formula;            // 2 asinh of the above
    double d_geometric;          // vertex-to-vertex long diagonal
    bool discrepancy;
    double profile_min = 0.0, profile_max = 0.0;  // filled when profile_dirs > 0
};
PolygonWidthReport regular_polygon_width_report(int n, double r, int profile_dirs = 0,
                                                const SupOptions& opt = {});

// Radius of the circle guaranteed inside an h-convex body of the given
// thickness and diameter: tanh r = sinh t cosh t / (3 cosh^2 d + sinh^2 t).
double blaschke_inscribed_radius(double thickness, double diameter);

struct InradiusResult {
    double value;
    HPoint center;
};
InradiusResult inradius(const ConvexBody& K, int boundary_samples = 2048, int grid = 64);

struct BlaschkeCheck {
    bool holds;
    double thickness;
    double diameter;
    double bound_radius;
    double inradius;
    double margin;
};
// Refuses non-h-convex bodies (the hypothesis of the bound), throwing
// NotHConvex instead of reporting a meaningless verdict.
BlaschkeCheck blaschke_verify(const ConvexBody& K, int thickness_directions = 720,
                              const SupOptions& opt = {});

struct Table1Row {
    int n;
    double tanh_rmin;
};
struct Table1 {
    std::vector<Table1Row> rows;  // n = 3..12
    int sign_change_n;            // first even n whose value drops below its odd predecessor
    std::string note;
};
Table1 table1();

}  // namespace hypwidth
