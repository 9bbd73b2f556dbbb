#pragma once

#include <vector>

#include "hypwidth/bodies.hpp"

// Width and thickness functions over convex bodies.
//
// The central notion: for an ideal point X, the width of K toward X is the
// supremum of strip widths d_K(YX) = d+ + d- over all leading lines YX that
// meet K.  The feasible Y set is an arc of the ideal circle, located by
// bisection; the supremum is taken by a dense grid with golden-section
// refinement around the best local maxima (the objective can be multimodal
// and has genuine plateaus, so no unimodality is assumed).
//
// The four older width concepts are provided for comparison: the supporting
// breadth at a boundary point (Santalo), the horocyclic width of a direction
// (Fillmore), the hypercycle strip width through a base point (Leichtweiss),
// and widths over opposite-point chords (Jeronimo-Castro/Jimenez-Lopez).

namespace hypwidth {

struct NotSupporting : Error { using Error::Error; };
struct BaseOutsideBody : Error { using Error::Error; };
struct NoOppositeFound : Error { using Error::Error; };
struct BranchMismatch : Error { using Error::Error; };

struct SupOptions {
    int y_grid = 512;          // dense grid over the feasible Y arc
    int refine_brackets = 3;   // local optima refined by golden section
    double param_tol = 1e-10;  // golden bracket tolerance (radians on Y)
    double value_tie = 1e-12;  // plateau ties resolved toward the smallest Y angle
};

struct DirectionWidth {
    double value;
    IdealPoint witness_y;
};

double strip_width(const ConvexBody& K, const Geodesic& g, double tol = 1e-9);

DirectionWidth width(const ConvexBody& K, const IdealPoint& X, const SupOptions& opt = {});
DirectionWidth thickness_toward(const ConvexBody& K, const IdealPoint& X,
                                const SupOptions& opt = {});

struct ThicknessResult {
    double value;
    IdealPoint direction;
    IdealPoint witness_y;
};
ThicknessResult thickness(const ConvexBody& K, int directions = 720, const SupOptions& opt = {});

struct WidthProfile {
    std::vector<double> thetas;
    std::vector<double> values;
    std::vector<double> witness_y_thetas;
    size_t sup_index = 0, inf_index = 0;
    double sup() const { return values[sup_index]; }
    double inf() const { return values[inf_index]; }
};
WidthProfile width_profile(const ConvexBody& K, int m, const SupOptions& opt = {});

// ---------------------------------------------------------------------------
// Prior width concepts

// Ideal point hit by the Klein-chart ray from `base` at chart angle theta.
IdealPoint ray_ideal(const HPoint& base, double theta);

// Santalo: erect the normal to the supporting line at z and measure how far
// the body extends along it.
double santalo_breadth(const ConvexBody& K, const HPoint& z, const Geodesic& support_line,
                       double support_tol = 1e-5);

// Fillmore: the two tangent horocycles based at the opposite ideal points of
// the line through `base` in direction theta cut that line at P and Q; the
// width is |base P| + |base Q| (so it depends on the base point).  Defined
// for h-convex bodies; other bodies get the value with a warning flag.
struct FillmoreWidth {
    double value;
    bool h_convex_warning;
};
FillmoreWidth fillmore_width(const ConvexBody& K, double theta, const HPoint& base);

// Leichtweiss: width of the supporting hypercycle strip whose leading line
// passes through `base` perpendicular to the chart direction theta.
Geodesic leichtweiss_leading_line(const HPoint& base, double theta);
double leichtweiss_width(const ConvexBody& K, double theta, const HPoint& base);

// Opposite points: boundary points whose chord makes equal alternate angles
// with the tangents at both ends; each yields the distance between those
// tangent lines.  Boundary handled at sampled resolution via secant tangents.
struct OppositePoint {
    double width;
    double param;  // boundary parameter of the opposite point
    HPoint point;
};
struct OppositeOptions {
    int scan = 720;                  // residual scan resolution around the boundary
    double tangent_halfstep = -1.0;  // secant half step in boundary parameter (<0: 1/1024)
    double exclusion = 0.02;         // parameter window excluded around z
    int bisect_iters = 60;
};
std::vector<OppositePoint> opposite_point_widths(const ConvexBody& K, double z_param,
                                                 const OppositeOptions& opt = {});

// ---------------------------------------------------------------------------
// Segment closed forms

enum class SegmentBranch { AtForwardIdeal, Alpha, Plateau, Beta, AtBackwardIdeal };

struct SegmentWidthParams {
    double length;
    double angle;  // alpha on the Alpha branch, beta on the Beta branch
    SegmentBranch branch;
};

// Five-branch width function of a segment: 0 at the segment's own ideal
// points, asinh(sin a sinh d / (cosh d - cos a sinh d)) on the slant
// branches, and the plateau value d between the two right-angle directions.
double segment_width_closed_form(const SegmentWidthParams& params);

// Branch classification of a direction for the canonical segment of length d
// centered on the x axis (the plateau starts where the angle at the near
// endpoint reaches the parallel angle of d).
SegmentWidthParams segment_direction_params(double length, double theta);

// Sum of the endpoint distances from the line crossing the segment at
// arclength t from the near endpoint, entering at peak angle derived from
// alpha; its maximizer satisfies tanh(t*) = cos(alpha) when that lies in
// [0, d].
double segment_crossing_width(double length, double alpha, double t);
double segment_crossing_maximizer(double length, double alpha);

// ---------------------------------------------------------------------------
// Hypercycle domain closed forms

// Both printed routes to the slant-branch width of a symmetric hypercycle
// domain: the compact asinh form and the alpha-chain through the segment
// formula.  They disagree in general; the discrepancy flag reports it and
// the alpha chain is the normative value.
struct HypDomainWidthForms {
    double diagonal;     // long diagonal 2 acosh(cosh a cosh h)
    double sin_alpha;
    double cos_alpha;
    double compact_form;
    double alpha_chain;
    bool discrepancy;
};
HypDomainWidthForms hypercycle_domain_width_forms(double half_chord, double height);

}  // namespace hypwidth
