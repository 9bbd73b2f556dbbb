#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Klein (projective) disk model of the hyperbolic plane.
//
// Points live strictly inside the unit disk, geodesics are straight chords,
// and ideal points are parametrized by their angle on the unit circle.  All
// metric computations go through the hyperboloid lift: a Klein point (x, y)
// lifts to (x, y, 1)/sqrt(1 - x^2 - y^2) on the unit hyperboloid of the
// Minkowski space R^{2,1} with bilinear form <u,v> = ux vx + uy vy - ut vt.
// In that picture
//   cosh dist(p, q)    = -<P, Q>
//   sinh sdist(p, g)   =  <P, n_g>      (n_g the unit spacelike line normal)
//   cosh dist(g1, g2)  = |<n_1, n_2>|   (ultraparallel lines)
// which keeps every primitive a one-liner free of model case splits.
//
// Orientation convention: a geodesic runs from its first ideal point to its
// second, and signed distances are positive on the LEFT of the travel
// direction.  Every higher layer inherits this convention.

namespace hypwidth {

inline constexpr double kPi = 3.14159265358979323846;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPoint : Error { using Error::Error; };
struct CoincidentIdealPoints : Error { using Error::Error; };
struct PointNotOnGeodesic : Error { using Error::Error; };
struct DegenerateRay : Error { using Error::Error; };
struct LinesIntersect : Error { using Error::Error; };
struct LinesAsymptotic : Error { using Error::Error; };
struct ArgumentOutOfRange : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Minkowski R^{2,1}

struct MVec {
    double x = 0.0, y = 0.0, t = 0.0;
};

inline MVec operator+(const MVec& a, const MVec& b) { return {a.x + b.x, a.y + b.y, a.t + b.t}; }
inline MVec operator-(const MVec& a, const MVec& b) { return {a.x - b.x, a.y - b.y, a.t - b.t}; }
inline MVec operator*(const MVec& a, double s) { return {a.x * s, a.y * s, a.t * s}; }
inline MVec operator*(double s, const MVec& a) { return a * s; }
inline MVec operator-(const MVec& a) { return {-a.x, -a.y, -a.t}; }

inline double mdot(const MVec& a, const MVec& b) {
    return a.x * b.x + a.y * b.y - a.t * b.t;
}

// Minkowski cross product: <mcross(a,b), c> = det(a, b, c).
inline MVec mcross(const MVec& a, const MVec& b) {
    return {a.y * b.t - a.t * b.y,
            a.t * b.x - a.x * b.t,
            a.y * b.x - a.x * b.y};
}

// Normalizes a spacelike vector to <v,v> = 1.
inline MVec unit_spacelike(const MVec& v) {
    return v * (1.0 / std::sqrt(mdot(v, v)));
}

// Normalizes a timelike vector to the unit hyperboloid (future sheet).
inline MVec unit_timelike(const MVec& v) {
    MVec u = v * (1.0 / std::sqrt(-mdot(v, v)));
    return u.t > 0 ? u : -u;
}

// ---------------------------------------------------------------------------
// Domain types

class HPoint {
  public:
    HPoint() : x_(0.0), y_(0.0) {}
    HPoint(double x, double y) : x_(x), y_(y) {
        const double n2 = x * x + y * y;
        const double lim = 1.0 - 1e-12;
        if (!(n2 < lim * lim))
            throw InvalidPoint("HPoint (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") lies outside the model disk");
    }

    double x() const { return x_; }
    double y() const { return y_; }

    MVec lift() const {
        const double s = 1.0 / std::sqrt(1.0 - x_ * x_ - y_ * y_);
        return {x_ * s, y_ * s, s};
    }

  private:
    double x_, y_;
};

// Projects a future timelike vector back to Klein coordinates.
inline HPoint project(const MVec& v) {
    return HPoint(v.x / v.t, v.y / v.t);
}

inline constexpr double kIdealTol = 1e-12;

class IdealPoint {
  public:
    IdealPoint() : theta_(0.0) {}
    explicit IdealPoint(double theta) {
        theta_ = std::fmod(theta, 2.0 * kPi);
        if (theta_ < 0) theta_ += 2.0 * kPi;
        if (theta_ >= 2.0 * kPi) theta_ = 0.0;
    }

    double theta() const { return theta_; }

    MVec null_vector() const { return {std::cos(theta_), std::sin(theta_), 1.0}; }

    friend bool operator==(const IdealPoint& a, const IdealPoint& b) {
        double d = std::fabs(a.theta_ - b.theta_);
        d = std::min(d, 2.0 * kPi - d);
        return d < kIdealTol;
    }
    friend bool operator!=(const IdealPoint& a, const IdealPoint& b) { return !(a == b); }

  private:
    double theta_;
};

struct Angle {
    double radians = 0.0;
};

inline constexpr double kAngleTol = 1e-9;

class Geodesic {
  public:
    Geodesic(const IdealPoint& from, const IdealPoint& to) : from_(from), to_(to) {
        if (from == to)
            throw CoincidentIdealPoints("geodesic endpoints coincide at theta = " +
                                        std::to_string(from.theta()));
        normal_ = unit_spacelike(mcross(from.null_vector(), to.null_vector()));
    }

    const IdealPoint& from() const { return from_; }
    const IdealPoint& to() const { return to_; }

    // Unit spacelike normal; positive pairing = left of the travel direction.
    const MVec& normal() const { return normal_; }

    Geodesic reversed() const { return Geodesic(to_, from_); }

  private:
    IdealPoint from_, to_;
    MVec normal_;
};

// ---------------------------------------------------------------------------
// Isometries (orientation preserving): 3x3 matrices of SO+(2,1).

class Isometry {
  public:
    static Isometry identity() {
        Isometry m;
        m.a_[0][0] = m.a_[1][1] = m.a_[2][2] = 1.0;
        return m;
    }

    static Isometry rotation(double phi) {
        Isometry m = identity();
        const double c = std::cos(phi), s = std::sin(phi);
        m.a_[0][0] = c; m.a_[0][1] = -s;
        m.a_[1][0] = s; m.a_[1][1] = c;
        return m;
    }

    // Boost along the x axis by rapidity rho (moves the origin to (tanh rho, 0)).
    static Isometry boost_x(double rho) {
        Isometry m = identity();
        const double c = std::cosh(rho), s = std::sinh(rho);
        m.a_[0][0] = c; m.a_[0][2] = s;
        m.a_[2][0] = s; m.a_[2][2] = c;
        return m;
    }

    // Maps the model center to `target`.
    static Isometry translation_to(const HPoint& target) {
        const double r = std::hypot(target.x(), target.y());
        if (r == 0.0) return identity();
        const double phi = std::atan2(target.y(), target.x());
        return rotation(phi) * boost_x(std::atanh(r)) * rotation(-phi);
    }

    friend Isometry operator*(const Isometry& lhs, const Isometry& rhs) {
        Isometry m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += lhs.a_[i][k] * rhs.a_[k][j];
                m.a_[i][j] = s;
            }
        return m;
    }

    // Inverse of an O(2,1) matrix: J M^T J with J = diag(1, 1, -1).
    Isometry inverse() const {
        Isometry m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double sign = ((i == 2) != (j == 2)) ? -1.0 : 1.0;
                m.a_[i][j] = sign * a_[j][i];
            }
        return m;
    }

    MVec operator()(const MVec& v) const {
        return {a_[0][0] * v.x + a_[0][1] * v.y + a_[0][2] * v.t,
                a_[1][0] * v.x + a_[1][1] * v.y + a_[1][2] * v.t,
                a_[2][0] * v.x + a_[2][1] * v.y + a_[2][2] * v.t};
    }

    HPoint operator()(const HPoint& p) const { return project((*this)(p.lift())); }

    IdealPoint operator()(const IdealPoint& q) const {
        const MVec v = (*this)(q.null_vector());
        return IdealPoint(std::atan2(v.y, v.x));
    }

  private:
    Isometry() { for (auto& row : a_) row[0] = row[1] = row[2] = 0.0; }
    double a_[3][3];
};

// ---------------------------------------------------------------------------
// Metric operations

inline double dist(const HPoint& p, const HPoint& q) {
    // 2 asinh(|P - Q|/2) instead of acosh(-<P,Q>): exact at coincident points,
    // where the acosh form loses half the mantissa.
    const MVec u = p.lift() - q.lift();
    return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, mdot(u, u))));
}

inline double sinh_signed_dist(const MVec& lifted_p, const Geodesic& g) {
    return mdot(lifted_p, g.normal());
}

inline double signed_dist(const HPoint& p, const Geodesic& g) {
    return std::asinh(sinh_signed_dist(p.lift(), g));
}

// Oriented geodesic through two distinct interior points (travel p -> q).
Geodesic geodesic_through(const HPoint& p, const HPoint& q);

// Oriented geodesic with the given unit spacelike normal (left-positive).
Geodesic geodesic_from_normal(const MVec& unit_normal);

inline Geodesic geodesic(const IdealPoint& from, const IdealPoint& to) {
    return Geodesic(from, to);
}

HPoint foot_of_perpendicular(const HPoint& p, const Geodesic& g);

// Perpendicular to g at a point p of g, oriented to the left of g.
Geodesic perpendicular_at(const Geodesic& g, const HPoint& p, double tol = 1e-10);

// Unit tangent vector at p pointing toward q (both interior).
MVec tangent_toward(const HPoint& p, const HPoint& q);

// Unit tangent vector at p pointing toward the ideal point X.
MVec tangent_toward(const HPoint& p, const IdealPoint& X);

double angle_between(const MVec& u, const MVec& v);

Angle angle_at(const HPoint& p, const HPoint& q, const HPoint& r);
Angle angle_at(const HPoint& p, const HPoint& q, const IdealPoint& r);
Angle angle_at(const HPoint& p, const IdealPoint& q, const IdealPoint& r);

// Angle of parallelism: cos(parallel_angle(d)) = tanh d, in (0, pi/2].
Angle parallel_angle(double d);

// Busemann function based at X, normalized so that B(base) = 0; decreases
// at unit rate along the ray base -> X.
double busemann(const IdealPoint& X, const HPoint& p, const HPoint& base);

// Length of the common perpendicular of two ultraparallel lines.
double line_line_distance(const Geodesic& g1, const Geodesic& g2, double tol = 1e-12);

}  // namespace hypwidth
