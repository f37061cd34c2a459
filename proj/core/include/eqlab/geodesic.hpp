#pragma once

#include <cstdint>
#include <optional>

#include "eqlab/mobius.hpp"

namespace eqlab {

// Which side of a geodesic a point sits on.  Sides are named after the
// boundary arc bounding them: ArcPQ is the component whose circle arc runs
// counterclockwise from endpoint p to endpoint q.
enum class Side : std::int8_t { ArcQP = -1, On = 0, ArcPQ = 1 };

inline Side opposite(Side s) {
    return static_cast<Side>(-static_cast<std::int8_t>(s));
}

// Complete geodesic of the disk, stored as its unordered pair of ideal
// endpoints in canonical order (smaller angle first).
class Geodesic {
public:
    Geodesic(BoundaryPoint x, BoundaryPoint y);
    Geodesic(double angle1, double angle2)
        : Geodesic(BoundaryPoint(angle1), BoundaryPoint(angle2)) {}

    const BoundaryPoint& p() const { return p_; }
    const BoundaryPoint& q() const { return q_; }
    BoundaryPoint endpoint(Side s) const { return s == Side::ArcPQ ? q_ : p_; }

    bool is_diameter() const;

    // Data of the circle orthogonal to the unit circle containing the
    // geodesic; diameter == true means the geodesic is a straight chord
    // through the origin with boundary direction `axis`.
    struct CircleForm {
        bool diameter;
        Complex center;  // |center|^2 = 1 + radius^2 when not a diameter
        double radius;
        Complex axis;    // unit vector, only for diameters
    };
    CircleForm circle() const;

    friend bool operator==(const Geodesic& g, const Geodesic& h) {
        return g.p_ == h.p_ && g.q_ == h.q_;
    }
    friend bool operator!=(const Geodesic& g, const Geodesic& h) { return !(g == h); }

private:
    BoundaryPoint p_, q_;
};

// Closed geodesic segment between two distinct interior points.
class GeodesicSegment {
public:
    GeodesicSegment(DiskPoint u, DiskPoint v);
    const DiskPoint& u() const { return u_; }
    const DiskPoint& v() const { return v_; }
    double length() const { return disk_distance(u_, v_); }

private:
    DiskPoint u_, v_;
};

// Side of g containing an interior point; On within hyperbolic distance tol.
Side side_of(const Geodesic& g, const DiskPoint& z, double tol = 1e-9);

// Side of g containing a boundary point; exact angle arithmetic, On only at
// the endpoints themselves.
Side side_of(const Geodesic& g, const BoundaryPoint& x);

// Side containing boundary directions just below `angle` (clockwise limit).
Side side_of_below(const Geodesic& g, double angle);

// Side containing boundary directions just above `angle` (counterclockwise).
Side side_of_above(const Geodesic& g, double angle);

// Side of g that contains the (disjoint) geodesic h.  Shared endpoints are
// ignored; throws when g and h cross or coincide.
Side side_of(const Geodesic& g, const Geodesic& h);

// True when the endpoint pairs are unlinked on the circle.  Geodesics that
// share an endpoint count as disjoint.
bool geodesics_disjoint(const Geodesic& g, const Geodesic& h);

bool share_endpoint(const Geodesic& g, const Geodesic& h);

// Distance between disjoint geodesics (0 when they share an endpoint).
// Throws when the geodesics cross.
double geodesic_distance(const Geodesic& g, const Geodesic& h);

// Distance from an interior point to a geodesic.
double point_geodesic_distance(const DiskPoint& z, const Geodesic& g);

// Hyperbolic distance from the origin at which g passes closest, and the
// smallest Euclidean modulus attained along g.
double geodesic_min_abs(const Geodesic& g);

// Closed-segment crossing test: true when s meets g, including touching at a
// segment endpoint (side tolerance `tol`).
bool segment_crosses(const GeodesicSegment& s, const Geodesic& g, double tol = 1e-9);

// Normalized position in [0,1] along s of the crossing with g, when it exists.
std::optional<double> crossing_parameter(const GeodesicSegment& s, const Geodesic& g,
                                         double tol = 1e-9);

// The midpoint of the counterclockwise arc from one boundary point to another.
BoundaryPoint ccw_arc_midpoint(const BoundaryPoint& from, const BoundaryPoint& to);

enum class Orientation { PToQ, QToP };

// Hyperbolic translation along g by |t|; for t > 0 the attracting fixed point
// is the terminal endpoint of the chosen orientation.  t == 0 gives the
// identity.
Mobius translation_along(const Geodesic& g, double t,
                         Orientation orientation = Orientation::PToQ);

// Translation along g by |t| whose attracting endpoint (for t > 0) is
// `attract`, which must be one of g's endpoints.
Mobius translation_attracting(const Geodesic& g, double t, const BoundaryPoint& attract);

// Disk isometry taking g onto the real diameter with p -> -1, q -> 1.
Mobius standardize(const Geodesic& g);

// Point of g at signed arclength t from a fixed reference point of g;
// t -> +inf approaches q, t -> -inf approaches p.
DiskPoint point_on(const Geodesic& g, double t);

}  // namespace eqlab
