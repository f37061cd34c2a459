#include "eqlab/geodesic.hpp"

#include <cmath>

namespace eqlab {

namespace {
constexpr double kDiameterTol = 1e-12;
}

Geodesic::Geodesic(BoundaryPoint x, BoundaryPoint y) : p_(x), q_(y) {
    if (x == y)
        throw std::invalid_argument("Geodesic: endpoints must be distinct");
    if (q_ < p_) std::swap(p_, q_);
}

bool Geodesic::is_diameter() const {
    return std::abs(p_.point() + q_.point()) < kDiameterTol;
}

Geodesic::CircleForm Geodesic::circle() const {
    Complex P = p_.point(), Q = q_.point();
    if (std::abs(P + Q) < kDiameterTol)
        return {true, Complex(0, 0), 0.0, P};
    double denom = 1.0 + (std::conj(P) * Q).real();
    Complex c = (P + Q) / denom;
    double r = std::sqrt(std::norm(c) - 1.0);
    return {false, c, r, Complex(0, 0)};
}

GeodesicSegment::GeodesicSegment(DiskPoint u, DiskPoint v) : u_(u), v_(v) {
    if (u.value() == v.value())
        throw std::invalid_argument("GeodesicSegment: endpoints must be distinct");
}

// Signed side quantity: positive on the ArcPQ side, negative on the ArcQP
// side, |result| = sinh of the distance to the geodesic.  Written without the
// orthogonal-circle center so near-diameters do not cancel catastrophically.
static double signed_sinh_distance(const Geodesic& g, Complex z) {
    Complex P = g.p().point(), Q = g.q().point();
    double norm1 = 1.0 - std::norm(z);
    Complex sum = P + Q;
    if (std::abs(sum) < kDiameterTol)
        return 2.0 * (std::conj(P) * z).imag() / norm1;
    double delta = ccw_span(g.p().angle(), g.q().angle());
    double denom = 1.0 + (std::conj(P) * Q).real();
    double num = (std::norm(z) + 1.0) * denom - 2.0 * (std::conj(sum) * z).real();
    double s = -num / (std::abs(std::sin(delta)) * norm1);
    return delta < kPi ? s : -s;
}

Side side_of(const Geodesic& g, const DiskPoint& z, double tol) {
    double s = signed_sinh_distance(g, z.value());
    if (std::abs(s) <= tol) return Side::On;
    return s > 0.0 ? Side::ArcPQ : Side::ArcQP;
}

Side side_of(const Geodesic& g, const BoundaryPoint& x) {
    if (x == g.p() || x == g.q()) return Side::On;
    return ccw_between(g.p().angle(), x.angle(), g.q().angle()) ? Side::ArcPQ
                                                                : Side::ArcQP;
}

Side side_of_below(const Geodesic& g, double angle) {
    // Side containing angles just below `angle`: inside the ccw arc (p, q]
    // means ArcPQ.
    double a = canonical_angle(angle);
    double off = canonical_angle(a - g.p().angle());
    double span = ccw_span(g.p().angle(), g.q().angle());
    return (off > 0.0 && off <= span) ? Side::ArcPQ : Side::ArcQP;
}

Side side_of_above(const Geodesic& g, double angle) {
    // Mirror image: angles just above `angle` lie in the ccw arc [p, q).
    double a = canonical_angle(angle);
    double off = canonical_angle(a - g.p().angle());
    double span = ccw_span(g.p().angle(), g.q().angle());
    return (off >= 0.0 && off < span) ? Side::ArcPQ : Side::ArcQP;
}

Side side_of(const Geodesic& g, const Geodesic& h) {
    if (g == h)
        throw std::invalid_argument("side_of: geodesics coincide");
    Side s1 = side_of(g, h.p());
    Side s2 = side_of(g, h.q());
    if (s1 != Side::On && s2 != Side::On && s1 != s2)
        throw std::invalid_argument("side_of: geodesics cross");
    if (s1 != Side::On) return s1;
    if (s2 != Side::On) return s2;
    throw std::invalid_argument("side_of: geodesics coincide");
}

bool share_endpoint(const Geodesic& g, const Geodesic& h) {
    return g.p() == h.p() || g.p() == h.q() || g.q() == h.p() || g.q() == h.q();
}

bool geodesics_disjoint(const Geodesic& g, const Geodesic& h) {
    Side s1 = side_of(g, h.p());
    Side s2 = side_of(g, h.q());
    if (s1 == Side::On || s2 == Side::On) return true;
    return s1 == s2;
}

double geodesic_distance(const Geodesic& g, const Geodesic& h) {
    if (!geodesics_disjoint(g, h))
        throw std::invalid_argument("geodesic_distance: geodesics cross");
    if (g == h || share_endpoint(g, h)) return 0.0;

    // Arrange the four endpoints in circular order a, b, c, d with {a,b} the
    // endpoints of g and {c,d} those of h; then cr(a,b,c,d) = coth^2(d/2).
    Complex a, b, c, d;
    if (side_of(g, h.p()) == Side::ArcPQ) {
        a = g.q().point();
        b = g.p().point();
    } else {
        a = g.p().point();
        b = g.q().point();
    }
    double base = std::arg(b);
    double o1 = canonical_angle(h.p().angle() - base);
    double o2 = canonical_angle(h.q().angle() - base);
    if (o1 < o2) {
        c = h.p().point();
        d = h.q().point();
    } else {
        c = h.q().point();
        d = h.p().point();
    }
    double x = cross_ratio(a, b, c, d).real();
    if (x <= 1.0) return 0.0;
    return 2.0 * std::atanh(1.0 / std::sqrt(x));
}

double point_geodesic_distance(const DiskPoint& z, const Geodesic& g) {
    return std::asinh(std::abs(signed_sinh_distance(g, z.value())));
}

double geodesic_min_abs(const Geodesic& g) {
    auto cf = g.circle();
    if (cf.diameter) return 0.0;
    // |center| - radius, computed without cancellation.
    return 1.0 / (std::abs(cf.center) + cf.radius);
}

bool segment_crosses(const GeodesicSegment& s, const Geodesic& g, double tol) {
    Side su = side_of(g, s.u(), tol);
    Side sv = side_of(g, s.v(), tol);
    if (su == Side::On || sv == Side::On) return true;
    return su != sv;
}

std::optional<double> crossing_parameter(const GeodesicSegment& s, const Geodesic& g,
                                         double tol) {
    Side su = side_of(g, s.u(), tol);
    Side sv = side_of(g, s.v(), tol);
    if (su == Side::On) return 0.0;
    if (sv == Side::On) return 1.0;
    if (su == sv) return std::nullopt;

    // Straighten the segment: N sends u to 0, so the segment becomes the
    // Euclidean ray t -> t * N(v).  Bisect the sign change along it.
    Mobius n = Mobius::point_to_origin(s.u().value());
    Mobius ninv = n.inverse();
    Complex target = n.apply(s.v().value());
    double lo = 0.0, hi = 1.0;
    double flo = signed_sinh_distance(g, s.u().value());
    for (int i = 0; i < 80 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = signed_sinh_distance(g, ninv.apply(mid * target));
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    DiskPoint hit(ninv.apply(0.5 * (lo + hi) * target));
    return disk_distance(s.u(), hit) / s.length();
}

BoundaryPoint ccw_arc_midpoint(const BoundaryPoint& from, const BoundaryPoint& to) {
    return BoundaryPoint(from.angle() + 0.5 * ccw_span(from.angle(), to.angle()));
}

Mobius standardize(const Geodesic& g) {
    // q -> 1, midpoint of arc (q, p) -> i, p -> -1 keeps orientation.
    return Mobius::from_boundary_triple(
        {g.q(), ccw_arc_midpoint(g.q(), g.p()), g.p()},
        {BoundaryPoint(0.0), BoundaryPoint(kPi / 2.0), BoundaryPoint(kPi)});
}

Mobius translation_attracting(const Geodesic& g, double t, const BoundaryPoint& attract) {
    if (attract != g.p() && attract != g.q())
        throw std::invalid_argument("translation_attracting: not an endpoint of the axis");
    if (t == 0.0) return Mobius::identity();
    BoundaryPoint repel = (attract == g.p()) ? g.q() : g.p();
    Mobius r = Mobius::from_boundary_triple(
        {attract, ccw_arc_midpoint(attract, repel), repel},
        {BoundaryPoint(0.0), BoundaryPoint(kPi / 2.0), BoundaryPoint(kPi)});
    double ch = std::cosh(t / 2.0), sh = std::sinh(t / 2.0);
    Mobius std_translation(Complex(ch, 0.0), Complex(sh, 0.0));
    return r.inverse().compose(std_translation).compose(r);
}

Mobius translation_along(const Geodesic& g, double t, Orientation orientation) {
    const BoundaryPoint& terminal = orientation == Orientation::PToQ ? g.q() : g.p();
    return translation_attracting(g, t, terminal);
}

DiskPoint point_on(const Geodesic& g, double t) {
    // standardize carries g to the real diameter with q -> 1, so the point at
    // signed arclength t from the chart origin pulls back onto g.
    return standardize(g).inverse().apply(DiskPoint(std::tanh(0.5 * t), 0.0));
}

}  // namespace eqlab
