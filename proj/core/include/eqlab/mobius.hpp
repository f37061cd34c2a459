#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace eqlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTau = 2.0 * kPi;

// Reduce an angle into [0, 2*pi).
inline double canonical_angle(double a) {
    double x = std::fmod(a, kTau);
    if (x < 0.0) x += kTau;
    if (x >= kTau) x = 0.0;
    return x;
}

// Length of the counterclockwise arc from `from` to `to`, in [0, 2*pi).
inline double ccw_span(double from, double to) {
    return canonical_angle(to - from);
}

// True when x lies strictly inside the open counterclockwise arc (from, to).
inline bool ccw_between(double from, double x, double to) {
    double off = canonical_angle(x - from);
    double span = canonical_angle(to - from);
    return off > 0.0 && off < span;
}

// Distance between two angles along the circle, in [0, pi].
inline double circle_distance(double a, double b) {
    double d = canonical_angle(a - b);
    return d <= kPi ? d : kTau - d;
}

inline Complex unit(double angle) {
    return Complex(std::cos(angle), std::sin(angle));
}

// A point of the unit circle, stored as an angle so circular order stays exact.
class BoundaryPoint {
public:
    BoundaryPoint() : angle_(0.0) {}
    explicit BoundaryPoint(double angle) : angle_(canonical_angle(angle)) {}

    double angle() const { return angle_; }
    Complex point() const { return unit(angle_); }

    friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
        return x.angle_ == y.angle_;
    }
    friend bool operator!=(const BoundaryPoint& x, const BoundaryPoint& y) {
        return !(x == y);
    }
    friend bool operator<(const BoundaryPoint& x, const BoundaryPoint& y) {
        return x.angle_ < y.angle_;
    }

private:
    double angle_;
};

// A point of the open unit disk.
class DiskPoint {
public:
    DiskPoint() : z_(0.0, 0.0) {}
    explicit DiskPoint(Complex z) : z_(z) {
        if (!(std::abs(z) < 1.0))
            throw std::invalid_argument("DiskPoint: |z| >= 1");
    }
    DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

    Complex value() const { return z_; }
    double abs() const { return std::abs(z_); }

    friend bool operator==(const DiskPoint& x, const DiskPoint& y) {
        return x.z_ == y.z_;
    }

private:
    Complex z_;
};

// Hyperbolic distance in the disk model of curvature -1.
double disk_distance(const DiskPoint& z1, const DiskPoint& z2);

// cr(a,b,c,d) = ((a-c)(b-d)) / ((a-d)(b-c)).  Throws on coincident points.
Complex cross_ratio(Complex a, Complex b, Complex c, Complex d);
Complex cross_ratio(const std::array<BoundaryPoint, 4>& q);

// Orientation-preserving isometry of the disk: the matrix [[a, b], [conj b, conj a]]
// with |a|^2 - |b|^2 = 1, acting as z -> (a z + b) / (conj(b) z + conj(a)).
// Stored up to overall sign.
class Mobius {
public:
    Mobius() : a_(1.0, 0.0), b_(0.0, 0.0) {}
    Mobius(Complex a, Complex b);

    static Mobius identity() { return Mobius(); }
    static Mobius rotation(double phi);
    // z -> (z - w)/(1 - conj(w) z), sends w to the origin.
    static Mobius point_to_origin(Complex w);
    // The unique disk isometry mapping one counterclockwise boundary triple
    // onto another.  Throws when the triples have opposite cyclic order.
    static Mobius from_boundary_triple(const std::array<BoundaryPoint, 3>& src,
                                       const std::array<BoundaryPoint, 3>& dst);

    Complex a() const { return a_; }
    Complex b() const { return b_; }

    Complex apply(Complex z) const;
    DiskPoint apply(const DiskPoint& z) const { return DiskPoint(apply(z.value())); }
    BoundaryPoint apply(const BoundaryPoint& x) const;
    Complex operator()(Complex z) const { return apply(z); }

    Mobius compose(const Mobius& rhs) const;  // this after rhs
    Mobius inverse() const;

    // Derivative at z of the Mobius action.
    Complex derivative(Complex z) const;

    // 2*acosh(|Re a|) for hyperbolic elements, 0 otherwise.
    double translation_length() const;
    bool is_hyperbolic() const { return std::abs(a_.real()) > 1.0; }
    // {attracting, repelling} fixed points on the circle; requires hyperbolic.
    std::array<Complex, 2> axis_fixed_points() const;

    // Frobenius distance between the matrices, minimized over the sign choice.
    double distance_to(const Mobius& rhs) const;
    bool is_identity(double tol = 1e-12) const;

private:
    Complex a_, b_;
};

inline Mobius operator*(const Mobius& lhs, const Mobius& rhs) { return lhs.compose(rhs); }

// For a counterclockwise boundary quadruple with cross-ratio 2 (tolerance 1e-9),
// the isometry carrying it onto (1, i, -1, -i).
Mobius isometry_to_standard_quadruple(const std::array<BoundaryPoint, 4>& q,
                                      double tol = 1e-9);

}  // namespace eqlab
