#include "eqlab/mobius.hpp"

#include <cmath>

namespace eqlab {

double disk_distance(const DiskPoint& z1, const DiskPoint& z2) {
    Complex a = z1.value(), b = z2.value();
    double m = std::abs((a - b) / (1.0 - std::conj(a) * b));
    if (m >= 1.0) m = std::nextafter(1.0, 0.0);
    return 2.0 * std::atanh(m);
}

Complex cross_ratio(Complex a, Complex b, Complex c, Complex d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw std::invalid_argument("cross_ratio: coincident points");
    return ((a - c) * (b - d)) / ((a - d) * (b - c));
}

Complex cross_ratio(const std::array<BoundaryPoint, 4>& q) {
    return cross_ratio(q[0].point(), q[1].point(), q[2].point(), q[3].point());
}

Mobius::Mobius(Complex a, Complex b) : a_(a), b_(b) {
    double det = std::norm(a_) - std::norm(b_);
    if (!(det > 0.0))
        throw std::invalid_argument("Mobius: |a|^2 - |b|^2 must be positive");
    double s = 1.0 / std::sqrt(det);
    a_ *= s;
    b_ *= s;
}

Mobius Mobius::rotation(double phi) {
    return Mobius(unit(phi / 2.0), Complex(0.0, 0.0));
}

Mobius Mobius::point_to_origin(Complex w) {
    return Mobius(Complex(1.0, 0.0), -w);
}

Complex Mobius::apply(Complex z) const {
    return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

BoundaryPoint Mobius::apply(const BoundaryPoint& x) const {
    return BoundaryPoint(std::arg(apply(x.point())));
}

Mobius Mobius::compose(const Mobius& rhs) const {
    Complex a = a_ * rhs.a_ + b_ * std::conj(rhs.b_);
    Complex b = a_ * rhs.b_ + b_ * std::conj(rhs.a_);
    return Mobius(a, b);
}

Mobius Mobius::inverse() const {
    return Mobius(std::conj(a_), -b_);
}

Complex Mobius::derivative(Complex z) const {
    Complex den = std::conj(b_) * z + std::conj(a_);
    return 1.0 / (den * den);
}

double Mobius::translation_length() const {
    double t = std::abs(a_.real());
    if (t <= 1.0) return 0.0;
    return 2.0 * std::acosh(t);
}

std::array<Complex, 2> Mobius::axis_fixed_points() const {
    if (!is_hyperbolic())
        throw std::domain_error("axis_fixed_points: element is not hyperbolic");
    // Fixed points solve conj(b) z^2 + (conj(a) - a) z - b = 0.
    Complex cb = std::conj(b_);
    Complex lin = std::conj(a_) - a_;  // purely imaginary
    Complex disc = std::sqrt(lin * lin + 4.0 * cb * b_);
    Complex r1 = (-lin + disc) / (2.0 * cb);
    Complex r2 = (-lin - disc) / (2.0 * cb);
    r1 /= std::abs(r1);
    r2 /= std::abs(r2);
    // Attracting fixed point: |derivative| < 1.
    if (std::abs(derivative(r1)) < 1.0) return {r1, r2};
    return {r2, r1};
}

double Mobius::distance_to(const Mobius& rhs) const {
    auto frob = [](Complex da, Complex db) {
        return std::sqrt(2.0 * (std::norm(da) + std::norm(db)));
    };
    double plus = frob(a_ - rhs.a_, b_ - rhs.b_);
    double minus = frob(a_ + rhs.a_, b_ + rhs.b_);
    return std::min(plus, minus);
}

bool Mobius::is_identity(double tol) const {
    return distance_to(Mobius::identity()) <= tol;
}

namespace {

struct Mat2 {
    Complex m00, m01, m10, m11;

    Mat2 mul(const Mat2& r) const {
        return {m00 * r.m00 + m01 * r.m10, m00 * r.m01 + m01 * r.m11,
                m10 * r.m00 + m11 * r.m10, m10 * r.m01 + m11 * r.m11};
    }
    Mat2 inv() const {
        Complex det = m00 * m11 - m01 * m10;
        return {m11 / det, -m01 / det, -m10 / det, m00 / det};
    }
};

// Matrix sending (z1, z2, z3) to (0, 1, infinity).
Mat2 to_zero_one_inf(Complex z1, Complex z2, Complex z3) {
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

}  // namespace

Mobius Mobius::from_boundary_triple(const std::array<BoundaryPoint, 3>& src,
                                    const std::array<BoundaryPoint, 3>& dst) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (src[i] == src[j] || dst[i] == dst[j])
                throw std::invalid_argument("from_boundary_triple: repeated point");

    Mat2 s = to_zero_one_inf(src[0].point(), src[1].point(), src[2].point());
    Mat2 t = to_zero_one_inf(dst[0].point(), dst[1].point(), dst[2].point());
    Mat2 m = t.inv().mul(s);

    Complex det = m.m00 * m.m11 - m.m01 * m.m10;
    Complex scale = 1.0 / std::sqrt(det);
    m.m00 *= scale; m.m01 *= scale; m.m10 *= scale; m.m11 *= scale;

    // A disk isometry has m11 = conj(m00), m10 = conj(m01) up to sign;
    // project onto that form and reject maps that are far from it.
    Complex a = 0.5 * (m.m00 + std::conj(m.m11));
    Complex b = 0.5 * (m.m01 + std::conj(m.m10));
    double residual = std::abs(m.m00 - std::conj(m.m11)) + std::abs(m.m01 - std::conj(m.m10));
    double mag = std::abs(m.m00) + std::abs(m.m01) + 1.0;
    if (residual > 1e-6 * mag)
        throw std::invalid_argument(
            "from_boundary_triple: triples have opposite cyclic orientation");
    return Mobius(a, b);
}

Mobius isometry_to_standard_quadruple(const std::array<BoundaryPoint, 4>& q, double tol) {
    Complex cr = cross_ratio(q);
    if (std::abs(cr - Complex(2.0, 0.0)) > tol)
        throw std::invalid_argument("isometry_to_standard_quadruple: cross-ratio is not 2");
    Mobius m = Mobius::from_boundary_triple(
        {q[0], q[1], q[2]},
        {BoundaryPoint(0.0), BoundaryPoint(kPi / 2.0), BoundaryPoint(kPi)});
    Complex image = m.apply(q[3].point());
    if (std::abs(image - Complex(0.0, -1.0)) > 1e-6)
        throw std::invalid_argument("isometry_to_standard_quadruple: fourth point mismatch");
    return m;
}

}  // namespace eqlab
