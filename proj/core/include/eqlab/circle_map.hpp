#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "eqlab/mobius.hpp"

namespace eqlab {

// An orientation-preserving self-map of the unit circle.  Cheap to copy
// (shared immutable state).  Compositions of Mobius maps collapse to a single
// Mobius map; everything else composes lazily.
class CircleMap {
public:
    CircleMap();  // identity

    static CircleMap identity();
    static CircleMap mobius(const Mobius& m);
    // Piecewise-linear interpolation in angle through the given samples.
    // `samples` holds (angle, image angle) pairs; images must be strictly
    // increasing after lifting (degree one).
    static CircleMap tabulated(std::vector<std::pair<double, double>> samples);
    static CircleMap from_function(std::function<BoundaryPoint(const BoundaryPoint&)> f);

    BoundaryPoint operator()(const BoundaryPoint& x) const;
    double apply_angle(double angle) const;

    // this after other:  (f.compose(g))(x) = f(g(x)).
    CircleMap compose(const CircleMap& other) const;

    bool is_mobius() const;
    const Mobius& mobius_part() const;  // throws unless is_mobius()

private:
    struct Impl;
    explicit CircleMap(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// Unique Mobius map sending x1, x2, x3 to the given targets (defaults: angles
// 0, pi/2, pi); triples must share cyclic orientation.
Mobius normalizing_mobius(const BoundaryPoint& x1, const BoundaryPoint& x2,
                          const BoundaryPoint& x3,
                          const BoundaryPoint& t1 = BoundaryPoint(0.0),
                          const BoundaryPoint& t2 = BoundaryPoint(kPi / 2.0),
                          const BoundaryPoint& t3 = BoundaryPoint(kPi));

// Post-compose f with the Mobius map taking f(x1), f(x2), f(x3) to the
// targets, so the result fixes the images of the three points.
CircleMap normalize_three_points(const CircleMap& f, const BoundaryPoint& x1,
                                 const BoundaryPoint& x2, const BoundaryPoint& x3,
                                 const BoundaryPoint& t1 = BoundaryPoint(0.0),
                                 const BoundaryPoint& t2 = BoundaryPoint(kPi / 2.0),
                                 const BoundaryPoint& t3 = BoundaryPoint(kPi));

// Sup of |f(x) - g(x)| over the circle (chordal distance), sampled on a
// uniform grid of `samples` angles.
double boundary_sup_distance(const CircleMap& f, const CircleMap& g, int samples = 4096);

}  // namespace eqlab
