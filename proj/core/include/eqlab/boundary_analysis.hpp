#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eqlab/circle_map.hpp"

namespace eqlab {

struct QsReport {
    double cr_min = 0.0;
    double cr_max = 0.0;
    std::array<BoundaryPoint, 4> min_witness{}, max_witness{};  // source quadruples
    std::uint64_t samples = 0;
};

// Range of image cross-ratios over seeded isometric copies of the standard
// quadruple (1, i, -1, -i); probe isometries combine rotations with
// translations along random axes, lengths exponential capped at ln(samples).
// Throws when an image quadruple violates the circular order.
QsReport qs_constant_estimate(const CircleMap& f, std::uint64_t samples, std::uint64_t seed);

struct SymmetryProfile {
    std::vector<double> scales;
    std::vector<double> beta;  // per-scale sup of |log(cr / (4/3))|
};

// Distortion of evenly spaced 4-tuples with chart spacing at most the scale,
// sampled in four half-circle charts (50% overlap) mapped onto [-1, 1].
SymmetryProfile symmetric_modulus(const CircleMap& f, const std::vector<double>& scales,
                                  std::uint64_t samples_per_scale, std::uint64_t seed);

}  // namespace eqlab
