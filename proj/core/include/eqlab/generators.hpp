#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "eqlab/lamination.hpp"

namespace eqlab {

// Weight assigned to an atom at nesting level `level` (root = 0).
using WeightRule = std::function<double(int)>;

WeightRule weight_rule_constant(double w);
WeightRule weight_rule_pow2();            // w(level) = 2^-level
WeightRule weight_rule_inverse_square();  // w(level) = 1/(level+1)^2
// Accepts "constant", "pow2", "inverse_square".
WeightRule parse_weight_rule(const std::string& name);

// n disjoint atoms sharing the ideal endpoint at `apex_angle`, all with the
// given weight. The free endpoints are spread over the opposite half-circle,
// so no two atoms cross and the norm is exactly n * weight.
MeasuredLamination gen_fan(int n, double apex_angle, double weight);

// Nested binary family: each arc spawns an atom over its middle half and
// recurses into the two flanking quarters. depth >= 1 gives 2^depth - 1
// atoms whose endpoints are all distinct.
MeasuredLamination gen_dyadic_family(int depth, const WeightRule& rule);

// Random pairwise-disjoint atoms, rescaled so the norm equals target_norm
// exactly. Rejection sampling; gives up with an error after 10^4 failed
// draws for a single atom.
MeasuredLamination gen_random_bounded(int atoms, double target_norm, std::uint64_t seed);

}  // namespace eqlab
