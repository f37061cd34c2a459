#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqlab/earthquake.hpp"
#include "eqlab/lamination.hpp"

namespace eqlab {

struct TestWindow {
    double radius = 0.99;     // atoms must reach this Euclidean disk to count
    double bandwidth = 0.05;  // angular half-width of the tent test functions
};

// Sup over all endpoint-pair tent test functions (both endpoint orderings,
// tent product kernel of the given bandwidth) of the difference of the two
// deposits.  The sup over tent centers is exact: the difference is piecewise
// bilinear, so only breakpoint pairs need evaluation.
double weak_star_discrepancy(const MeasuredLamination& mu, const MeasuredLamination& nu,
                             const TestWindow& window = TestWindow{});

// Terms of a sequence plus an optional explicit limit; when the limit is
// absent the last term plays that role and drops out of the tables.
struct MeasureSequence {
    std::vector<MeasuredLamination> terms;
    std::optional<MeasuredLamination> limit;
};

struct ConvergenceTable {
    std::vector<double> measure_gap;   // weak* discrepancy to the limit, per term
    std::vector<double> boundary_gap;  // sup gap of normalized boundary maps
    double joint_spearman = 0.0;       // rank correlation between the two columns
    double measure_trend = 0.0;        // rank correlation of measure_gap vs index
    double boundary_trend = 0.0;
    bool pass = false;  // both columns vanish or decay (trend <= -0.9)
};

ConvergenceTable convergence_experiment(const MeasureSequence& seq,
                                        const TestWindow& window = TestWindow{});

// Rank correlation with tie-averaged ranks; 0 when either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Pushforward under the isometry carrying the quadruple to (1, i, -1, -i).
MeasuredLamination rescale_by_quadruple(const MeasuredLamination& lam,
                                        const std::array<BoundaryPoint, 4>& q);
// Pushforward under the isometry moving z to the origin.
MeasuredLamination rescale_by_disk(const MeasuredLamination& lam, const DiskPoint& z);

class NoLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DefectReport {
    Mobius limit_cocycle;   // L: stable value of the term cocycles z1 -> z2
    Mobius target_cocycle;  // C: limit-measure cocycle with atoms through z1, z2 included
    std::optional<std::size_t> atom_z1, atom_z2;  // limit atoms the points lie on
    double a1 = 0.0, a2 = 0.0;                    // fitted correction lengths
    double residual = 0.0;                        // distance of C to the fitted product
};

// Compares the limit of the term cocycles between the strata of z1 and z2
// with the limit measure's cocycle, and fits translation corrections along
// the atoms through z1 and z2: C = T1(a1) * L * T2(a2).  Throws NoLimitError
// when the term cocycles do not stabilize.
DefectReport cocycle_limit_defect(const MeasureSequence& seq, const DiskPoint& z1,
                                  const DiskPoint& z2);

}  // namespace eqlab
