#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "eqlab/circle_map.hpp"
#include "eqlab/geodesic.hpp"

namespace eqlab {

// Weighted complete geodesic: one atom of a discrete transverse measure.
struct Atom {
    Geodesic support;
    double weight;
};

// Side of every atom in atom order; On marks a point lying on that atom.
using StratumSignature = std::vector<Side>;

inline constexpr double kMinAtomWeight = 1e-12;
inline constexpr double kDefaultDiskRadius = 0.5;

// Inradius of an ideal triangle, (ln 3)/2: the largest disk radius for which
// a disk of that radius meets pairwise disjoint geodesics in a stack crossed
// by a single diameter chord.
double ideal_triangle_inradius();

// Closed hyperbolic disk used for mass queries; radius capped at the ideal
// triangle inradius.
class HyperbolicDisk {
public:
    HyperbolicDisk(DiskPoint center, double radius);
    const DiskPoint& center() const { return center_; }
    double radius() const { return radius_; }

private:
    DiskPoint center_;
    double radius_;
};

// Finite set of pairwise disjoint weighted geodesics.  Construction merges
// exact duplicates, rejects weights at or below kMinAtomWeight, and rejects
// crossing pairs.  Atoms are kept sorted by endpoint angles.
class MeasuredLamination {
public:
    MeasuredLamination() = default;
    explicit MeasuredLamination(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_weight() const;
    double max_weight() const;

    StratumSignature stratum_of(const DiskPoint& z, double tol = 1e-9) const;
    StratumSignature stratum_of(const BoundaryPoint& x) const;
    // Stratum of boundary directions immediately clockwise of `angle`.
    StratumSignature stratum_below(double angle) const;
    // Stratum of boundary directions immediately counterclockwise of `angle`.
    StratumSignature stratum_above(double angle) const;

private:
    std::vector<Atom> atoms_;
};

// Signature of the region hugging atom `index` on the given side (must not
// be On): every other atom keeps the side it already lies on.
StratumSignature stratum_beside(const MeasuredLamination& lam, std::size_t index, Side side);

// Total weight of the atoms met by the closed segment.
double deposited_on_arc(const MeasuredLamination& lam, const GeodesicSegment& seg);

// Total weight of the atoms meeting the closed hyperbolic disk.
double disk_mass(const MeasuredLamination& lam, const HyperbolicDisk& disk);

struct NormResult {
    double value = 0.0;
    std::size_t atom_a = 0;  // witness pair (equal for a singleton witness)
    std::size_t atom_b = 0;
    double pair_distance = 0.0;
    std::vector<std::size_t> contributors;  // atoms counted between the pair
};

// Largest mass deposited on a closed geodesic arc of hyperbolic length 1,
// computed exactly from the atom pair graph.
NormResult thurston_norm(const MeasuredLamination& lam);

struct SampledNorm {
    double value = 0.0;
    Complex best_center{0.0, 0.0};
    double best_direction = 0.0;
    std::uint64_t samples = 0;
};

// Monte-Carlo lower estimate of thurston_norm over random unit-length arcs.
SampledNorm thurston_norm_sampled(const MeasuredLamination& lam, std::uint64_t samples,
                                  std::uint64_t seed);

// Largest disk mass over sampled disks of the given radius whose Euclidean
// distance to the unit circle is at most t.  Deterministic in the seed.
double asymptotic_profile(const MeasuredLamination& lam, double t, std::uint64_t samples,
                          std::uint64_t seed, double disk_radius = kDefaultDiskRadius);

// Split into (atoms meeting the Euclidean disk of radius r, the rest).
std::pair<MeasuredLamination, MeasuredLamination> restrict_to_disk(
    const MeasuredLamination& lam, double r);

// Image lamination under a circle homeomorphism / disk isometry.
MeasuredLamination pushforward(const CircleMap& f, const MeasuredLamination& lam);
MeasuredLamination pushforward(const Mobius& m, const MeasuredLamination& lam);

MeasuredLamination scale_weights(const MeasuredLamination& lam, double factor);

}  // namespace eqlab
