#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "eqlab/circle_map.hpp"
#include "eqlab/lamination.hpp"

namespace eqlab {

// Indices of the atoms strictly separating stratum a from stratum b (entries
// On on either side never separate), ordered from a toward b.
std::vector<std::size_t> separating_atoms(const MeasuredLamination& lam,
                                          const StratumSignature& a,
                                          const StratumSignature& b);

// Comparison isometry between two strata: the product of the left
// translations along the separating atoms, nearest-to-a factor leftmost, each
// attracting the counterclockwise-terminal endpoint of the boundary arc on
// a's side.  Satisfies cocycle(a, c) = cocycle(a, b) * cocycle(b, c).
Mobius cocycle(const MeasuredLamination& lam, const StratumSignature& a,
               const StratumSignature& b);

// Throws invalid_argument unless some region or support geodesic realizes sig.
void require_realizable(const MeasuredLamination& lam, const StratumSignature& sig);

// A lamination together with the base stratum the earthquake fixes.
class EarthquakeSpec {
public:
    // Stratum of the origin; when the origin lies on an atom, the stratum
    // just clockwise of boundary angle 0.
    static EarthquakeSpec with_default_base(MeasuredLamination lam);
    // Stratum of z, which must not lie on an atom.
    static EarthquakeSpec with_base_point(MeasuredLamination lam, const DiskPoint& z);
    // Region hugging the given atom on the given side.
    static EarthquakeSpec with_base_atom(MeasuredLamination lam, std::size_t index, Side side);
    static EarthquakeSpec with_base_signature(MeasuredLamination lam, StratumSignature base);

    const MeasuredLamination& lamination() const { return lam_; }
    const StratumSignature& base() const { return base_; }

private:
    EarthquakeSpec(MeasuredLamination lam, StratumSignature base);
    MeasuredLamination lam_;
    StratumSignature base_;
};

// Left earthquake of a finite lamination: identity on the base stratum, the
// stratum comparison isometry elsewhere.  Cheap to copy; stratum isometries
// are memoized.
class EarthquakeMap {
public:
    explicit EarthquakeMap(EarthquakeSpec spec);

    const EarthquakeSpec& spec() const;

    Mobius stratum_isometry(const StratumSignature& sig) const;
    DiskPoint map(const DiskPoint& z) const;
    BoundaryPoint map_boundary(const BoundaryPoint& x) const;
    CircleMap boundary_map() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Largest contraction max(d(z1,z2) - d(Ez1, Ez2)) over seeded random pairs;
// earthquakes never increase distances by more than the norm allows, and the
// contraction observed here scales with the total shear crossed.
double quasi_isometry_defect(const EarthquakeMap& eq, std::uint64_t pairs, std::uint64_t seed);

}  // namespace eqlab
