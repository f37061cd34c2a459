#include "eqlab/earthquake.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eqlab/rng.hpp"

namespace eqlab {

void require_realizable(const MeasuredLamination& lam, const StratumSignature& sig) {
    const auto& atoms = lam.atoms();
    if (sig.size() != atoms.size())
        throw std::invalid_argument("stratum signature length does not match the lamination");
    for (std::size_t i = 0; i < sig.size(); ++i) {
        for (std::size_t j = 0; j < sig.size(); ++j) {
            if (i == j) continue;
            Side j_seen_from_i = side_of(atoms[i].support, atoms[j].support);
            if (sig[j] == Side::On) {
                // A point of atom j sits on atom i's side of sight of j,
                // except that a shared endpoint lies on both atoms at once.
                bool ok = sig[i] == j_seen_from_i ||
                          (sig[i] == Side::On &&
                           share_endpoint(atoms[i].support, atoms[j].support));
                if (!ok)
                    throw std::invalid_argument("unrealizable stratum signature (atoms " +
                                                std::to_string(i) + ", " + std::to_string(j) +
                                                ")");
                continue;
            }
            if (sig[i] == Side::On || sig[i] == opposite(j_seen_from_i)) {
                // The region lies on atom i or beyond it, away from atom j,
                // which pins the side of atom j it can occupy.
                if (sig[j] != side_of(atoms[j].support, atoms[i].support))
                    throw std::invalid_argument("unrealizable stratum signature (atoms " +
                                                std::to_string(i) + ", " + std::to_string(j) +
                                                ")");
            }
        }
    }
}

std::vector<std::size_t> separating_atoms(const MeasuredLamination& lam,
                                          const StratumSignature& a,
                                          const StratumSignature& b) {
    require_realizable(lam, a);
    require_realizable(lam, b);
    std::vector<std::size_t> sep;
    for (std::size_t k = 0; k < lam.size(); ++k)
        if (a[k] != Side::On && b[k] != Side::On && a[k] != b[k]) sep.push_back(k);
    if (sep.size() < 2) return sep;
    // Rank by how many of the other separators sit on the a-side: the chain
    // of separating atoms is crossed in that order when walking from a to b.
    std::vector<std::size_t> rank(sep.size(), 0);
    for (std::size_t u = 0; u < sep.size(); ++u)
        for (std::size_t v = 0; v < sep.size(); ++v) {
            if (u == v) continue;
            if (side_of(lam.atoms()[sep[u]].support, lam.atoms()[sep[v]].support) == a[sep[u]])
                ++rank[u];
        }
    std::vector<std::size_t> order(sep.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t u, std::size_t v) { return rank[u] < rank[v]; });
    std::vector<std::size_t> sorted(sep.size());
    for (std::size_t u = 0; u < sep.size(); ++u) sorted[u] = sep[order[u]];
    return sorted;
}

Mobius cocycle(const MeasuredLamination& lam, const StratumSignature& a,
               const StratumSignature& b) {
    Mobius out;
    for (std::size_t k : separating_atoms(lam, a, b)) {
        const Atom& atom = lam.atoms()[k];
        out = out.compose(
            translation_attracting(atom.support, atom.weight, atom.support.endpoint(a[k])));
    }
    return out;
}

EarthquakeSpec::EarthquakeSpec(MeasuredLamination lam, StratumSignature base)
    : lam_(std::move(lam)), base_(std::move(base)) {
    require_realizable(lam_, base_);
}

EarthquakeSpec EarthquakeSpec::with_default_base(MeasuredLamination lam) {
    StratumSignature sig = lam.stratum_of(DiskPoint());
    if (std::find(sig.begin(), sig.end(), Side::On) != sig.end()) sig = lam.stratum_below(0.0);
    return EarthquakeSpec(std::move(lam), std::move(sig));
}

EarthquakeSpec EarthquakeSpec::with_base_point(MeasuredLamination lam, const DiskPoint& z) {
    StratumSignature sig = lam.stratum_of(z);
    if (std::find(sig.begin(), sig.end(), Side::On) != sig.end())
        throw std::invalid_argument(
            "base point lies on an atom; pick a side with with_base_atom");
    return EarthquakeSpec(std::move(lam), std::move(sig));
}

EarthquakeSpec EarthquakeSpec::with_base_atom(MeasuredLamination lam, std::size_t index,
                                              Side side) {
    StratumSignature sig = stratum_beside(lam, index, side);
    return EarthquakeSpec(std::move(lam), std::move(sig));
}

EarthquakeSpec EarthquakeSpec::with_base_signature(MeasuredLamination lam,
                                                   StratumSignature base) {
    return EarthquakeSpec(std::move(lam), std::move(base));
}

struct EarthquakeMap::State {
    EarthquakeSpec spec;
    mutable std::mutex mu;
    mutable std::map<StratumSignature, Mobius> cache;

    explicit State(EarthquakeSpec s) : spec(std::move(s)) {}

    Mobius isometry(const StratumSignature& sig) const {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find(sig);
            if (it != cache.end()) return it->second;
        }
        Mobius m = cocycle(spec.lamination(), spec.base(), sig);
        std::lock_guard<std::mutex> lock(mu);
        return cache.emplace(sig, m).first->second;
    }
};

EarthquakeMap::EarthquakeMap(EarthquakeSpec spec)
    : state_(std::make_shared<State>(std::move(spec))) {}

const EarthquakeSpec& EarthquakeMap::spec() const { return state_->spec; }

Mobius EarthquakeMap::stratum_isometry(const StratumSignature& sig) const {
    return state_->isometry(sig);
}

DiskPoint EarthquakeMap::map(const DiskPoint& z) const {
    return state_->isometry(state_->spec.lamination().stratum_of(z)).apply(z);
}

BoundaryPoint EarthquakeMap::map_boundary(const BoundaryPoint& x) const {
    return state_->isometry(state_->spec.lamination().stratum_of(x)).apply(x);
}

CircleMap EarthquakeMap::boundary_map() const {
    EarthquakeMap self = *this;
    return CircleMap::from_function(
        [self](const BoundaryPoint& x) { return self.map_boundary(x); });
}

double quasi_isometry_defect(const EarthquakeMap& eq, std::uint64_t pairs, std::uint64_t seed) {
    if (pairs == 0) throw std::invalid_argument("quasi_isometry_defect: pairs == 0");
    auto rng = seeded_engine(seed, 2);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto random_point = [&] {
        double r = std::tanh(0.5 * 6.0 * uni(rng));
        return DiskPoint(r * unit(kTau * uni(rng)));
    };
    double worst = 0.0;
    for (std::uint64_t s = 0; s < pairs; ++s) {
        DiskPoint z1 = random_point(), z2 = random_point();
        double before = disk_distance(z1, z2);
        double after = disk_distance(eq.map(z1), eq.map(z2));
        worst = std::max(worst, before - after);
    }
    return worst;
}

}  // namespace eqlab
