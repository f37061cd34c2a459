#include "eqlab/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eqlab/rng.hpp"

namespace eqlab {

double ideal_triangle_inradius() {
    // Distance from the origin to one side of the ideal triangle with
    // vertices at the cube roots of unity.
    static const double r =
        point_geodesic_distance(DiskPoint(), Geodesic(kTau / 3.0, 2.0 * kTau / 3.0));
    return r;
}

HyperbolicDisk::HyperbolicDisk(DiskPoint center, double radius)
    : center_(center), radius_(radius) {
    if (!(radius > 0.0) || radius > ideal_triangle_inradius())
        throw std::invalid_argument("HyperbolicDisk: radius must lie in (0, ln(3)/2]");
}

namespace {

bool atom_order(const Atom& x, const Atom& y) {
    if (x.support.p().angle() != y.support.p().angle())
        return x.support.p().angle() < y.support.p().angle();
    return x.support.q().angle() < y.support.q().angle();
}

}  // namespace

MeasuredLamination::MeasuredLamination(std::vector<Atom> atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!std::isfinite(atoms[i].weight) || atoms[i].weight <= kMinAtomWeight)
            throw std::invalid_argument("atom " + std::to_string(i) +
                                        ": weight must exceed 1e-12");
    }
    std::sort(atoms.begin(), atoms.end(), atom_order);
    for (const Atom& a : atoms) {
        if (!atoms_.empty() && atoms_.back().support == a.support)
            atoms_.back().weight += a.weight;
        else
            atoms_.push_back(a);
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (!geodesics_disjoint(atoms_[i].support, atoms_[j].support))
                throw std::invalid_argument("atoms " + std::to_string(i) + " and " +
                                            std::to_string(j) + " cross");
}

double MeasuredLamination::total_weight() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.weight;
    return s;
}

double MeasuredLamination::max_weight() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m = std::max(m, a.weight);
    return m;
}

StratumSignature MeasuredLamination::stratum_of(const DiskPoint& z, double tol) const {
    StratumSignature sig(atoms_.size());
    for (std::size_t k = 0; k < atoms_.size(); ++k) sig[k] = side_of(atoms_[k].support, z, tol);
    return sig;
}

StratumSignature MeasuredLamination::stratum_of(const BoundaryPoint& x) const {
    StratumSignature sig(atoms_.size());
    for (std::size_t k = 0; k < atoms_.size(); ++k) sig[k] = side_of(atoms_[k].support, x);
    return sig;
}

StratumSignature MeasuredLamination::stratum_below(double angle) const {
    StratumSignature sig(atoms_.size());
    for (std::size_t k = 0; k < atoms_.size(); ++k) sig[k] = side_of_below(atoms_[k].support, angle);
    return sig;
}

StratumSignature MeasuredLamination::stratum_above(double angle) const {
    StratumSignature sig(atoms_.size());
    for (std::size_t k = 0; k < atoms_.size(); ++k) sig[k] = side_of_above(atoms_[k].support, angle);
    return sig;
}

StratumSignature stratum_beside(const MeasuredLamination& lam, std::size_t index, Side side) {
    if (index >= lam.size()) throw std::out_of_range("stratum_beside: atom index out of range");
    if (side == Side::On) throw std::invalid_argument("stratum_beside: side must not be On");
    StratumSignature sig(lam.size());
    for (std::size_t k = 0; k < lam.size(); ++k)
        sig[k] = (k == index) ? side
                              : side_of(lam.atoms()[k].support, lam.atoms()[index].support);
    return sig;
}

double deposited_on_arc(const MeasuredLamination& lam, const GeodesicSegment& seg) {
    double s = 0.0;
    for (const Atom& a : lam.atoms())
        if (segment_crosses(seg, a.support)) s += a.weight;
    return s;
}

double disk_mass(const MeasuredLamination& lam, const HyperbolicDisk& disk) {
    double s = 0.0;
    for (const Atom& a : lam.atoms())
        if (point_geodesic_distance(disk.center(), a.support) <= disk.radius()) s += a.weight;
    return s;
}

NormResult thurston_norm(const MeasuredLamination& lam) {
    NormResult best;
    const auto& atoms = lam.atoms();
    const std::size_t n = atoms.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double dist = 0.0;
            if (i != j && !share_endpoint(atoms[i].support, atoms[j].support)) {
                dist = geodesic_distance(atoms[i].support, atoms[j].support);
                if (dist > 1.0) continue;
            }
            double value = atoms[i].weight + (i == j ? 0.0 : atoms[j].weight);
            std::vector<std::size_t> mid;
            if (i != j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (side_of(atoms[k].support, atoms[i].support) !=
                        side_of(atoms[k].support, atoms[j].support)) {
                        value += atoms[k].weight;
                        mid.push_back(k);
                    }
                }
            }
            if (value > best.value) best = NormResult{value, i, j, dist, std::move(mid)};
        }
    }
    return best;
}

SampledNorm thurston_norm_sampled(const MeasuredLamination& lam, std::uint64_t samples,
                                  std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("thurston_norm_sampled: samples == 0");
    auto rng = seeded_engine(seed, 0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    // Arc endpoints at chart radius tanh(1/4) are hyperbolic distance 1 apart.
    const double half_chord = std::tanh(0.25);
    SampledNorm out;
    out.samples = samples;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Complex center;
        if (!lam.empty() && uni(rng) < 0.8) {
            auto idx = std::min<std::size_t>(
                static_cast<std::size_t>(uni(rng) * static_cast<double>(lam.size())),
                lam.size() - 1);
            double span = uni(rng) < 0.7 ? 2.0 : 8.0;
            double tau = span * (2.0 * uni(rng) - 1.0);
            center = point_on(lam.atoms()[idx].support, tau).value();
        } else {
            center = std::tanh(3.0 * uni(rng)) * unit(kTau * uni(rng));
        }
        double dir = kTau * uni(rng);
        Mobius back = Mobius::point_to_origin(center).inverse();
        Complex tip = half_chord * unit(dir);
        GeodesicSegment seg{DiskPoint(back.apply(tip)), DiskPoint(back.apply(-tip))};
        double deposit = deposited_on_arc(lam, seg);
        if (deposit > out.value) {
            out.value = deposit;
            out.best_center = center;
            out.best_direction = dir;
        }
    }
    return out;
}

namespace {

// Point of g at Euclidean modulus rho (clamped to g's reach), on the half of
// g closer to the chosen endpoint.
Complex point_at_modulus(const Geodesic& g, double rho, bool toward_q) {
    Complex target = (toward_q ? g.q() : g.p()).point();
    auto cf = g.circle();
    if (cf.diameter) {
        Complex z = rho * cf.axis;
        return std::norm(z - target) <= std::norm(-z - target) ? z : -z;
    }
    double d = std::abs(cf.center);
    double a = (rho * rho + 1.0) / (2.0 * d);
    double h2 = rho * rho - a * a;
    double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    Complex dirc = cf.center / d;
    Complex z1 = (a + Complex(0.0, 1.0) * h) * dirc;
    Complex z2 = (a - Complex(0.0, 1.0) * h) * dirc;
    return std::norm(z1 - target) <= std::norm(z2 - target) ? z1 : z2;
}

}  // namespace

double asymptotic_profile(const MeasuredLamination& lam, double t, std::uint64_t samples,
                          std::uint64_t seed, double disk_radius) {
    if (!(t > 0.0)) throw std::invalid_argument("asymptotic_profile: t must be positive");
    if (samples == 0) throw std::invalid_argument("asymptotic_profile: samples == 0");
    const double u_max = std::min(t, 0.9);
    auto rng = seeded_engine(seed, 1);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double best = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double frac = uni(rng);
        double u = u_max * std::max(frac * frac, 1e-9);  // bias toward the boundary
        Complex center;
        if (!lam.empty() && uni(rng) < 0.8) {
            auto idx = std::min<std::size_t>(
                static_cast<std::size_t>(uni(rng) * static_cast<double>(lam.size())),
                lam.size() - 1);
            const Geodesic& g = lam.atoms()[idx].support;
            double rho = std::max(1.0 - u, geodesic_min_abs(g));
            center = point_at_modulus(g, rho, uni(rng) < 0.5);
        } else {
            center = (1.0 - u) * unit(kTau * uni(rng));
        }
        double mass = disk_mass(lam, HyperbolicDisk(DiskPoint(center), disk_radius));
        best = std::max(best, mass);
    }
    return best;
}

std::pair<MeasuredLamination, MeasuredLamination> restrict_to_disk(
    const MeasuredLamination& lam, double r) {
    if (!(r > 0.0) || r >= 1.0)
        throw std::invalid_argument("restrict_to_disk: r must lie in (0, 1)");
    std::vector<Atom> in, out;
    for (const Atom& a : lam.atoms())
        (geodesic_min_abs(a.support) <= r ? in : out).push_back(a);
    return {MeasuredLamination(std::move(in)), MeasuredLamination(std::move(out))};
}

MeasuredLamination pushforward(const CircleMap& f, const MeasuredLamination& lam) {
    std::vector<Atom> out;
    out.reserve(lam.size());
    for (const Atom& a : lam.atoms())
        out.push_back({Geodesic(f(a.support.p()), f(a.support.q())), a.weight});
    return MeasuredLamination(std::move(out));
}

MeasuredLamination pushforward(const Mobius& m, const MeasuredLamination& lam) {
    return pushforward(CircleMap::mobius(m), lam);
}

MeasuredLamination scale_weights(const MeasuredLamination& lam, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw std::invalid_argument("scale_weights: factor must be positive and finite");
    std::vector<Atom> out = lam.atoms();
    for (Atom& a : out) a.weight *= factor;
    return MeasuredLamination(std::move(out));
}

}  // namespace eqlab
