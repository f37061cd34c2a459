#include "eqlab/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "eqlab/geodesic.hpp"
#include "eqlab/rng.hpp"

namespace eqlab {

namespace {

constexpr int kMaxPlacementAttempts = 10000;

void build_dyadic(std::vector<Atom>& out, double a, double b, int level, int depth,
                  const WeightRule& rule) {
    double quarter = 0.25 * (b - a);
    double lo = a + quarter;
    double hi = b - quarter;
    out.push_back(Atom{Geodesic(BoundaryPoint(lo), BoundaryPoint(hi)), rule(level)});
    if (level + 1 >= depth) return;
    double mid = 0.5 * (a + b);
    build_dyadic(out, lo, mid, level + 1, depth, rule);
    build_dyadic(out, mid, hi, level + 1, depth, rule);
}

}  // namespace

WeightRule weight_rule_constant(double w) {
    if (w <= kMinAtomWeight) throw std::invalid_argument("weight rule: constant must be positive");
    return [w](int) { return w; };
}

WeightRule weight_rule_pow2() {
    return [](int level) { return std::ldexp(1.0, -level); };
}

WeightRule weight_rule_inverse_square() {
    return [](int level) {
        double d = level + 1.0;
        return 1.0 / (d * d);
    };
}

WeightRule parse_weight_rule(const std::string& name) {
    if (name == "constant") return weight_rule_constant(1.0);
    if (name == "pow2") return weight_rule_pow2();
    if (name == "inverse_square") return weight_rule_inverse_square();
    throw std::invalid_argument("unknown weight rule '" + name +
                                "' (expected constant, pow2, or inverse_square)");
}

MeasuredLamination gen_fan(int n, double apex_angle, double weight) {
    if (n < 1) throw std::invalid_argument("gen_fan: need at least one atom");
    if (weight <= kMinAtomWeight) throw std::invalid_argument("gen_fan: weight must be positive");
    BoundaryPoint apex(apex_angle);
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double spread = n == 1 ? 0.5 * kPi : k * kPi / (n - 1);
        BoundaryPoint tip(apex_angle + 0.5 * kPi + spread);
        atoms.push_back(Atom{Geodesic(apex, tip), weight});
    }
    return MeasuredLamination(std::move(atoms));
}

MeasuredLamination gen_dyadic_family(int depth, const WeightRule& rule) {
    if (depth < 1 || depth > 12) throw std::invalid_argument("gen_dyadic_family: depth must be in [1, 12]");
    if (!rule) throw std::invalid_argument("gen_dyadic_family: missing weight rule");
    std::vector<Atom> atoms;
    atoms.reserve((std::size_t{1} << depth) - 1);
    build_dyadic(atoms, 0.0, kTau, 0, depth, rule);
    return MeasuredLamination(std::move(atoms));
}

MeasuredLamination gen_random_bounded(int n, double target_norm, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_bounded: need at least one atom");
    if (target_norm <= 0.0) throw std::invalid_argument("gen_random_bounded: norm must be positive");

    auto rng = seeded_engine(seed, 7);
    std::uniform_real_distribution<double> angle(0.0, kTau);
    std::uniform_real_distribution<double> weight(0.5, 1.5);

    const double min_sep = 0.02;   // between endpoints of different atoms
    const double min_span = 0.05;  // between the two endpoints of one atom

    std::vector<Atom> atoms;
    std::vector<double> endpoints;
    for (int k = 0; k < n; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxPlacementAttempts && !placed; ++attempt) {
            double a = angle(rng);
            double b = angle(rng);
            if (circle_distance(a, b) < min_span) continue;
            bool clear = true;
            for (double e : endpoints) {
                if (circle_distance(a, e) < min_sep || circle_distance(b, e) < min_sep) {
                    clear = false;
                    break;
                }
            }
            if (!clear) continue;
            Geodesic g{BoundaryPoint(a), BoundaryPoint(b)};
            for (const Atom& other : atoms) {
                if (!geodesics_disjoint(g, other.support)) {
                    clear = false;
                    break;
                }
            }
            if (!clear) continue;
            atoms.push_back(Atom{g, weight(rng)});
            endpoints.push_back(a);
            endpoints.push_back(b);
            placed = true;
        }
        if (!placed)
            throw std::runtime_error("gen_random_bounded: could not place atom " +
                                     std::to_string(k) + " after 10000 attempts");
    }

    MeasuredLamination lam{std::move(atoms)};
    // One rescale lands within an ulp; iterate in case the recomputed norm
    // still differs in the last digit.
    for (int pass = 0; pass < 3; ++pass) {
        double current = thurston_norm(lam).value;
        if (current == target_norm) break;
        lam = scale_weights(lam, target_norm / current);
    }
    return lam;
}

}  // namespace eqlab
