#include "eqlab/boundary_analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "eqlab/geodesic.hpp"
#include "eqlab/rng.hpp"

namespace eqlab {

namespace {

// Real cross-ratio of a concyclic quadruple, with a monotonicity guard: a
// circularly ordered source must stay circularly ordered under a
// homeomorphism, which keeps the cross-ratio in (1, inf).
double image_cross_ratio(const std::array<BoundaryPoint, 4>& image) {
    double o1 = ccw_span(image[0].angle(), image[1].angle());
    double o2 = ccw_span(image[0].angle(), image[2].angle());
    double o3 = ccw_span(image[0].angle(), image[3].angle());
    if (!(o1 > 0.0 && o1 < o2 && o2 < o3))
        throw std::runtime_error("image quadruple is not circularly ordered; map is not an "
                                 "orientation-preserving homeomorphism on the probes");
    return cross_ratio(image).real();
}

}  // namespace

QsReport qs_constant_estimate(const CircleMap& f, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("qs_constant_estimate: samples == 0");
    auto rng = seeded_engine(seed, 4);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    const double cap = std::log(static_cast<double>(samples) + 1.0);
    const std::array<BoundaryPoint, 4> base{BoundaryPoint(0.0), BoundaryPoint(kPi / 2.0),
                                            BoundaryPoint(kPi), BoundaryPoint(3.0 * kPi / 2.0)};
    QsReport rep;
    rep.samples = samples;
    rep.cr_min = std::numeric_limits<double>::infinity();
    rep.cr_max = -std::numeric_limits<double>::infinity();
    for (std::uint64_t s = 0; s < samples; ++s) {
        double a1 = kTau * uni(rng);
        double a2 = kTau * uni(rng);
        while (circle_distance(a1, a2) < 1e-6) a2 = kTau * uni(rng);
        double len = std::min(expo(rng), cap);
        Mobius m = Mobius::rotation(kTau * uni(rng));
        if (len > 0.0) m = translation_along(Geodesic(a1, a2), len).compose(m);
        std::array<BoundaryPoint, 4> probe, image;
        for (int i = 0; i < 4; ++i) {
            probe[i] = m.apply(base[i]);
            image[i] = f(probe[i]);
        }
        double cr = image_cross_ratio(image);
        if (cr < rep.cr_min) {
            rep.cr_min = cr;
            rep.min_witness = probe;
        }
        if (cr > rep.cr_max) {
            rep.cr_max = cr;
            rep.max_witness = probe;
        }
    }
    return rep;
}

namespace {

struct Chart {
    Complex z1, z2, z3;  // arc endpoints and midpoint, mapped to -1, 0, 1

    // Boundary point whose chart coordinate is x in [-1, 1].
    BoundaryPoint pull_back(double x) const {
        Complex t((1.0 + x) / (1.0 - x), 0.0);
        Complex k = (z2 - z3) / (z2 - z1);
        Complex s = t / k;
        Complex z = (z1 - s * z3) / (1.0 - s);
        return BoundaryPoint(std::arg(z));
    }
};

}  // namespace

SymmetryProfile symmetric_modulus(const CircleMap& f, const std::vector<double>& scales,
                                  std::uint64_t samples_per_scale, std::uint64_t seed) {
    if (scales.empty()) throw std::invalid_argument("symmetric_modulus: no scales");
    for (double s : scales)
        if (!(s > 0.0) || s > 0.5)
            throw std::invalid_argument("symmetric_modulus: scales must lie in (0, 1/2]");
    if (samples_per_scale == 0)
        throw std::invalid_argument("symmetric_modulus: samples_per_scale == 0");
    std::array<Chart, 4> charts;
    for (int c = 0; c < 4; ++c) {
        double center = 0.5 * kPi * c;
        charts[c] = Chart{unit(center - kPi / 2.0), unit(center), unit(center + kPi / 2.0)};
    }
    auto rng = seeded_engine(seed, 5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    SymmetryProfile out;
    out.scales = scales;
    out.beta.assign(scales.size(), 0.0);
    for (std::size_t si = 0; si < scales.size(); ++si) {
        double s = scales[si];
        for (std::uint64_t n = 0; n < samples_per_scale; ++n) {
            const Chart& chart = charts[static_cast<int>(uni(rng) * 4.0) & 3];
            double e = s * (0.5 + 0.5 * uni(rng));
            double x = -1.0 + uni(rng) * (2.0 - 3.0 * e);
            std::array<BoundaryPoint, 4> image;
            for (int i = 0; i < 4; ++i)
                image[i] = f(chart.pull_back(x + e * static_cast<double>(i)));
            double cr = image_cross_ratio(image);
            out.beta[si] = std::max(out.beta[si], std::abs(std::log(cr * 0.75)));
        }
    }
    return out;
}

}  // namespace eqlab
