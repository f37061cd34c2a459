#include "eqlab/barycentric.hpp"

#include <cmath>
#include <vector>

#include "eqlab/rng.hpp"

namespace eqlab {

namespace {

struct Averager {
    std::vector<Complex> images;   // map images of the quadrature nodes
    std::vector<double> weights;   // normalized Poisson kernel at z

    Averager(const CircleMap& f, Complex z, int n) : images(n), weights(n) {
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            double theta = kTau * static_cast<double>(j) / static_cast<double>(n);
            images[j] = unit(f.apply_angle(theta));
            double w = (1.0 - std::norm(z)) / std::norm(unit(theta) - z);
            weights[j] = w;
            total += w;
        }
        for (double& w : weights) w /= total;
    }

    Complex average(Complex w) const {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < images.size(); ++j)
            acc += weights[j] * (images[j] - w) / (1.0 - std::conj(w) * images[j]);
        return acc;
    }

    // d/dw and d/dconj(w) of the average.
    void derivatives(Complex w, Complex& dw, Complex& dwbar) const {
        dw = Complex(0.0, 0.0);
        dwbar = Complex(0.0, 0.0);
        for (std::size_t j = 0; j < images.size(); ++j) {
            Complex d = 1.0 - std::conj(w) * images[j];
            dw += -weights[j] / d;
            dwbar += weights[j] * images[j] * (images[j] - w) / (d * d);
        }
    }
};

}  // namespace

ExtensionResult barycentric_extension(const CircleMap& f, const DiskPoint& z,
                                      const ExtensionOptions& opts) {
    if (opts.quadrature < 16 || opts.max_quadrature < opts.quadrature)
        throw std::invalid_argument("barycentric_extension: bad quadrature settings");
    if (!(opts.tolerance > 0.0))
        throw std::invalid_argument("barycentric_extension: tolerance must be positive");
    Complex w = z.value();
    std::vector<double> trace;
    int total_iterations = 0;
    int n = opts.quadrature;
    while (true) {
        Averager avg(f, z.value(), n);
        Complex F = avg.average(w);
        double res = std::abs(F);
        trace.push_back(res);
        int it = 0;
        while (res > opts.tolerance && it < opts.max_iterations) {
            Complex next;
            bool stepped = false;
            if (res < 1e-3) {
                Complex A, B;
                avg.derivatives(w, A, B);
                double det = std::norm(A) - std::norm(B);
                if (std::abs(det) > 1e-12) {
                    Complex delta = (B * std::conj(F) - F * std::conj(A)) / det;
                    next = w + delta;
                    stepped = std::abs(next) < 1.0;
                }
            }
            if (!stepped) {
                Complex step = 0.5 * F;  // damped move toward the average, in w's chart
                next = (w + step) / (1.0 + std::conj(w) * step);
            }
            w = next;
            F = avg.average(w);
            res = std::abs(F);
            ++it;
            ++total_iterations;
            trace.push_back(res);
        }
        if (res <= opts.tolerance)
            return ExtensionResult{DiskPoint(w), res, total_iterations, n};
        if (n >= opts.max_quadrature)
            throw NonConvergenceError(
                "barycentric_extension: residual " + std::to_string(res) + " after " +
                    std::to_string(total_iterations) + " iterations at quadrature " +
                    std::to_string(n),
                trace);
        n *= 2;
    }
}

Complex beltrami_estimate(const CircleMap& f, const DiskPoint& z, const ExtensionOptions& opts) {
    double h = 1e-4 * (1.0 - z.abs());
    Complex zc = z.value();
    auto ext = [&](Complex at) { return barycentric_extension(f, DiskPoint(at), opts).value.value(); };
    Complex fx = (ext(zc + h) - ext(zc - h)) / (2.0 * h);
    Complex fy = (ext(zc + Complex(0.0, h)) - ext(zc - Complex(0.0, h))) / (2.0 * h);
    Complex fw = 0.5 * (fx - Complex(0.0, 1.0) * fy);
    Complex fwbar = 0.5 * (fx + Complex(0.0, 1.0) * fy);
    if (std::abs(fw) < 1e-10)
        throw std::runtime_error("beltrami_estimate: degenerate derivative sample");
    return fwbar / fw;
}

std::vector<double> asymptotic_conformality_profile(const CircleMap& f,
                                                    const std::vector<double>& radii,
                                                    int samples_per_radius, std::uint64_t seed,
                                                    const ExtensionOptions& opts) {
    if (samples_per_radius <= 0)
        throw std::invalid_argument("asymptotic_conformality_profile: samples_per_radius <= 0");
    for (double r : radii)
        if (!(r > 0.0) || r >= 1.0)
            throw std::invalid_argument(
                "asymptotic_conformality_profile: radii must lie in (0, 1)");
    auto rng = seeded_engine(seed, 6);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        double worst = 0.0;
        for (int s = 0; s < samples_per_radius; ++s) {
            DiskPoint z(r * unit(kTau * uni(rng)));
            worst = std::max(worst, std::abs(beltrami_estimate(f, z, opts)));
        }
        out.push_back(worst);
    }
    return out;
}

}  // namespace eqlab
