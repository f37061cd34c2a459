#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlab/circle_map.hpp"

namespace eqlab {

class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, std::vector<double> trace)
        : std::runtime_error(what), residual_trace(std::move(trace)) {}
    std::vector<double> residual_trace;
};

struct ExtensionOptions {
    int quadrature = 1024;       // boundary nodes, doubled on stall
    int max_quadrature = 16384;
    int max_iterations = 200;    // per node count
    double tolerance = 1e-8;
};

struct ExtensionResult {
    DiskPoint value;
    double residual = 0.0;
    int iterations = 0;
    int quadrature = 0;
};

// Conformally natural barycentric extension of a circle homeomorphism,
// evaluated at one interior point: the w where the Poisson-weighted average
// of the images, seen in the chart centered at w, vanishes.
ExtensionResult barycentric_extension(const CircleMap& f, const DiskPoint& z,
                                      const ExtensionOptions& opts = {});

// Beltrami coefficient of the extension at z, by central differences.
Complex beltrami_estimate(const CircleMap& f, const DiskPoint& z,
                          const ExtensionOptions& opts = {});

// Max |Beltrami| over seeded sample points of each circle |z| = r.
std::vector<double> asymptotic_conformality_profile(const CircleMap& f,
                                                    const std::vector<double>& radii,
                                                    int samples_per_radius, std::uint64_t seed,
                                                    const ExtensionOptions& opts = {});

}  // namespace eqlab
