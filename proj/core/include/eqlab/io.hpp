#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "eqlab/circle_map.hpp"
#include "eqlab/convergence.hpp"
#include "eqlab/lamination.hpp"

namespace eqlab {

// 17 significant digits, '.' decimal separator, locale-independent.
std::string format_double(double v);

// Lamination files: one atom per line as "p_angle q_angle weight"; '#' starts
// a comment; blank lines are ignored.
MeasuredLamination read_lamination(const std::filesystem::path& file);
void write_lamination(const std::filesystem::path& file, const MeasuredLamination& lam);

// Sampled circle map: lines of "angle image_angle".
CircleMap read_tabulated_map(const std::filesystem::path& file);

struct Manifest {
    std::vector<std::filesystem::path> terms;
    std::optional<std::filesystem::path> limit;
};

// One lamination path per line, optionally ending with "limit: <path>".
// Relative paths are resolved against the manifest's directory.
Manifest read_manifest(const std::filesystem::path& file);

MeasureSequence load_sequence(const Manifest& manifest);

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& file, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);

private:
    std::ofstream out_;
    std::size_t columns_;
};

}  // namespace eqlab
