#include "eqlab/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace eqlab {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail_at(const std::filesystem::path& file, int line, const std::string& what) {
    throw std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    return in;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

MeasuredLamination read_lamination(const std::filesystem::path& file) {
    std::ifstream in = open_input(file);
    std::vector<Atom> atoms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        double p, q, w;
        std::string extra;
        if (!(fields >> p >> q >> w) || (fields >> extra))
            fail_at(file, lineno, "expected 'p_angle q_angle weight'");
        try {
            atoms.push_back(Atom{Geodesic(BoundaryPoint(p), BoundaryPoint(q)), w});
        } catch (const std::invalid_argument& e) {
            fail_at(file, lineno, e.what());
        }
    }
    try {
        return MeasuredLamination(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(file.string() + ": " + e.what());
    }
}

void write_lamination(const std::filesystem::path& file, const MeasuredLamination& lam) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "# p_angle q_angle weight\n";
    for (const Atom& a : lam.atoms())
        out << format_double(a.support.p().angle()) << ' '
            << format_double(a.support.q().angle()) << ' '
            << format_double(a.weight) << '\n';
    if (!out) throw std::runtime_error("failed writing " + file.string());
}

CircleMap read_tabulated_map(const std::filesystem::path& file) {
    std::ifstream in = open_input(file);
    std::vector<std::pair<double, double>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        double x, y;
        std::string extra;
        if (!(fields >> x >> y) || (fields >> extra))
            fail_at(file, lineno, "expected 'angle image_angle'");
        samples.emplace_back(x, y);
    }
    try {
        return CircleMap::tabulated(std::move(samples));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(file.string() + ": " + e.what());
    }
}

Manifest read_manifest(const std::filesystem::path& file) {
    std::ifstream in = open_input(file);
    std::filesystem::path dir = file.parent_path();
    auto resolve = [&dir](const std::string& s) {
        std::filesystem::path p(s);
        return p.is_absolute() ? p : dir / p;
    };

    Manifest m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty()) continue;
        if (body.rfind("limit:", 0) == 0) {
            if (m.limit) fail_at(file, lineno, "second limit entry");
            std::string rest = strip(body.substr(6));
            if (rest.empty()) fail_at(file, lineno, "limit entry needs a path");
            m.limit = resolve(rest);
        } else {
            if (m.limit) fail_at(file, lineno, "terms after the limit entry");
            m.terms.push_back(resolve(body));
        }
    }
    if (m.terms.empty()) throw std::runtime_error(file.string() + ": no sequence terms");
    return m;
}

MeasureSequence load_sequence(const Manifest& manifest) {
    MeasureSequence seq;
    seq.terms.reserve(manifest.terms.size());
    for (const auto& p : manifest.terms) seq.terms.push_back(read_lamination(p));
    if (manifest.limit) seq.limit = read_lamination(*manifest.limit);
    return seq;
}

CsvWriter::CsvWriter(const std::filesystem::path& file, const std::vector<std::string>& header)
    : out_(file), columns_(header.size()) {
    if (!out_) throw std::runtime_error("cannot write " + file.string());
    if (header.empty()) throw std::invalid_argument("csv needs at least one column");
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << (i ? "," : "") << header[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_)
        throw std::invalid_argument("csv row has " + std::to_string(values.size()) +
                                    " values, expected " + std::to_string(columns_));
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << (i ? "," : "") << format_double(values[i]);
    out_ << '\n';
    if (!out_) throw std::runtime_error("failed writing csv row");
}

}  // namespace eqlab
