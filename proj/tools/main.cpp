#include <complex>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqlab/barycentric.hpp"
#include "eqlab/boundary_analysis.hpp"
#include "eqlab/convergence.hpp"
#include "eqlab/earthquake.hpp"
#include "eqlab/generators.hpp"
#include "eqlab/io.hpp"
#include "eqlab/lamination.hpp"
#include "eqlab/svg.hpp"

namespace {

using namespace eqlab;

std::string fmt(double v) { return format_double(v); }

std::string fmt_quad(const std::array<BoundaryPoint, 4>& q) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + fmt(q[i].angle());
    return s + ")";
}

std::string command_line(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

DiskPoint parse_point(const std::string& s) {
    double x = 0.0, y = 0.0;
    char tail = 0;
    int got = std::sscanf(s.c_str(), "%lf,%lf%c", &x, &y, &tail);
    if (got != 2) throw std::invalid_argument("expected a point as 'x,y': " + s);
    return DiskPoint(x, y);
}

CircleMap boundary_of(const MeasuredLamination& lam) {
    return EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
}

struct GenArgs {
    std::string family, rule = "constant", out;
    int n = 5, depth = 4, atoms = 10;
    double apex = 0.0, weight = 1.0, norm = 1.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

struct FileArgs {
    std::string in, csv, svg;
    std::uint64_t seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-lamination earthquake laboratory"};
    app.require_subcommand(1);
    int status = 0;
    const std::string cmdline = command_line(argc, argv);

    // --- gen ------------------------------------------------------------
    GenArgs g;
    auto* gen = app.add_subcommand("gen", "generate a lamination file");
    gen->add_option("--family", g.family, "fan, dyadic, or random")
        ->required()
        ->check(CLI::IsMember({"fan", "dyadic", "random"}));
    gen->add_option("--out", g.out, "output lamination file")->required();
    gen->add_option("--n", g.n, "fan: number of atoms");
    gen->add_option("--apex", g.apex, "fan: shared endpoint angle");
    gen->add_option("--weight", g.weight, "fan / dyadic constant rule: atom weight");
    gen->add_option("--depth", g.depth, "dyadic: nesting depth");
    gen->add_option("--rule", g.rule, "dyadic: constant, pow2, or inverse_square");
    gen->add_option("--atoms", g.atoms, "random: number of atoms");
    gen->add_option("--norm", g.norm, "random: target norm");
    gen->add_option("--seed", g.seed, "random: RNG seed")->each([&g](const std::string&) {
        g.seed_set = true;
    });
    gen->callback([&] {
        MeasuredLamination lam;
        if (g.family == "fan") {
            lam = gen_fan(g.n, g.apex, g.weight);
            std::cout << "config family=fan n=" << g.n << " apex=" << fmt(g.apex)
                      << " weight=" << fmt(g.weight) << " out=" << g.out << '\n';
        } else if (g.family == "dyadic") {
            WeightRule rule = g.rule == "constant" ? weight_rule_constant(g.weight)
                                                   : parse_weight_rule(g.rule);
            lam = gen_dyadic_family(g.depth, rule);
            std::cout << "config family=dyadic depth=" << g.depth << " rule=" << g.rule
                      << " weight=" << fmt(g.weight) << " out=" << g.out << '\n';
        } else {
            if (!g.seed_set) throw std::invalid_argument("--seed is required for --family random");
            lam = gen_random_bounded(g.atoms, g.norm, g.seed);
            std::cout << "config family=random atoms=" << g.atoms << " norm=" << fmt(g.norm)
                      << " seed=" << g.seed << " out=" << g.out << '\n';
        }
        write_lamination(g.out, lam);
        std::cout << "atoms=" << lam.size() << " norm=" << fmt(thurston_norm(lam).value)
                  << '\n';
    });

    // --- norm -----------------------------------------------------------
    FileArgs n;
    std::uint64_t n_samples = 0;
    bool n_seed_set = false;
    auto* norm = app.add_subcommand("norm", "Thurston norm of a lamination");
    norm->add_option("--in", n.in, "lamination file")->required();
    norm->add_option("--samples", n_samples, "Monte-Carlo arcs (0 = skip)");
    norm->add_option("--seed", n.seed, "RNG seed")->each([&n_seed_set](const std::string&) {
        n_seed_set = true;
    });
    norm->callback([&] {
        if (n_samples > 0 && !n_seed_set)
            throw std::invalid_argument("--seed is required when --samples > 0");
        MeasuredLamination lam = read_lamination(n.in);
        NormResult exact = thurston_norm(lam);
        std::cout << "config in=" << n.in << " samples=" << n_samples << " seed="
                  << (n_seed_set ? std::to_string(n.seed) : "none") << '\n';
        std::cout << "exact=" << fmt(exact.value) << '\n';
        if (lam.empty())
            std::cout << "witness=none\n";
        else
            std::cout << "witness=(" << exact.atom_a << "," << exact.atom_b << ")"
                      << " distance=" << fmt(exact.pair_distance)
                      << " contributors=" << exact.contributors.size() << '\n';
        if (n_samples > 0) {
            SampledNorm mc = thurston_norm_sampled(lam, n_samples, n.seed);
            std::cout << "sampled=" << fmt(mc.value) << " center=(" << fmt(mc.best_center.real())
                      << "," << fmt(mc.best_center.imag())
                      << ") direction=" << fmt(mc.best_direction) << '\n';
        }
    });

    // --- boundary ---------------------------------------------------------
    FileArgs b;
    int b_grid = 1024;
    bool b_normalize = false;
    auto* boundary = app.add_subcommand("boundary", "tabulate the boundary map");
    boundary->add_option("--in", b.in, "lamination file")->required();
    boundary->add_option("--grid", b_grid, "grid points")->check(CLI::Range(2, 10000000));
    boundary->add_flag("--normalize", b_normalize, "pin three boundary points");
    boundary->add_option("--csv", b.csv, "write (x, Ex) rows here");
    boundary->add_option("--svg", b.svg, "write a plot here");
    boundary->callback([&] {
        MeasuredLamination lam = read_lamination(b.in);
        CircleMap f = boundary_of(lam);
        if (b_normalize)
            f = normalize_three_points(f, BoundaryPoint(0.0), BoundaryPoint(kTau / 3.0),
                                       BoundaryPoint(2.0 * kTau / 3.0));
        std::cout << "config in=" << b.in << " grid=" << b_grid
                  << " normalize=" << (b_normalize ? 1 : 0) << '\n';
        std::vector<std::pair<double, double>> rows;
        rows.reserve(static_cast<std::size_t>(b_grid));
        for (int i = 0; i < b_grid; ++i) {
            double x = kTau * i / b_grid;
            rows.emplace_back(x, f.apply_angle(x));
        }
        if (!b.csv.empty()) {
            CsvWriter csv(b.csv, {"x", "Ex"});
            for (auto [x, y] : rows) csv.row({x, y});
        }
        if (!b.svg.empty())
            write_svg_plot(b.svg, "boundary map", cmdline, {{"E", rows}});
        std::cout << "points=" << rows.size() << '\n';
    });

    // --- qs ---------------------------------------------------------------
    FileArgs q;
    std::uint64_t q_samples = 20000;
    auto* qs = app.add_subcommand("qs", "cross-ratio distortion of the boundary map");
    qs->add_option("--in", q.in, "lamination file")->required();
    qs->add_option("--samples", q_samples, "probe quadruples")->check(CLI::PositiveNumber);
    qs->add_option("--seed", q.seed, "RNG seed")->required();
    qs->callback([&] {
        MeasuredLamination lam = read_lamination(q.in);
        QsReport rep = qs_constant_estimate(boundary_of(lam), q_samples, q.seed);
        std::cout << "config in=" << q.in << " samples=" << q_samples << " seed=" << q.seed
                  << '\n';
        std::cout << "cr_min=" << fmt(rep.cr_min) << " witness_min=" << fmt_quad(rep.min_witness)
                  << '\n';
        std::cout << "cr_max=" << fmt(rep.cr_max) << " witness_max=" << fmt_quad(rep.max_witness)
                  << '\n';
    });

    // --- sym ----------------------------------------------------------------
    FileArgs sy;
    std::vector<double> sy_scales{0.4, 0.2, 0.1, 0.05};
    std::uint64_t sy_samples = 4000;
    auto* sym = app.add_subcommand("sym", "symmetric 4-tuple distortion per scale");
    sym->add_option("--in", sy.in, "lamination file")->required();
    sym->add_option("--scales", sy_scales, "chart-space scales")->delimiter(',');
    sym->add_option("--samples", sy_samples, "tuples per scale")->check(CLI::PositiveNumber);
    sym->add_option("--seed", sy.seed, "RNG seed")->required();
    sym->add_option("--csv", sy.csv, "write (scale, beta) rows here");
    sym->add_option("--svg", sy.svg, "write a plot here");
    sym->callback([&] {
        MeasuredLamination lam = read_lamination(sy.in);
        SymmetryProfile prof = symmetric_modulus(boundary_of(lam), sy_scales, sy_samples, sy.seed);
        std::cout << "config in=" << sy.in << " samples=" << sy_samples << " seed=" << sy.seed
                  << " scales=";
        for (std::size_t i = 0; i < sy_scales.size(); ++i)
            std::cout << (i ? "," : "") << fmt(sy_scales[i]);
        std::cout << '\n';
        std::vector<std::pair<double, double>> rows;
        for (std::size_t i = 0; i < prof.scales.size(); ++i) {
            std::cout << "scale=" << fmt(prof.scales[i]) << " beta=" << fmt(prof.beta[i]) << '\n';
            rows.emplace_back(prof.scales[i], prof.beta[i]);
        }
        if (!sy.csv.empty()) {
            CsvWriter csv(sy.csv, {"scale", "beta"});
            for (auto [s, v] : rows) csv.row({s, v});
        }
        if (!sy.svg.empty()) write_svg_plot(sy.svg, "symmetry profile", cmdline, {{"beta", rows}});
    });

    // --- profile ---------------------------------------------------------
    FileArgs pr;
    std::vector<double> pr_tlist{0.02, 0.05, 0.1};
    std::uint64_t pr_samples = 20000;
    double pr_radius = kDefaultDiskRadius;
    auto* profile = app.add_subcommand("profile", "near-boundary mass profile");
    profile->add_option("--in", pr.in, "lamination file")->required();
    profile->add_option("--tlist", pr_tlist, "boundary distances")->delimiter(',');
    profile->add_option("--samples", pr_samples, "disks per distance")->check(CLI::PositiveNumber);
    profile->add_option("--radius", pr_radius, "query disk radius");
    profile->add_option("--seed", pr.seed, "RNG seed")->required();
    profile->add_option("--csv", pr.csv, "write (t, mass) rows here");
    profile->add_option("--svg", pr.svg, "write a plot here");
    profile->callback([&] {
        MeasuredLamination lam = read_lamination(pr.in);
        std::cout << "config in=" << pr.in << " samples=" << pr_samples << " seed=" << pr.seed
                  << " radius=" << fmt(pr_radius) << '\n';
        std::vector<std::pair<double, double>> rows;
        for (double t : pr_tlist) {
            double v = asymptotic_profile(lam, t, pr_samples, pr.seed, pr_radius);
            std::cout << "t=" << fmt(t) << " mass=" << fmt(v) << '\n';
            rows.emplace_back(t, v);
        }
        if (!pr.csv.empty()) {
            CsvWriter csv(pr.csv, {"t", "mass"});
            for (auto [t, v] : rows) csv.row({t, v});
        }
        if (!pr.svg.empty()) write_svg_plot(pr.svg, "mass profile", cmdline, {{"mass", rows}});
    });

    // --- converge ----------------------------------------------------------
    std::string c_manifest, c_csv, c_svg;
    TestWindow c_window;
    auto* converge = app.add_subcommand("converge", "weak* vs boundary convergence tables");
    converge->add_option("--manifest", c_manifest, "sequence manifest file")->required();
    converge->add_option("--window-radius", c_window.radius, "restriction disk radius");
    converge->add_option("--bandwidth", c_window.bandwidth, "tent half-width");
    converge->add_option("--csv", c_csv, "write the gap table here");
    converge->add_option("--svg", c_svg, "write a plot here");
    converge->callback([&] {
        Manifest man = read_manifest(c_manifest);
        MeasureSequence seq = load_sequence(man);
        ConvergenceTable table = convergence_experiment(seq, c_window);
        std::cout << "config manifest=" << c_manifest << " window_radius=" << fmt(c_window.radius)
                  << " bandwidth=" << fmt(c_window.bandwidth) << " terms=" << table.measure_gap.size()
                  << " limit=" << (man.limit ? "explicit" : "last-term") << '\n';
        std::vector<std::pair<double, double>> m_rows, b_rows;
        for (std::size_t i = 0; i < table.measure_gap.size(); ++i) {
            std::cout << "term=" << i << " measure_gap=" << fmt(table.measure_gap[i])
                      << " boundary_gap=" << fmt(table.boundary_gap[i]) << '\n';
            m_rows.emplace_back(static_cast<double>(i), table.measure_gap[i]);
            b_rows.emplace_back(static_cast<double>(i), table.boundary_gap[i]);
        }
        std::cout << "spearman joint=" << fmt(table.joint_spearman)
                  << " measure_trend=" << fmt(table.measure_trend)
                  << " boundary_trend=" << fmt(table.boundary_trend) << '\n';
        if (!c_csv.empty()) {
            CsvWriter csv(c_csv, {"term", "measure_gap", "boundary_gap"});
            for (std::size_t i = 0; i < table.measure_gap.size(); ++i)
                csv.row({static_cast<double>(i), table.measure_gap[i], table.boundary_gap[i]});
        }
        if (!c_svg.empty())
            write_svg_plot(c_svg, "convergence gaps", cmdline,
                           {{"measure", m_rows}, {"boundary", b_rows}});
        std::cout << "verdict " << (table.pass ? "PASS" : "FAIL") << '\n';
        if (!table.pass) status = 2;
    });

    // --- barycentric -------------------------------------------------------
    std::string ba_in, ba_map, ba_at, ba_csv, ba_svg;
    std::vector<double> ba_radii;
    int ba_profile_samples = 16;
    std::uint64_t ba_seed = 0;
    bool ba_seed_set = false;
    ExtensionOptions ba_opts;
    auto* bary = app.add_subcommand("barycentric", "barycentric extension of a boundary map");
    auto* ba_in_opt = bary->add_option("--in", ba_in, "lamination file");
    bary->add_option("--map", ba_map, "tabulated circle map file")->excludes(ba_in_opt);
    auto* ba_at_opt = bary->add_option("--at", ba_at, "evaluation point 'x,y'");
    bary->add_option("--profile", ba_radii, "radii for max |Beltrami| sampling")
        ->delimiter(',')
        ->excludes(ba_at_opt);
    bary->add_option("--profile-samples", ba_profile_samples, "points per radius")
        ->check(CLI::PositiveNumber);
    bary->add_option("--seed", ba_seed, "RNG seed (profile mode)")
        ->each([&ba_seed_set](const std::string&) { ba_seed_set = true; });
    bary->add_option("--quadrature", ba_opts.quadrature, "boundary nodes")
        ->check(CLI::Range(8, 1 << 20));
    bary->add_option("--tol", ba_opts.tolerance, "solver tolerance");
    bary->add_option("--csv", ba_csv, "profile mode: write (radius, max_mu) rows here");
    bary->add_option("--svg", ba_svg, "profile mode: write a plot here");
    bary->callback([&] {
        if (ba_in.empty() == ba_map.empty())
            throw std::invalid_argument("pass exactly one of --in or --map");
        if (ba_at.empty() == ba_radii.empty())
            throw std::invalid_argument("pass exactly one of --at or --profile");
        ba_opts.max_quadrature = std::max(ba_opts.max_quadrature, 16 * ba_opts.quadrature);
        CircleMap f = ba_map.empty() ? boundary_of(read_lamination(ba_in))
                                     : read_tabulated_map(ba_map);
        std::cout << "config " << (ba_map.empty() ? "in=" + ba_in : "map=" + ba_map)
                  << " quadrature=" << ba_opts.quadrature << " tol=" << fmt(ba_opts.tolerance)
                  << '\n';
        if (!ba_at.empty()) {
            DiskPoint z = parse_point(ba_at);
            ExtensionResult res = barycentric_extension(f, z, ba_opts);
            Complex mu = beltrami_estimate(f, z, ba_opts);
            std::cout << "at=(" << fmt(z.value().real()) << "," << fmt(z.value().imag()) << ")\n"
                      << "value=(" << fmt(res.value.value().real()) << ","
                      << fmt(res.value.value().imag()) << ") residual=" << fmt(res.residual)
                      << " iterations=" << res.iterations << " quadrature=" << res.quadrature
                      << '\n'
                      << "beltrami=(" << fmt(mu.real()) << "," << fmt(mu.imag())
                      << ") abs=" << fmt(std::abs(mu)) << '\n';
        } else {
            if (!ba_seed_set) throw std::invalid_argument("--seed is required for --profile");
            std::vector<double> vals =
                asymptotic_conformality_profile(f, ba_radii, ba_profile_samples, ba_seed, ba_opts);
            std::vector<std::pair<double, double>> rows;
            for (std::size_t i = 0; i < ba_radii.size(); ++i) {
                std::cout << "radius=" << fmt(ba_radii[i]) << " max_beltrami=" << fmt(vals[i])
                          << '\n';
                rows.emplace_back(ba_radii[i], vals[i]);
            }
            if (!ba_csv.empty()) {
                CsvWriter csv(ba_csv, {"radius", "max_beltrami"});
                for (auto [r, v] : rows) csv.row({r, v});
            }
            if (!ba_svg.empty())
                write_svg_plot(ba_svg, "conformality profile", cmdline, {{"max_beltrami", rows}});
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NoLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
