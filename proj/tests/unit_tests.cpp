#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "eqlab/barycentric.hpp"
#include "eqlab/boundary_analysis.hpp"
#include "eqlab/convergence.hpp"
#include "eqlab/earthquake.hpp"
#include "eqlab/generators.hpp"
#include "eqlab/io.hpp"
#include "eqlab/lamination.hpp"
#include "eqlab/svg.hpp"

using namespace eqlab;

namespace {

MeasuredLamination single_atom(double p, double q, double w) {
    return MeasuredLamination({Atom{Geodesic(p, q), w}});
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("eqlab_unit_" + name);
}

double chord(const BoundaryPoint& a, const BoundaryPoint& b) {
    return std::abs(a.point() - b.point());
}

}  // namespace

TEST_CASE("cross-ratio anchors") {
    Complex c1 = cross_ratio(Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1));
    CHECK(std::abs(c1 - 2.0) < 1e-15);
    Complex c2 = cross_ratio(Complex(0, 0), Complex(1, 0), Complex(2, 0), Complex(3, 0));
    CHECK(std::abs(c2 - 4.0 / 3.0) < 1e-15);
    CHECK_THROWS_AS(cross_ratio(Complex(1, 0), Complex(1, 0), Complex(2, 0), Complex(3, 0)),
                    std::invalid_argument);
}

TEST_CASE("disk distance against the radial formula") {
    for (double x : {0.1, 0.5, 0.9, 0.99}) {
        double expect = std::log((1.0 + x) / (1.0 - x));
        CHECK(disk_distance(DiskPoint(0, 0), DiskPoint(x, 0)) == doctest::Approx(expect).epsilon(1e-13));
    }
    DiskPoint a(0.3, -0.2), b(-0.5, 0.1);
    CHECK(disk_distance(a, b) == doctest::Approx(disk_distance(b, a)));
    CHECK(disk_distance(a, a) == 0.0);
}

TEST_CASE("mobius composition order and inverse") {
    Mobius r = Mobius::rotation(0.7);
    Mobius t = Mobius::point_to_origin(Complex(0.3, 0.1));
    Complex z(0.2, -0.4);
    CHECK(std::abs(r.compose(t).apply(z) - r.apply(t.apply(z))) < 1e-15);
    Mobius both = r.compose(t);
    CHECK(both.compose(both.inverse()).is_identity(1e-12));
    CHECK(std::abs((r * t).apply(z) - r.compose(t).apply(z)) == 0.0);
}

TEST_CASE("mobius derivative matches central differences") {
    Mobius m = Mobius(Complex(1.25, 0.3), Complex(0.4, -0.55));
    Complex z(0.25, 0.15);
    double h = 1e-6;
    Complex dx = (m.apply(z + h) - m.apply(z - h)) / (2 * h);
    CHECK(std::abs(m.derivative(z) - dx) < 1e-8);
}

TEST_CASE("boundary triple transport") {
    std::array<BoundaryPoint, 3> src{BoundaryPoint(0.2), BoundaryPoint(1.5), BoundaryPoint(4.0)};
    std::array<BoundaryPoint, 3> dst{BoundaryPoint(1.0), BoundaryPoint(2.0), BoundaryPoint(5.5)};
    Mobius m = Mobius::from_boundary_triple(src, dst);
    for (int i = 0; i < 3; ++i) CHECK(chord(m.apply(src[i]), dst[i]) < 1e-12);
    std::array<BoundaryPoint, 3> flipped{dst[0], dst[2], dst[1]};
    CHECK_THROWS_AS(Mobius::from_boundary_triple(src, flipped), std::invalid_argument);
}

TEST_CASE("standard quadruple isometry") {
    Mobius probe = Mobius::rotation(0.9).compose(Mobius::point_to_origin(Complex(-0.2, 0.35)));
    std::array<BoundaryPoint, 4> q;
    const std::array<BoundaryPoint, 4> std_q{BoundaryPoint(0.0), BoundaryPoint(kPi / 2),
                                             BoundaryPoint(kPi), BoundaryPoint(3 * kPi / 2)};
    for (int i = 0; i < 4; ++i) q[i] = probe.apply(std_q[i]);
    Mobius back = isometry_to_standard_quadruple(q);
    for (int i = 0; i < 4; ++i) CHECK(chord(back.apply(q[i]), std_q[i]) < 1e-9);
}

TEST_CASE("geodesic sides") {
    Geodesic g(0.0, kPi);  // real diameter; ArcPQ is the upper half
    CHECK(side_of(g, DiskPoint(0.0, 0.5)) == Side::ArcPQ);
    CHECK(side_of(g, DiskPoint(0.0, -0.5)) == Side::ArcQP);
    CHECK(side_of(g, DiskPoint(0.5, 0.0)) == Side::On);
    CHECK(side_of(g, BoundaryPoint(1.0)) == Side::ArcPQ);
    CHECK(side_of(g, BoundaryPoint(-1.0)) == Side::ArcQP);
    CHECK(side_of(g, BoundaryPoint(0.0)) == Side::On);
    CHECK(side_of_below(g, 0.0) == Side::ArcQP);
    CHECK(side_of_above(g, 0.0) == Side::ArcPQ);
    CHECK(side_of_below(g, kPi) == Side::ArcPQ);
    CHECK(side_of_above(g, kPi) == Side::ArcQP);
}

TEST_CASE("geodesic relative position") {
    Geodesic g(0.0, kPi);
    Geodesic above(0.5, 2.0), below(4.0, 5.5);
    CHECK(side_of(g, above) == Side::ArcPQ);
    CHECK(side_of(g, below) == Side::ArcQP);
    CHECK(geodesics_disjoint(above, below));
    CHECK(!geodesics_disjoint(g, Geodesic(1.0, 4.0)));
    CHECK_THROWS_AS(side_of(g, Geodesic(1.0, 4.0)), std::invalid_argument);
    CHECK(share_endpoint(g, Geodesic(0.0, 2.0)));
    CHECK(geodesics_disjoint(g, Geodesic(0.0, 2.0)));
}

TEST_CASE("distance between symmetric geodesics") {
    // Endpoints at +-theta give the closest real-axis point (1-sin)/cos; the
    // real axis is the common perpendicular to the vertical diameter.
    for (double theta : {0.3, 0.8, 1.2}) {
        Geodesic g(theta, -theta);
        Geodesic diameter(kPi / 2, 3 * kPi / 2);
        double x0 = (1.0 - std::sin(theta)) / std::cos(theta);
        double expect = std::log((1.0 + x0) / (1.0 - x0));
        CHECK(geodesic_distance(g, diameter) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(point_geodesic_distance(DiskPoint(0, 0), g) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(geodesic_min_abs(g) == doctest::Approx(x0).epsilon(1e-12));
    }
    CHECK(geodesic_distance(Geodesic(0.0, 1.0), Geodesic(0.0, 2.0)) == 0.0);
    CHECK_THROWS_AS(geodesic_distance(Geodesic(0.0, kPi), Geodesic(1.0, 4.0)),
                    std::invalid_argument);
}

TEST_CASE("ideal triangle inradius") {
    CHECK(ideal_triangle_inradius() == doctest::Approx(std::log(3.0) / 2.0).epsilon(1e-13));
    double direct = point_geodesic_distance(DiskPoint(0, 0), Geodesic(2 * kPi / 3, 4 * kPi / 3));
    CHECK(ideal_triangle_inradius() == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("translation along a geodesic") {
    Geodesic g(0.0, kPi);
    double t = 0.8;
    Mobius m = translation_attracting(g, t, BoundaryPoint(0.0));
    // Along the real diameter toward +1 the origin moves to tanh(t/2).
    CHECK(std::abs(m.apply(Complex(0, 0)) - Complex(std::tanh(t / 2), 0)) < 1e-14);
    CHECK(m.translation_length() == doctest::Approx(t).epsilon(1e-12));
    CHECK(m.is_hyperbolic());
    auto fixed = m.axis_fixed_points();
    CHECK(std::abs(fixed[0] - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(fixed[1] - Complex(-1, 0)) < 1e-9);
    CHECK(translation_attracting(g, 0.0, BoundaryPoint(0.0)).is_identity());
    CHECK_THROWS_AS(translation_attracting(g, 1.0, BoundaryPoint(2.0)), std::invalid_argument);
    // Orientation flip attracts the other endpoint.
    auto flipped = translation_attracting(g, t, BoundaryPoint(kPi)).axis_fixed_points();
    CHECK(std::abs(flipped[0] - Complex(-1, 0)) < 1e-9);
}

TEST_CASE("points along a geodesic") {
    Geodesic g(1.0, 2.5);
    DiskPoint a = point_on(g, -1.2), b = point_on(g, 0.7);
    CHECK(side_of(g, a) == Side::On);
    CHECK(side_of(g, b) == Side::On);
    CHECK(disk_distance(a, b) == doctest::Approx(1.9).epsilon(1e-12));
}

TEST_CASE("segment crossings and their order") {
    GeodesicSegment seg(DiskPoint(0.0, -0.6), DiskPoint(0.0, 0.6));
    Geodesic real_axis(0.0, kPi);
    Geodesic low(-0.4, kPi + 0.4);
    CHECK(segment_crosses(seg, real_axis));
    CHECK(segment_crosses(seg, low));
    CHECK(!segment_crosses(seg, Geodesic(0.3, 1.2)));
    auto t_real = crossing_parameter(seg, real_axis);
    auto t_low = crossing_parameter(seg, low);
    REQUIRE(t_real.has_value());
    REQUIRE(t_low.has_value());
    CHECK(*t_low < *t_real);  // the lower geodesic is hit first from below
    CHECK(*t_real == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("lamination construction rules") {
    CHECK_THROWS_AS(MeasuredLamination({Atom{Geodesic(0.0, kPi), 1.0},
                                        Atom{Geodesic(1.0, 4.0), 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(single_atom(0.0, kPi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(single_atom(0.0, kPi, -1.0), std::invalid_argument);
    MeasuredLamination merged({Atom{Geodesic(0.0, kPi), 0.5}, Atom{Geodesic(0.0, kPi), 0.25}});
    CHECK(merged.size() == 1);
    CHECK(merged.atoms()[0].weight == 0.75);
    MeasuredLamination empty;
    CHECK(empty.empty());
    CHECK(thurston_norm(empty).value == 0.0);
}

TEST_CASE("strata and signatures") {
    MeasuredLamination lam({Atom{Geodesic(0.0, kPi), 1.0}, Atom{Geodesic(0.5, 2.0), 0.5}});
    auto sig = lam.stratum_of(DiskPoint(0.0, -0.5));
    CHECK(sig == StratumSignature{Side::ArcQP, Side::ArcQP});
    CHECK(lam.stratum_of(DiskPoint(0.0, 0.5))[0] == Side::ArcPQ);
    CHECK(lam.stratum_of(BoundaryPoint(1.0)) == StratumSignature{Side::ArcPQ, Side::ArcPQ});
    CHECK(lam.stratum_of(BoundaryPoint(2.5)) == StratumSignature{Side::ArcPQ, Side::ArcQP});
    auto beside = stratum_beside(lam, 0, Side::ArcQP);
    CHECK(beside == StratumSignature{Side::ArcQP, Side::ArcQP});
    CHECK_THROWS_AS(stratum_beside(lam, 0, Side::On), std::invalid_argument);
    CHECK_THROWS_AS(stratum_beside(lam, 5, Side::ArcPQ), std::out_of_range);
}

TEST_CASE("signature realizability") {
    MeasuredLamination nested({Atom{Geodesic(0.0, kPi), 1.0}, Atom{Geodesic(0.5, 2.0), 0.5}});
    // Beyond atom 1 away from atom 0 forces the far side of atom 0 too.
    CHECK_THROWS_AS(require_realizable(nested, {Side::ArcQP, Side::ArcPQ}),
                    std::invalid_argument);
    require_realizable(nested, {Side::ArcPQ, Side::ArcPQ});
    require_realizable(nested, {Side::On, Side::ArcQP});
    // At a fan apex every atom reports On at once.
    MeasuredLamination fan = gen_fan(4, 0.0, 1.0);
    require_realizable(fan, fan.stratum_of(BoundaryPoint(0.0)));
    CHECK(fan.stratum_of(BoundaryPoint(0.0)) ==
          StratumSignature(4, Side::On));
    // But an interior point never sits on two disjoint atoms.
    CHECK_THROWS_AS(require_realizable(nested, {Side::On, Side::On}), std::invalid_argument);
}

TEST_CASE("arc deposit and disk mass") {
    MeasuredLamination lam({Atom{Geodesic(0.0, kPi), 1.0}, Atom{Geodesic(-0.4, kPi + 0.4), 0.5},
                            Atom{Geodesic(0.3, 1.2), 0.25}});
    GeodesicSegment vertical(DiskPoint(0.0, -0.6), DiskPoint(0.0, 0.6));
    CHECK(deposited_on_arc(lam, vertical) == 1.5);
    HyperbolicDisk small(DiskPoint(0.0, 0.0), 0.1);
    CHECK(disk_mass(lam, small) == 1.0);  // only the diameter through the center
    CHECK_THROWS_AS(HyperbolicDisk(DiskPoint(0, 0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(HyperbolicDisk(DiskPoint(0, 0), 1.0), std::invalid_argument);
}

TEST_CASE("thurston norm exact values") {
    CHECK(thurston_norm(single_atom(0.0, kPi, 0.7)).value == 0.7);
    // Two far-apart atoms never share a unit arc.
    MeasuredLamination far({Atom{Geodesic(0.1, 0.4), 0.6}, Atom{Geodesic(kPi, kPi + 0.3), 0.8}});
    CHECK(thurston_norm(far).value == 0.8);
    // Close nested pair combines; a middle atom joins in.
    MeasuredLamination pair({Atom{Geodesic(0.0, kPi), 1.0}, Atom{Geodesic(0.1, kPi - 0.1), 0.5}});
    CHECK(geodesic_distance(pair.atoms()[0].support, pair.atoms()[1].support) < 1.0);
    CHECK(thurston_norm(pair).value == 1.5);
    MeasuredLamination triple({Atom{Geodesic(0.0, kPi), 1.0},
                               Atom{Geodesic(0.05, kPi - 0.05), 0.25},
                               Atom{Geodesic(0.1, kPi - 0.1), 0.5}});
    NormResult t = thurston_norm(triple);
    CHECK(t.value == 1.75);
    CHECK(t.contributors.size() == 1);
    // Fan atoms all meet at the apex: every weight combines.
    CHECK(thurston_norm(gen_fan(5, 0.3, 0.5)).value == 2.5);
}

TEST_CASE("norm respects isometry and scaling") {
    MeasuredLamination lam = gen_random_bounded(8, 1.3, 42);
    double base = thurston_norm(lam).value;
    Mobius m = Mobius::rotation(1.1).compose(Mobius::point_to_origin(Complex(0.3, -0.2)));
    CHECK(thurston_norm(pushforward(m, lam)).value == doctest::Approx(base).epsilon(1e-12));
    CHECK(thurston_norm(scale_weights(lam, 0.5)).value == doctest::Approx(0.5 * base).epsilon(1e-14));
    CHECK_THROWS_AS(scale_weights(lam, 0.0), std::invalid_argument);
}

TEST_CASE("sampled norm stays below the exact norm") {
    MeasuredLamination lam = gen_random_bounded(10, 1.0, 3);
    NormResult exact = thurston_norm(lam);
    SampledNorm mc = thurston_norm_sampled(lam, 20000, 17);
    CHECK(mc.value <= exact.value + 1e-12);
    CHECK(mc.value > 0.0);
    SampledNorm mc2 = thurston_norm_sampled(lam, 20000, 17);
    CHECK(mc2.value == mc.value);  // deterministic in the seed
}

TEST_CASE("asymptotic profile of a single atom is its weight") {
    MeasuredLamination lam = single_atom(0.0, kPi, 0.7);
    for (double t : {0.02, 0.1, 0.4})
        CHECK(asymptotic_profile(lam, t, 400, 5) == 0.7);
    CHECK_THROWS_AS(asymptotic_profile(lam, 0.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_profile(lam, 0.1, 0, 1), std::invalid_argument);
}

TEST_CASE("disk restriction splits by reach") {
    MeasuredLamination lam({Atom{Geodesic(0.0, kPi), 1.0},      // through the origin
                            Atom{Geodesic(0.1, 0.3), 0.5}});    // hugs the boundary
    double far_reach = geodesic_min_abs(lam.atoms()[1].support);
    CHECK(far_reach > 0.9);
    auto [kept, dropped] = restrict_to_disk(lam, 0.9);
    CHECK(kept.size() == 1);
    CHECK(dropped.size() == 1);
    CHECK(kept.atoms()[0].support == Geodesic(0.0, kPi));
    CHECK_THROWS_AS(restrict_to_disk(lam, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to_disk(lam, 1.0), std::invalid_argument);
}

TEST_CASE("cocycle of a single atom is its shear") {
    MeasuredLamination lam = single_atom(0.0, kPi, 0.8);
    auto below = lam.stratum_of(DiskPoint(0.0, -0.5));
    auto above = lam.stratum_of(DiskPoint(0.0, 0.5));
    Mobius c = cocycle(lam, below, above);
    CHECK(c.is_hyperbolic());
    CHECK(c.translation_length() == doctest::Approx(0.8).epsilon(1e-12));
    // Seen from below, the counterclockwise end of the lower arc is angle 0,
    // so the upper side slides toward +1.
    auto fixed = c.axis_fixed_points();
    CHECK(std::abs(fixed[0] - Complex(1, 0)) < 1e-12);
    CHECK(cocycle(lam, below, below).is_identity());
    // Inverse direction swaps attracting and repelling.
    CHECK(std::abs(cocycle(lam, above, below).axis_fixed_points()[0] - Complex(-1, 0)) < 1e-12);
}

TEST_CASE("cocycle identity on a hand-built chain") {
    MeasuredLamination lam({Atom{Geodesic(0.0, kPi), 1.0},
                            Atom{Geodesic(-0.3, kPi + 0.3), 0.5},
                            Atom{Geodesic(0.4, 1.8), 0.25}});
    auto a = lam.stratum_of(DiskPoint(0.0, -0.8));
    auto b = lam.stratum_of(DiskPoint(0.0, 0.2));
    auto c = lam.stratum_of(DiskPoint(std::cos(1.1) * 0.95, std::sin(1.1) * 0.95));
    Mobius direct = cocycle(lam, a, c);
    Mobius chained = cocycle(lam, a, b).compose(cocycle(lam, b, c));
    CHECK(direct.distance_to(chained) < 1e-12);
}

TEST_CASE("earthquake fixes its base stratum") {
    MeasuredLamination lam = single_atom(0.0, kPi, 1.0);
    EarthquakeMap eq(EarthquakeSpec::with_base_point(lam, DiskPoint(0.0, -0.5)));
    DiskPoint base_pt(0.2, -0.3);
    CHECK(disk_distance(eq.map(base_pt), base_pt) < 1e-15);
    // The lower boundary arc is pointwise fixed; the upper arc moves toward
    // angle 0 (the left end of the lower arc seen from inside).
    CHECK(chord(eq.map_boundary(BoundaryPoint(-1.0)), BoundaryPoint(-1.0)) == 0.0);
    double moved = eq.map_boundary(BoundaryPoint(1.5)).angle();
    CHECK(moved < 1.5);
    CHECK(moved > 0.0);
    CHECK_THROWS_AS(EarthquakeSpec::with_base_point(lam, DiskPoint(0.5, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("earthquake base stratum helpers agree") {
    MeasuredLamination lam({Atom{Geodesic(0.0, kPi), 1.0}, Atom{Geodesic(0.5, 2.0), 0.5}});
    EarthquakeSpec by_atom = EarthquakeSpec::with_base_atom(lam, 0, Side::ArcQP);
    EarthquakeSpec by_point = EarthquakeSpec::with_base_point(lam, DiskPoint(0.0, -0.5));
    CHECK(by_atom.base() == by_point.base());
    EarthquakeSpec def = EarthquakeSpec::with_default_base(single_atom(0.0, kPi, 1.0));
    CHECK(def.base() == StratumSignature{Side::ArcQP});
}

TEST_CASE("boundary map is a homeomorphism snapshot") {
    MeasuredLamination lam = gen_random_bounded(6, 1.0, 9);
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
    int n = 512;
    double sum = 0.0, prev = f.apply_angle(0.0);
    bool strict = true;
    for (int i = 1; i <= n; ++i) {
        double cur = f.apply_angle(kTau * i / n);
        double diff = canonical_angle(cur - prev);
        if (diff <= 0.0 || diff >= kTau) strict = false;
        sum += diff;
        prev = cur;
    }
    CHECK(strict);
    CHECK(sum == doctest::Approx(kTau).epsilon(1e-9));  // winding number one
}

TEST_CASE("boundary map one-sided limits agree at atom endpoints") {
    MeasuredLamination lam({Atom{Geodesic(0.0, kPi), 1.0}, Atom{Geodesic(0.5, 2.0), 0.5}});
    EarthquakeMap eq(EarthquakeSpec::with_default_base(lam));
    for (const Atom& a : lam.atoms())
        for (double x : {a.support.p().angle(), a.support.q().angle()}) {
            BoundaryPoint left = eq.stratum_isometry(lam.stratum_below(x)).apply(BoundaryPoint(x));
            BoundaryPoint right = eq.stratum_isometry(lam.stratum_above(x)).apply(BoundaryPoint(x));
            CHECK(chord(left, right) < 1e-12);
            CHECK(chord(left, eq.map_boundary(BoundaryPoint(x))) < 1e-12);
        }
}

TEST_CASE("quasi-isometry defect is nonnegative and bounded") {
    MeasuredLamination lam = gen_random_bounded(5, 0.8, 21);
    EarthquakeMap eq(EarthquakeSpec::with_default_base(lam));
    double defect = quasi_isometry_defect(eq, 500, 4);
    CHECK(defect >= 0.0);
    CHECK(defect <= thurston_norm(lam).value + 1.0);
}

TEST_CASE("circle map plumbing") {
    CircleMap id = CircleMap::identity();
    CHECK(id.apply_angle(0.3) == doctest::Approx(0.3));
    CHECK(id.is_mobius());
    Mobius rot = Mobius::rotation(0.5);
    CircleMap r = CircleMap::mobius(rot);
    CHECK(r.compose(r).is_mobius());
    CHECK(r.compose(r).mobius_part().distance_to(Mobius::rotation(1.0)) < 1e-12);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 32; ++i) samples.emplace_back(kTau * i / 32, kTau * i / 32);
    CircleMap tab = CircleMap::tabulated(samples);
    CHECK(tab.apply_angle(0.4) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(boundary_sup_distance(id, id) == 0.0);
    double gap = boundary_sup_distance(id, r, 512);
    CHECK(gap == doctest::Approx(std::abs(std::exp(Complex(0, 0.5)) - 1.0)).epsilon(1e-12));
}

TEST_CASE("three-point normalization pins images") {
    MeasuredLamination lam = single_atom(0.3, 2.0, 1.0);
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
    CircleMap g = normalize_three_points(f, BoundaryPoint(0.0), BoundaryPoint(kTau / 3),
                                         BoundaryPoint(2 * kTau / 3));
    CHECK(chord(g(BoundaryPoint(0.0)), BoundaryPoint(0.0)) < 1e-12);
    CHECK(chord(g(BoundaryPoint(kTau / 3)), BoundaryPoint(kPi / 2)) < 1e-12);
    CHECK(chord(g(BoundaryPoint(2 * kTau / 3)), BoundaryPoint(kPi)) < 1e-12);
}

TEST_CASE("weak-star discrepancy exact cases") {
    MeasuredLamination a = single_atom(0.0, kPi, 1.0);
    CHECK(weak_star_discrepancy(a, a) == 0.0);
    // Same support, different weight: the tent centered on the atom sees the
    // full weight difference.
    CHECK(weak_star_discrepancy(a, single_atom(0.0, kPi, 0.4)) == doctest::Approx(0.6).epsilon(1e-12));
    // One endpoint shifted by delta < bandwidth: sup is delta / bandwidth.
    TestWindow w;
    double delta = 0.03;
    CHECK(weak_star_discrepancy(a, single_atom(0.0, kPi + delta, 1.0), w) ==
          doctest::Approx(delta / w.bandwidth).epsilon(1e-12));
    // Far beyond the bandwidth the supports decouple.
    CHECK(weak_star_discrepancy(a, single_atom(0.0, kPi + 1.0, 1.0), w) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weak_star_discrepancy(a, MeasuredLamination()) == doctest::Approx(1.0).epsilon(1e-12));
    // Atoms that stay outside the window are invisible.
    MeasuredLamination shallow = single_atom(0.1, 0.106, 1.0);
    CHECK(geodesic_min_abs(shallow.atoms()[0].support) > 0.99);
    CHECK(weak_star_discrepancy(shallow, MeasuredLamination(), w) == 0.0);
    CHECK_THROWS_AS(weak_star_discrepancy(a, a, TestWindow{0.0, 0.05}), std::invalid_argument);
    CHECK_THROWS_AS(weak_star_discrepancy(a, a, TestWindow{0.99, 0.0}), std::invalid_argument);
}

TEST_CASE("spearman rank correlation") {
    CHECK(spearman({3, 2, 1}, {1, 2, 3}) == doctest::Approx(-1.0));
    CHECK(spearman({1, 2, 3, 4}, {2, 4, 6, 8}) == doctest::Approx(1.0));
    CHECK(spearman({1, 1, 1}, {1, 2, 3}) == 0.0);
    CHECK(spearman({5, 1, 4, 2}, {5, 1, 4, 2}) == doctest::Approx(1.0));
}

TEST_CASE("convergence experiment verdicts") {
    MeasureSequence good;
    for (int i = 0; i < 10; ++i)
        good.terms.push_back(single_atom(0.0, kPi + 0.04 * std::pow(0.7, i), 1.0));
    good.limit = single_atom(0.0, kPi, 1.0);
    ConvergenceTable t = convergence_experiment(good);
    CHECK(t.pass);
    CHECK(t.joint_spearman > 0.9);
    CHECK(t.measure_trend < -0.9);
    CHECK(t.boundary_trend < -0.9);
    CHECK(t.measure_gap.size() == 10);
    CHECK(t.measure_gap.front() == doctest::Approx(0.8).epsilon(1e-12));

    MeasureSequence bad;
    for (int i = 0; i < 10; ++i) {
        double delta = (i % 2 == 0) ? 0.04 : 0.002;
        bad.terms.push_back(single_atom(0.0, kPi + delta, 1.0));
    }
    bad.limit = single_atom(0.0, kPi, 1.0);
    CHECK(!convergence_experiment(bad).pass);

    MeasureSequence tiny;
    tiny.terms.push_back(single_atom(0.0, kPi, 1.0));
    CHECK_THROWS_AS(convergence_experiment(tiny), std::invalid_argument);
}

TEST_CASE("exact limit sequences pass with zero gaps") {
    MeasureSequence seq;
    for (int i = 0; i < 5; ++i) seq.terms.push_back(single_atom(0.0, kPi, 1.0));
    seq.limit = single_atom(0.0, kPi, 1.0);
    ConvergenceTable t = convergence_experiment(seq);
    CHECK(t.pass);
    for (double g : t.measure_gap) CHECK(g == 0.0);
    for (double g : t.boundary_gap) CHECK(g < 1e-12);
}

TEST_CASE("cocycle limit defect on a constant sequence") {
    MeasureSequence seq;
    for (int i = 0; i < 8; ++i) seq.terms.push_back(single_atom(0.0, kPi, 0.9));
    seq.limit = single_atom(0.0, kPi, 0.9);
    DiskPoint z1(0.0, -0.4), z2(0.0, 0.4);
    DefectReport rep = cocycle_limit_defect(seq, z1, z2);
    CHECK(std::abs(rep.a1) < 1e-6);
    CHECK(std::abs(rep.a2) < 1e-6);
    CHECK(rep.residual < 1e-8);
    CHECK(!rep.atom_z1.has_value());
    CHECK(!rep.atom_z2.has_value());
    CHECK(rep.limit_cocycle.translation_length() == doctest::Approx(0.9).epsilon(1e-9));
}

TEST_CASE("unstable cocycles raise the no-limit error") {
    MeasureSequence seq;
    for (int i = 0; i < 12; ++i) {
        double shift = (i % 2 == 0) ? 0.0 : 0.4;
        seq.terms.push_back(single_atom(shift, kPi + shift, 5.0));
    }
    seq.limit = single_atom(0.0, kPi, 5.0);
    CHECK_THROWS_AS(cocycle_limit_defect(seq, DiskPoint(0.0, -0.6), DiskPoint(0.0, 0.6)),
                    NoLimitError);
}

TEST_CASE("lamination rescaling helpers") {
    MeasuredLamination lam = gen_random_bounded(6, 1.0, 13);
    std::array<BoundaryPoint, 4> q{BoundaryPoint(0.0), BoundaryPoint(kPi / 2), BoundaryPoint(kPi),
                                   BoundaryPoint(3 * kPi / 2)};
    MeasuredLamination moved = rescale_by_quadruple(lam, q);
    CHECK(moved.size() == lam.size());
    CHECK(thurston_norm(moved).value == doctest::Approx(thurston_norm(lam).value).epsilon(1e-10));
    MeasuredLamination disk = rescale_by_disk(lam, DiskPoint(0.3, 0.1));
    CHECK(thurston_norm(disk).value == doctest::Approx(thurston_norm(lam).value).epsilon(1e-10));
}

TEST_CASE("cross-ratio range of trivial boundary maps") {
    QsReport id_rep = qs_constant_estimate(CircleMap::identity(), 500, 2);
    CHECK(id_rep.cr_min == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(id_rep.cr_max == doctest::Approx(2.0).epsilon(1e-9));
    Mobius m = Mobius::rotation(0.8).compose(Mobius::point_to_origin(Complex(0.25, -0.4)));
    QsReport mob = qs_constant_estimate(CircleMap::mobius(m), 500, 2);
    CHECK(mob.cr_min == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(mob.cr_max == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS(qs_constant_estimate(CircleMap::identity(), 0, 1), std::invalid_argument);
}

TEST_CASE("earthquakes distort cross-ratios") {
    MeasuredLamination lam = single_atom(0.0, kPi, 1.0);
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
    QsReport rep = qs_constant_estimate(f, 4000, 6);
    CHECK(rep.cr_max > 2.0 + 1e-3);
    CHECK(rep.cr_min < 2.0 - 1e-3);
    CHECK(rep.cr_min > 0.0);
    // The witnesses reproduce their cross-ratio bounds.
    std::array<BoundaryPoint, 4> w = rep.max_witness;
    std::array<BoundaryPoint, 4> img;
    for (int i = 0; i < 4; ++i) img[i] = f(w[i]);
    CHECK(cross_ratio(img).real() == doctest::Approx(rep.cr_max).epsilon(1e-9));
}

TEST_CASE("symmetric modulus vanishes for conformal maps") {
    std::vector<double> scales{0.4, 0.1};
    SymmetryProfile id_prof = symmetric_modulus(CircleMap::identity(), scales, 300, 3);
    for (double b : id_prof.beta) CHECK(b < 1e-12);
    Mobius m = Mobius::rotation(0.3).compose(Mobius::point_to_origin(Complex(0.2, 0.3)));
    SymmetryProfile mob = symmetric_modulus(CircleMap::mobius(m), scales, 300, 3);
    for (double b : mob.beta) CHECK(b < 1e-9);
    MeasuredLamination lam = single_atom(0.0, kPi, 1.0);
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
    SymmetryProfile quake = symmetric_modulus(f, scales, 300, 3);
    for (double b : quake.beta) CHECK(b > 0.05);
    CHECK_THROWS_AS(symmetric_modulus(CircleMap::identity(), {0.7}, 10, 1), std::invalid_argument);
}

TEST_CASE("barycentric extension basics") {
    CircleMap id = CircleMap::identity();
    for (Complex z : {Complex(0.3, 0.0), Complex(-0.2, 0.55), Complex(0.0, 0.0)}) {
        ExtensionResult res = barycentric_extension(id, DiskPoint(z));
        CHECK(std::abs(res.value.value() - z) < 1e-8);
        CHECK(res.residual < 1e-8);
    }
    Mobius m = Mobius::rotation(0.6).compose(Mobius::point_to_origin(Complex(0.3, -0.1)));
    ExtensionResult mob = barycentric_extension(CircleMap::mobius(m), DiskPoint(0.25, 0.2));
    CHECK(std::abs(mob.value.value() - m.apply(Complex(0.25, 0.2))) < 1e-6);
    CHECK(std::abs(beltrami_estimate(CircleMap::mobius(m), DiskPoint(0.1, 0.4))) < 1e-3);
}

TEST_CASE("barycentric extension is conformally natural") {
    MeasuredLamination lam = single_atom(0.3, 2.4, 1.0);
    CircleMap h = EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
    Mobius A = Mobius::point_to_origin(Complex(0.2, 0.25));
    Mobius B = Mobius::rotation(1.3);
    CircleMap conj = CircleMap::mobius(B).compose(h).compose(CircleMap::mobius(A));
    for (Complex z : {Complex(0.1, 0.2), Complex(-0.35, 0.0)}) {
        Complex direct = barycentric_extension(conj, DiskPoint(z)).value.value();
        Complex inner = barycentric_extension(h, DiskPoint(A.apply(z))).value.value();
        CHECK(std::abs(direct - B.apply(inner)) < 1e-6);
    }
}

TEST_CASE("generator families") {
    MeasuredLamination fan = gen_fan(5, 0.3, 0.5);
    CHECK(fan.size() == 5);
    for (const Atom& a : fan.atoms())
        CHECK((chord(a.support.p(), BoundaryPoint(0.3)) < 1e-12 ||
               chord(a.support.q(), BoundaryPoint(0.3)) < 1e-12));
    CHECK_THROWS_AS(gen_fan(0, 0.0, 1.0), std::invalid_argument);

    MeasuredLamination dy = gen_dyadic_family(4, weight_rule_pow2());
    CHECK(dy.size() == 15);
    std::multiset<double> endpoints;
    for (const Atom& a : dy.atoms()) {
        endpoints.insert(a.support.p().angle());
        endpoints.insert(a.support.q().angle());
    }
    CHECK(std::set<double>(endpoints.begin(), endpoints.end()).size() == 30);
    CHECK(gen_dyadic_family(1, weight_rule_constant(2.0)).size() == 1);
    CHECK_THROWS_AS(gen_dyadic_family(0, weight_rule_pow2()), std::invalid_argument);
    CHECK_THROWS_AS(gen_dyadic_family(13, weight_rule_pow2()), std::invalid_argument);

    MeasuredLamination r1 = gen_random_bounded(10, 1.0, 7);
    MeasuredLamination r2 = gen_random_bounded(10, 1.0, 7);
    CHECK(r1.size() == 10);
    CHECK(thurston_norm(r1).value == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1.atoms()[i].support == r2.atoms()[i].support);
        CHECK(r1.atoms()[i].weight == r2.atoms()[i].weight);
    }
    CHECK(gen_random_bounded(10, 1.0, 8).atoms()[0].support != r1.atoms()[0].support);

    CHECK(parse_weight_rule("pow2")(3) == 0.125);
    CHECK(parse_weight_rule("inverse_square")(2) == doctest::Approx(1.0 / 9.0));
    CHECK_THROWS_AS(parse_weight_rule("cubic"), std::invalid_argument);
}

TEST_CASE("lamination files round-trip") {
    MeasuredLamination lam = gen_random_bounded(7, 1.2, 19);
    auto path = temp_file("roundtrip.txt");
    write_lamination(path, lam);
    MeasuredLamination back = read_lamination(path);
    REQUIRE(back.size() == lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        CHECK(back.atoms()[i].support == lam.atoms()[i].support);
        CHECK(back.atoms()[i].weight == lam.atoms()[i].weight);
    }
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_lamination(temp_file("missing_file.txt")), std::runtime_error);

    auto bad = temp_file("bad.txt");
    std::ofstream(bad) << "0.0 1.0\n";
    CHECK_THROWS_AS(read_lamination(bad), std::runtime_error);
    std::filesystem::remove(bad);
}

TEST_CASE("manifest parsing") {
    auto dir = std::filesystem::temp_directory_path() / "eqlab_unit_manifest";
    std::filesystem::create_directories(dir);
    write_lamination(dir / "a.txt", single_atom(0.0, kPi, 1.0));
    write_lamination(dir / "b.txt", single_atom(0.0, kPi + 0.01, 1.0));
    std::ofstream(dir / "man.txt") << "a.txt\nb.txt\nlimit: a.txt\n";
    Manifest m = read_manifest(dir / "man.txt");
    CHECK(m.terms.size() == 2);
    REQUIRE(m.limit.has_value());
    MeasureSequence seq = load_sequence(m);
    CHECK(seq.terms.size() == 2);
    CHECK(seq.limit.has_value());

    std::ofstream(dir / "twice.txt") << "a.txt\nlimit: a.txt\nlimit: b.txt\n";
    CHECK_THROWS_AS(read_manifest(dir / "twice.txt"), std::runtime_error);
    std::ofstream(dir / "empty.txt") << "# nothing\n";
    CHECK_THROWS_AS(read_manifest(dir / "empty.txt"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("csv writer enforces its header") {
    auto path = temp_file("table.csv");
    {
        CsvWriter csv(path, {"x", "y"});
        csv.row({1.0, 0.1});
        CHECK_THROWS_AS(csv.row({1.0}), std::invalid_argument);
    }
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y");
    std::getline(in, line);
    CHECK(line == "1,0.10000000000000001");
    std::filesystem::remove(path);
    double v = 0.1234567890123456789;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("svg plots are self-contained") {
    auto path = temp_file("plot.svg");
    write_svg_plot(path, "demo", "eqlab sym --in x", {{"beta", {{0.1, 1.0}, {0.2, 2.0}}}});
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string body = buf.str();
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("polyline") != std::string::npos);
    CHECK(body.find("eqlab sym --in x") != std::string::npos);
    CHECK(body.find("</svg>") != std::string::npos);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(write_svg_plot(path, "t", "c", {{"s", {{0.1, -1.0}}}}, true),
                    std::invalid_argument);
}
