#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "jsrforge/certify.hpp"
#include "jsrforge/polygon.hpp"
#include "jsrforge/reference_data.hpp"
#include "jsrforge/rng.hpp"

using namespace jsrforge;

namespace {

SymmetricPolygon unit_square() {
    return SymmetricPolygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
}

Certificate example_certificate() {
    static const Certificate cert =
        certify(example_pair_A(), example_pair_B(), example_smp_candidates());
    return cert;
}

CMat2 perturbed(const Mat2& m, CounterRng& rng, double magnitude) {
    auto delta = [&]() {
        const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double r = magnitude * std::sqrt(rng.next_unit());
        return std::complex<double>(r * std::cos(th), r * std::sin(th));
    };
    CMat2 c = CMat2::from_real(m);
    c.a11 += delta();
    c.a12 += delta();
    c.a21 += delta();
    c.a22 += delta();
    return c;
}

/// Rescales a complex pair so the leading chiral product has spectral
/// radius one.
std::pair<CMat2, CMat2> rescale_complex(CMat2 A, CMat2 B) {
    const double rho = spectral_radius(evaluate_word(parse_word("a2bab2"), A, B));
    const std::complex<double> inv = 1.0 / std::pow(rho, 1.0 / 6.0);
    return {inv * A, inv * B};
}

}  // namespace

TEST_CASE("convexity checks") {
    const ConvexityReport sq = check_convex_position(unit_square());
    CHECK(sq.ok);
    CHECK(sq.max_interior_angle_deg == Catch::Approx(90.0));

    // Edge midpoint inserted: collinear triple.
    const ConvexityReport bad = check_convex_position(
        std::vector<Vec2>{{1, -1}, {1, 0}, {1, 1}, {-1, 1}, {-1, -1}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.max_interior_angle_deg == 180.0);
}

TEST_CASE("polygon gauge and distances") {
    const SymmetricPolygon sq = unit_square();
    CHECK(sq.gauge(Vec2{0, 0}) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sq.gauge(Vec2{1, 1}) == Catch::Approx(1.0));
    CHECK(sq.gauge(Vec2{2, 0}) == Catch::Approx(2.0));
    CHECK(sq.signed_boundary_distance(Vec2{0, 0}) == Catch::Approx(1.0));
    CHECK(sq.signed_boundary_distance(Vec2{2, 0}) == Catch::Approx(-1.0));
    const SymmetricPolygon polar = sq.polar();  // the cross polytope
    CHECK(polar.gauge(Vec2{0.5, 0.5}) == Catch::Approx(1.0));
    CHECK(polar.support(Vec2{1, 0}) == Catch::Approx(1.0));
}

TEST_CASE("polytope norm") {
    const SymmetricPolygon sq = unit_square();
    CHECK(polytope_norm(sq, Mat2::identity()) == Catch::Approx(1.0));
    CHECK(polytope_norm(sq, Mat2{3, 0, 0, 1}) == Catch::Approx(3.0));
    CHECK_THROWS_AS(polytope_norm(SymmetricPolygon{}, Mat2::identity()), std::invalid_argument);
}

TEST_CASE("image check on simple polygons") {
    const SymmetricPolygon sq = unit_square();
    const std::vector<Vec2> reps{{1, -1}, {1, 1}};
    const double c = std::cos(std::numbers::pi / 4) / 2.0;
    const Mat2 rot_half{c, -c, c, c};  // rotation by 45 degrees, scaled by 1/2
    VertexGraph empty;
    empty.nodes = 2;
    const ImageCheck ok = check_images(sq, rot_half, rot_half, empty, reps);
    CHECK(ok.ok);
    CHECK(ok.min_margin > 0.0);

    const Mat2 expand{2, 0, 0, 1};
    const ImageCheck bad = check_images(sq, expand, rot_half, empty, reps);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("uniqueness check on synthetic graphs") {
    // One declared 3-cycle: a applied three times.
    VertexGraph g;
    g.nodes = 4;
    g.edges = {{0, 'a', 1, 1}, {1, 'a', 1, 2}, {2, 'a', -1, 0}, {2, 'b', 1, 3}};
    CHECK(uniqueness_check(g, {Word("aaa")}));
    CHECK_FALSE(uniqueness_check(g, {Word("aab")}));
    // A node on two cycles: branching recurrence.
    VertexGraph h;
    h.nodes = 2;
    h.edges = {{0, 'a', 1, 0}, {0, 'b', 1, 1}, {1, 'a', 1, 0}};
    CHECK_FALSE(uniqueness_check(h, {Word("a")}));
    CHECK_FALSE(uniqueness_check(h, {Word("a"), Word("ab")}));
}

TEST_CASE("certification of the example pair") {
    const Certificate cert = example_certificate();
    REQUIRE(cert.verdict == Verdict::certified_unique_pair);
    CHECK(cert.polygon.size() == 32);
    CHECK(cert.reps.size() == 16);
    CHECK(cert.min_interior_margin == Catch::Approx(7.6e-4).epsilon(0.30));
    CHECK(cert.max_interior_angle_deg == Catch::Approx(175.8).margin(0.5));
    CHECK(cert.balancing_ratio() == Catch::Approx(0.885).margin(0.01));
    CHECK(cert.jsr == Catch::Approx(1.0).margin(1e-4));

    // Rescaled leading product has spectral radius one.
    const double rho = spectral_radius(evaluate_word(parse_word("a2bab2"), cert.A, cert.B));
    CHECK(rho == Catch::Approx(1.0).margin(1e-9));

    // The sign-quotient graph recurs on exactly two 6-cycles.
    const auto cycles = detail::recurrent_cycles(cert.graph);
    REQUIRE(cycles.has_value());
    REQUIRE(cycles->size() == 2);
    CHECK((*cycles)[0].size() == 6);
    CHECK((*cycles)[1].size() == 6);
    CHECK(cert.graph.edges.size() == 16);  // 12 cycle edges + 4 side-chain edges
}

TEST_CASE("invariance of the example polygon") {
    const Certificate cert = example_certificate();
    REQUIRE(cert.certified());
    for (const Vec2& v : cert.polygon.vertices()) {
        CHECK(cert.polygon.gauge(cert.A * v) <= 1.0 + 1e-7);
        CHECK(cert.polygon.gauge(cert.B * v) <= 1.0 + 1e-7);
    }
    CHECK(polytope_norm(cert.polygon, cert.A) <= 1.0 + 1e-7);
    CHECK(polytope_norm(cert.polygon, cert.B) <= 1.0 + 1e-7);

    const ImageCheck images = check_images(cert.polygon, cert.A, cert.B, cert.graph, cert.reps);
    CHECK(images.ok);
    CHECK(images.min_margin == Catch::Approx(7.6e-4).epsilon(0.30));
}

TEST_CASE("products off the chiral pair stay strictly below one") {
    const Certificate cert = example_certificate();
    REQUIRE(cert.certified());
    const std::string c1 = canonical_rotation(cert.smp_words[0]).str();
    const std::string c2 = canonical_rotation(cert.smp_words[1]).str();
    for (const Word& w : lyndon_words(8)) {
        const std::string c = canonical_rotation(w).str();
        if (c == c1 || c == c2) continue;
        const double nrho = std::pow(spectral_radius(evaluate_word(w, cert.A, cert.B)),
                                     1.0 / static_cast<double>(w.length()));
        CHECK(nrho < 1.0 - 1e-5);
    }
}

TEST_CASE("balancing search finds the documented ratio") {
    const Certificate cert = example_certificate();
    REQUIRE(cert.certified());
    const auto ratios = balancing_search(cert.A, cert.B, cert.smp_words);
    REQUIRE(ratios.size() == 2);
    CHECK(ratios[0] == 1.0);
    CHECK(ratios[1] == Catch::Approx(0.885).margin(0.01));
    CHECK(balancing_search(cert.A, cert.B, {cert.smp_words[0]}) == std::vector<double>{1.0});
}

TEST_CASE("balancing is symmetric for a letter-swapped pair") {
    // B = A conjugated by the swap symmetry: certifying (A, A^t) with a
    // palindromic-pair structure is overkill; instead check a pair invariant
    // under exchanging the generators directly.
    const Certificate cert = example_certificate();
    REQUIRE(cert.certified());
    // Exchanging the roles of the candidates must flip the ratio to ~1/r.
    std::vector<Word> swapped{cert.smp_words[1], cert.smp_words[0]};
    const auto ratios = balancing_search(cert.A, cert.B, swapped);
    REQUIRE(ratios.size() == 2);
    CHECK(ratios[1] == Catch::Approx(1.0 / 0.885).margin(0.02));
}

TEST_CASE("barabanov residual of the polar gauge") {
    // Isometry case: rotation by one facet angle of a regular 64-gon.
    std::vector<Vec2> disk;
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 64;
        disk.push_back(Vec2{std::cos(th), std::sin(th)});
    }
    const SymmetricPolygon poly(disk);
    const double step = 2.0 * std::numbers::pi / 64;
    const Mat2 rot{std::cos(step), -std::sin(step), std::sin(step), std::cos(step)};
    CHECK(barabanov_polar_check(poly, rot, rot, 257) <= 1e-12);

    const Certificate cert = example_certificate();
    REQUIRE(cert.certified());
    CHECK(barabanov_polar_check(cert.polygon, cert.A, cert.B, 1000) <= 1e-6);

    // The polar gauge equals the support function of the polygon.
    const SymmetricPolygon polar = cert.polygon.polar();
    CounterRng rng(31, 0);
    for (int i = 0; i < 100; ++i) {
        const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Vec2 d{std::cos(th), std::sin(th)};
        CHECK(polar.gauge(d) == Catch::Approx(cert.polygon.support(d)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(barabanov_polar_check(cert.polygon, cert.A, cert.B, 0),
                    std::invalid_argument);
}

TEST_CASE("nearby balancing ratios give non-homothetic polars with small residual") {
    const Certificate cert = example_certificate();
    REQUIRE(cert.certified());
    SymmetricPolygon polys[2];
    int i = 0;
    for (double r : {0.875, 0.895}) {
        const PolytopeBuild b = build_polytope(cert.A, cert.B, cert.smp_words, {1.0, r});
        REQUIRE(b.ok);
        CHECK(barabanov_polar_check(b.polygon, cert.A, cert.B, 500) <= 1e-6);
        polys[i++] = b.polygon;
    }
    const double s = polys[0].support(Vec2{1, 0}) / polys[1].support(Vec2{1, 0});
    bool homothetic = true;
    for (int k = 0; k < 64; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 64;
        const Vec2 d{std::cos(th), std::sin(th)};
        if (std::abs(polys[0].support(d) - s * polys[1].support(d)) > 1e-6) homothetic = false;
    }
    CHECK_FALSE(homothetic);
}

TEST_CASE("perturbing the pair moves the maximizing product") {
    Mat2 B = example_pair_B();
    B.a21 += 0.005;
    const Certificate chiral = certify(example_pair_A(), B, example_smp_candidates());
    CHECK(chiral.verdict == Verdict::failed);
    const Certificate runner = certify(example_pair_A(), B, {example_runner_up()});
    CHECK(runner.verdict == Verdict::certified);
    CHECK(runner.smp_words.size() == 1);
}

TEST_CASE("certification is stable under small perturbations") {
    CounterRng rng(32, 0);
    for (int trial = 0; trial < 3; ++trial) {
        Mat2 A = example_pair_A(), B = example_pair_B();
        A.a11 += rng.uniform(-1e-6, 1e-6);
        A.a12 += rng.uniform(-1e-6, 1e-6);
        A.a21 += rng.uniform(-1e-6, 1e-6);
        A.a22 += rng.uniform(-1e-6, 1e-6);
        B.a11 += rng.uniform(-1e-6, 1e-6);
        B.a12 += rng.uniform(-1e-6, 1e-6);
        B.a21 += rng.uniform(-1e-6, 1e-6);
        B.a22 += rng.uniform(-1e-6, 1e-6);
        const Certificate cert = certify(A, B, example_smp_candidates());
        CHECK(cert.verdict == Verdict::certified_unique_pair);
        CHECK(cert.smp_words.size() == 2);
    }
}

TEST_CASE("degenerate and non-dominating inputs fail gracefully") {
    // Equal diagonal contraction: rescaling gives the identity, which has no
    // simple leading eigenvector.
    const Mat2 H{0.5, 0, 0, 0.5};
    const Certificate c1 = certify(H, H, {Word("a")});
    CHECK(c1.verdict == Verdict::failed);

    // Segment polygon: all images land on the seed line.
    const Mat2 D{1.0, 0, 0, 0.5};
    const Certificate c2 = certify(D, D, {Word("a")});
    CHECK(c2.verdict == Verdict::failed);

    // Candidate 'ab' is dominated by 'a' alone; brute force confirms the
    // domination is non-strict before asserting certification fails.
    const Mat2 P{2, 0, 0, 1}, Q{1, 0, 0, 2};
    double best_single = 0.0, ab_norm = 0.0;
    for (const Word& w : lyndon_words(4)) {
        const double nrho = std::pow(spectral_radius(evaluate_word(w, P, Q)),
                                     1.0 / static_cast<double>(w.length()));
        if (w.str() == "ab") ab_norm = nrho;
        best_single = std::max(best_single, nrho);
    }
    REQUIRE(best_single > ab_norm + 1e-9);
    const Certificate c3 = certify(P, Q, {Word("ab")});
    CHECK(c3.verdict == Verdict::failed);

    // Non-primitive candidates are rejected up front.
    const Certificate c4 = certify(P, Q, {Word("abab")});
    CHECK(c4.verdict == Verdict::failed);
    const Certificate c5 = certify(P, Q, {});
    CHECK(c5.verdict == Verdict::failed);
}

TEST_CASE("complex certification") {
    const Certificate cert = example_certificate();
    REQUIRE(cert.verdict == Verdict::certified_unique_pair);

    // Zero perturbation reduces to the real case.
    {
        auto [A, B] = rescale_complex(CMat2::from_real(example_pair_A()),
                                      CMat2::from_real(example_pair_B()));
        CHECK(certify_complex(A, B, cert));
    }
    // Small complex perturbations stay certified.
    CounterRng rng(33, 0);
    for (int i = 0; i < 20; ++i) {
        auto [A, B] = rescale_complex(perturbed(example_pair_A(), rng, 1e-6),
                                      perturbed(example_pair_B(), rng, 1e-6));
        CHECK(certify_complex(A, B, cert));
    }
    // Large perturbations are rejected, not thrown.
    for (int i = 0; i < 20; ++i) {
        auto [A, B] = rescale_complex(perturbed(example_pair_A(), rng, 1e-1),
                                      perturbed(example_pair_B(), rng, 1e-1));
        CHECK_FALSE(certify_complex(A, B, cert));
    }
    CHECK_THROWS_AS(certify_complex(CMat2::from_real(example_pair_A()),
                                    CMat2::from_real(example_pair_B()), Certificate{}),
                    std::invalid_argument);
}
