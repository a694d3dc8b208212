#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "jsrforge/io_json.hpp"
#include "jsrforge/poly5.hpp"
#include "jsrforge/reference_data.hpp"

using namespace jsrforge;

TEST_CASE("matrix and tuple json round trips") {
    const Mat2 m{1.25, -2.5, 3.75, -4.125};
    const Mat2 back = mat2_from_json(to_json(m));
    CHECK(back.a11 == m.a11);
    CHECK(back.a12 == m.a12);
    CHECK(back.a21 == m.a21);
    CHECK(back.a22 == m.a22);
    CHECK_THROWS_AS(mat2_from_json(json::array({1, 2, 3})), std::invalid_argument);

    const Tuple5 t{0.5, -1.5, 2.5, -3.5, 4.5};
    const Tuple5 tback = tuple5_from_json(to_json(t));
    CHECK(tback.x == t.x);
    CHECK(tback.v == t.v);

    const MatrixPair p{m, Mat2::identity()};
    const MatrixPair pback = pair_from_json(to_json(p));
    CHECK(pback.B.a11 == 1.0);
    CHECK(pback.A.a21 == m.a21);
}

TEST_CASE("edge labels") {
    const GraphEdge e{3, 'b', -1, 7};
    CHECK(edge_label(e) == "-B");
    const GraphEdge back = edge_from_label(3, "-B", 7);
    CHECK(back == e);
    CHECK(edge_from_label(0, "+A", 1).gen == 'a');
    CHECK_THROWS_AS(edge_from_label(0, "A", 1), std::invalid_argument);
}

TEST_CASE("certificate json round trip") {
    const Certificate cert = certify(example_pair_A(), example_pair_B(), example_smp_candidates());
    REQUIRE(cert.verdict == Verdict::certified_unique_pair);
    const json j = to_json(cert);
    const Certificate back = certificate_from_json(j);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.polygon.size() == cert.polygon.size());
    CHECK(back.reps.size() == cert.reps.size());
    CHECK(back.graph.edges.size() == cert.graph.edges.size());
    CHECK(back.min_interior_margin == cert.min_interior_margin);
    CHECK(back.max_interior_angle_deg == cert.max_interior_angle_deg);
    CHECK(back.ratios == cert.ratios);
    CHECK(to_json(back) == j);

    // The round-tripped certificate still powers the complex check.
    const double rho =
        spectral_radius(evaluate_word(parse_word("a2bab2"), example_pair_A(), example_pair_B()));
    const std::complex<double> inv = 1.0 / std::pow(rho, 1.0 / 6.0);
    const CMat2 A = inv * CMat2::from_real(example_pair_A());
    const CMat2 B = inv * CMat2::from_real(example_pair_B());
    CHECK(certify_complex(A, B, back));
}

TEST_CASE("failed certificates serialize their reason") {
    const Certificate cert = certify(Mat2{0.5, 0, 0, 0.5}, Mat2{0.5, 0, 0, 0.5}, {Word("a")});
    REQUIRE(cert.verdict == Verdict::failed);
    const json j = to_json(cert);
    CHECK(j.at("verdict").get<std::string>() == "failed");
    CHECK(!j.at("reason").get<std::string>().empty());
    const Certificate back = certificate_from_json(j);
    CHECK(back.verdict == Verdict::failed);
    CHECK(back.reason == cert.reason);
}

TEST_CASE("polynomial text form") {
    CHECK(Poly5().to_string() == "0");
    CHECK(Poly5(7).to_string() == "7");
    CHECK((-Poly5(3)).to_string() == "-3");
    CHECK((Poly5::variable(0) * Poly5::variable(2) - Poly5::variable(1) * Poly5::variable(3))
              .to_string() == "x*z - y*u");
}
