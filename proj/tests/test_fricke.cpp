#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "jsrforge/fricke.hpp"
#include "jsrforge/mat2.hpp"
#include "jsrforge/reference_data.hpp"
#include "jsrforge/rng.hpp"
#include "jsrforge/word.hpp"

using namespace jsrforge;

namespace {

Mat2 random_mat(CounterRng& rng, double range = 2.0) {
    return Mat2{rng.uniform(-range, range), rng.uniform(-range, range),
                rng.uniform(-range, range), rng.uniform(-range, range)};
}

Word random_word(CounterRng& rng, std::size_t max_len) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng.next_u64() % max_len);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += (rng.next_u64() & 1) ? 'b' : 'a';
    return Word(std::move(s));
}

/// The example pair rescaled so its leading chiral products have spectral
/// radius exactly one.
std::pair<Mat2, Mat2> rescaled_example() {
    const Mat2 A0 = example_pair_A(), B0 = example_pair_B();
    const double rho = spectral_radius(evaluate_word(parse_word("a2bab2"), A0, B0));
    const double s = std::pow(rho, 1.0 / 6.0);
    return {(1.0 / s) * A0, (1.0 / s) * B0};
}

}  // namespace

TEST_CASE("trace polynomials of short words") {
    CHECK(fricke_polynomial(Word("a")) == Poly5::variable(0));
    CHECK(fricke_polynomial(Word("b")) == Poly5::variable(1));
    CHECK(fricke_polynomial(Word("ab")) == Poly5::variable(2));
    CHECK(fricke_polynomial(Word("ba")) == Poly5::variable(2));
    CHECK(fricke_polynomial(Word("aa")).to_string() == "x^2 - 2*u");
    CHECK(reduced_fricke(Word("aa")).to_string() == "x^2 - 2");
    CHECK(reduced_fricke(Word("ab")).to_string() == "z");
}

TEST_CASE("the shortest chiral pair shares one trace polynomial") {
    const Poly5 diff = fricke_polynomial(Word("aababb")) - fricke_polynomial(Word("bbabaa"));
    CHECK(diff.is_zero());
}

TEST_CASE("linear representation reproduces the matrix product") {
    CounterRng rng(11, 0);
    for (int i = 0; i < 200; ++i) {
        const Mat2 A = random_mat(rng), B = random_mat(rng);
        const Word w = random_word(rng, 9);
        const Tuple5 t = invariants_of_pair(A, B);
        const LinearRep rep = linear_rep(w);
        const auto pt = t.as_array();
        const Mat2 combo = rep.c0.eval(pt) * Mat2::identity() + rep.c1.eval(pt) * A +
                           rep.c2.eval(pt) * B + rep.c3.eval(pt) * (A * B);
        const Mat2 direct = evaluate_word(w, A, B);
        const double scale = 1.0 + std::abs(direct.a11) + std::abs(direct.a12) +
                             std::abs(direct.a21) + std::abs(direct.a22);
        CHECK(std::abs(combo.a11 - direct.a11) <= 1e-9 * scale);
        CHECK(std::abs(combo.a12 - direct.a12) <= 1e-9 * scale);
        CHECK(std::abs(combo.a21 - direct.a21) <= 1e-9 * scale);
        CHECK(std::abs(combo.a22 - direct.a22) <= 1e-9 * scale);
    }
}

TEST_CASE("trace polynomial is invariant under rotation and mirror") {
    CounterRng rng(12, 0);
    for (int i = 0; i < 120; ++i) {
        const Word w = random_word(rng, 8);
        const Poly5 p = fricke_polynomial(w);
        CHECK(fricke_polynomial(mirror(w)) == p);
        for (const Word& r : cyclic_rotations(w)) CHECK(fricke_polynomial(r) == p);
    }
}

TEST_CASE("weighted homogeneity") {
    CounterRng rng(13, 0);
    for (int i = 0; i < 120; ++i) {
        const Word w = random_word(rng, 10);
        const Poly5 p = fricke_polynomial(w);
        const auto da = p.weighted_degree({1, 0, 1, 2, 0});
        const auto db = p.weighted_degree({0, 1, 1, 0, 2});
        REQUIRE(da.has_value());
        REQUIRE(db.has_value());
        CHECK(*da == static_cast<int>(w.count_a()));
        CHECK(*db == static_cast<int>(w.count_b()));
    }
}

TEST_CASE("2-isospectrality") {
    CHECK(is_2_isospectral(Word("aababb"), Word("bbabaa")));
    CHECK(is_2_isospectral(Word("ababbaabbaba"), Word("babaabbaabab")));
    CHECK_FALSE(is_2_isospectral(Word("aab"), Word("abb")));
    CHECK_FALSE(is_2_isospectral(Word("a"), Word("b")));
}

TEST_CASE("substitution preserves 2-isospectrality") {
    CounterRng rng(14, 0);
    const Word w1("aababb"), w2("bbabaa");
    for (int i = 0; i < 40; ++i) {
        const Word p = random_word(rng, 3), q = random_word(rng, 3);
        CHECK(is_2_isospectral(substitute(w1, p, q), substitute(w2, p, q)));
    }
}

TEST_CASE("trace evaluation against direct products") {
    CHECK(eval_trace(Word("a"), Tuple5{3, 0, 0, 0, 0}) == 3.0);
    CHECK(eval_trace(Word("aa"), Tuple5{3, 0, 0, 2, 1}) == 5.0);

    CounterRng rng(15, 0);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 A = random_mat(rng), B = random_mat(rng);
        const Word w = random_word(rng, 10);
        const double via_poly = eval_trace(w, invariants_of_pair(A, B));
        const double direct = evaluate_word(w, A, B).trace();
        CHECK(std::abs(via_poly - direct) <= 1e-8 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("trace evaluation on the example pair") {
    auto [A, B] = rescaled_example();
    const Tuple5 t = invariants_of_pair(A, B);
    const Word w("aababb");
    const double via_poly = eval_trace(w, t);
    const double direct = evaluate_word(w, A, B).trace();
    CHECK(std::abs(via_poly - direct) <= 1e-9 * (1.0 + std::abs(direct)));
}

TEST_CASE("product spectrum from a tuple") {
    const SpectrumEval one = eval_product_spectrum(Word("a"), Tuple5{2, 0, 0, 1, 0});
    CHECK(one.rho == Catch::Approx(1.0));

    auto [A, B] = rescaled_example();
    const Tuple5 t = invariants_of_pair(A, B);
    CHECK(eval_product_spectrum(Word("aababb"), t).normalized == Catch::Approx(1.0).margin(1e-6));
    // The closest competitor of the example pair.
    CHECK(eval_product_spectrum(parse_word("a3ba2b"), t).normalized ==
          Catch::Approx(0.99936).margin(1e-4));

    // Zero determinants degrade gracefully: rho = |trace|.
    const SpectrumEval z = eval_product_spectrum(Word("ab"), Tuple5{3, 4, 5, 0, 0});
    CHECK(z.rho == Catch::Approx(5.0));
}

TEST_CASE("isospectral dedup") {
    CHECK(dedup_isospectral({Word("aababb"), Word("bbabaa")}).size() == 1);
    CHECK(dedup_isospectral({Word("a"), Word("b")}).size() == 2);
    CHECK(dedup_isospectral(lyndon_words(14)).size() == 1549);
}
