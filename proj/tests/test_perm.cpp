#include "unimap/perm.hpp"

#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

using namespace unimap;

namespace {

// The torus map used as the running example: 8 trivalent vertices, 12 edges.
const char* kTorusX = "(0 1 2)(3 4 5)(6 7 8)(9 10 11)(12 13 14)(15 16 17)(18 19 20)(21 22 23)";
const char* kTorusY = "(0 10)(1 17)(2 3)(4 6)(5 13)(7 23)(8 9)(11 19)(12 22)(14 15)(16 18)(20 21)";

Perm random_perm(std::mt19937_64& rng, int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Perm::from_images(std::move(images));
}

Perm random_free_involution(std::mt19937_64& rng, int k) {
    std::vector<int> darts(static_cast<std::size_t>(2 * k));
    std::iota(darts.begin(), darts.end(), 0);
    std::shuffle(darts.begin(), darts.end(), rng);
    std::vector<int> images(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        images[static_cast<std::size_t>(darts[2 * i])] = darts[2 * i + 1];
        images[static_cast<std::size_t>(darts[2 * i + 1])] = darts[2 * i];
    }
    return Perm::from_images(std::move(images));
}

} // namespace

TEST_CASE("parse_cycles reads disjoint cycle notation") {
    CHECK(parse_cycles("(0 1 2)(3 4 5)", 6).images() == std::vector<int>{1, 2, 0, 4, 5, 3});
    CHECK(parse_cycles("", 4) == Perm(4));
    CHECK(parse_cycles("()", 4) == Perm(4));
    CHECK(parse_cycles("(0 3)(1 4)(2 5)", 6).images() == std::vector<int>{3, 4, 5, 0, 1, 2});
    CHECK(parse_cycles("  ( 0  3 ) ( 1 4 )(2 5) ", 6).images() ==
          std::vector<int>{3, 4, 5, 0, 1, 2});
    // unnamed darts are fixed points
    CHECK(parse_cycles("(1 3)", 5).images() == std::vector<int>{0, 3, 2, 1, 4});
}

TEST_CASE("parse_cycles rejects malformed input with token and position") {
    CHECK_THROWS_MATCHES(parse_cycles("(0 1)(1 2)", 4), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("repeated symbol 1") &&
                             Catch::Matchers::ContainsSubstring("position 6")));
    CHECK_THROWS_MATCHES(parse_cycles("(0 7)", 6), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("symbol 7 >= degree 6")));
    CHECK_THROWS_MATCHES(parse_cycles("(0 1", 4), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unterminated")));
    CHECK_THROWS_MATCHES(parse_cycles("0 1)", 4), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("expected '('")));
    CHECK_THROWS_MATCHES(parse_cycles("(0, 1)", 4), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("','")));
}

TEST_CASE("compose applies the right factor first") {
    const Perm x = parse_cycles(kTorusX, 24);
    const Perm y = parse_cycles(kTorusY, 24);
    const Perm face = compose(y, inverse(x));
    CHECK(face(0) == 3); // first step of the face circuit (0 3 13 22 20 11)

    const Perm four = standard_cycle(4);
    CHECK(compose(four, four).images() == std::vector<int>{2, 3, 0, 1});
    CHECK(compose(four, inverse(four)) == Perm(4));

    CHECK_THROWS_AS(compose(Perm(3), Perm(4)), std::invalid_argument);
}

TEST_CASE("inverse, power and conjugate obey group identities") {
    const Perm g = parse_cycles("(0 2 4)(1 5)", 6);
    CHECK(conjugate(g, Perm(6)) == g);
    CHECK(power(standard_cycle(6), 6) == Perm(6));
    CHECK(power(standard_cycle(6), -1) == inverse(standard_cycle(6)));
    CHECK(power(g, 0) == Perm(6));

    // Conjugating (0 1)(2 3)(4 5) by x^2 returns it: x^2 generates its Aut.
    const Perm x = standard_cycle(6);
    const Perm y = parse_cycles("(0 1)(2 3)(4 5)", 6);
    CHECK(conjugate(y, power(x, 2)) == y);
    CHECK(conjugate(y, x) != y);
}

TEST_CASE("cycle decomposition is canonical") {
    CHECK(cycle_type(Perm(4)) == std::vector<int>{1, 1, 1, 1});
    CHECK(to_cycle_string(Perm(4)) == "()");

    // y = (1 2)(3 4)(5 0): yx^-1 fixes 0, 2, 4 and cycles 1 -> 5 -> 3.
    const Perm x = standard_cycle(6);
    const Perm y = parse_cycles("(1 2)(3 4)(5 0)", 6);
    const Perm face = compose(y, inverse(x));
    CHECK(cycle_type(face) == std::vector<int>{1, 1, 1, 3});
    CHECK(format_cycles(cycle_decomposition(face), true) == "(0)(1 5 3)(2)(4)");

    // Torus example: four hexagonal faces.
    const Perm face24 =
        compose(parse_cycles(kTorusY, 24), inverse(parse_cycles(kTorusX, 24)));
    CHECK(cycle_type(face24) == std::vector<int>{6, 6, 6, 6});
}

TEST_CASE("is_free_involution") {
    CHECK(is_free_involution(parse_cycles("(0 3)(1 4)(2 5)", 6)));
    CHECK_FALSE(is_free_involution(Perm(4)));
    CHECK_FALSE(is_free_involution(parse_cycles("(0 1)(2 3)", 5))); // dart 4 fixed
    CHECK_FALSE(is_free_involution(parse_cycles("(0 1 2)", 3)));
}

TEST_CASE("standard_cycle") {
    CHECK(to_cycle_string(standard_cycle(6)) == "(0 1 2 3 4 5)");
    CHECK(to_cycle_string(standard_cycle(2)) == "(0 1)");
    CHECK(power(standard_cycle(24), 3)(0) == 3);
    CHECK_THROWS_AS(standard_cycle(5), std::invalid_argument);
    CHECK_THROWS_AS(standard_cycle(0), std::invalid_argument);
}

TEST_CASE("property: cycle notation round-trips") {
    std::mt19937_64 rng(20230811);
    for (int trial = 0; trial < 200; ++trial) {
        const int degree = 1 + static_cast<int>(rng() % 16);
        const Perm p = random_perm(rng, degree);
        CHECK(parse_cycles(to_cycle_string(p), degree) == p);
    }
}

TEST_CASE("property: group axioms on random triples") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 100; ++trial) {
        const int degree = 1 + static_cast<int>(rng() % 12);
        const Perm a = random_perm(rng, degree);
        const Perm b = random_perm(rng, degree);
        const Perm c = random_perm(rng, degree);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, inverse(a)) == Perm(degree));
        CHECK(compose(inverse(a), a) == Perm(degree));
        CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
    }
}

TEST_CASE("property: free involutions have cycle type 2^k") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 8);
        const Perm y = random_free_involution(rng, k);
        REQUIRE(is_free_involution(y));
        CHECK(cycle_type(y) == std::vector<int>(static_cast<std::size_t>(k), 2));
    }
}
