#include "unimap/riemann.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unimap;

TEST_CASE("signature basics") {
    const Signature klein(0, {7, 7, 7});
    CHECK(klein == Signature(0, {7, 7, 7}));
    CHECK(Signature(0, {12, 4, 3}) == Signature(0, {3, 12, 4})); // period order irrelevant
    CHECK(klein.str() == "(0; 7, 7, 7)");
    CHECK(Signature(1, {}).str() == "(1; -)");
    CHECK_THROWS_AS(Signature(0, {1, 2}), std::invalid_argument);
}

TEST_CASE("mu values") {
    CHECK(mu(Signature(0, {7, 7, 7})) == Rational(4, 7));
    CHECK(mu(Signature(1, {})) == 0);
    CHECK(mu(Signature(0, {2, 3, 7})) == Rational(1, 42));
    CHECK(mu(Signature(0, {7, 7, 7})) / mu(Signature(0, {2, 3, 7})) == 24);
    CHECK(mu(Signature(0, {2, 2})) == -1); // spherical
}

TEST_CASE("Riemann-Hurwitz genus") {
    CHECK(rh_genus(168, Signature(0, {2, 3, 7})) == 3);
    CHECK(rh_genus(7, Signature(0, {7, 7, 7})) == 3);
    CHECK(rh_genus(10, Signature(0, {10, 5, 2})) == 2); // Wiman I at g = 2
    CHECK(rh_genus(4, Signature(0, {4, 4, 2})) == 1);   // euclidean
    CHECK(rh_genus(2, Signature(0, {2, 2})) == 0);      // sphere
    CHECK_THROWS_AS(rh_genus(5, Signature(0, {2, 3, 7})), std::domain_error);
    CHECK_THROWS_AS(rh_genus(6, Signature(0, {2, 2})), std::domain_error); // 2g-2 = -6
}

TEST_CASE("normal form vectors") {
    const GenVector klein = normal_form_vector(7, 2);
    CHECK(klein.b == 2);
    CHECK(klein.c == 4);
    CHECK_FALSE(klein.degenerate);
    CHECK(vector_signature(klein) == Signature(0, {7, 7, 7}));
    CHECK(klein.str() == "<1, 2, 4> mod 7");

    const GenVector wiman3 = normal_form_vector(12, 3);
    CHECK(wiman3.c == 8);
    CHECK(vector_signature(wiman3) == Signature(0, {12, 4, 3}));

    // Pins the mod-n reduction: b = 8 gives c = 1, signature (0; 10, 5, 10).
    const GenVector v10 = normal_form_vector(10, 8);
    CHECK(v10.b == 8);
    CHECK(v10.c == 1);
    CHECK_FALSE(v10.degenerate);
    CHECK(vector_signature(v10) == Signature(0, {10, 5, 10}));

    const GenVector degenerate = normal_form_vector(5, 0);
    CHECK(degenerate.degenerate);
    CHECK(vector_signature(degenerate) == Signature(0, {5, 5}));
    const GenVector degenerate2 = normal_form_vector(5, 4); // c = 0
    CHECK(degenerate2.degenerate);
    CHECK(vector_signature(degenerate2) == Signature(0, {5, 5}));

    // (1 + b + c) = 0 mod n always.
    for (long long n = 2; n <= 40; ++n)
        for (long long b = 0; b < n; ++b)
            CHECK((1 + normal_form_vector(n, b).b + normal_form_vector(n, b).c) % n == 0);
}

TEST_CASE("Maclachlan lcm condition") {
    CHECK(lcm_condition(12, 4, 3));
    CHECK_FALSE(lcm_condition(8, 2, 2));
    for (long long g = 2; g <= 10; ++g) CHECK(lcm_condition(2 * g + 2, 2 * g + 2, g + 1));
    // Every non-degenerate normal-form vector satisfies it.
    for (long long n = 2; n <= 40; ++n)
        for (long long b = 1; b < n - 1; ++b) {
            const GenVector v = normal_form_vector(n, b);
            const Signature s = vector_signature(v);
            CHECK(lcm_condition(n, s.periods()[1], s.periods()[2]));
        }
}

TEST_CASE("N6 admissibility") {
    CHECK(n6_admissible(7) == std::vector<long long>{2, 4});
    CHECK(n6_admissible(5).empty());  // 5 is not 1 mod 3
    CHECK(n6_admissible(9).empty());  // 9 divides by 9
    CHECK(n6_admissible(13) == std::vector<long long>{3, 9});
    CHECK(n6_admissible(21) == std::vector<long long>{4, 16}); // 21 = 3*7
    // Forward direction of the numeric conditions.
    for (long long k = 2; k <= 200; ++k) {
        if (n6_admissible(k).empty()) continue;
        CHECK(k % 9 != 0);
        long long rest = k;
        for (long long p = 2; p * p <= rest; ++p)
            while (rest % p == 0) {
                if (p != 3) CHECK(p % 3 == 1);
                rest /= p;
            }
        if (rest > 1 && rest != 3) CHECK(rest % 3 == 1);
    }
}

TEST_CASE("N8 admissibility") {
    CHECK(n8_admissible(7, 1).kind == N8Case::AbelianZ2k);
    CHECK(n8_admissible(8, 1).kind == N8Case::AbelianZ2xZk);
    CHECK(n8_admissible(8, 5) == N8Result{N8Case::NonAbelian, 5});
    CHECK(n8_admissible(8, 3) == N8Result{N8Case::NonAbelian, 3});
    CHECK(n8_admissible(9, 8).kind == N8Case::None); // t = k-1 means c = 0
    CHECK(n8_admissible(12, 5).kind == N8Case::NonAbelian);
    CHECK(n8_admissible(12, 7).kind == N8Case::NonAbelian);
    CHECK(n8_admissible(15, 4).kind == N8Case::NonAbelian);
    CHECK(n8_admissible(10, 3).kind == N8Case::None);  // 9 != 1 mod 10
    CHECK(n8_admissible(6, 5).kind == N8Case::None);   // t = k-1
    CHECK(n8_admissible(9, 2).kind == N8Case::None);   // 9 = 3^2 has cyclic units
    CHECK(n8_admissible(16, 9) == N8Result{N8Case::NonAbelian, 9});
    CHECK(n8_admissible(18, 17).kind == N8Case::None); // t = k-1
    CHECK_THROWS_AS(n8_admissible(8, 0), std::invalid_argument);
    CHECK_THROWS_AS(n8_admissible(8, 8), std::invalid_argument);
}

TEST_CASE("table of cyclic-admissible extensions") {
    const auto names = [](const Signature& s) {
        std::vector<std::string> out;
        for (const ExtensionCase& e : admissible_extensions(s)) out.push_back(e.case_name);
        return out;
    };

    const std::vector<ExtensionCase> klein = admissible_extensions(Signature(0, {7, 7, 7}));
    REQUIRE(names(Signature(0, {7, 7, 7})) == std::vector<std::string>{"N6", "N8", "T1"});
    CHECK(klein[0].sigma_prime == Signature(0, {3, 3, 7}));
    CHECK(klein[0].index == 3);
    CHECK(klein[1].sigma_prime == Signature(0, {2, 7, 14}));
    CHECK(klein[1].index == 2);
    CHECK(klein[2].sigma_prime == Signature(0, {2, 3, 7}));
    CHECK(klein[2].index == 24);

    CHECK(names(Signature(0, {48, 48, 24})) == std::vector<std::string>{"N8", "T9"});
    CHECK(names(Signature(0, {8, 8, 4})) == std::vector<std::string>{"N8", "T4", "T9"});
    CHECK(names(Signature(0, {12, 4, 3})) == std::vector<std::string>{"T10"});
    CHECK(names(Signature(0, {5, 4, 3})).empty());
    CHECK(names(Signature(0, {2, 3, 7})).empty());
    CHECK(names(Signature(1, {7, 7})).empty());

    // T9 instantiation from the Kulkarni/Accola-Maclachlan signature.
    const std::vector<ExtensionCase> am = admissible_extensions(Signature(0, {8, 8, 4}));
    CHECK(am[2].case_name == "T9");
    CHECK(am[2].sigma_prime == Signature(0, {2, 4, 8}));
    CHECK(am[2].index == 4);
}

TEST_CASE("every catalogue row carries its Riemann-Hurwitz index") {
    // Multiplicative form mu(sigma) = index * mu(sigma'): also meaningful on
    // the euclidean instances (e.g. (0;3,3,3) -> (0;2,3,6)) where both
    // measures vanish.
    const auto check_row = [](const Signature& sigma) {
        for (const ExtensionCase& e : admissible_extensions(sigma)) {
            CHECK(mu(e.sigma) == e.index * mu(e.sigma_prime));
        }
    };
    for (long long k = 4; k <= 50; ++k) check_row(Signature(0, {k, k, k})); // N6, T1
    for (long long k = 3; k <= 50; ++k)
        for (long long u = 1; u <= k; ++u)
            if (k % u == 0 && u >= 2) check_row(Signature(0, {k, k, u})); // N8 sweep
    for (long long k = 2; k <= 50; ++k) check_row(Signature(0, {4 * k, 4 * k, k})); // T8
    for (long long k = 3; k <= 50; ++k) check_row(Signature(0, {2 * k, 2 * k, k})); // T9
    for (long long k = 3; k <= 50; ++k) check_row(Signature(0, {3 * k, k, 3}));     // T10
    check_row(Signature(0, {8, 8, 4}));                                             // T4
}

TEST_CASE("classical cyclic action rows reproduce") {
    struct Row {
        long long n;      // cyclic group order
        long long b;      // normal-form parameter
        Signature sigma;  // expected signature
        long long c;      // expected third entry
        long long genus;
    };
    for (long long g = 2; g <= 10; ++g) {
        std::vector<Row> rows = {
            {4 * g + 2, 2 * g, Signature(0, {4 * g + 2, 2 * g + 1, 2}), 2 * g + 1, g}, // Wiman I
            {4 * g, 2 * g - 1, Signature(0, {4 * g, 4 * g, 2}), 2 * g, g},             // Wiman II
            {2 * g + 2, 1, Signature(0, {2 * g + 2, 2 * g + 2, g + 1}), 2 * g, g},     // A-M
        };
        if (g % 4 == 3)
            rows.push_back(
                {2 * g + 2, g + 2, Signature(0, {2 * g + 2, 2 * g + 2, g + 1}), g - 1, g});
        for (const Row& row : rows) {
            const GenVector v = normal_form_vector(row.n, row.b);
            CHECK(v.c == row.c);
            CHECK(vector_signature(v) == row.sigma);
            CHECK(rh_genus(row.n, row.sigma) == row.genus);
        }
    }
    // Wiman III and Klein.
    const GenVector w3 = normal_form_vector(12, 3);
    CHECK(w3.c == 8);
    CHECK(vector_signature(w3) == Signature(0, {12, 4, 3}));
    CHECK(rh_genus(12, vector_signature(w3)) == 3);
    const GenVector kl = normal_form_vector(7, 2);
    CHECK(kl.c == 4);
    CHECK(vector_signature(kl) == Signature(0, {7, 7, 7}));
    CHECK(rh_genus(7, vector_signature(kl)) == 3);
}
