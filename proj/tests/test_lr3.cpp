#include <catch2/catch_amalgamated.hpp>

#include "cg3/lr3.hpp"

using cg3::Weight;

TEST_CASE("irrep dimensions") {
    CHECK(cg3::dim_irrep({0, 0}) == 1);
    CHECK(cg3::dim_irrep({1, 0}) == 3);
    CHECK(cg3::dim_irrep({0, 1}) == 3);
    CHECK(cg3::dim_irrep({1, 1}) == 8);
    CHECK(cg3::dim_irrep({3, 0}) == 10);
    CHECK(cg3::dim_irrep({2, 2}) == 27);
    CHECK(cg3::dim_irrep({4, 4}) == 125);
    CHECK(cg3::dim_irrep({2, 5}) == 81);
    CHECK(cg3::dim_irrep({1, 7}) == 80);
    CHECK(cg3::dim_irrep({0, 34}) == 630);
    CHECK(cg3::dim_irrep({14, 1}) == 255);
    CHECK(cg3::dim_irrep({0, 21}) == 253);
    CHECK(cg3::dim_irrep({30, 0}) == 496);
    CHECK(cg3::dim_irrep({0, 4}) == 15);
    CHECK(cg3::dim_irrep({5, 9}) == 480);
    CHECK_THROWS_AS(cg3::dim_irrep({-1, 0}), std::invalid_argument);
}

TEST_CASE("diagram round trip") {
    for (long long a = 0; a <= 5; ++a)
        for (long long b = 0; b <= 5; ++b) {
            const auto d = cg3::YoungDiagram3::from_weight({a, b});
            CHECK(d.is_partition());
            CHECK(d.weight() == Weight{a, b});
        }
}

TEST_CASE("adjoint square decomposition") {
    const auto dec = cg3::decompose({1, 1}, {1, 1});
    const std::map<Weight, long long> expected{
        {{0, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{2, 2}, 1}, {{3, 0}, 1}};
    CHECK(dec == expected);
}

TEST_CASE("decomposition respects total dimension") {
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b)
            for (long long c = 0; c <= 4; ++c)
                for (long long d = 0; d <= 4; ++d) {
                    const auto dec = cg3::decompose({a, b}, {c, d});
                    long long total = 0;
                    for (const auto& [w, mult] : dec) total += mult * cg3::dim_irrep(w);
                    CHECK(total == cg3::dim_irrep({a, b}) * cg3::dim_irrep({c, d}));
                }
}

TEST_CASE("decomposition is symmetric in the two factors") {
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (long long c = 0; c <= 3; ++c)
                for (long long d = 0; d <= 3; ++d)
                    CHECK(cg3::decompose({a, b}, {c, d}) == cg3::decompose({c, d}, {a, b}));
}

TEST_CASE("s and t parameters") {
    auto st = cg3::st_parameters({4, 4}, {2, 5}, {1, 7});
    REQUIRE(st.has_value());
    CHECK(st->first == 3);
    CHECK(st->second == 1);

    st = cg3::st_parameters({0, 34}, {14, 1}, {0, 21});
    REQUIRE(st.has_value());
    CHECK(st->first == 14);
    CHECK(st->second == 0);

    st = cg3::st_parameters({1, 1}, {1, 1}, {3, 0});
    REQUIRE(st.has_value());
    CHECK(st->first == 1);
    CHECK(st->second == -1);

    CHECK_FALSE(cg3::st_parameters({1, 1}, {1, 1}, {1, 0}).has_value());
}

TEST_CASE("admissible index sets") {
    CHECK(cg3::admissible_j({4, 4}, {2, 5}, {1, 7}) == std::vector<long long>{0, 1});
    CHECK(cg3::admissible_j({0, 34}, {14, 1}, {0, 21}) == std::vector<long long>{14});
    CHECK(cg3::admissible_j({1, 1}, {1, 1}, {1, 1}) == std::vector<long long>{0, 1});
    CHECK(cg3::admissible_j({1, 1}, {1, 1}, {3, 0}) == std::vector<long long>{0});
    CHECK(cg3::admissible_j({6, 0}, {0, 6}, {2, 2}) == std::vector<long long>{0});
    CHECK(cg3::admissible_j({1, 1}, {1, 1}, {1, 0}).empty());
}

// Dual-route check: multiplicities from expansion enumeration must agree
// with the size of the admissible index set, across an exhaustive grid.
TEST_CASE("index set size equals enumerated multiplicity") {
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b)
            for (long long c = 0; c <= 4; ++c)
                for (long long d = 0; d <= 4; ++d) {
                    const auto dec = cg3::decompose({a, b}, {c, d});
                    const long long top = a + b + c + d;
                    for (long long e = 0; e <= top; ++e)
                        for (long long f = 0; f <= top; ++f) {
                            const auto it = dec.find({e, f});
                            const long long mult = it == dec.end() ? 0 : it->second;
                            const auto J = cg3::admissible_j({a, b}, {c, d}, {e, f});
                            CHECK(static_cast<long long>(J.size()) == mult);
                        }
                }
}

TEST_CASE("expansions attached to admissible indices") {
    const auto hs = cg3::hom_space({4, 4}, {2, 5}, {1, 7});
    REQUIRE(hs.has_value());
    REQUIRE(hs->J == std::vector<long long>{0, 1});

    const auto x0 = cg3::expansion_from_j(0, *hs);
    CHECK(x0.p == std::array<long long, 3>{3, 4, 0});
    CHECK(x0.q == std::array<long long, 3>{0, 2, 3});

    const auto x1 = cg3::expansion_from_j(1, *hs);
    CHECK(x1.p == std::array<long long, 3>{3, 3, 1});
    CHECK(x1.q == std::array<long long, 3>{0, 3, 2});

    CHECK_THROWS_AS(cg3::expansion_from_j(5, *hs), std::invalid_argument);
}

// Every index j must map to an expansion that passes the admissibility rules
// and cuts out the requested summand shape.
TEST_CASE("index to expansion consistency on a grid") {
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b)
            for (long long c = 0; c <= 4; ++c)
                for (long long d = 0; d <= 4; ++d) {
                    const auto dec = cg3::decompose({a, b}, {c, d});
                    for (const auto& [w, mult] : dec) {
                        const auto hs = cg3::hom_space({a, b}, {c, d}, w);
                        REQUIRE(hs.has_value());
                        REQUIRE(hs->multiplicity() == mult);
                        for (const long long j : hs->J) {
                            const auto x = cg3::expansion_from_j(j, *hs);
                            CHECK(cg3::is_valid_expansion({a, b}, {c, d}, x));
                            CHECK(cg3::expansion_shape({a, b}, x).weight() == w);
                        }
                    }
                }
}

TEST_CASE("tensoring with the trivial representation") {
    const auto dec = cg3::decompose({3, 2}, {0, 0});
    REQUIRE(dec.size() == 1);
    CHECK(dec.at({3, 2}) == 1);
}
