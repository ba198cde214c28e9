#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cg3/cgmaps.hpp"
#include "fixture_adjoint.hpp"

using cg3::CGMapSpec;
using cg3::make_monomial;
using cg3::MultiDegree;
using cg3::Rational;
using cg3::SlotKind;
using cg3::TensorPoly;
using cg3::Weight;

using QPoly = TensorPoly<Rational>;

namespace {

QPoly random_poly(const MultiDegree& md, std::mt19937_64& rng) {
    QPoly out(md);
    for (const auto& m : cg3::monomial_basis(md)) {
        const long long c = static_cast<long long>(rng() % 5) - 2;
        if (c != 0) out.add_term(m, Rational(c));
    }
    return out;
}

cg3::HomSpaceSpec hom_or_fail(Weight a, Weight b, Weight c) {
    const auto hs = cg3::hom_space(a, b, c);
    REQUIRE(hs.has_value());
    return *hs;
}

}  // namespace

TEST_CASE("kernel dimension matches the dimension formula") {
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b) {
            const auto kb = cg3::kernel_basis({a, b});
            CHECK(static_cast<long long>(kb.dim()) == cg3::dim_irrep({a, b}));
            for (const auto& v : kb.vectors) CHECK(laplacian(v).is_zero());
        }
}

TEST_CASE("kernel basis is deterministic and independent") {
    const auto kb1 = cg3::kernel_basis({2, 2});
    const auto kb2 = cg3::kernel_basis({2, 2});
    REQUIRE(kb1.dim() == kb2.dim());
    for (std::size_t i = 0; i < kb1.dim(); ++i) CHECK(kb1.vectors[i] == kb2.vectors[i]);

    const auto ambient = cg3::monomial_basis(kb1.md);
    cg3::Matrix<Rational> rows;
    for (const auto& v : kb1.vectors) rows.push_back(cg3::ambient_coords(v, ambient, Rational()));
    CHECK(cg3::rank_of(rows) == kb1.dim());
}

TEST_CASE("coefficient reduction mod p") {
    const cg3::PrimeField F(7);
    const MultiDegree md{{SlotKind::S, 1}, {SlotKind::D, 0}};
    QPoly u(md);
    u.add_term(make_monomial({{1, 0, 0}}), Rational(1, 3));
    u.add_term(make_monomial({{0, 1, 0}}), Rational(7));
    const auto v = cg3::reduce_poly(u, F);
    // 7 = 0 mod 7, so only one term survives
    REQUIRE(v.term_count() == 1);
    CHECK(v.terms().front().second == F.element(5));
}

TEST_CASE("map construction validates inputs") {
    const auto hs = hom_or_fail({1, 1}, {1, 1}, {1, 1});
    const auto u = cg3::test_monomial(hs, Rational(1));
    CHECK_THROWS_AS(cg_basis_map(CGMapSpec{hs, 7}, u), std::invalid_argument);

    const auto hs30 = hom_or_fail({1, 1}, {1, 1}, {3, 0});
    CHECK_THROWS_AS(cg_basis_map(CGMapSpec{hs30, 0}, QPoly(MultiDegree{{SlotKind::S, 1}})),
                    std::invalid_argument);
}

TEST_CASE("negative t branch on the split monomial") {
    const auto hs = hom_or_fail({1, 1}, {1, 1}, {3, 0});
    REQUIRE(hs.s == 1);
    REQUIRE(hs.t == -1);
    REQUIRE(hs.J == std::vector<long long>{0});

    const auto img = cg_basis_map(CGMapSpec{hs, 0}, cg3::test_monomial(hs, Rational(1)));
    QPoly expected(MultiDegree{{SlotKind::S, 3}, {SlotKind::D, 0}});
    expected.add_term(make_monomial({{1, 1, 1}, {0, 0, 0}}), Rational(1));
    CHECK(img == expected);
}

TEST_CASE("pre-projection images of the split monomial are monomials") {
    const auto hs = hom_or_fail({4, 4}, {2, 5}, {1, 7});
    REQUIRE(hs.s == 3);
    REQUIRE(hs.t == 1);
    const auto m0 = cg3::test_monomial(hs, Rational(1));

    const auto img0 = cg_basis_map_pre_projection(CGMapSpec{hs, 0}, m0);
    REQUIRE(img0.term_count() == 1);
    // e1^(a-s+j-t) e3^(c-j-t) (x) x3^(b-j) x2^t x1^(d-s+j)
    CHECK(img0.terms().front().first == make_monomial({{0, 0, 1}, {2, 1, 4}}));

    const auto img1 = cg_basis_map_pre_projection(CGMapSpec{hs, 1}, m0);
    REQUIRE(img1.term_count() == 1);
    CHECK(img1.terms().front().first == make_monomial({{1, 0, 0}, {3, 1, 3}}));
}

TEST_CASE("independence certificates") {
    const auto r1 = cg3::verify_basis_independence(hom_or_fail({1, 1}, {1, 1}, {1, 1}));
    CHECK(r1.map_count == 2);
    CHECK(r1.independent);
    CHECK(r1.free_of_mixed_divisor);
    CHECK(r1.e1_degrees == std::vector<long long>{0, 1});

    const auto r2 = cg3::verify_basis_independence(hom_or_fail({4, 4}, {2, 5}, {1, 7}));
    CHECK(r2.map_count == 2);
    CHECK(r2.independent);
    CHECK(r2.e1_degrees == std::vector<long long>{0, 1});

    const auto r3 = cg3::verify_basis_independence(hom_or_fail({0, 34}, {14, 1}, {0, 21}));
    CHECK(r3.map_count == 1);
    CHECK(r3.independent);

    const auto r4 = cg3::verify_basis_independence(hom_or_fail({1, 1}, {1, 1}, {3, 0}));
    CHECK(r4.map_count == 1);
    CHECK(r4.independent);
    CHECK(r4.free_of_mixed_divisor);

    // absent target: vacuous certificate
    const auto hs_empty = cg3::hom_space({1, 1}, {1, 1}, {4, 1});
    REQUIRE(hs_empty.has_value());
    REQUIRE(hs_empty->J.empty());
    CHECK(cg3::verify_basis_independence(*hs_empty).map_count == 0);
}

TEST_CASE("basis maps are equivariant and land in the kernel") {
    std::mt19937_64 rng(42);
    const Rational one(1);
    const struct {
        Weight a, b, c;
    } triples[] = {
        {{1, 1}, {1, 1}, {1, 1}},
        {{1, 1}, {1, 1}, {3, 0}},
        {{1, 1}, {1, 1}, {0, 0}},
        {{2, 0}, {0, 2}, {0, 0}},
        {{2, 1}, {1, 2}, {3, 3}},
    };
    for (const auto& tr : triples) {
        const auto hs = hom_or_fail(tr.a, tr.b, tr.c);
        for (const long long j : hs.J) {
            const CGMapSpec ms{hs, j};
            const auto u = random_poly(domain_multidegree(hs), rng);
            const auto img = cg_basis_map(ms, u);
            CHECK(laplacian(img).is_zero());
            for (const auto& [gi, gj, lam] :
                 {std::tuple<std::size_t, std::size_t, long long>{0, 1, 1},
                  {1, 2, -2},
                  {2, 0, 1}}) {
                const auto g = cg3::Mat3<Rational>::elementary(gi, gj, lam, one);
                CHECK(cg_basis_map(ms, act_group_element(u, g)) ==
                      act_group_element(img, g));
            }
        }
    }
}

TEST_CASE("adjoint square tables match the reference fixture") {
    const auto q = fixture::adjoint_q_basis();
    const auto hs = hom_or_fail({1, 1}, {1, 1}, {1, 1});
    REQUIRE(hs.J == std::vector<long long>{0, 1});

    const Rational zero;
    const auto outer = cg3::table_rep(CGMapSpec{hs, 0}, q, q, q, zero);
    const auto inner = cg3::table_rep(CGMapSpec{hs, 1}, q, q, q, zero);

    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(outer.entry[i][k] == fixture::parse_q_combo(fixture::alpha_table()[i][k]));
            CHECK(inner.entry[i][k] == fixture::parse_q_combo(fixture::beta_table()[i][k]));
        }

    // the two tables are transposes of one another
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(outer.entry[i][k] == inner.entry[k][i]);
}

TEST_CASE("curried matrix columns agree with direct evaluation") {
    const auto hs = hom_or_fail({1, 1}, {1, 1}, {1, 1});
    const auto q = fixture::adjoint_q_basis();
    const Rational zero;
    const CGMapSpec ms{hs, 1};

    const auto mat = cg3::curried_matrix(ms, q[0], q, zero);
    const auto target = cg3::monomial_basis(MultiDegree{{SlotKind::S, 1}, {SlotKind::D, 1}});
    REQUIRE(mat.size() == target.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        const auto img = cg_basis_map(ms, tensor_product(q[0], q[k]));
        const auto col = cg3::ambient_coords(img, target, zero);
        for (std::size_t i = 0; i < target.size(); ++i) CHECK(mat[i][k] == col[i]);
    }
}
