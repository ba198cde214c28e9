#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cg3/linalg.hpp"
#include "cg3/prime_field.hpp"
#include "cg3/rational.hpp"

using cg3::Fp;
using cg3::Matrix;
using cg3::PrimeField;
using cg3::Rational;
using cg3::Row;

namespace {

Matrix<Fp> random_matrix(std::size_t rows, std::size_t cols, const PrimeField& F,
                         std::mt19937_64& rng) {
    Matrix<Fp> m;
    for (std::size_t i = 0; i < rows; ++i) {
        Row<Fp> r;
        for (std::size_t j = 0; j < cols; ++j)
            r.push_back(F.element(static_cast<long long>(rng() % F.modulus())));
        m.push_back(std::move(r));
    }
    return m;
}

template <class R>
Row<R> apply(const Matrix<R>& m, const Row<R>& x, const R& ring) {
    Row<R> out;
    for (const auto& row : m) {
        R acc = ring.zero_like();
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

TEST_CASE("reduced echelon form over the rationals") {
    Matrix<Rational> m{{Rational(1), Rational(2), Rational(3)},
                       {Rational(2), Rational(4), Rational(6)},
                       {Rational(1), Rational(0), Rational(1)}};
    const auto info = cg3::rref_in_place(m);
    CHECK(info.rank == 2);
    CHECK(info.pivot_cols == std::vector<std::size_t>{0, 1});
    // rows are fully reduced: identity block on the pivot columns
    CHECK(m[0][0] == Rational(1));
    CHECK(m[0][1] == Rational(0));
    CHECK(m[1][0] == Rational(0));
    CHECK(m[1][1] == Rational(1));
    for (std::size_t j = 0; j < 3; ++j) CHECK(m[2][j].is_zero());
}

TEST_CASE("rank over a prime field") {
    const PrimeField F(32003);
    std::mt19937_64 rng(42);
    // random square matrices are almost surely invertible
    for (int trial = 0; trial < 3; ++trial) {
        const auto m = random_matrix(6, 6, F, rng);
        CHECK(cg3::rank_of(m) == 6);
    }
    // a rank-1 outer product
    Matrix<Fp> outer;
    for (int i = 1; i <= 4; ++i) {
        Row<Fp> r;
        for (int j = 1; j <= 5; ++j) r.push_back(F.element(i * j));
        outer.push_back(std::move(r));
    }
    CHECK(cg3::rank_of(outer) == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    const PrimeField F(101);
    std::mt19937_64 rng(7);
    const auto zero = F.element(0);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_matrix(4, 9, F, rng);
        const auto kernel = cg3::kernel_of(m, 9, zero);
        CHECK(kernel.size() == 9 - cg3::rank_of(m));
        for (const auto& v : kernel)
            for (const auto& entry : apply(m, v, zero)) CHECK(entry.is_zero());
    }
}

TEST_CASE("kernel over the rationals") {
    // x + y + z = 0
    Matrix<Rational> m{{Rational(1), Rational(1), Rational(1)}};
    const auto kernel = cg3::kernel_of(m, 3, Rational());
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel) CHECK(v[0] + v[1] + v[2] == Rational());
    // deterministic order: free columns ascending
    CHECK(kernel[0][1] == Rational(1));
    CHECK(kernel[1][2] == Rational(1));
}

TEST_CASE("row space reduction") {
    const Rational zero;
    Matrix<Rational> gens{{Rational(1), Rational(1), Rational(0)},
                          {Rational(0), Rational(1), Rational(1)}};
    const cg3::RowSpace<Rational> space(gens, 3, zero);
    CHECK(space.rank() == 2);

    CHECK(space.contains({Rational(1), Rational(2), Rational(1)}));
    CHECK_FALSE(space.contains({Rational(1), Rational(0), Rational(1)}));

    const auto r = space.reduce({Rational(5), Rational(7), Rational(0)});
    CHECK(space.reduce(r) == r);
    // reduction is a projection: v - reduce(v) lies in the span
    CHECK(space.contains({Rational(5) - r[0], Rational(7) - r[1], Rational(0) - r[2]}));
}

TEST_CASE("linear solver finds exact solutions") {
    const PrimeField F(32003);
    std::mt19937_64 rng(42);
    const auto zero = F.element(0);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_matrix(7, 5, F, rng);
        const cg3::LinearSolver<Fp> solver(m, zero);
        Row<Fp> x;
        for (int j = 0; j < 5; ++j) x.push_back(F.element(static_cast<long long>(rng() % 32003)));
        const auto b = apply(m, x, zero);
        const auto sol = solver.solve(b);
        REQUIRE(sol.has_value());
        CHECK(apply(m, *sol, zero) == b);
    }
}

TEST_CASE("linear solver reports inconsistency") {
    Matrix<Rational> m{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    const cg3::LinearSolver<Rational> solver(m, Rational());
    CHECK(solver.rank() == 1);
    CHECK_FALSE(solver.solve({Rational(0), Rational(1)}).has_value());
    const auto sol = solver.solve({Rational(3), Rational(0)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(3));
}
