#include <doctest.h>

#include <algorithm>

#include "lmmt/cohomology.hpp"
#include "lmmt/lie_algebra.hpp"
#include "lmmt/linalg.hpp"
#include "lmmt/random.hpp"
#include "support/oracles.hpp"

using namespace lmmt;

namespace {

Matrix random_matrix(RandomSource& rs, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (rs.integer(0, 2) == 0) m.set(r, c, rs.coefficient());
        }
    }
    return m;
}

oracle::Dense dense(const Matrix& m) {
    oracle::Dense d(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) d[r][c] = oracle::to_q(v);
    }
    return d;
}

}  // namespace

TEST_CASE("quadratic field arithmetic") {
    const Scalar s3 = Scalar::sqrt(3);
    CHECK((Scalar(1) + s3) * (Scalar(1) - s3) == Scalar(-2));
    CHECK((s3 * s3).is_rational());
    CHECK((Scalar(1) + s3).inverse() * (Scalar(1) + s3) == Scalar(1));
    CHECK(parse_scalar((Scalar(Rational(1, 2), Rational(-3, 4), 3)).to_string()) ==
          Scalar(Rational(1, 2), Rational(-3, 4), 3));
    CHECK_THROWS_AS(Scalar::sqrt(2) + Scalar::sqrt(3), FieldMismatch);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("field axioms on random elements") {
    RandomSource rs(20240610);
    for (int i = 0; i < 200; ++i) {
        const Scalar a(rs.coefficient().rational_part(), rs.coefficient().rational_part(), 3);
        const Scalar b(rs.coefficient().rational_part(), rs.coefficient().rational_part(), 3);
        const Scalar c = rs.coefficient();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(5)) == 5);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(ce_differential(builtin_algebra("su2"), 1)) == 3);
    CHECK(kernel_basis(Matrix::identity(4)).empty());
    CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
    // L on Λ³su(2) vanishes, so its kernel is the top multivector
    CHECK(kernel_basis(lie_L_matrix(builtin_algebra("su2"), 3)).size() == 1);
}

TEST_CASE("solve examples") {
    const Vector v{Scalar(1), Scalar(Rational(-2, 3)), Scalar(5)};
    const auto x = solve(Matrix::identity(3), v);
    REQUIRE(x);
    CHECK(*x == v);
    CHECK_FALSE(solve(Matrix(3, 3), v));
    CHECK(solve(Matrix(3, 3), zero_vector(3)));
}

TEST_CASE("rank-nullity, solve round trip and oracle rank on random matrices") {
    RandomSource rs(20240611);
    for (int i = 0; i < 60; ++i) {
        const std::size_t rows = static_cast<std::size_t>(rs.integer(1, 7));
        const std::size_t cols = static_cast<std::size_t>(rs.integer(1, 7));
        const Matrix m = random_matrix(rs, rows, cols);
        const auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == cols);
        CHECK(rank(m) == oracle::rank(dense(m)));
        for (const auto& k : ker) CHECK(is_zero(m * k));

        Vector x(cols);
        for (auto& e : x) e = rs.coefficient();
        const Vector rhs = m * x;
        const auto sol = solve(m, rhs);
        REQUIRE(sol);
        CHECK(m * *sol == rhs);
    }
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    RandomSource rs(20240612);
    for (int i = 0; i < 40; ++i) {
        const std::size_t rows = static_cast<std::size_t>(rs.integer(2, 6));
        const std::size_t cols = static_cast<std::size_t>(rs.integer(1, 6));
        const Matrix m = random_matrix(rs, rows, cols);
        std::vector<Vector> permuted;
        for (std::size_t r = 0; r < rows; ++r) {
            Scalar s = rs.coefficient();
            if (s.is_zero()) s = Scalar(Rational(-7, 2));
            permuted.push_back(s * m.dense_row(r));
        }
        std::reverse(permuted.begin(), permuted.end());
        std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
        CHECK(rank(Matrix::from_rows(cols, permuted)) == rank(m));
    }
}

TEST_CASE("matrices never store zeros") {
    Matrix m(2, 2);
    m.set(0, 0, Scalar(3));
    m.add(0, 0, Scalar(-3));
    m.set(1, 1, Scalar(0));
    CHECK(m.nonzeros() == 0);
    CHECK(m.is_zero());
}

TEST_CASE("subspace helpers") {
    const std::vector<Vector> u{unit_vector(3, 0), unit_vector(3, 1)};
    const std::vector<Vector> w{unit_vector(3, 1), unit_vector(3, 2)};
    const auto both = intersect(3, u, w);
    REQUIRE(both.size() == 1);
    CHECK(in_span(3, both, unit_vector(3, 1)));
    CHECK(span_basis(3, {unit_vector(3, 0), Scalar(2) * unit_vector(3, 0)}).size() == 1);
}
