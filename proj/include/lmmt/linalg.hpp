#pragma once

#include "lmmt/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace lmmt {

using Vector = std::vector<Scalar>;
using SparseRow = std::map<std::size_t, Scalar>;

/// Sparse exact matrix. Zero entries are never stored.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);
    void add(std::size_t r, std::size_t c, const Scalar& v);

    const SparseRow& row(std::size_t r) const { return rows_[r]; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    Vector operator*(const Vector& v) const;
    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    Matrix scaled(const Scalar& s) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;

    /// Rows stacked below this matrix.
    Matrix stacked(const Matrix& below) const;
    /// Columns appended to the right of this matrix.
    Matrix augmented(const Matrix& right) const;

    Vector column(std::size_t c) const;
    Vector dense_row(std::size_t r) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t cols_ = 0;
    std::vector<SparseRow> rows_;
};

/// Reduced row echelon form; `pivots[i]` is the pivot column of `rows[i]`.
struct Echelon {
    std::vector<SparseRow> rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
};

Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; one vector per non-pivot column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Basis of the column space, chosen among the columns of m.
std::vector<Vector> column_space(const Matrix& m);

/// Row-reduced basis of span(vectors).
std::vector<Vector> span_basis(std::size_t dim, const std::vector<Vector>& vectors);

/// Basis of the intersection of two subspaces of K^dim.
std::vector<Vector> intersect(std::size_t dim, const std::vector<Vector>& u,
                              const std::vector<Vector>& w);

/// True when v lies in span(basis).
bool in_span(std::size_t dim, const std::vector<Vector>& basis, const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

}  // namespace lmmt
