#include "lmmt/linalg.hpp"

#include <limits>

namespace lmmt {

namespace {

// dst -= f * src
void subtract_multiple(SparseRow& dst, const Scalar& f, const SparseRow& src) {
    for (const auto& [k, v] : src) {
        auto it = dst.find(k);
        if (it == dst.end()) {
            dst.emplace(k, -(f * v));
        } else {
            it->second -= f * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

void scale_row(SparseRow& row, const Scalar& s) {
    for (auto& [k, v] : row) v *= s;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    const auto& row = rows_.at(r);
    auto it = row.find(c);
    return it == row.end() ? Scalar() : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_.size() || c >= cols_) throw Error("matrix index out of range");
    if (v.is_zero()) {
        rows_[r].erase(c);
    } else {
        rows_[r][c] = std::move(v);
    }
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_.size() || c >= cols_) throw Error("matrix index out of range");
    if (v.is_zero()) return;
    auto& row = rows_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

std::size_t Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    Vector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, x] : rows_[r]) {
            if (!v[c].is_zero()) out[r] += x * v[c];
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows()) throw Error("matrix product dimension mismatch");
    Matrix out(rows(), o.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (const auto& [k, x] : rows_[r]) {
            for (const auto& [c, y] : o.rows_[k]) out.add(r, c, x * y);
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (const auto& [c, x] : rows_[r]) t.rows_[c].emplace(r, x);
    }
    return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (s.is_zero()) return Matrix(rows(), cols_);
    Matrix out = *this;
    for (auto& row : out.rows_) scale_row(row, s);
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    Matrix out = *this;
    for (std::size_t r = 0; r < rows(); ++r) {
        for (const auto& [c, x] : o.rows_[r]) out.add(r, c, x);
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::stacked(const Matrix& below) const {
    if (below.cols() != cols_) throw Error("stacking matrices with different widths");
    Matrix out = *this;
    out.rows_.insert(out.rows_.end(), below.rows_.begin(), below.rows_.end());
    return out;
}

Matrix Matrix::augmented(const Matrix& right) const {
    if (right.rows() != rows()) throw Error("augmenting matrices with different heights");
    Matrix out(rows(), cols_ + right.cols());
    out.rows_ = rows_;
    for (std::size_t r = 0; r < rows(); ++r) {
        for (const auto& [c, x] : right.rows_[r]) out.rows_[r].emplace(cols_ + c, x);
    }
    return out;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v[r] = at(r, c);
    return v;
}

Vector Matrix::dense_row(std::size_t r) const {
    Vector v(cols_);
    for (const auto& [c, x] : rows_.at(r)) v[c] = x;
    return v;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

Echelon row_reduce(const Matrix& m) {
    std::vector<SparseRow> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.row(r).empty()) work.push_back(m.row(r));
    }
    std::vector<bool> used(work.size(), false);
    std::vector<std::size_t> pivot_rows;
    Echelon e;
    e.cols = m.cols();

    for (std::size_t c = 0; c < m.cols() && pivot_rows.size() < work.size(); ++c) {
        // Smallest operand keeps intermediate growth down.
        std::size_t best = work.size();
        std::size_t best_bits = std::numeric_limits<std::size_t>::max();
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            auto it = work[i].find(c);
            if (it == work[i].end()) continue;
            const std::size_t bits = it->second.bit_size();
            if (bits < best_bits || (bits == best_bits && work[i].size() < best_len)) {
                best = i;
                best_bits = bits;
                best_len = work[i].size();
            }
        }
        if (best == work.size()) continue;
        used[best] = true;
        scale_row(work[best], work[best].at(c).inverse());
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == best) continue;
            auto it = work[i].find(c);
            if (it == work[i].end()) continue;
            const Scalar f = it->second;
            subtract_multiple(work[i], f, work[best]);
        }
        pivot_rows.push_back(best);
        e.pivots.push_back(c);
    }
    for (std::size_t i : pivot_rows) e.rows.push_back(std::move(work[i]));
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            auto it = e.rows[i].find(f);
            if (it != e.rows[i].end()) v[e.pivots[i]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw Error("solve: right-hand side has wrong length");
    Matrix aug = m.augmented(Matrix::from_columns(m.rows(), {rhs}));
    const Echelon e = row_reduce(aug);
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const std::size_t p = e.pivots[i];
        if (p == m.cols()) return std::nullopt;
        auto it = e.rows[i].find(m.cols());
        if (it != e.rows[i].end()) x[p] = it->second;
    }
    return x;
}

std::vector<Vector> column_space(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<Vector> cols;
    for (std::size_t p : e.pivots) cols.push_back(m.column(p));
    return cols;
}

std::vector<Vector> span_basis(std::size_t dim, const std::vector<Vector>& vectors) {
    const Echelon e = row_reduce(Matrix::from_rows(dim, vectors));
    std::vector<Vector> out;
    for (const auto& row : e.rows) {
        Vector v(dim);
        for (const auto& [c, x] : row) v[c] = x;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> intersect(std::size_t dim, const std::vector<Vector>& u,
                              const std::vector<Vector>& w) {
    if (u.empty() || w.empty()) return {};
    // Solve sum a_i u_i = sum b_j w_j; the intersection is spanned by sum a_i u_i.
    std::vector<Vector> cols = u;
    for (const auto& x : w) cols.push_back(Scalar(-1) * x);
    const auto ker = kernel_basis(Matrix::from_columns(dim, cols));
    std::vector<Vector> vecs;
    for (const auto& k : ker) {
        Vector v = zero_vector(dim);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!k[i].is_zero()) v = v + k[i] * u[i];
        }
        vecs.push_back(std::move(v));
    }
    return span_basis(dim, vecs);
}

bool in_span(std::size_t dim, const std::vector<Vector>& basis, const Vector& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    return solve(Matrix::from_columns(dim, basis), v).has_value();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = Scalar(1);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error("vector dimension mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error("vector dimension mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector out = v;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace lmmt
