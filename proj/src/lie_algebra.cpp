#include "lmmt/lie_algebra.hpp"

#include <algorithm>
#include <charconv>

namespace lmmt {

void StructureConstants::add(unsigned i, unsigned j, unsigned k, const Scalar& c) {
    if (i >= dim || j >= dim || k >= dim) throw DimensionError("bracket index out of range");
    if (i == j || c.is_zero()) return;
    Scalar v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    auto& row = brackets[{i, j}];
    auto it = row.find(k);
    if (it == row.end()) {
        row.emplace(k, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
    if (row.empty()) brackets.erase({i, j});
}

Vector StructureConstants::bracket(unsigned i, unsigned j) const {
    Vector out(dim);
    if (i == j) return out;
    const bool flip = i > j;
    auto it = brackets.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets.end()) return out;
    for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
    return out;
}

namespace {

Vector bracket_raw(const StructureConstants& sc, const Vector& x, const Vector& y) {
    Vector out(sc.dim);
    for (const auto& [ij, row] : sc.brackets) {
        const auto [i, j] = ij;
        // x_i y_j - x_j y_i
        Scalar w = x[i] * y[j] - x[j] * y[i];
        if (w.is_zero()) continue;
        for (const auto& [k, c] : row) out[k] += w * c;
    }
    return out;
}

}  // namespace

std::optional<JacobiFailure> jacobi_check(const StructureConstants& sc) {
    const unsigned n = sc.dim;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            for (unsigned k = j + 1; k < n; ++k) {
                const Vector xi = unit_vector(n, i), xj = unit_vector(n, j), xk = unit_vector(n, k);
                Vector jac = bracket_raw(sc, xi, sc.bracket(j, k)) + bracket_raw(sc, xj, sc.bracket(k, i)) +
                             bracket_raw(sc, xk, sc.bracket(i, j));
                if (!is_zero(jac)) return JacobiFailure{{i, j, k}, std::move(jac)};
            }
        }
    }
    return std::nullopt;
}

LieAlgebra::LieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
    if (auto f = jacobi_check(sc_)) {
        throw JacobiError("Jacobi identity fails on basis triple (" + std::to_string(f->triple[0] + 1) +
                          "," + std::to_string(f->triple[1] + 1) + "," +
                          std::to_string(f->triple[2] + 1) + ")");
    }
}

LieAlgebra LieAlgebra::abelian(unsigned n) {
    StructureConstants sc;
    sc.dim = n;
    return LieAlgebra(std::move(sc));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != sc_.dim || y.size() != sc_.dim) throw DimensionError("bracket: wrong vector length");
    return bracket_raw(sc_, x, y);
}

Matrix LieAlgebra::ad(const Vector& x) const {
    std::vector<Vector> cols;
    for (unsigned j = 0; j < sc_.dim; ++j) cols.push_back(bracket(x, unit_vector(sc_.dim, j)));
    return Matrix::from_columns(sc_.dim, cols);
}

Matrix LieAlgebra::ad_basis(unsigned i) const { return ad(unit_vector(sc_.dim, i)); }

long LieAlgebra::field() const {
    long d = 1;
    for (const auto& [ij, row] : sc_.brackets) {
        for (const auto& [k, c] : row) d = std::max(d, c.field());
    }
    return d;
}

std::optional<JacobiFailure> jacobi_check(const LieAlgebra& g) { return jacobi_check(g.structure_constants()); }

Matrix lie_L_matrix(const LieAlgebra& g, unsigned s) {
    const unsigned n = g.dimension();
    if (s == 0 || s > n) throw DegreeError("lie_L: degree must satisfy 1 <= s <= n");
    const auto& cols = basis_masks(n, s);
    Matrix m(binomial(n, s - 1), cols.size());
    if (s == 1) return m;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto idx = indices_of(cols[c]);
        for (unsigned p = 0; p < s; ++p) {
            for (unsigned q = p + 1; q < s; ++q) {
                const Vector br = g.bracket(idx[p] - 1, idx[q] - 1);
                if (is_zero(br)) continue;
                // 1-based positions p+1, q+1: sign (-1)^{p+q+3} = -(-1)^{p+q}
                const bool negative = ((p + q) % 2) == 0;
                const Mask rest = cols[c] & ~(Mask{1} << (idx[p] - 1)) & ~(Mask{1} << (idx[q] - 1));
                for (unsigned k = 0; k < n; ++k) {
                    if (br[k].is_zero()) continue;
                    const Mask bit = Mask{1} << k;
                    if (rest & bit) continue;
                    Scalar v = br[k];
                    if (negative) v = -v;
                    if (wedge_sign(bit, rest) < 0) v = -v;
                    m.add(basis_position(n, rest | bit), c, v);
                }
            }
        }
    }
    return m;
}

KVector lie_L(const LieAlgebra& g, const KVector& p) {
    if (p.dimension() != g.dimension()) throw DimensionError("lie_L: ambient dimension mismatch");
    const Vector out = lie_L_matrix(g, p.degree()) * p.to_vector();
    return KVector::from_vector(g.dimension(), p.degree() - 1, out);
}

std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& u,
                                 const std::vector<Vector>& w) {
    std::vector<Vector> all;
    for (const auto& x : u) {
        for (const auto& y : w) {
            Vector b = g.bracket(x, y);
            if (!is_zero(b)) all.push_back(std::move(b));
        }
    }
    return span_basis(g.dimension(), all);
}

std::vector<Vector> derived_algebra(const LieAlgebra& g) {
    std::vector<Vector> basis;
    for (unsigned i = 0; i < g.dimension(); ++i) basis.push_back(unit_vector(g.dimension(), i));
    return bracket_span(g, basis, basis);
}

StructuralReport structural_report(const LieAlgebra& g) {
    const unsigned n = g.dimension();
    StructuralReport r;
    std::vector<Vector> whole;
    for (unsigned i = 0; i < n; ++i) whole.push_back(unit_vector(n, i));

    std::vector<Vector> cur = whole;
    r.derived_series.push_back(n);
    while (true) {
        auto next = bracket_span(g, cur, cur);
        if (next.size() == cur.size()) break;
        r.derived_series.push_back(next.size());
        cur = std::move(next);
        if (cur.empty()) break;
    }
    r.solvable = r.derived_series.back() == 0;

    cur = bracket_span(g, whole, whole);
    r.derived_codimension = n - cur.size();
    r.lower_central_series.push_back(cur.size());
    while (!cur.empty()) {
        auto next = bracket_span(g, whole, cur);
        if (next.size() == cur.size()) break;
        r.lower_central_series.push_back(next.size());
        cur = std::move(next);
    }
    r.nilpotent = r.lower_central_series.back() == 0;

    r.unimodular = true;
    for (unsigned i = 0; i < n && r.unimodular; ++i) {
        Scalar tr;
        for (unsigned j = 0; j < n; ++j) tr += g.bracket(i, j)[j];
        r.unimodular = tr.is_zero();
    }
    return r;
}

std::optional<std::pair<unsigned, unsigned>> leibniz_check(const LieAlgebra& g, const Matrix& t) {
    const unsigned n = g.dimension();
    if (t.rows() != n || t.cols() != n) throw DimensionError("derivation matrix must be n x n");
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            const Vector lhs = t * g.bracket(i, j);
            const Vector rhs = g.bracket(t.column(i), unit_vector(n, j)) + g.bracket(unit_vector(n, i), t.column(j));
            if (lhs != rhs) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

Derivation::Derivation(const LieAlgebra& parent, Matrix matrix) : matrix_(std::move(matrix)) {
    if (auto bad = leibniz_check(parent, matrix_)) {
        throw LeibnizError("Leibniz rule fails on basis pair (" + std::to_string(bad->first + 1) + "," +
                           std::to_string(bad->second + 1) + ")");
    }
}

Derivation grading_derivation(const LieAlgebra& k, const std::vector<long>& weights) {
    const unsigned n = k.dimension();
    if (weights.size() != n) throw DimensionError("one weight per basis vector required");
    for (long w : weights) {
        if (w <= 0) throw ValidationError("grading weights must be positive");
    }
    for (const auto& [ij, row] : k.structure_constants().brackets) {
        for (const auto& [l, c] : row) {
            if (weights[l] != weights[ij.first] + weights[ij.second]) {
                throw ValidationError("weights do not grade the bracket [X" + std::to_string(ij.first + 1) + ",X" +
                                      std::to_string(ij.second + 1) + "]: component X" + std::to_string(l + 1) +
                                      " has weight " + std::to_string(weights[l]) + ", expected " +
                                      std::to_string(weights[ij.first] + weights[ij.second]));
            }
        }
    }
    Matrix t(n, n);
    for (unsigned i = 0; i < n; ++i) t.set(i, i, Scalar(weights[i]));
    return Derivation(k, std::move(t));
}

LieAlgebra extend_by_derivations(const LieAlgebra& k, const std::vector<Derivation>& ds) {
    if (ds.empty() || ds.size() > 2) throw ValidationError("extension needs one or two derivations");
    const unsigned n = k.dimension();
    for (const auto& d : ds) {
        if (d.dimension() != n) throw DimensionError("derivation does not act on the given algebra");
    }
    if (ds.size() == 2 && ds[0].matrix() * ds[1].matrix() != ds[1].matrix() * ds[0].matrix()) {
        throw ValidationError("derivations do not commute");
    }
    const unsigned m = static_cast<unsigned>(ds.size());
    StructureConstants sc;
    sc.dim = m + n;
    for (const auto& [ij, row] : k.structure_constants().brackets) {
        for (const auto& [l, c] : row) sc.add(ij.first + m, ij.second + m, l + m, c);
    }
    for (unsigned a = 0; a < m; ++a) {
        const Matrix tt = ds[a].matrix().transpose();
        for (unsigned j = 0; j < n; ++j) {
            for (const auto& [i, c] : tt.row(j)) sc.add(a, j + m, i + m, -c);
        }
    }
    return LieAlgebra(std::move(sc));
}

LieAlgebra direct_sum(const LieAlgebra& h1, const LieAlgebra& h2) {
    const unsigned n1 = h1.dimension();
    StructureConstants sc;
    sc.dim = n1 + h2.dimension();
    for (const auto& [ij, row] : h1.structure_constants().brackets) {
        for (const auto& [l, c] : row) sc.add(ij.first, ij.second, l, c);
    }
    for (const auto& [ij, row] : h2.structure_constants().brackets) {
        for (const auto& [l, c] : row) sc.add(ij.first + n1, ij.second + n1, l + n1, c);
    }
    return LieAlgebra(std::move(sc));
}

namespace {

LieAlgebra make_su2() {
    StructureConstants sc;
    sc.dim = 3;
    sc.add(0, 1, 2, -2);
    sc.add(1, 2, 0, -2);
    sc.add(2, 0, 1, -2);
    return LieAlgebra(std::move(sc));
}

LieAlgebra make_su3() {
    StructureConstants sc;
    sc.dim = 8;
    const Scalar half = Rational(1, 2);
    // Totally antisymmetric f_abc (1-based) not involving index 8.
    const std::vector<std::tuple<unsigned, unsigned, unsigned, Scalar>> f = {
        {1, 2, 3, 1},     {1, 4, 7, half},  {1, 5, 6, -half}, {2, 4, 6, half},
        {2, 5, 7, half},  {3, 4, 5, half},  {3, 6, 7, -half},
    };
    for (const auto& [a, b, c, v] : f) {
        sc.add(a - 1, b - 1, c - 1, v);
        sc.add(b - 1, c - 1, a - 1, v);
        sc.add(c - 1, a - 1, b - 1, v);
    }
    // Rescaled X_8 keeps the remaining constants rational.
    const Scalar three_quarters = Rational(3, 4);
    sc.add(3, 4, 7, three_quarters);
    sc.add(5, 6, 7, three_quarters);
    sc.add(3, 7, 4, -1);
    sc.add(4, 7, 3, 1);
    sc.add(5, 7, 6, -1);
    sc.add(6, 7, 5, 1);
    return LieAlgebra(std::move(sc));
}

LieAlgebra make_sl2() {
    // H, E, F with [H,E] = 2E, [H,F] = -2F, [E,F] = H.
    StructureConstants sc;
    sc.dim = 3;
    sc.add(0, 1, 1, 2);
    sc.add(0, 2, 2, -2);
    sc.add(1, 2, 0, 1);
    return LieAlgebra(std::move(sc));
}

LieAlgebra make_heisenberg() {
    StructureConstants sc;
    sc.dim = 3;
    sc.add(0, 1, 2, -1);
    return LieAlgebra(std::move(sc));
}

}  // namespace

LieAlgebra builtin_algebra(std::string_view name) {
    if (name == "su2") return make_su2();
    if (name == "su3") return make_su3();
    if (name == "sl2") return make_sl2();
    if (name == "heisenberg") return make_heisenberg();
    if (name.starts_with("abelian:")) {
        const auto digits = name.substr(8);
        unsigned n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0 || n > 30) {
            throw Error("bad abelian dimension in '" + std::string(name) + "'");
        }
        return LieAlgebra::abelian(n);
    }
    throw Error("unknown builtin algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names() { return {"su2", "su3", "sl2", "heisenberg", "abelian:<n>"}; }

Matrix killing_form(const LieAlgebra& g) {
    const unsigned n = g.dimension();
    std::vector<Matrix> ads;
    for (unsigned i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
    Matrix b(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            const Matrix p = ads[i] * ads[j];
            Scalar tr;
            for (unsigned k = 0; k < n; ++k) tr += p.at(k, k);
            b.set(i, j, tr);
            b.set(j, i, tr);
        }
    }
    return b;
}

}  // namespace lmmt
