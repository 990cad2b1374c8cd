#include "lmmt/multimoment.hpp"

namespace lmmt {

bool same_class(const LieAlgebra& g, const PDualElement& a, const PDualElement& b) {
    if (a.degree != b.degree) return false;
    return is_exact(g, a.representative - b.representative);
}

KForm d_P(const LieAlgebra& g, const PDualElement& beta) {
    if (beta.representative.degree() != beta.degree) throw DegreeError("d_P: representative has the wrong degree");
    if (beta.degree >= g.dimension()) throw DegreeError("d_P: degree must be below the dimension");
    return differential(g, beta.representative);
}

DPMatrix d_P_matrix(const LieAlgebra& g, unsigned k) {
    const unsigned n = g.dimension();
    if (k >= n) throw DegreeError("d_P: degree must be below the dimension");
    const std::size_t len = binomial(n, k);
    std::vector<Vector> span;
    if (k > 0) span = column_space(ce_differential(g, k - 1));
    DPMatrix out;
    std::vector<Vector> images;
    const Matrix d = ce_differential(g, k);
    for (std::size_t i = 0; i < len; ++i) {
        const Vector e = unit_vector(len, i);
        if (in_span(len, span, e)) continue;
        span.push_back(e);
        out.domain.push_back(KForm::from_vector(n, k, e));
        images.push_back(d * e);
    }
    out.matrix = Matrix::from_columns(binomial(n, k + 1), images);
    return out;
}

MultimomentSolution solve_multimoment(const LieAlgebra& g, const KForm& psi) {
    const unsigned n = g.dimension();
    const unsigned r = psi.degree();
    if (r == 0 || r > n) throw DegreeError("solve_multimoment: degree must satisfy 1 <= r <= n");
    if (psi.dimension() != n) throw DimensionError("solve_multimoment: form lives on another space");
    if (!differential(g, psi).is_zero()) throw ValidationError("solve_multimoment: Ψ is not closed");

    MultimomentSolution s;
    s.obstruction_dimension = betti_number(g, r);
    const DPMatrix dp = d_P_matrix(g, r - 1);
    const auto x = solve(dp.matrix, psi.to_vector());
    if (!x) {
        s.status = MultimomentSolution::Status::no_existence;
        s.obstruction = psi;
        return s;
    }
    KForm rep(n, r - 1);
    for (std::size_t i = 0; i < dp.domain.size(); ++i) {
        if (!(*x)[i].is_zero()) rep += (*x)[i] * dp.domain[i];
    }
    s.nu = PDualElement{r - 1, rep};
    for (const auto& v : kernel_basis(dp.matrix)) {
        KForm kf(n, r - 1);
        for (std::size_t i = 0; i < dp.domain.size(); ++i) {
            if (!v[i].is_zero()) kf += v[i] * dp.domain[i];
        }
        s.kernel.push_back(std::move(kf));
    }
    s.status = s.kernel.empty() ? MultimomentSolution::Status::unique : MultimomentSolution::Status::non_unique;
    return s;
}

Matrix ad_on_multivectors(const LieAlgebra& g, const Vector& x, unsigned k) {
    const unsigned n = g.dimension();
    const auto& masks = basis_masks(n, k);
    Matrix m(masks.size(), masks.size());
    std::vector<Vector> images;
    for (unsigned j = 0; j < n; ++j) images.push_back(g.bracket(x, unit_vector(n, j)));
    for (std::size_t c = 0; c < masks.size(); ++c) {
        const auto idx = indices_of(masks[c]);
        for (std::size_t p = 0; p < idx.size(); ++p) {
            // Y_1 ∧ .. ∧ [X, Y_p] ∧ .. ∧ Y_k
            const Vector& br = images[idx[p] - 1];
            const Mask rest = masks[c] & ~(Mask{1} << (idx[p] - 1));
            for (unsigned l = 0; l < n; ++l) {
                if (br[l].is_zero()) continue;
                const Mask bit = Mask{1} << l;
                if (rest & bit) continue;
                // bit sits between `before` and the rest; count the swaps into sorted order
                const Mask before = rest & ((Mask{1} << (idx[p] - 1)) - 1);
                const int sign = wedge_sign(before, bit) * wedge_sign(bit, rest & ~before);
                Scalar v = br[l];
                if (sign < 0) v = -v;
                m.add(basis_position(n, rest | bit), c, v);
            }
        }
    }
    return m;
}

OrbitCondition orbit_stab_condition(const LieAlgebra& g, const PDualElement& beta) {
    const unsigned n = g.dimension();
    const unsigned k = beta.degree;
    if (k == 0 || k >= n) throw DegreeError("orbit_stab_condition: degree must satisfy 1 <= k < n");
    const auto ker_p = lie_kernel(g, k).basis;
    const Vector b = beta.representative.to_vector();

    // Row p, column a: β(ad_{X_a} p).
    Matrix action(ker_p.size(), n);
    for (unsigned a = 0; a < n; ++a) {
        const Matrix ad = ad_on_multivectors(g, unit_vector(n, a), k);
        for (std::size_t p = 0; p < ker_p.size(); ++p) {
            const Vector img = ad * ker_p[p].to_vector();
            Scalar v;
            for (std::size_t i = 0; i < img.size(); ++i) {
                if (!img[i].is_zero() && !b[i].is_zero()) v += img[i] * b[i];
            }
            action.set(p, a, v);
        }
    }
    OrbitCondition out;
    out.stabilizer = span_basis(n, kernel_basis(action));

    const KForm db = d_P(g, beta);
    std::vector<Vector> cols;
    for (unsigned a = 0; a < n; ++a) {
        cols.push_back(contract(KVector::basis(n, {a + 1}), db).to_vector());
    }
    out.kernel = span_basis(n, kernel_basis(Matrix::from_columns(binomial(n, k), cols)));
    out.holds = out.stabilizer == out.kernel;
    return out;
}

KForm triple_form(const LieAlgebra& g, const Matrix& inner) {
    const unsigned n = g.dimension();
    if (inner.rows() != n || inner.cols() != n) throw DimensionError("triple_form: inner product must be n x n");
    if (!(inner == inner.transpose())) throw ValidationError("triple_form: inner product is not symmetric");
    for (unsigned x = 0; x < n; ++x) {
        const Matrix ad = g.ad_basis(x);
        // <[X,Y],Z> + <Y,[X,Z]> = 0  <=>  ad^T B + B ad = 0
        if (!(ad.transpose() * inner + inner * ad).is_zero()) {
            throw ValidationError("triple_form: inner product is not ad-invariant");
        }
    }
    KForm out(n, 3);
    for (Mask m : basis_masks(n, 3)) {
        const auto idx = indices_of(m);
        const Vector br = g.bracket(idx[0] - 1, idx[1] - 1);
        Scalar v;
        for (unsigned l = 0; l < n; ++l) {
            if (!br[l].is_zero()) v += br[l] * inner.at(l, idx[2] - 1);
        }
        out.add_term(m, v);
    }
    return out;
}

}  // namespace lmmt
