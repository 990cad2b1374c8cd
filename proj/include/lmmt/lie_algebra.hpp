#pragma once

#include "lmmt/exterior.hpp"
#include "lmmt/linalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lmmt {

/// A structural condition (Jacobi, Leibniz, grading, invariance) does not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

class JacobiError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LeibnizError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Raw bracket data: [X_i, X_j] for i < j (0-based) as sparse component rows.
/// Antisymmetry is implicit; nothing else is guaranteed.
struct StructureConstants {
    unsigned dim = 0;
    std::map<std::pair<unsigned, unsigned>, SparseRow> brackets;

    /// Adds c * X_k to [X_i, X_j]; i > j is stored with the opposite sign.
    void add(unsigned i, unsigned j, unsigned k, const Scalar& c);
    Vector bracket(unsigned i, unsigned j) const;
};

/// First basis triple (0-based, i < j < k) on which the Jacobiator is nonzero.
struct JacobiFailure {
    std::array<unsigned, 3> triple{};
    Vector jacobiator;
};

std::optional<JacobiFailure> jacobi_check(const StructureConstants& sc);

/// Finite-dimensional Lie algebra over the exact Scalar field with a fixed
/// basis X_1..X_n (0-based in the API).
///
/// Bracket convention: the Chevalley–Eilenberg differential is
/// (dγ)(X, Y) = -γ([X, Y]), so a Salamon entry "12" in slot 3 (de^3 = e^12)
/// stores [X_1, X_2] = -X_3.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Throws JacobiError when the constants violate the Jacobi identity.
    explicit LieAlgebra(StructureConstants sc);

    static LieAlgebra abelian(unsigned n);

    unsigned dimension() const { return sc_.dim; }
    const StructureConstants& structure_constants() const { return sc_; }

    /// [X_i, X_j] as a coefficient vector.
    Vector bracket(unsigned i, unsigned j) const { return sc_.bracket(i, j); }
    Vector bracket(const Vector& x, const Vector& y) const;
    /// Matrix of ad(x) acting on column vectors.
    Matrix ad(const Vector& x) const;
    Matrix ad_basis(unsigned i) const;

    /// Largest quadratic field tag used by the constants (1 when rational).
    long field() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.sc_.dim == b.sc_.dim && a.sc_.brackets == b.sc_.brackets;
    }

private:
    StructureConstants sc_;
};

std::optional<JacobiFailure> jacobi_check(const LieAlgebra& g);

/// Matrix of L : Λ^s g -> Λ^{s-1} g in the canonical bases, where
/// L(X_1∧...∧X_s) = Σ_{p<q} (-1)^{p+q+1} [X_p, X_q] ∧ X_1..^p..^q..X_s,
/// so L(X∧Y) = [X, Y].
Matrix lie_L_matrix(const LieAlgebra& g, unsigned s);
KVector lie_L(const LieAlgebra& g, const KVector& p);

/// Basis of [U, W] for subspaces given by spanning vectors.
std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& u,
                                 const std::vector<Vector>& w);
std::vector<Vector> derived_algebra(const LieAlgebra& g);

struct StructuralReport {
    /// dim g^(0) = n, dim g^(1) = dim g', ... until the series stabilises.
    std::vector<std::size_t> derived_series;
    /// dim g_1 = dim g', dim g_m = dim [g, g_{m-1}], ... until it stabilises.
    std::vector<std::size_t> lower_central_series;
    bool solvable = false;
    bool nilpotent = false;
    bool unimodular = false;
    std::size_t derived_codimension = 0;
};

StructuralReport structural_report(const LieAlgebra& g);

/// Linear map T of a Lie algebra satisfying T[X,Y] = [TX,Y] + [X,TY].
/// Column j of the matrix is T(X_j).
class Derivation {
public:
    /// Throws LeibnizError when the Leibniz rule fails on a basis pair.
    Derivation(const LieAlgebra& parent, Matrix matrix);

    const Matrix& matrix() const { return matrix_; }
    unsigned dimension() const { return static_cast<unsigned>(matrix_.cols()); }

private:
    Matrix matrix_;
};

/// First basis pair (i < j) violating Leibniz, if any.
std::optional<std::pair<unsigned, unsigned>> leibniz_check(const LieAlgebra& g, const Matrix& t);

/// Diagonal derivation T(X_i) = w_i X_i; throws ValidationError when some
/// bracket [X_i, X_j] has a component outside weight w_i + w_j.
Derivation grading_derivation(const LieAlgebra& k, const std::vector<long>& weights);

/// Semidirect extension g = span(A_1..A_m) + k by one or two commuting
/// derivations. The new generators come first in the basis. The Salamon form
/// of g reads d e^K = (dual action of T) + ..., e.g. T = diag(1, µ) on R^2
/// gives (0, 12, µ.13); in the stored bracket convention this is
/// [A_a, K] = -T_a(K).
LieAlgebra extend_by_derivations(const LieAlgebra& k, const std::vector<Derivation>& ds);

/// Block-diagonal sum h1 ⊕ h2 (h1 first).
LieAlgebra direct_sum(const LieAlgebra& h1, const LieAlgebra& h2);

/// Named algebras: "su2", "su3", "sl2", "heisenberg", "abelian:<n>".
///
/// su2: [X_1, X_2] = -2X_3 and cyclic.
/// su3: X_a = -(i/2) λ_a for the Gell-Mann matrices λ_1..λ_7 and
///      X_8 = -(i/√3) λ_8, so [X_a, X_b] = f_abc X_c with all constants rational.
/// heisenberg: (0,0,12).
LieAlgebra builtin_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

/// Killing form B(X_i, X_j) = tr(ad X_i ad X_j).
Matrix killing_form(const LieAlgebra& g);

}  // namespace lmmt
