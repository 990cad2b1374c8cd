#pragma once

#include "lmmt/cohomology.hpp"

#include <optional>
#include <vector>

namespace lmmt {

/// Element of P(g,k)* = Λ^k g* / B^k(g), stored through a representative.
struct PDualElement {
    unsigned degree = 0;
    KForm representative;
};

/// True when the two representatives differ by an element of B^k(g).
bool same_class(const LieAlgebra& g, const PDualElement& a, const PDualElement& b);

/// d_P(β) = dβ; independent of the representative.
KForm d_P(const LieAlgebra& g, const PDualElement& beta);

/// Matrix of d_P on a basis of P(g,k)* (representatives completing B^k).
/// Also returns the representatives used as the domain basis.
struct DPMatrix {
    Matrix matrix;
    std::vector<KForm> domain;
};
DPMatrix d_P_matrix(const LieAlgebra& g, unsigned k);

struct MultimomentSolution {
    enum class Status { unique, non_unique, no_existence };
    Status status = Status::no_existence;
    std::optional<PDualElement> nu;
    /// Representatives spanning ker d_P (the affine freedom) when non-unique.
    std::vector<KForm> kernel;
    /// dim H^r(g) and, on failure, the cocycle whose class obstructs.
    std::size_t obstruction_dimension = 0;
    std::optional<KForm> obstruction;
};

/// Solves d_P ν = Ψ for a closed r-form Ψ, 1 <= r <= n.
MultimomentSolution solve_multimoment(const LieAlgebra& g, const KForm& psi);

struct OrbitCondition {
    std::vector<Vector> stabilizer;  // {X : β(ad_X p) = 0 for all p in P(g,k)}
    std::vector<Vector> kernel;      // {X : X⌟d_P β = 0}
    bool holds = false;
};

/// Compares stab_g β with ker(d_P β) for β ∈ P(g,k)*.
OrbitCondition orbit_stab_condition(const LieAlgebra& g, const PDualElement& beta);

/// Matrix of the derivation extension of ad_X on Λ^k g.
Matrix ad_on_multivectors(const LieAlgebra& g, const Vector& x, unsigned k);

/// γ(X,Y,Z) = <[X,Y], Z>; throws ValidationError unless `inner` is symmetric
/// and ad-invariant.
KForm triple_form(const LieAlgebra& g, const Matrix& inner);

}  // namespace lmmt
