#pragma once

#include "lmmt/exterior.hpp"
#include "lmmt/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace lmmt {

/// Matrix of d : Λ^k g* -> Λ^{k+1} g*, (dγ)(X_1..X_{k+1}) = -γ(L(X_1∧...∧X_{k+1})).
/// For k = n the target is zero-dimensional.
Matrix ce_differential(const LieAlgebra& g, unsigned k);

/// d applied to a form on g.
KForm differential(const LieAlgebra& g, const KForm& a);

struct CohomologyReport {
    unsigned dimension = 0;
    std::vector<std::size_t> chains;      // dim Λ^k
    std::vector<std::size_t> cycles;      // dim Z^k
    std::vector<std::size_t> boundaries;  // dim B^k
    std::vector<std::size_t> betti;       // b_k
    bool unimodular = false;

    long euler_characteristic() const;
};

CohomologyReport betti(const LieAlgebra& g);
std::size_t betti_number(const LieAlgebra& g, unsigned k);

/// Explicit bases in degree k: Z^k, B^k and representatives of a basis of
/// H^k (a complement of B^k inside Z^k).
struct CohomologyBasis {
    unsigned degree = 0;
    std::vector<KForm> cocycles;
    std::vector<KForm> coboundaries;
    std::vector<KForm> classes;
};

CohomologyBasis cohomology_basis(const LieAlgebra& g, unsigned k);

/// True when `a` lies in B^k(g).
bool is_exact(const LieAlgebra& g, const KForm& a);

struct LieKernelBasis {
    unsigned degree = 0;
    std::vector<KVector> basis;
};

/// ker(L : Λ^k g -> Λ^{k-1} g), 1 <= k <= n.
LieKernelBasis lie_kernel(const LieAlgebra& g, unsigned k);

struct TrivialityResult {
    bool trivial = true;
    std::vector<std::size_t> betti;  // b_k for each requested degree, same order
    std::optional<unsigned> failing_degree;
    std::optional<KForm> witness;    // a cocycle whose class is nonzero
};

/// Degrees above dim g count as trivial (Λ^k g* = 0 there).
TrivialityResult is_trivial(const LieAlgebra& g, const std::vector<unsigned>& degrees);

struct KunnethReport {
    std::size_t b3_direct = 0, b3_formula = 0;
    std::size_t b4_direct = 0, b4_formula = 0;
    bool b3_holds = false;
    bool b4_holds = false;
};

/// Betti numbers of h1 ⊕ h2 computed directly and from the Künneth sums
/// b_k = Σ_{i+j=k} b_i(h1) b_j(h2) for k = 3, 4.
KunnethReport kunneth_check(const LieAlgebra& h1, const LieAlgebra& h2);

/// Both sides of the extended Cartan identity for P = X_1∧...∧X_s
///
///   p⌟dα - (-1)^s d(p⌟α) = (⌟L)_P α + L(P)⌟α,
///
/// with L_X α = X⌟dα + d(X⌟α) and (⌟L)_P α = Σ_i P_∧i ⌟ L_{X_i} α.
/// Under L(X∧Y) = [X,Y] and (dγ)(X,Y) = -γ([X,Y]) the bracket term enters
/// with a plus sign.
struct CartanReport {
    KForm lhs;
    KForm lie_term;      // (⌟L)_P α
    KForm bracket_term;  // L(P)⌟α
    bool invariant = false;  // L_X α = 0 for every X in P
    bool holds = false;
};

CartanReport cartan_identity_check(const LieAlgebra& g, const KForm& alpha, const std::vector<Vector>& p);

/// L_X α = X⌟dα + d(X⌟α).
KForm lie_derivative(const LieAlgebra& g, const Vector& x, const KForm& alpha);

}  // namespace lmmt
