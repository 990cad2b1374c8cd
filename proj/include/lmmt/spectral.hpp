#pragma once

#include "lmmt/cohomology.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lmmt {

/// An ideal k ⊇ g' together with a complement spanning a lift of a = g/k.
/// `adapted` is g rewritten in the basis (k basis, complement), so k is
/// spanned by the first `ideal_dim` basis vectors.
struct IdealSplit {
    LieAlgebra original;
    std::vector<Vector> ideal;
    std::vector<Vector> complement;
    LieAlgebra adapted;
    LieAlgebra ideal_algebra;

    unsigned ideal_dim() const { return static_cast<unsigned>(ideal.size()); }
    unsigned quotient_dim() const { return static_cast<unsigned>(complement.size()); }
};

/// Throws ValidationError when span(ideal) is not an ideal or does not
/// contain g' (so that g/k would not be abelian).
IdealSplit make_split(const LieAlgebra& g, const std::vector<Vector>& ideal);
/// Ideal spanned by the given 1-based basis vectors.
IdealSplit make_split(const LieAlgebra& g, const std::vector<unsigned>& basis_indices);

struct InvariantCohomology {
    unsigned degree = 0;
    std::size_t cohomology_dim = 0;   // dim H^q(k)
    std::size_t invariant_dim = 0;    // dim H^q(k)^g
    std::vector<KForm> classes;       // basis of H^q(k), forms on k
    std::vector<Matrix> operators;    // A_i in that basis, one per complement vector
    std::vector<KForm> invariant;     // basis of the joint kernel
};

/// H^q(k) with the induced action A·[α] = [A⌟dα] (d of g, α extended by zero).
InvariantCohomology invariant_cohomology(const IdealSplit& split, unsigned q);

struct SpectralPage {
    unsigned level = 2;
    unsigned quotient_dim = 0;
    std::map<std::pair<unsigned, unsigned>, std::size_t> table;  // (p, q) -> dim
    std::size_t at(unsigned p, unsigned q) const;
};

/// E_1 or E_2 page of the Hochschild–Serre sequence for rows q = 0..max_q.
/// Requires dim a ∈ {1, 2}.
SpectralPage hs_page(const IdealSplit& split, unsigned level, unsigned max_q);

/// Codimension one ideals containing g': kernels of the closed 1-forms
/// c_i and c_i ± c_j built from a basis c_1..c_m of Ann(g').
std::vector<std::vector<Vector>> codim_one_ideals(const LieAlgebra& g);

struct IdealVerdict {
    std::vector<Vector> ideal;
    std::array<std::size_t, 5> invariant{};  // dim H^i(k)^g, i = 0..4
    bool vanishes = false;                   // on the degrees the statement needs
};

struct Structure34Report {
    bool direct = false;  // b_3 = b_4 = 0
    bool solvable = false;
    std::size_t codim = 0;
    std::vector<IdealVerdict> codim_one;  // i = 2,3,4 for each codim-1 ideal
    bool theorem_side = false;
    std::optional<IdealVerdict> derived;  // k = g', i = 1..4, when codim >= 2
    std::optional<bool> proposition_side;
    bool consistent = false;
};

/// Direct (3,4)-triviality against the invariant-cohomology characterisations:
/// solvable with H^{2,3,4}(k)^g = 0 for codimension one ideals k ⊇ g', and,
/// when codim g' >= 2, H^{1,2,3,4}(g')^g = 0.
Structure34Report verify_34_structure(const LieAlgebra& g);

struct Reconstruction {
    std::size_t b3 = 0, b4 = 0;
    std::size_t inv2 = 0, inv3 = 0, inv4 = 0;
    bool holds = false;  // b3 = inv3 + inv2 and b4 = inv4 + inv3
};

/// Degeneration check for a codimension one split.
Reconstruction reconstruction_check(const IdealSplit& split);

/// No sum of 2, 3 or 4 eigenvalues at distinct indices vanishes.
bool abelian_eigen_criterion(const std::vector<Rational>& lambdas);

/// R A + R^m with [A, K_i] acting by λ_i, written so the Salamon form is
/// (0, λ_1.12, ..., λ_m.1(m+1)).
LieAlgebra eigen_extension(const std::vector<Rational>& lambdas);

struct ExtensionCertificate {
    std::vector<long> lambdas;
    LieAlgebra algebra;
    bool criterion = false;
    std::vector<std::size_t> betti;
    bool trivial34 = false;
    bool agrees = false;
};

struct ExtensionSearch {
    std::size_t examined = 0;
    std::vector<ExtensionCertificate> accepted;       // criterion holds
    std::vector<ExtensionCertificate> disagreements;  // criterion != Betti verdict
};

/// Non-decreasing eigenvalue tuples of length m in [lo, hi].
ExtensionSearch search_34_extensions(unsigned m, long lo, long hi);

}  // namespace lmmt
