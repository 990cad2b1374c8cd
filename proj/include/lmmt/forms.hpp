#pragma once

#include "lmmt/exterior.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lmmt {

/// Named constant-coefficient forms:
///   g2            φ0 on R^7
///   spin7         Φ0 on R^8
///   psu3          ρ0 on R^8 (needs field sqrt(3))
///   cvol6         e135 - e146 - e236 - e245 on R^6
///   symplectic:k,n  e12 + e34 + ... + e_{2k-1,2k} on R^n
///   volume:n      e_1...n
/// `field` is the quadratic field tag of the run (1 for plain rationals).
KForm builtin_form(std::string_view name, long field = 1);
std::vector<std::string> builtin_form_names();

/// Pairs ω = Σ_{i<=k} f_{2i-1} ∧ f_{2i}; `covectors` completes f_1..f_{2k}
/// to a basis of V* (rows of the basis change).
struct TwoFormNormalForm {
    unsigned k = 0;
    std::vector<Vector> covectors;
    Matrix basis_change;  // row i = covectors[i]
};

TwoFormNormalForm two_form_normal_form(const KForm& omega);

struct Stabilizer {
    std::size_t dimension = 0;
    std::vector<Matrix> basis;  // elements A of gl(n) with A·α = 0
};

/// Infinitesimal action of A ∈ gl(n) on α: (A·α) = -Σ α(.., A·, ..).
KForm gl_action(const Matrix& a, const KForm& alpha);
Stabilizer stabilizer_algebra(const KForm& alpha);

struct FormAnalysis {
    KForm form;
    std::vector<Vector> kernel;
    bool weakly_nondegenerate = false;
    std::size_t stabilizer_dim = 0;
    std::size_t orbit_dim = 0;
    bool stable = false;
};

/// Kernel {v : v⌟α = 0} only; stabilizer fields are left empty.
FormAnalysis weak_nondegenerate(const KForm& alpha);
/// Full analysis: kernel, stabilizer, orbit dimension n^2 - dim stab, and
/// stability (orbit dimension = C(n, r)).
FormAnalysis is_stable(const KForm& alpha);

/// Non-degenerate r-form on R^n built recursively, or nullopt when n < r or
/// n = r + 1. Requires r >= 3.
std::optional<KForm> construct_nondegenerate(unsigned r, unsigned n);

/// r ∈ {1, 2, n-2, n-1, n}, or r ∈ {3, n-3} with n ∈ {6, 7, 8}; r >= 1.
bool stability_admissible(unsigned r, unsigned n);
/// r = n, or (r, n) ∈ {(3,7), (4,8)}. Requires r >= 3.
bool fully_nondeg_admissible(unsigned r, unsigned n);

struct HolonomyIdentity {
    std::string name;
    bool holds = false;
    std::string computed;
    std::string expected;
};

/// "g2metric", "spin7vol", "spin7bivector", "spin7split", "spin7rank".
HolonomyIdentity holonomy_identity(std::string_view which);
std::vector<std::string> holonomy_identity_names();

/// Rank of a 2-form as an antisymmetric matrix.
std::size_t two_form_rank(const KForm& omega);

}  // namespace lmmt
