#pragma once

#include <cstdint>
#include <random>

#include "lmmt/lie_algebra.hpp"

namespace lmmt {

/// Seeded source of small random algebras, forms and vectors for the
/// property suites. Everything is rational with small entries.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    /// de^k ∈ Λ²⟨e^1..e^{k-1}⟩ with sparse coefficients in {-2..2};
    /// candidates with d² != 0 are rejected and redrawn.
    LieAlgebra nilpotent(unsigned n);

    /// Same shape as nilpotent() plus diagonal terms λ_k e^{1k} with λ_k ∈ {-2..2},
    /// so g' lies in span(X_2..X_n) and g is solvable.
    LieAlgebra solvable(unsigned n);

    KForm form(unsigned n, unsigned degree, double density = 0.5);
    Vector vector(unsigned n);
    Scalar coefficient();
    long integer(long lo, long hi);

private:
    LieAlgebra triangular(unsigned n, bool diagonal);

    std::mt19937_64 rng_;
};

}  // namespace lmmt
