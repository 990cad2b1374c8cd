#include "lmmt/random.hpp"

#include "lmmt/exterior.hpp"

namespace lmmt {

long RandomSource::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Scalar RandomSource::coefficient() {
    // mostly integers, occasionally halves
    if (integer(0, 3) == 0) return Scalar(Rational(integer(-3, 3), 2));
    return Scalar(integer(-2, 2));
}

Vector RandomSource::vector(unsigned n) {
    Vector v(n);
    for (auto& x : v) x = Scalar(integer(-3, 3));
    if (is_zero(v)) v[integer(0, n - 1)] = Scalar(1);
    return v;
}

KForm RandomSource::form(unsigned n, unsigned degree, double density) {
    std::bernoulli_distribution keep(density);
    KForm f(n, degree);
    for (Mask m : basis_masks(n, degree)) {
        if (keep(rng_)) f.add_term(m, coefficient());
    }
    if (f.is_zero() && degree <= n) f.add_term(basis_masks(n, degree).front(), 1);
    return f;
}

LieAlgebra RandomSource::triangular(unsigned n, bool diagonal) {
    std::bernoulli_distribution keep(0.35);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        StructureConstants sc;
        sc.dim = n;
        for (unsigned k = 0; k < n; ++k) {
            for (unsigned i = 0; i < k; ++i) {
                for (unsigned j = i + 1; j < k; ++j) {
                    if (keep(rng_)) sc.add(i, j, k, Scalar(integer(-2, 2)));
                }
            }
            if (diagonal && k > 0) sc.add(0, k, k, Scalar(integer(-2, 2)));
        }
        if (!jacobi_check(sc)) return LieAlgebra(std::move(sc));
    }
    throw Error("random algebra generation gave up");
}

LieAlgebra RandomSource::nilpotent(unsigned n) { return triangular(n, false); }

LieAlgebra RandomSource::solvable(unsigned n) { return triangular(n, true); }

}  // namespace lmmt
