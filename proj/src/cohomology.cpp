#include "lmmt/cohomology.hpp"

namespace lmmt {

Matrix ce_differential(const LieAlgebra& g, unsigned k) {
    const unsigned n = g.dimension();
    if (k > n) throw DegreeError("ce_differential: degree exceeds dimension");
    if (k == n) return Matrix(0, 1);
    return lie_L_matrix(g, k + 1).transpose().scaled(Scalar(-1));
}

KForm differential(const LieAlgebra& g, const KForm& a) {
    if (a.dimension() != g.dimension()) throw DimensionError("differential: form lives on another space");
    const unsigned n = g.dimension();
    if (a.degree() >= n) return KForm(n, a.degree() + 1);
    return KForm::from_vector(n, a.degree() + 1, ce_differential(g, a.degree()) * a.to_vector());
}

long CohomologyReport::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(betti[k]);
    return chi;
}

CohomologyReport betti(const LieAlgebra& g) {
    const unsigned n = g.dimension();
    CohomologyReport r;
    r.dimension = n;
    std::vector<std::size_t> ranks(n + 1, 0);
    for (unsigned k = 0; k < n; ++k) ranks[k] = rank(ce_differential(g, k));
    for (unsigned k = 0; k <= n; ++k) {
        const std::size_t chains = binomial(n, k);
        const std::size_t cycles = chains - ranks[k];
        const std::size_t bounds = k == 0 ? 0 : ranks[k - 1];
        r.chains.push_back(chains);
        r.cycles.push_back(cycles);
        r.boundaries.push_back(bounds);
        r.betti.push_back(cycles - bounds);
    }
    r.unimodular = structural_report(g).unimodular;
    return r;
}

std::size_t betti_number(const LieAlgebra& g, unsigned k) {
    const unsigned n = g.dimension();
    if (k > n) return 0;
    const std::size_t out = k == n ? 0 : rank(ce_differential(g, k));
    const std::size_t in = k == 0 ? 0 : rank(ce_differential(g, k - 1));
    return binomial(n, k) - out - in;
}

CohomologyBasis cohomology_basis(const LieAlgebra& g, unsigned k) {
    const unsigned n = g.dimension();
    if (k > n) throw DegreeError("cohomology_basis: degree exceeds dimension");
    CohomologyBasis cb;
    cb.degree = k;
    const std::size_t len = binomial(n, k);
    std::vector<Vector> z;
    if (k == n) {
        z.push_back(unit_vector(len, 0));
    } else {
        z = kernel_basis(ce_differential(g, k));
    }
    std::vector<Vector> b;
    if (k > 0) b = column_space(ce_differential(g, k - 1));

    for (const auto& v : z) cb.cocycles.push_back(KForm::from_vector(n, k, v));
    for (const auto& v : b) cb.coboundaries.push_back(KForm::from_vector(n, k, v));

    std::vector<Vector> span = b;
    for (const auto& v : z) {
        if (in_span(len, span, v)) continue;
        span.push_back(v);
        cb.classes.push_back(KForm::from_vector(n, k, v));
    }
    return cb;
}

bool is_exact(const LieAlgebra& g, const KForm& a) {
    if (a.is_zero()) return true;
    if (a.degree() == 0) return false;
    return solve(ce_differential(g, a.degree() - 1), a.to_vector()).has_value();
}

LieKernelBasis lie_kernel(const LieAlgebra& g, unsigned k) {
    const unsigned n = g.dimension();
    if (k == 0 || k > n) throw DegreeError("lie_kernel: degree must satisfy 1 <= k <= n");
    LieKernelBasis out;
    out.degree = k;
    for (const auto& v : kernel_basis(lie_L_matrix(g, k))) out.basis.push_back(KVector::from_vector(n, k, v));
    return out;
}

TrivialityResult is_trivial(const LieAlgebra& g, const std::vector<unsigned>& degrees) {
    TrivialityResult r;
    for (unsigned k : degrees) {
        const std::size_t b = betti_number(g, k);
        r.betti.push_back(b);
        if (b != 0 && r.trivial) {
            r.trivial = false;
            r.failing_degree = k;
            r.witness = cohomology_basis(g, k).classes.front();
        }
    }
    return r;
}

KunnethReport kunneth_check(const LieAlgebra& h1, const LieAlgebra& h2) {
    const auto b1 = betti(h1).betti;
    const auto b2 = betti(h2).betti;
    const auto bg = betti(direct_sum(h1, h2)).betti;
    auto formula = [&](unsigned k) {
        std::size_t s = 0;
        for (unsigned i = 0; i <= k; ++i) {
            const unsigned j = k - i;
            if (i < b1.size() && j < b2.size()) s += b1[i] * b2[j];
        }
        return s;
    };
    auto direct = [&](unsigned k) { return k < bg.size() ? bg[k] : std::size_t{0}; };
    KunnethReport r;
    r.b3_direct = direct(3);
    r.b3_formula = formula(3);
    r.b4_direct = direct(4);
    r.b4_formula = formula(4);
    r.b3_holds = r.b3_direct == r.b3_formula;
    r.b4_holds = r.b4_direct == r.b4_formula;
    return r;
}

KForm lie_derivative(const LieAlgebra& g, const Vector& x, const KForm& alpha) {
    const KVector xv = vector_of(x);
    KForm out = contract(xv, differential(g, alpha));
    if (alpha.degree() > 0) out += differential(g, contract(xv, alpha));
    return out;
}

namespace {

KVector wedge_all(unsigned n, const std::vector<Vector>& xs, std::size_t skip) {
    KVector acc = KVector::scalar(n, Scalar(1));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != skip) acc = wedge(acc, vector_of(xs[i]));
    }
    return acc;
}

}  // namespace

CartanReport cartan_identity_check(const LieAlgebra& g, const KForm& alpha, const std::vector<Vector>& p) {
    const unsigned n = g.dimension();
    const unsigned s = static_cast<unsigned>(p.size());
    if (s == 0) throw DegreeError("cartan_identity_check: empty multivector");
    if (alpha.degree() < s) throw DegreeError("cartan_identity_check: multivector degree exceeds form degree");
    if (alpha.dimension() != n) throw DimensionError("cartan_identity_check: form lives on another space");
    for (const auto& x : p) {
        if (x.size() != n) throw DimensionError("cartan_identity_check: vector of wrong length");
    }

    const KVector big_p = wedge_all(n, p, s);
    CartanReport r;
    r.lhs = contract(big_p, differential(g, alpha));
    KForm second = differential(g, contract(big_p, alpha));
    r.lhs += (s % 2 == 0) ? Scalar(-1) * second : second;

    r.lie_term = KForm(n, alpha.degree() - s + 1);
    r.invariant = true;
    for (unsigned i = 0; i < s; ++i) {
        const KForm lx = lie_derivative(g, p[i], alpha);
        if (!lx.is_zero()) r.invariant = false;
        KForm term = contract(wedge_all(n, p, i), lx);
        r.lie_term += (i % 2 == 0) ? term : Scalar(-1) * term;
    }
    r.bracket_term = contract(lie_L(g, big_p), alpha);
    r.holds = r.lhs == r.lie_term + r.bracket_term;
    return r;
}

}  // namespace lmmt
