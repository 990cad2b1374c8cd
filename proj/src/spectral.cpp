#include "lmmt/spectral.hpp"

#include <algorithm>
#include <thread>

namespace lmmt {

namespace {

Matrix inverse(const Matrix& b) {
    const std::size_t n = b.rows();
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) {
        auto x = solve(b, unit_vector(n, i));
        if (!x) throw Error("basis change is singular");
        cols.push_back(std::move(*x));
    }
    return Matrix::from_columns(n, cols);
}

KForm restrict_to_first(const KForm& a, unsigned m) {
    KForm out(m, a.degree());
    const Mask keep = full_mask(m);
    for (const auto& [mask, c] : a.terms()) {
        if ((mask & ~keep) == 0) out.add_term(mask, c);
    }
    return out;
}

KForm extend_by_zero(const KForm& a, unsigned n) {
    KForm out(n, a.degree());
    for (const auto& [mask, c] : a.terms()) out.add_term(mask, c);
    return out;
}

}  // namespace

IdealSplit make_split(const LieAlgebra& g, const std::vector<Vector>& ideal_vectors) {
    const unsigned n = g.dimension();
    IdealSplit s;
    s.original = g;
    s.ideal = span_basis(n, ideal_vectors);
    for (const auto& v : derived_algebra(g)) {
        if (!in_span(n, s.ideal, v)) throw ValidationError("ideal does not contain g', the quotient is not abelian");
    }
    for (unsigned i = 0; i < n; ++i) {
        for (const auto& k : s.ideal) {
            if (!in_span(n, s.ideal, g.bracket(unit_vector(n, i), k))) {
                throw ValidationError("subspace is not an ideal");
            }
        }
    }
    std::vector<Vector> basis = s.ideal;
    for (unsigned i = 0; i < n && basis.size() < n; ++i) {
        const Vector e = unit_vector(n, i);
        if (in_span(n, basis, e)) continue;
        basis.push_back(e);
        s.complement.push_back(e);
    }

    const Matrix b = Matrix::from_columns(n, basis);
    const Matrix binv = inverse(b);
    StructureConstants sc;
    sc.dim = n;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            const Vector br = binv * g.bracket(basis[i], basis[j]);
            for (unsigned k = 0; k < n; ++k) sc.add(i, j, k, br[k]);
        }
    }
    s.adapted = LieAlgebra(sc);

    const unsigned m = s.ideal_dim();
    StructureConstants kc;
    kc.dim = m;
    for (const auto& [ij, row] : sc.brackets) {
        if (ij.second >= m) continue;
        for (const auto& [k, c] : row) kc.add(ij.first, ij.second, static_cast<unsigned>(k), c);
    }
    s.ideal_algebra = LieAlgebra(std::move(kc));
    return s;
}

IdealSplit make_split(const LieAlgebra& g, const std::vector<unsigned>& basis_indices) {
    std::vector<Vector> vs;
    for (unsigned i : basis_indices) {
        if (i == 0 || i > g.dimension()) throw DimensionError("ideal basis index out of range");
        vs.push_back(unit_vector(g.dimension(), i - 1));
    }
    return make_split(g, vs);
}

InvariantCohomology invariant_cohomology(const IdealSplit& split, unsigned q) {
    const unsigned n = split.adapted.dimension();
    const unsigned m = split.ideal_dim();
    const unsigned a = split.quotient_dim();
    InvariantCohomology out;
    out.degree = q;
    if (q > m) {
        for (unsigned i = 0; i < a; ++i) out.operators.emplace_back(0, 0);
        return out;
    }
    const CohomologyBasis hb = cohomology_basis(split.ideal_algebra, q);
    out.classes = hb.classes;
    out.cohomology_dim = hb.classes.size();
    const std::size_t h = out.cohomology_dim;
    const std::size_t len = binomial(m, q);

    // [classes | coboundaries] coordinates of a cocycle of k.
    std::vector<Vector> cols;
    for (const auto& c : hb.classes) cols.push_back(c.to_vector());
    for (const auto& c : hb.coboundaries) cols.push_back(c.to_vector());
    const Matrix coords = Matrix::from_columns(len, cols);

    for (unsigned i = 0; i < a; ++i) {
        const KVector ai = KVector::basis(n, {m + i + 1});
        std::vector<Vector> images;
        for (const auto& c : hb.classes) {
            const KForm act = restrict_to_first(contract(ai, differential(split.adapted, extend_by_zero(c, n))), m);
            if (!differential(split.ideal_algebra, act).is_zero()) {
                throw Error("induced action does not preserve cocycles");
            }
            auto x = solve(coords, act.to_vector());
            if (!x) throw Error("induced action leaves the cocycle space");
            x->resize(h);
            images.push_back(std::move(*x));
        }
        out.operators.push_back(Matrix::from_columns(h, images));
    }

    Matrix stacked(0, h);
    for (const auto& op : out.operators) stacked = stacked.stacked(op);
    std::vector<Vector> joint;
    if (h > 0) joint = kernel_basis(stacked);
    out.invariant_dim = joint.size();
    for (const auto& v : joint) {
        KForm f(m, q);
        for (std::size_t j = 0; j < h; ++j) {
            if (!v[j].is_zero()) f += v[j] * out.classes[j];
        }
        out.invariant.push_back(std::move(f));
    }
    return out;
}

std::size_t SpectralPage::at(unsigned p, unsigned q) const {
    auto it = table.find({p, q});
    return it == table.end() ? 0 : it->second;
}

SpectralPage hs_page(const IdealSplit& split, unsigned level, unsigned max_q) {
    const unsigned a = split.quotient_dim();
    if (a == 0 || a > 2) throw ValidationError("hs_page: quotient dimension must be 1 or 2");
    if (level != 1 && level != 2) throw Error("hs_page: level must be 1 or 2");
    SpectralPage page;
    page.level = level;
    page.quotient_dim = a;
    for (unsigned q = 0; q <= max_q; ++q) {
        const InvariantCohomology ic = invariant_cohomology(split, q);
        const std::size_t h = ic.cohomology_dim;
        if (level == 1) {
            for (unsigned p = 0; p <= a; ++p) page.table[{p, q}] = binomial(a, p) * h;
            continue;
        }
        if (h == 0) {
            for (unsigned p = 0; p <= a; ++p) page.table[{p, q}] = 0;
            continue;
        }
        if (a == 1) {
            const std::size_t r = rank(ic.operators[0]);
            page.table[{0, q}] = h - r;
            page.table[{1, q}] = h - r;
            continue;
        }
        const Matrix& A = ic.operators[0];
        const Matrix& B = ic.operators[1];
        // v -> (Av, Bv);  (f1, f2) -> A f2 - B f1
        const Matrix d0 = A.stacked(B);
        const Matrix d1 = B.scaled(Scalar(-1)).augmented(A);
        if (!(d1 * d0).is_zero()) throw Error("hs_page: induced operators do not commute");
        const std::size_t r0 = rank(d0);
        const std::size_t r1 = rank(d1);
        page.table[{0, q}] = h - r0;
        page.table[{1, q}] = 2 * h - r1 - r0;
        page.table[{2, q}] = h - r1;
    }
    return page;
}

std::vector<std::vector<Vector>> codim_one_ideals(const LieAlgebra& g) {
    const unsigned n = g.dimension();
    const auto closed = n == 0 ? std::vector<Vector>{} : kernel_basis(ce_differential(g, 1));
    std::vector<Vector> grid = closed;
    for (std::size_t i = 0; i < closed.size(); ++i) {
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            grid.push_back(closed[i] + closed[j]);
            grid.push_back(closed[i] - closed[j]);
        }
    }
    std::vector<std::vector<Vector>> out;
    for (const auto& c : grid) {
        auto k = span_basis(n, kernel_basis(Matrix::from_rows(n, {c})));
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(std::move(k));
    }
    return out;
}

namespace {

IdealVerdict verdict_for(const LieAlgebra& g, const std::vector<Vector>& ideal, unsigned from) {
    const IdealSplit split = make_split(g, ideal);
    IdealVerdict v;
    v.ideal = split.ideal;
    v.vanishes = true;
    for (unsigned i = 0; i <= 4; ++i) {
        v.invariant[i] = invariant_cohomology(split, i).invariant_dim;
        if (i >= from && v.invariant[i] != 0) v.vanishes = false;
    }
    return v;
}

}  // namespace

Structure34Report verify_34_structure(const LieAlgebra& g) {
    Structure34Report r;
    const unsigned n = g.dimension();
    r.direct = betti_number(g, 3) == 0 && betti_number(g, 4) == 0;
    r.solvable = structural_report(g).solvable;
    const auto derived = derived_algebra(g);
    r.codim = n - derived.size();

    r.theorem_side = r.solvable;
    for (const auto& k : codim_one_ideals(g)) {
        r.codim_one.push_back(verdict_for(g, k, 2));
        if (!r.codim_one.back().vanishes) r.theorem_side = false;
    }
    r.consistent = r.theorem_side == r.direct;
    if (r.codim >= 2) {
        r.derived = verdict_for(g, derived, 1);
        r.proposition_side = r.derived->vanishes;
        r.consistent = r.consistent && (*r.proposition_side == r.direct);
    }
    return r;
}

Reconstruction reconstruction_check(const IdealSplit& split) {
    if (split.quotient_dim() != 1) throw ValidationError("reconstruction needs a codimension one ideal");
    Reconstruction r;
    r.b3 = betti_number(split.original, 3);
    r.b4 = betti_number(split.original, 4);
    r.inv2 = invariant_cohomology(split, 2).invariant_dim;
    r.inv3 = invariant_cohomology(split, 3).invariant_dim;
    r.inv4 = invariant_cohomology(split, 4).invariant_dim;
    r.holds = r.b3 == r.inv3 + r.inv2 && r.b4 == r.inv4 + r.inv3;
    return r;
}

bool abelian_eigen_criterion(const std::vector<Rational>& lambdas) {
    const std::size_t m = lambdas.size();
    // Subsets of size 2..4 as sorted index tuples.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Rational s2 = lambdas[i] + lambdas[j];
            if (s2 == 0) return false;
            for (std::size_t k = j + 1; k < m; ++k) {
                const Rational s3 = s2 + lambdas[k];
                if (s3 == 0) return false;
                for (std::size_t l = k + 1; l < m; ++l) {
                    if (s3 + lambdas[l] == 0) return false;
                }
            }
        }
    }
    return true;
}

LieAlgebra eigen_extension(const std::vector<Rational>& lambdas) {
    const unsigned m = static_cast<unsigned>(lambdas.size());
    const LieAlgebra k = LieAlgebra::abelian(m);
    Matrix t(m, m);
    for (unsigned i = 0; i < m; ++i) t.set(i, i, Scalar(lambdas[i]));
    return extend_by_derivations(k, {Derivation(k, t)});
}

ExtensionSearch search_34_extensions(unsigned m, long lo, long hi) {
    if (m == 0) throw DimensionError("search_34_extensions: m must be positive");
    if (lo > hi) throw Error("search_34_extensions: empty eigenvalue range");
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur(m, lo);
    while (true) {
        tuples.push_back(cur);
        // next non-decreasing tuple
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && cur[pos] == hi) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (unsigned i = pos + 1; i < m; ++i) cur[i] = cur[pos];
    }

    std::vector<ExtensionCertificate> certs(tuples.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < tuples.size(); i += step) {
            ExtensionCertificate& c = certs[i];
            c.lambdas = tuples[i];
            std::vector<Rational> q(tuples[i].begin(), tuples[i].end());
            c.algebra = eigen_extension(q);
            c.criterion = abelian_eigen_criterion(q);
            c.betti = betti(c.algebra).betti;
            const auto b = [&](std::size_t k) { return k < c.betti.size() ? c.betti[k] : 0; };
            c.trivial34 = b(3) == 0 && b(4) == 0;
            c.agrees = c.criterion == c.trivial34;
        }
    };
    const unsigned threads = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t, threads);
    work(0, threads);
    for (auto& th : pool) th.join();

    ExtensionSearch out;
    out.examined = certs.size();
    for (auto& c : certs) {
        if (!c.agrees) out.disagreements.push_back(c);
        if (c.criterion) out.accepted.push_back(std::move(c));
    }
    return out;
}

}  // namespace lmmt
