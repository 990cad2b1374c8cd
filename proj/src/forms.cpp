#include "lmmt/forms.hpp"

#include <charconv>
#include <numeric>

namespace lmmt {

namespace {

struct Signed {
    int sign;
    std::initializer_list<unsigned> idx;
};

KForm from_list(unsigned n, std::initializer_list<Signed> terms) {
    KForm f(n, static_cast<unsigned>(terms.begin()->idx.size()));
    for (const auto& t : terms) f.add_term(mask_of(t.idx), Scalar(t.sign));
    return f;
}

KForm phi0() {
    return from_list(7, {{1, {1, 2, 3}}, {1, {1, 4, 5}}, {1, {1, 6, 7}}, {1, {2, 4, 6}},
                         {-1, {2, 5, 7}}, {-1, {3, 4, 7}}, {-1, {3, 5, 6}}});
}

KForm big_phi0() {
    return from_list(8, {{1, {1, 2, 3, 4}},  {1, {1, 2, 5, 6}},  {1, {3, 4, 7, 8}},  {1, {3, 4, 5, 6}},
                         {1, {1, 2, 7, 8}},  {1, {1, 3, 5, 7}},  {-1, {1, 3, 6, 8}}, {-1, {2, 4, 5, 7}},
                         {1, {2, 4, 6, 8}},  {-1, {1, 4, 5, 8}}, {-1, {1, 4, 6, 7}}, {-1, {2, 3, 5, 8}},
                         {-1, {2, 3, 6, 7}}, {1, {5, 6, 7, 8}}});
}

KForm rho0() {
    const Scalar half = Rational(1, 2);
    const Scalar r3 = Scalar(Rational(0), Rational(1, 2), 3);  // sqrt(3)/2
    KForm f(8, 3);
    f.add_term(mask_of({1, 2, 3}), 1);
    f.add_term(mask_of({1, 4, 7}), half);
    f.add_term(mask_of({1, 5, 6}), -half);
    f.add_term(mask_of({2, 4, 6}), half);
    f.add_term(mask_of({2, 5, 7}), half);
    f.add_term(mask_of({3, 4, 5}), half);
    f.add_term(mask_of({3, 6, 7}), -half);
    // e8 ∧ e45 = e458 and e8 ∧ e67 = e678 (even moves)
    f.add_term(mask_of({4, 5, 8}), r3);
    f.add_term(mask_of({6, 7, 8}), r3);
    return f;
}

unsigned parse_count(std::string_view s, std::string_view whole) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw Error("bad number in form name '" + std::string(whole) + "'");
    return v;
}

KForm symplectic(unsigned k, unsigned n) {
    if (2 * k > n) throw DimensionError("symplectic:k,n needs 2k <= n");
    KForm f(n, 2);
    for (unsigned i = 1; i <= k; ++i) f.add_term(mask_of({2 * i - 1, 2 * i}), 1);
    return f;
}

Vector form_as_vector(const KForm& a) {
    if (a.degree() != 1) throw DegreeError("expected a 1-form");
    Vector v(a.dimension());
    for (const auto& [m, c] : a.terms()) v[std::countr_zero(m)] = c;
    return v;
}

}  // namespace

KForm builtin_form(std::string_view name, long field) {
    if (name == "g2") return phi0();
    if (name == "spin7") return big_phi0();
    if (name == "psu3") {
        if (field != 3) throw Error("psu3 needs the field Q(sqrt(3)); pass --field sqrt=3");
        return rho0();
    }
    if (name == "cvol6") return from_list(6, {{1, {1, 3, 5}}, {-1, {1, 4, 6}}, {-1, {2, 3, 6}}, {-1, {2, 4, 5}}});
    if (name.starts_with("symplectic:")) {
        const auto rest = name.substr(11);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw Error("expected symplectic:k,n");
        return symplectic(parse_count(rest.substr(0, comma), name), parse_count(rest.substr(comma + 1), name));
    }
    if (name.starts_with("volume:")) {
        const unsigned n = parse_count(name.substr(7), name);
        if (n == 0 || n > 30) throw DimensionError("volume:n needs 1 <= n <= 30");
        return volume_form(n);
    }
    throw Error("unknown builtin form '" + std::string(name) + "'");
}

std::vector<std::string> builtin_form_names() {
    return {"g2", "spin7", "psu3", "cvol6", "symplectic:k,n", "volume:n"};
}

std::size_t two_form_rank(const KForm& omega) {
    if (omega.degree() != 2) throw DegreeError("two_form_rank: degree must be 2");
    const unsigned n = omega.dimension();
    Matrix m(n, n);
    for (const auto& [mask, c] : omega.terms()) {
        const auto idx = indices_of(mask);
        m.set(idx[0] - 1, idx[1] - 1, c);
        m.set(idx[1] - 1, idx[0] - 1, -c);
    }
    return rank(m);
}

TwoFormNormalForm two_form_normal_form(const KForm& omega) {
    if (omega.degree() != 2) throw DegreeError("two_form_normal_form: degree must be 2");
    const unsigned n = omega.dimension();
    TwoFormNormalForm out;
    KForm rest = omega;
    while (!rest.is_zero()) {
        // First basis vector X with X⌟ω ≠ 0.
        unsigned x = 0;
        KForm f2(n, 1);
        for (; x < n; ++x) {
            f2 = contract(KVector::basis(n, {x + 1}), rest);
            if (!f2.is_zero()) break;
        }
        const Vector f2v = form_as_vector(f2);
        unsigned j = 0;
        while (f2v[j].is_zero()) ++j;
        // Y = E_j / f2_j, f1 = ω(·, Y) = -(Y⌟ω)
        const Scalar scale = f2v[j].inverse();
        const KForm f1 = Scalar(-1) * scale * contract(KVector::basis(n, {j + 1}), rest);
        rest -= wedge(f1, f2);
        out.covectors.push_back(form_as_vector(f1));
        out.covectors.push_back(f2v);
        ++out.k;
    }
    std::vector<Vector> span = out.covectors;
    for (unsigned i = 0; i < n && out.covectors.size() < n; ++i) {
        const Vector e = unit_vector(n, i);
        if (in_span(n, span, e)) continue;
        span.push_back(e);
        out.covectors.push_back(e);
    }
    out.basis_change = Matrix::from_rows(n, out.covectors);
    return out;
}

KForm gl_action(const Matrix& a, const KForm& alpha) {
    const unsigned n = alpha.dimension();
    if (a.rows() != n || a.cols() != n) throw DimensionError("gl_action: matrix must be n x n");
    KForm out(n, alpha.degree());
    if (alpha.degree() == 0) return out;
    for (unsigned r = 0; r < n; ++r) {
        for (const auto& [c, v] : a.row(r)) {
            // E_{rc} acts by -e^c ∧ (E_r ⌟ α)
            const KForm t = wedge(KForm::basis(n, {static_cast<unsigned>(c) + 1}),
                                  contract(KVector::basis(n, {r + 1}), alpha));
            out -= v * t;
        }
    }
    return out;
}

Stabilizer stabilizer_algebra(const KForm& alpha) {
    const unsigned n = alpha.dimension();
    const std::size_t rows = binomial(n, alpha.degree());
    std::vector<Vector> cols;
    cols.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned r = 0; r < n; ++r) {
        const KForm inner = alpha.degree() == 0 ? KForm(n, 0) : contract(KVector::basis(n, {r + 1}), alpha);
        for (unsigned c = 0; c < n; ++c) {
            if (alpha.degree() == 0) {
                cols.push_back(Vector(rows));
                continue;
            }
            cols.push_back((Scalar(-1) * wedge(KForm::basis(n, {c + 1}), inner)).to_vector());
        }
    }
    Stabilizer s;
    for (const auto& v : kernel_basis(Matrix::from_columns(rows, cols))) {
        Matrix a(n, n);
        for (unsigned r = 0; r < n; ++r) {
            for (unsigned c = 0; c < n; ++c) a.set(r, c, v[r * n + c]);
        }
        s.basis.push_back(std::move(a));
    }
    s.dimension = s.basis.size();
    return s;
}

FormAnalysis weak_nondegenerate(const KForm& alpha) {
    const unsigned n = alpha.dimension();
    FormAnalysis fa;
    fa.form = alpha;
    if (alpha.degree() == 0) {
        for (unsigned i = 0; i < n; ++i) fa.kernel.push_back(unit_vector(n, i));
    } else {
        std::vector<Vector> cols;
        for (unsigned i = 0; i < n; ++i) cols.push_back(contract(KVector::basis(n, {i + 1}), alpha).to_vector());
        fa.kernel = kernel_basis(Matrix::from_columns(binomial(n, alpha.degree() - 1), cols));
    }
    fa.weakly_nondegenerate = fa.kernel.empty();
    return fa;
}

FormAnalysis is_stable(const KForm& alpha) {
    FormAnalysis fa = weak_nondegenerate(alpha);
    const unsigned n = alpha.dimension();
    fa.stabilizer_dim = stabilizer_algebra(alpha).dimension;
    fa.orbit_dim = static_cast<std::size_t>(n) * n - fa.stabilizer_dim;
    fa.stable = fa.orbit_dim == binomial(n, alpha.degree());
    return fa;
}

std::optional<KForm> construct_nondegenerate(unsigned r, unsigned n) {
    if (r < 3) throw DegreeError("construct_nondegenerate: degree must be at least 3");
    if (n < r || n == r + 1) return std::nullopt;
    if (n > 30) throw DimensionError("construct_nondegenerate: dimension too large");
    if (r == 3) {
        if (n % 2 == 1) {
            return wedge(symplectic((n - 1) / 2, n), KForm::basis(n, {n}));
        }
        // R^n = R^3 + R^{n-3}
        const KForm inner = *construct_nondegenerate(3, n - 3);
        std::vector<unsigned> target(n - 3);
        std::iota(target.begin(), target.end(), 4U);
        return KForm::basis(n, {1, 2, 3}) + reindex(inner, n, target);
    }
    const KForm inner = *construct_nondegenerate(r - 1, n - 1);
    std::vector<unsigned> target(n - 1);
    std::iota(target.begin(), target.end(), 1U);
    return wedge(reindex(inner, n, target), KForm::basis(n, {n}));
}

bool stability_admissible(unsigned r, unsigned n) {
    if (r == 0 || r > n) return false;
    const long lr = r, ln = n;
    if (lr == 1 || lr == 2 || lr == ln - 2 || lr == ln - 1 || lr == ln) return true;
    return (lr == 3 || lr == ln - 3) && (n == 6 || n == 7 || n == 8);
}

bool fully_nondeg_admissible(unsigned r, unsigned n) {
    if (r < 3) throw DegreeError("fully_nondeg_admissible: degree must be at least 3");
    return r == n || (r == 3 && n == 7) || (r == 4 && n == 8);
}

namespace {

std::string matrix_text(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += m.at(r, c).to_string();
        }
    }
    return s + "]";
}

HolonomyIdentity g2_metric() {
    const KForm phi = phi0();
    Matrix g(7, 7);
    const Mask vol = full_mask(7);
    for (unsigned i = 1; i <= 7; ++i) {
        const KForm a = contract(KVector::basis(7, {i}), phi);
        for (unsigned j = 1; j <= 7; ++j) {
            const KForm b = contract(KVector::basis(7, {j}), phi);
            g.set(i - 1, j - 1, wedge(wedge(a, b), phi).coefficient(vol));
        }
    }
    const Matrix expected = Matrix::identity(7).scaled(Scalar(6));
    return {"g2metric", g == expected, matrix_text(g), matrix_text(expected)};
}

HolonomyIdentity spin7_vol() {
    const KForm phi = big_phi0();
    const KForm sq = wedge(phi, phi);
    const KForm expected = Scalar(14) * volume_form(8);
    return {"spin7vol", sq == expected, sq.to_string(), expected.to_string()};
}

HolonomyIdentity spin7_bivector() {
    const KForm phi = big_phi0();
    const KForm expected = Scalar(6) * volume_form(8);
    bool ok = true;
    std::string bad;
    for (unsigned i = 1; i <= 8; ++i) {
        for (unsigned j = i + 1; j <= 8; ++j) {
            const KForm w = contract(KVector::basis(8, {i, j}), phi);
            const KForm v = wedge(wedge(w, w), phi);
            if (v != expected) {
                ok = false;
                if (bad.empty()) bad = "E" + std::to_string(i) + std::to_string(j) + ": " + v.to_string();
            }
        }
    }
    return {"spin7bivector", ok, ok ? "6*e12345678 for all 28 pairs" : bad, "6*e12345678 for all 28 pairs"};
}

HolonomyIdentity spin7_split() {
    const KForm phi = big_phi0();
    const KForm lower = from_list(8, {{1, {2, 3, 4}}, {1, {2, 5, 6}}, {1, {2, 7, 8}}, {1, {3, 5, 7}},
                                      {-1, {3, 6, 8}}, {-1, {4, 5, 8}}, {-1, {4, 6, 7}}});
    const KForm upper = from_list(8, {{1, {5, 6, 7, 8}}, {1, {3, 4, 7, 8}}, {1, {3, 4, 5, 6}}, {1, {2, 4, 6, 8}},
                                      {-1, {2, 4, 5, 7}}, {-1, {2, 3, 6, 7}}, {-1, {2, 3, 5, 8}}});
    const KForm e1_part = contract(KVector::basis(8, {1}), phi);
    const KForm rest = phi - wedge(KForm::basis(8, {1}), e1_part);

    // Hodge star on span(E2..E8): move indices 2..8 down to 1..7 and back.
    std::vector<unsigned> down(8, 0), up(7);
    KForm phi7(7, 3);
    for (const auto& [m, c] : e1_part.terms()) phi7.add_term(m >> 1, c);
    std::iota(up.begin(), up.end(), 2U);
    const KForm star = reindex(hodge_star(phi7), 8, up);

    const bool ok = e1_part == lower && rest == upper && star == upper;
    return {"spin7split", ok, "E1-part " + e1_part.to_string() + "; rest " + rest.to_string() + "; *7 " + star.to_string(),
            "E1-part " + lower.to_string() + "; rest " + upper.to_string()};
}

HolonomyIdentity spin7_rank() {
    const KForm w = contract(KVector::basis(8, {1, 2}), big_phi0());
    const KForm expected = from_list(8, {{1, {3, 4}}, {1, {5, 6}}, {1, {7, 8}}});
    const std::size_t rk = two_form_rank(w);
    return {"spin7rank", rk == 6 && w == expected, w.to_string() + " rank " + std::to_string(rk),
            expected.to_string() + " rank 6"};
}

}  // namespace

HolonomyIdentity holonomy_identity(std::string_view which) {
    if (which == "g2metric") return g2_metric();
    if (which == "spin7vol") return spin7_vol();
    if (which == "spin7bivector") return spin7_bivector();
    if (which == "spin7split") return spin7_split();
    if (which == "spin7rank") return spin7_rank();
    throw Error("unknown identity '" + std::string(which) + "'");
}

std::vector<std::string> holonomy_identity_names() {
    return {"g2metric", "spin7vol", "spin7bivector", "spin7split", "spin7rank"};
}

}  // namespace lmmt
