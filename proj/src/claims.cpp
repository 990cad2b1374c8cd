#include "lmmt/claims.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "lmmt/cohomology.hpp"
#include "lmmt/forms.hpp"
#include "lmmt/multimoment.hpp"
#include "lmmt/random.hpp"
#include "lmmt/salamon.hpp"
#include "lmmt/spectral.hpp"

namespace lmmt {

const std::vector<CatalogEntry>& triviality_catalog() {
    static const std::vector<CatalogEntry> c = {
        {"r2-extension", "0,12,2.13"},
        {"heisenberg-4", "0,0,13+24,14"},
        {"r4-extension", "0,12,13,14,1.15"},
        {"heisenberg-5a", "0,0,13+24,14-23,2.15"},
        {"heisenberg-5b", "0,0,13+24,14,2.15"},
        {"unimodular-7", "0,0,13+23,14,15,16,-4.17-27"},
        {"graded-8", "0,12,3.13,4.14+23,5.15+24,6.16+25,7.17+34+26"},
    };
    return c;
}

const std::vector<CatalogEntry>& corrected_catalog() {
    static const std::vector<CatalogEntry> c = {
        {"heisenberg-5a-full", "0,0,13+24,14-23,2.15+34"},
        {"heisenberg-5b-full", "0,0,13+24,14,2.15+34"},
    };
    return c;
}

namespace {

template <class T>
std::string seq(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

ClaimOutcome verdict(bool ok, std::string computed, std::string expected) {
    return {ok, std::move(computed), std::move(expected)};
}

std::vector<CatalogEntry> full_catalog() {
    auto all = triviality_catalog();
    for (const auto& e : corrected_catalog()) all.push_back(e);
    return all;
}

// ---- forms ----

ClaimOutcome stabilizer_claim(const char* name, long field, std::size_t expected) {
    const auto dim = stabilizer_algebra(builtin_form(name, field)).dimension;
    return verdict(dim == expected, "dim " + std::to_string(dim), "dim " + std::to_string(expected));
}

ClaimOutcome orbit_claim(const char* name, long field, std::size_t orbit, bool stable) {
    const FormAnalysis fa = is_stable(builtin_form(name, field));
    auto text = [](std::size_t o, bool s) { return "orbit " + std::to_string(o) + (s ? ", stable" : ", not stable"); };
    return verdict(fa.orbit_dim == orbit && fa.stable == stable, text(fa.orbit_dim, fa.stable), text(orbit, stable));
}

ClaimOutcome psu3_triple() {
    const LieAlgebra su3 = builtin_algebra("su3");
    const KForm rho = triple_form(su3, killing_form(su3).scaled(Scalar(-1)));
    const bool closed = differential(su3, rho).is_zero();
    const auto dim = stabilizer_algebra(rho).dimension;
    return verdict(closed && dim == 8, std::string(closed ? "closed" : "not closed") + ", stabilizer " + std::to_string(dim),
                   "closed, stabilizer 8");
}

ClaimOutcome identity_claim(const char* which) {
    const HolonomyIdentity h = holonomy_identity(which);
    return verdict(h.holds, h.computed, h.expected);
}

// ---- su(2) ----

ClaimOutcome su2_betti() {
    const auto b = betti(builtin_algebra("su2")).betti;
    const std::vector<std::size_t> want{1, 0, 0, 1};
    return verdict(b == want, seq(b), seq(want));
}

ClaimOutcome su2_kernel() {
    const LieAlgebra g = builtin_algebra("su2");
    const std::vector<std::size_t> got{lie_kernel(g, 2).basis.size(), lie_kernel(g, 3).basis.size()};
    const std::vector<std::size_t> want{0, 1};
    return verdict(got == want, "dims " + seq(got), "dims " + seq(want));
}

ClaimOutcome su2_triple() {
    const LieAlgebra g = builtin_algebra("su2");
    const KForm gamma = triple_form(g, killing_form(g).scaled(Scalar(Rational(-1, 8))));
    const bool closed = differential(g, gamma).is_zero();
    const bool exact = is_exact(g, gamma);
    const bool top = gamma.terms().size() == 1 && gamma.terms().begin()->first == full_mask(3);
    std::string got = gamma.to_string() + (closed ? ", closed" : ", not closed") + (exact ? ", exact" : ", not exact");
    return verdict(closed && !exact && top, got, "c*e123, closed, not exact");
}

// ---- triviality ----

ClaimOutcome trivial_claim(const CatalogEntry& e) {
    const LieAlgebra g = parse_salamon(e.salamon);
    const TrivialityResult t = is_trivial(g, {3, 4});
    return verdict(t.trivial, "b3,b4 = " + seq(t.betti), "b3,b4 = (0,0)");
}

ClaimOutcome unimodular_claim() {
    const LieAlgebra g = parse_salamon(triviality_catalog()[5].salamon);
    const CohomologyReport r = betti(g);
    const bool ok = r.betti[3] == 0 && r.betti[4] == 0 && r.betti[1] == 2 && r.betti[7] == 1;
    return verdict(ok, "betti " + seq(r.betti), "b1 = 2, b3 = b4 = 0, b7 = 1");
}

ClaimOutcome corrected_claim() {
    std::string got;
    bool ok = true;
    for (const auto& e : corrected_catalog()) {
        const TrivialityResult t = is_trivial(parse_salamon(e.salamon), {3, 4});
        ok = ok && t.trivial;
        got += (got.empty() ? "" : "; ") + e.name + " " + seq(t.betti);
    }
    return verdict(ok, got, "b3 = b4 = 0 for both");
}

ClaimOutcome table_claim(unsigned dim, const std::set<std::vector<std::size_t>>& allowed) {
    bool ok = true;
    std::string got;
    std::size_t count = 0;
    for (const auto& e : full_catalog()) {
        const LieAlgebra g = parse_salamon(e.salamon);
        if (g.dimension() != dim) continue;
        auto b = betti(g).betti;
        b.erase(b.begin());
        ok = ok && allowed.count(b);
        got += (got.empty() ? "" : " ") + seq(b);
        ++count;
    }
    std::string want;
    for (const auto& a : allowed) want += (want.empty() ? "" : " ") + seq(a);
    return verdict(ok && count > 0, got, "subset of " + want);
}

// ---- Künneth ----

ClaimOutcome kunneth_claim(const LieAlgebra& h1, const LieAlgebra& h2, std::size_t b3) {
    const KunnethReport k = kunneth_check(h1, h2);
    const bool ok = k.b3_holds && k.b4_holds && k.b3_direct == b3;
    return verdict(ok,
                   "b3 " + std::to_string(k.b3_direct) + " vs " + std::to_string(k.b3_formula) + ", b4 " +
                       std::to_string(k.b4_direct) + " vs " + std::to_string(k.b4_formula),
                   "b3 " + std::to_string(b3) + " on both sides, b4 equal");
}

// ---- structure theorem ----

std::string structure_text(const Structure34Report& r) {
    std::string s = std::string("direct ") + (r.direct ? "trivial" : "non-trivial") + ", invariant side " +
                    (r.theorem_side ? "trivial" : "non-trivial");
    if (r.proposition_side) s += std::string(", derived-ideal side ") + (*r.proposition_side ? "trivial" : "non-trivial");
    return s;
}

ClaimOutcome structure_catalog() {
    bool ok = true;
    std::string bad;
    for (const auto& e : full_catalog()) {
        const Structure34Report r = verify_34_structure(parse_salamon(e.salamon));
        const bool good = r.consistent && r.direct;
        ok = ok && good;
        if (!good) bad += e.name + ": " + structure_text(r) + "; ";
    }
    return verdict(ok, ok ? "all consistent and trivial" : bad, "all consistent and trivial");
}

ClaimOutcome structure_mu(long mu) {
    const Structure34Report r = verify_34_structure(parse_salamon("0,12,mu.13", {{"mu", Rational(mu)}}));
    return verdict(r.consistent, structure_text(r), "both sides agree");
}

ClaimOutcome reconstruction_claim() {
    bool ok = true;
    std::size_t splits = 0;
    std::string bad;
    for (const auto& e : full_catalog()) {
        const LieAlgebra g = parse_salamon(e.salamon);
        for (const auto& ideal : codim_one_ideals(g)) {
            const Reconstruction r = reconstruction_check(make_split(g, ideal));
            ++splits;
            if (!r.holds) {
                ok = false;
                bad += e.name + " b3=" + std::to_string(r.b3) + " b4=" + std::to_string(r.b4) + "; ";
            }
        }
    }
    return verdict(ok && splits > 0, ok ? std::to_string(splits) + " splits reconstruct" : bad,
                   "b3 = inv3 + inv2, b4 = inv4 + inv3 on every split");
}

// ---- multi-moment maps ----

ClaimOutcome multimoment_unique() {
    const LieAlgebra g = parse_salamon("0,12,13,14,1.15");
    const CohomologyBasis z = cohomology_basis(g, 4);
    std::size_t good = 0;
    for (const auto& psi : z.cocycles) {
        const MultimomentSolution s = solve_multimoment(g, psi);
        if (s.status == MultimomentSolution::Status::unique && s.nu && d_P(g, *s.nu) == psi) ++good;
    }
    return verdict(good == z.cocycles.size() && good > 0,
                   std::to_string(good) + " of " + std::to_string(z.cocycles.size()) + " unique with d_P nu = psi",
                   "all " + std::to_string(z.cocycles.size()) + " unique");
}

ClaimOutcome multimoment_su2() {
    const LieAlgebra g = builtin_algebra("su2");
    const KForm gamma = triple_form(g, killing_form(g).scaled(Scalar(Rational(-1, 8))));
    const MultimomentSolution s = solve_multimoment(g, gamma);
    const bool ok = s.status == MultimomentSolution::Status::no_existence && s.obstruction_dimension == 1;
    const char* status = s.status == MultimomentSolution::Status::unique       ? "unique"
                         : s.status == MultimomentSolution::Status::non_unique ? "non-unique"
                                                                               : "no existence";
    return verdict(ok, std::string(status) + ", obstruction dim " + std::to_string(s.obstruction_dimension),
                   "no existence, obstruction dim 1");
}

// ---- randomized properties ----

std::vector<LieAlgebra> property_algebras() {
    RandomSource rs(kPropertySeed);
    std::vector<LieAlgebra> out;
    for (const char* name : {"su2", "sl2", "heisenberg", "abelian:4", "su3"}) out.push_back(builtin_algebra(name));
    for (const auto& e : full_catalog()) out.push_back(parse_salamon(e.salamon));
    for (unsigned n = 2; n <= 6; ++n) {
        for (int i = 0; i < 6; ++i) {
            out.push_back(rs.nilpotent(n));
            out.push_back(rs.solvable(n));
        }
    }
    return out;
}

std::vector<LieAlgebra> nilpotent_algebras() {
    RandomSource rs(kPropertySeed + 1);
    std::vector<LieAlgebra> out{builtin_algebra("heisenberg"), builtin_algebra("abelian:5"),
                                parse_salamon("0,0,12,13"), parse_salamon("0,0,12,13,14,15")};
    for (unsigned n = 2; n <= 6; ++n) {
        for (int i = 0; i < 10; ++i) out.push_back(rs.nilpotent(n));
    }
    return out;
}

ClaimOutcome property_ll() {
    std::size_t checked = 0, bad = 0;
    for (const auto& g : property_algebras()) {
        for (unsigned s = 2; s <= g.dimension(); ++s) {
            ++checked;
            if (!(lie_L_matrix(g, s - 1) * lie_L_matrix(g, s)).is_zero()) ++bad;
        }
    }
    return verdict(bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " compositions nonzero",
                   "L∘L = 0 everywhere");
}

ClaimOutcome property_dd() {
    std::size_t checked = 0, bad = 0;
    for (const auto& g : property_algebras()) {
        for (unsigned k = 0; k + 2 <= g.dimension(); ++k) {
            ++checked;
            if (!(ce_differential(g, k + 1) * ce_differential(g, k)).is_zero()) ++bad;
        }
    }
    return verdict(bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " compositions nonzero",
                   "d∘d = 0 everywhere");
}

ClaimOutcome property_euler() {
    std::size_t checked = 0, bad = 0;
    for (const auto& g : property_algebras()) {
        ++checked;
        if (betti(g).euler_characteristic() != 0) ++bad;
    }
    return verdict(bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " with χ != 0", "χ = 0");
}

ClaimOutcome property_poincare() {
    std::size_t checked = 0, bad = 0;
    for (const auto& g : property_algebras()) {
        const CohomologyReport r = betti(g);
        if (!r.unimodular) continue;
        ++checked;
        auto rev = r.betti;
        std::reverse(rev.begin(), rev.end());
        if (rev != r.betti) ++bad;
    }
    return verdict(bad == 0 && checked > 0,
                   std::to_string(bad) + " of " + std::to_string(checked) + " unimodular algebras asymmetric",
                   "b_k = b_{n-k} on unimodular algebras");
}

ClaimOutcome property_dixmier() {
    std::size_t checked = 0, bad = 0;
    for (const auto& g : nilpotent_algebras()) {
        if (!structural_report(g).nilpotent) {
            ++bad;
            continue;
        }
        ++checked;
        const auto b = betti(g).betti;
        for (unsigned k = 1; k + 1 <= g.dimension(); ++k) {
            if (b[k] < 2) {
                ++bad;
                break;
            }
        }
    }
    return verdict(bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " nilpotent algebras violate",
                   "b_k >= 2 for 0 < k < n");
}

ClaimOutcome property_cartan() {
    RandomSource rs(kPropertySeed + 2);
    std::size_t bad = 0;
    const std::size_t total = 200;
    for (std::size_t t = 0; t < total; ++t) {
        const unsigned n = static_cast<unsigned>(rs.integer(3, 5));
        const LieAlgebra g = rs.solvable(n);
        const unsigned r = static_cast<unsigned>(rs.integer(1, n));
        const unsigned s = static_cast<unsigned>(rs.integer(1, r));
        const KForm alpha = rs.form(n, r);
        std::vector<Vector> p;
        for (unsigned i = 0; i < s; ++i) p.push_back(rs.vector(n));
        if (!cartan_identity_check(g, alpha, p).holds) ++bad;
    }
    return verdict(bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " triples fail",
                   "identity holds on all 200 triples");
}

ClaimOutcome property_cartan_invariant() {
    RandomSource rs(kPropertySeed + 3);
    struct Case {
        LieAlgebra g;
        KForm alpha;
    };
    std::vector<Case> cases;
    const LieAlgebra su2 = builtin_algebra("su2");
    const LieAlgebra su3 = builtin_algebra("su3");
    cases.push_back({su2, volume_form(3)});
    cases.push_back({su3, triple_form(su3, killing_form(su3).scaled(Scalar(-1)))});
    for (unsigned n = 3; n <= 6; ++n) {
        const LieAlgebra g = rs.nilpotent(n);
        cases.push_back({g, volume_form(n)});
    }
    std::size_t checked = 0, bad = 0;
    for (const auto& c : cases) {
        const unsigned n = c.g.dimension();
        for (unsigned s = 1; s <= std::min(3U, c.alpha.degree()); ++s) {
            std::vector<Vector> p;
            for (unsigned i = 0; i < s; ++i) p.push_back(rs.vector(n));
            const CartanReport r = cartan_identity_check(c.g, c.alpha, p);
            ++checked;
            if (!r.invariant || !r.lie_term.is_zero() || r.lhs != r.bracket_term) ++bad;
        }
    }
    return verdict(bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " invariant cases fail",
                   "lhs = L(P)⌟α with vanishing Lie term");
}

// ---- eigenvalue criterion ----

ClaimOutcome eigen_claim(unsigned m) {
    std::vector<long> t(m, -3);
    std::size_t examined = 0, bad = 0;
    std::string first_bad;
    while (true) {
        std::vector<Rational> lambdas;
        for (long v : t) lambdas.emplace_back(v);
        const bool criterion = abelian_eigen_criterion(lambdas);
        const LieAlgebra g = eigen_extension(lambdas);
        const bool direct = betti_number(g, 3) == 0 && betti_number(g, 4) == 0;
        ++examined;
        if (criterion != direct) {
            ++bad;
            if (first_bad.empty()) first_bad = " first " + seq(t);
        }
        unsigned i = 0;
        while (i < m && t[i] == 3) t[i++] = -3;
        if (i == m) break;
        ++t[i];
    }
    return verdict(bad == 0, std::to_string(examined) + " tuples, " + std::to_string(bad) + " disagreements" + first_bad,
                   "no disagreements");
}

// ---- admissibility ----

ClaimOutcome stability_table() {
    // A generic form lies in the open orbit whenever one exists.
    RandomSource rs(kPropertySeed + 4);
    std::string bad;
    std::size_t pairs = 0;
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned r = 0; r <= n; ++r) {
            ++pairs;
            bool generic_stable = false;
            if (r > 0) {
                KForm f(n, r);
                for (Mask m : basis_masks(n, r)) f.add_term(m, Scalar(rs.integer(-3, 3)));
                if (f.is_zero()) f.add_term(basis_masks(n, r).front(), 1);
                generic_stable = is_stable(f).stable;
            }
            if (generic_stable != stability_admissible(r, n)) {
                bad += "(" + std::to_string(r) + "," + std::to_string(n) + ") ";
            }
        }
    }
    return verdict(bad.empty(), bad.empty() ? std::to_string(pairs) + " pairs match" : "mismatch at " + bad,
                   "list matches generic orbit dimension");
}

ClaimOutcome fully_table() {
    std::string got;
    for (unsigned n = 3; n <= 10; ++n) {
        for (unsigned r = 3; r <= n; ++r) {
            if (fully_nondeg_admissible(r, n) && r != n) got += "(" + std::to_string(r) + "," + std::to_string(n) + ") ";
        }
    }
    bool diag = true;
    for (unsigned n = 3; n <= 10; ++n) diag = diag && fully_nondeg_admissible(n, n);
    const std::string want = "(3,7) (4,8) ";
    return verdict(diag && got == want, "r = n and " + got, "r = n and " + want);
}

ClaimOutcome construct_claim() {
    std::string bad;
    std::size_t built = 0;
    for (unsigned n = 3; n <= 10; ++n) {
        for (unsigned r = 3; r <= 10; ++r) {
            const auto f = construct_nondegenerate(r, n);
            const bool expect = n >= r && n != r + 1;
            if (f.has_value() != expect) bad += "(" + std::to_string(r) + "," + std::to_string(n) + ") ";
            if (f) {
                ++built;
                if (!weak_nondegenerate(*f).weakly_nondegenerate) bad += "degenerate(" + std::to_string(r) + "," + std::to_string(n) + ") ";
            }
        }
    }
    return verdict(bad.empty(), bad.empty() ? std::to_string(built) + " forms, all non-degenerate" : bad,
                   "exists iff n >= r and n != r+1, all non-degenerate");
}

std::vector<Claim> build_claims() {
    const LieAlgebra su2 = builtin_algebra("su2");
    std::vector<Claim> c = {
        {"stabilizer.g2", 1, "stabilizer of φ0 has dimension 14", [] { return stabilizer_claim("g2", 1, 14); }},
        {"stabilizer.spin7", 1, "stabilizer of Φ0 has dimension 21", [] { return stabilizer_claim("spin7", 1, 21); }},
        {"stabilizer.psu3", 1, "stabilizer of ρ0 has dimension 8", [] { return stabilizer_claim("psu3", 3, 8); }},
        {"orbit.g2", 1, "φ0 has a 35-dimensional open orbit", [] { return orbit_claim("g2", 1, 35, true); }},
        {"orbit.spin7", 1, "Φ0 has a 43-dimensional orbit, not open", [] { return orbit_claim("spin7", 1, 43, false); }},
        {"orbit.psu3", 1, "ρ0 has a 56-dimensional open orbit", [] { return orbit_claim("psu3", 3, 56, true); }},
        {"psu3.triple-form", 1, "the su(3) triple form is closed with 8-dimensional stabilizer", psu3_triple},
        {"identities.spin7vol", 2, "Φ0∧Φ0 = 14 vol", [] { return identity_claim("spin7vol"); }},
        {"identities.g2metric", 2, "(X⌟φ0)∧(Y⌟φ0)∧φ0 = 6 g(X,Y) vol", [] { return identity_claim("g2metric"); }},
        {"identities.spin7bivector", 2, "((Ei∧Ej)⌟Φ0)²∧Φ0 = 6 vol", [] { return identity_claim("spin7bivector"); }},
        {"identities.spin7rank", 2, "(E1∧E2)⌟Φ0 has rank 6", [] { return identity_claim("spin7rank"); }},
        {"identities.spin7split", 2, "Φ0 = e1∧φ + ⋆7φ", [] { return identity_claim("spin7split"); }},
        {"su2.betti", 3, "su(2) has Betti numbers (1,0,0,1)", su2_betti},
        {"su2.lie-kernel", 3, "su(2) Lie kernels in degrees 2, 3", su2_kernel},
        {"su2.triple-form", 3, "the su(2) triple form is closed and not exact", su2_triple},
        {"trivial.unimodular-7-betti", 4, "the unimodular example has b1 = 2 and b7 = 1", unimodular_claim},
        {"trivial.corrected-5", 4, "the five-dimensional examples with e34 restored", corrected_claim},
        {"betti-table.dim4", 5, "four-dimensional Betti signatures",
         [] { return table_claim(4, {{1, 0, 0, 0}, {2, 1, 0, 0}}); }},
        {"betti-table.dim5", 5, "five-dimensional Betti signatures",
         [] { return table_claim(5, {{1, 0, 0, 0, 0}, {2, 1, 0, 0, 0}}); }},
        {"kunneth.su2+su2", 6, "Künneth for su(2)⊕su(2)", [su2] { return kunneth_claim(su2, su2, 2); }},
        {"kunneth.r+su2", 6, "Künneth for R⊕su(2)", [su2] { return kunneth_claim(LieAlgebra::abelian(1), su2, 1); }},
        {"kunneth.r2ext+r2ext", 6, "Künneth for (0,12)⊕(0,12)", [] {
             const LieAlgebra h = parse_salamon("0,12");
             return kunneth_claim(h, h, 0);
         }},
        {"structure34.catalog", 7, "direct and invariant-cohomology verdicts agree on the catalog", structure_catalog},
        {"structure34.mu0", 7, "verdicts agree on (0,12,0.13)", [] { return structure_mu(0); }},
        {"structure34.mu-1", 7, "verdicts agree on (0,12,-1.13)", [] { return structure_mu(-1); }},
        {"reconstruction.catalog", 8, "b3, b4 from invariant cohomology of codimension one ideals", reconstruction_claim},
        {"multimoment.unique", 9, "unique multi-moment maps on (0,12,13,14,1.15)", multimoment_unique},
        {"multimoment.su2-obstruction", 9, "su(2) triple form has no multi-moment map", multimoment_su2},
        {"property.ll", 10, "L∘L = 0", property_ll},
        {"property.dd", 10, "d∘d = 0", property_dd},
        {"property.euler", 10, "Euler characteristic vanishes", property_euler},
        {"property.poincare", 10, "Poincaré duality on unimodular algebras", property_poincare},
        {"property.dixmier", 10, "Dixmier bound on nilpotent algebras", property_dixmier},
        {"property.cartan", 10, "extended Cartan identity on random triples", property_cartan},
        {"property.cartan-invariant", 10, "Cartan identity for invariant forms", property_cartan_invariant},
        {"admissible.stability", 12, "degrees admitting stable forms", stability_table},
        {"admissible.fully", 12, "degrees admitting fully non-degenerate forms", fully_table},
        {"nondeg.construct", 12, "non-degenerate forms exist iff n >= r, n != r+1", construct_claim},
    };
    for (const auto& e : triviality_catalog()) {
        c.push_back({"trivial." + e.name, 4, e.salamon + " is (3,4)-trivial", [e] { return trivial_claim(e); }});
    }
    for (unsigned m = 1; m <= 4; ++m) {
        c.push_back({"eigen-criterion.m" + std::to_string(m), 11,
                     "eigenvalue criterion vs Betti numbers for m = " + std::to_string(m),
                     [m] { return eigen_claim(m); }});
    }
    std::sort(c.begin(), c.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return c;
}

}  // namespace

const std::vector<Claim>& all_claims() {
    static const std::vector<Claim> claims = build_claims();
    return claims;
}

std::vector<ClaimResult> run_claims(std::string_view filter) {
    std::vector<const Claim*> selected;
    for (const auto& c : all_claims()) {
        if (filter.empty() || c.id.find(filter) != std::string::npos) selected.push_back(&c);
    }
    std::vector<std::future<ClaimOutcome>> jobs;
    for (const Claim* c : selected) {
        jobs.push_back(std::async(std::launch::async, [c] {
            try {
                return c->check();
            } catch (const std::exception& e) {
                return ClaimOutcome{false, std::string("error: ") + e.what(), ""};
            }
        }));
    }
    std::vector<ClaimResult> out;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        ClaimOutcome o = jobs[i].get();
        out.push_back({selected[i]->id, selected[i]->criterion, selected[i]->description, o.passed,
                       std::move(o.computed), std::move(o.expected)});
    }
    return out;
}

}  // namespace lmmt
