#include <doctest.h>

#include "lmmt/claims.hpp"
#include "lmmt/cohomology.hpp"
#include "lmmt/multimoment.hpp"
#include "lmmt/random.hpp"
#include "lmmt/salamon.hpp"
#include "support/oracles.hpp"

using namespace lmmt;

namespace {

std::vector<LieAlgebra> suite() {
    std::vector<LieAlgebra> out;
    for (const char* name : {"su2", "sl2", "heisenberg", "abelian:4"}) out.push_back(builtin_algebra(name));
    for (const auto& e : triviality_catalog()) {
        const LieAlgebra g = parse_salamon(e.salamon);
        if (g.dimension() <= 7) out.push_back(g);
    }
    out.push_back(parse_salamon("0,12,-1.13"));
    out.push_back(parse_salamon("0,0,12,13"));
    RandomSource rs(kPropertySeed + 20);
    for (unsigned n = 2; n <= 6; ++n) {
        for (int i = 0; i < 3; ++i) {
            out.push_back(rs.nilpotent(n));
            out.push_back(rs.solvable(n));
        }
    }
    return out;
}

long signed_sum(const std::vector<std::size_t>& b) {
    long s = 0;
    for (std::size_t k = 0; k < b.size(); ++k) s += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
    return s;
}

}  // namespace

TEST_CASE("differential examples") {
    for (unsigned k = 0; k <= 3; ++k) CHECK(ce_differential(LieAlgebra::abelian(3), k).is_zero());
    const LieAlgebra heis = builtin_algebra("heisenberg");
    CHECK(differential(heis, KForm::basis(3, {3})) == KForm::basis(3, {1, 2}));
    CHECK(differential(heis, KForm::basis(3, {1})).is_zero());
    CHECK(differential(heis, KForm::basis(3, {2})).is_zero());
    const LieAlgebra su2 = builtin_algebra("su2");
    CHECK(differential(su2, KForm::basis(3, {1})) == KForm::basis(3, {2, 3}, 2));
}

TEST_CASE("betti examples") {
    CHECK(betti(LieAlgebra::abelian(3)).betti == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(betti(builtin_algebra("su2")).betti == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(betti(parse_salamon("0,12,2.13")).betti == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("complex invariants on the algebra suite") {
    for (const LieAlgebra& g : suite()) {
        const unsigned n = g.dimension();
        for (unsigned k = 0; k + 1 < n; ++k) {
            CHECK((ce_differential(g, k + 1) * ce_differential(g, k)).is_zero());
        }
        const CohomologyReport r = betti(g);
        CHECK(r.betti == oracle::betti(g));
        CHECK(r.betti[0] == 1);
        CHECK(signed_sum(r.betti) == 0);
        CHECK(r.betti[n] <= 1);
        CHECK((r.betti[n] == 1) == structural_report(g).unimodular);
        CHECK(r.unimodular == structural_report(g).unimodular);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(r.betti[k] == r.cycles[k] - r.boundaries[k]);
            if (r.unimodular) CHECK(r.betti[k] == r.betti[n - k]);
            if (k >= 1) {
                CHECK(lie_kernel(g, k).basis.size() + rank(lie_L_matrix(g, k)) == binomial(n, k));
                for (const auto& p : lie_kernel(g, k).basis) CHECK(lie_L(g, p).is_zero());
            }
        }
        if (structural_report(g).nilpotent) {
            for (unsigned k = 1; k < n; ++k) CHECK(r.betti[k] >= 2);
        }
    }
}

TEST_CASE("lie kernels") {
    const LieAlgebra su2 = builtin_algebra("su2");
    CHECK(lie_kernel(su2, 3).basis.size() == 1);
    CHECK(lie_kernel(su2, 2).basis.empty());
    for (unsigned k = 1; k <= 4; ++k) CHECK(lie_kernel(LieAlgebra::abelian(4), k).basis.size() == binomial(4, k));
}

TEST_CASE("triviality") {
    const LieAlgebra su2 = builtin_algebra("su2");
    CHECK(is_trivial(su2, {1, 2}).trivial);
    CHECK(is_trivial(parse_salamon("0,0,13+24,14"), {3, 4}).trivial);
    const auto r = is_trivial(su2, {3});
    CHECK_FALSE(r.trivial);
    REQUIRE(r.witness);
    CHECK(r.failing_degree == 3u);
    CHECK_FALSE(is_exact(su2, *r.witness));
    CHECK(differential(su2, *r.witness).is_zero());
    CHECK(is_trivial(parse_salamon("0,12,2.13"), {3, 4}).trivial);
}

TEST_CASE("kunneth") {
    const LieAlgebra su2 = builtin_algebra("su2");
    const LieAlgebra r2ext = parse_salamon("0,12");
    const auto a = kunneth_check(su2, su2);
    CHECK(a.b3_direct == 2);
    CHECK(a.b3_holds);
    CHECK(a.b4_holds);
    const auto b = kunneth_check(r2ext, r2ext);
    CHECK(b.b3_direct == 0);
    CHECK(b.b4_direct == 0);
    CHECK(b.b3_holds);
    CHECK(b.b4_holds);
    const auto c = kunneth_check(LieAlgebra::abelian(1), su2);
    CHECK(c.b3_direct == 1);
    CHECK(c.b3_holds);
    CHECK(betti(direct_sum(su2, su2)).betti == oracle::betti(parse_salamon("2.23,-2.13,2.12,2.56,-2.46,2.45")));
}

TEST_CASE("extended cartan identity") {
    const LieAlgebra su2 = builtin_algebra("su2");
    const KForm vol = KForm::basis(3, {1, 2, 3});
    const auto r = cartan_identity_check(su2, vol, {unit_vector(3, 0), unit_vector(3, 1)});
    CHECK(r.holds);
    CHECK(r.invariant);
    CHECK(r.lie_term.is_zero());
    CHECK(r.lhs == r.bracket_term);
    CHECK(r.lhs == KForm::basis(3, {1, 2}, -2));

    RandomSource rs(kPropertySeed + 21);
    for (int i = 0; i < 20; ++i) {
        const LieAlgebra g = rs.solvable(5);
        const KForm alpha = rs.form(5, 3);
        CHECK(cartan_identity_check(g, alpha, {rs.vector(5)}).holds);
        CHECK(cartan_identity_check(g, alpha, {rs.vector(5), rs.vector(5)}).holds);
        CHECK(cartan_identity_check(g, alpha, {rs.vector(5), rs.vector(5), rs.vector(5)}).holds);
    }
}

TEST_CASE("d_P injectivity and image") {
    for (const LieAlgebra& g : suite()) {
        const unsigned n = g.dimension();
        const CohomologyReport r = betti(g);
        for (unsigned k = 1; k < n; ++k) {
            const DPMatrix dp = d_P_matrix(g, k);
            CHECK(dp.domain.size() == binomial(n, k) - r.boundaries[k]);
            const bool injective = rank(dp.matrix) == dp.domain.size();
            CHECK(injective == (r.betti[k] == 0));
            CHECK(rank(dp.matrix) == r.boundaries[k + 1]);
            for (const auto& rep : dp.domain) {
                CHECK(is_exact(g, d_P(g, PDualElement{k, rep})));
            }
        }
    }
}

TEST_CASE("multi-moment solving") {
    const LieAlgebra g = parse_salamon("0,12,13,14,1.15");
    for (const KForm& psi : cohomology_basis(g, 4).cocycles) {
        const auto s = solve_multimoment(g, psi);
        CHECK(s.status == MultimomentSolution::Status::unique);
        REQUIRE(s.nu);
        CHECK(d_P(g, *s.nu) == psi);
    }
    const auto zero = solve_multimoment(g, KForm(5, 4));
    CHECK(zero.status == MultimomentSolution::Status::unique);
    REQUIRE(zero.nu);
    CHECK(zero.nu->representative.is_zero());

    const LieAlgebra su2 = builtin_algebra("su2");
    const KForm gamma = triple_form(su2, killing_form(su2).scaled(Scalar(Rational(-1, 8))));
    CHECK(gamma == KForm::basis(3, {1, 2, 3}, gamma.coefficient(mask_of({1, 2, 3}))));
    const auto s = solve_multimoment(su2, gamma);
    CHECK(s.status == MultimomentSolution::Status::no_existence);
    CHECK(s.obstruction_dimension == 1);
    CHECK(s.obstruction);

    CHECK(d_P(g, PDualElement{3, KForm::basis(5, {2, 3, 4})}) == differential(g, KForm::basis(5, {2, 3, 4})));
    CHECK(same_class(g, PDualElement{2, KForm::basis(5, {1, 2})},
                     PDualElement{2, KForm::basis(5, {1, 2}) + differential(g, KForm::basis(5, {3}))}));

    RandomSource rs(kPropertySeed + 22);
    for (const LieAlgebra& h : suite()) {
        for (unsigned r = 1; r <= h.dimension(); ++r) {
            const auto z = cohomology_basis(h, r).cocycles;
            if (z.empty()) continue;
            const KForm& psi = z[static_cast<std::size_t>(rs.integer(0, static_cast<long>(z.size()) - 1))];
            const auto sol = solve_multimoment(h, psi);
            if (sol.nu) CHECK(d_P(h, *sol.nu) == psi);
            CHECK(sol.nu.has_value() == is_exact(h, psi));
        }
    }
}

TEST_CASE("orbit condition") {
    CHECK(orbit_stab_condition(LieAlgebra::abelian(3), PDualElement{1, KForm::basis(3, {1})}).holds);
    const auto h = orbit_stab_condition(builtin_algebra("heisenberg"), PDualElement{1, KForm::basis(3, {3})});
    CHECK(h.holds);
    CHECK(h.kernel.size() == 1);
    RandomSource rs(kPropertySeed + 23);
    for (int i = 0; i < 15; ++i) {
        const LieAlgebra g = rs.solvable(4);
        CHECK(orbit_stab_condition(g, PDualElement{1, rs.form(4, 1)}).holds);
    }
}

TEST_CASE("triple forms") {
    CHECK(triple_form(LieAlgebra::abelian(3), Matrix::identity(3)).is_zero());
    CHECK_THROWS_AS(triple_form(parse_salamon("0,12,2.13"), Matrix::identity(3)), ValidationError);
    for (const char* name : {"su2", "su3", "sl2"}) {
        const LieAlgebra g = builtin_algebra(name);
        const KForm gamma = triple_form(g, killing_form(g));
        CHECK(differential(g, gamma).is_zero());
        CHECK_FALSE(is_exact(g, gamma));
    }
}
