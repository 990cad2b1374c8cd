#include <doctest.h>

#include "lmmt/claims.hpp"
#include "lmmt/cohomology.hpp"
#include "lmmt/forms.hpp"
#include "lmmt/multimoment.hpp"
#include "lmmt/random.hpp"
#include "support/oracles.hpp"

using namespace lmmt;

namespace {

// Pulls a form back along the basis change: coefficients in terms of the f's.
KForm rewedge(const TwoFormNormalForm& nf, unsigned n) {
    KForm out(n, 2);
    for (unsigned i = 0; i < nf.k; ++i) {
        out += wedge(covector_of(nf.covectors[2 * i]), covector_of(nf.covectors[2 * i + 1]));
    }
    return out;
}

}  // namespace

TEST_CASE("builtin forms") {
    CHECK(builtin_form("g2").terms().size() == 7);
    CHECK(builtin_form("spin7").terms().size() == 14);
    CHECK(builtin_form("g2").coefficient(mask_of({1, 2, 3})) == Scalar(1));
    CHECK(builtin_form("spin7").coefficient(mask_of({5, 6, 7, 8})) == Scalar(1));
    CHECK(builtin_form("symplectic:2,5") == KForm::basis(5, {1, 2}) + KForm::basis(5, {3, 4}));
    CHECK(builtin_form("cvol6") == KForm::basis(6, {1, 3, 5}) - KForm::basis(6, {1, 4, 6}) -
                                       KForm::basis(6, {2, 3, 6}) - KForm::basis(6, {2, 4, 5}));
    CHECK_THROWS_AS(builtin_form("psu3"), Error);
    const KForm rho = builtin_form("psu3", 3);
    CHECK(rho.degree() == 3);
    CHECK(rho.dimension() == 8);
    CHECK_THROWS_AS(builtin_form("nope"), Error);
}

TEST_CASE("weak non-degeneracy") {
    CHECK(weak_nondegenerate(builtin_form("g2")).weakly_nondegenerate);
    const auto d = weak_nondegenerate(KForm::basis(5, {2, 3, 4, 5}));
    CHECK_FALSE(d.weakly_nondegenerate);
    REQUIRE(d.kernel.size() == 1);
    CHECK(d.kernel[0] == unit_vector(5, 0));
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(weak_nondegenerate(builtin_form("symplectic:" + std::to_string(k) + "," + std::to_string(2 * k)))
                  .weakly_nondegenerate);
    }
}

TEST_CASE("stabilizers and stability") {
    const auto g2 = is_stable(builtin_form("g2"));
    CHECK(g2.stabilizer_dim == 14);
    CHECK(g2.orbit_dim == 35);
    CHECK(g2.stable);
    const auto spin7 = is_stable(builtin_form("spin7"));
    CHECK(spin7.stabilizer_dim == 21);
    CHECK(spin7.orbit_dim == 43);
    CHECK_FALSE(spin7.stable);
    const auto rho = is_stable(builtin_form("psu3", 3));
    CHECK(rho.stabilizer_dim == 8);
    CHECK(rho.orbit_dim == 56);
    CHECK(rho.stable);
    const auto c = is_stable(builtin_form("cvol6"));
    CHECK(c.stabilizer_dim == 16);
    CHECK(c.orbit_dim == 20);
    CHECK(c.stable);
}

TEST_CASE("stabilizer elements annihilate the form") {
    for (const char* name : {"g2", "spin7", "cvol6", "symplectic:2,5", "volume:4"}) {
        const KForm a = builtin_form(name);
        const Stabilizer s = stabilizer_algebra(a);
        CHECK(s.basis.size() == s.dimension);
        CHECK(s.dimension == oracle::stabilizer_dim(oracle::from_library(a)));
        for (const Matrix& m : s.basis) CHECK(gl_action(m, a).is_zero());
    }
    const KForm rho = builtin_form("psu3", 3);
    for (const Matrix& m : stabilizer_algebra(rho).basis) CHECK(gl_action(m, rho).is_zero());
}

TEST_CASE("catalog forms are stable exactly on admissible pairs") {
    const std::vector<KForm> catalog = {
        builtin_form("g2"),          builtin_form("psu3", 3),      builtin_form("cvol6"),
        builtin_form("symplectic:3,6"), builtin_form("symplectic:2,5"), builtin_form("symplectic:4,8"),
        hodge_star(builtin_form("g2")), hodge_star(builtin_form("cvol6")), builtin_form("volume:5"),
    };
    for (const KForm& a : catalog) {
        CHECK(is_stable(a).stable == stability_admissible(a.degree(), a.dimension()));
    }
}

TEST_CASE("admissibility tables") {
    CHECK(stability_admissible(3, 7));
    CHECK_FALSE(stability_admissible(4, 8));
    CHECK(stability_admissible(2, 9));
    CHECK_FALSE(stability_admissible(3, 9));
    CHECK(stability_admissible(5, 8));
    CHECK(fully_nondeg_admissible(3, 7));
    CHECK(fully_nondeg_admissible(4, 8));
    CHECK_FALSE(fully_nondeg_admissible(3, 9));
    CHECK(fully_nondeg_admissible(5, 5));
    CHECK_THROWS_AS(fully_nondeg_admissible(2, 4), Error);
}

TEST_CASE("constructing non-degenerate forms") {
    const auto f35 = construct_nondegenerate(3, 5);
    REQUIRE(f35);
    CHECK(*f35 == wedge(KForm::basis(5, {1, 2}) + KForm::basis(5, {3, 4}), KForm::basis(5, {5})));
    CHECK_FALSE(construct_nondegenerate(3, 4));
    CHECK_FALSE(construct_nondegenerate(4, 3));
    const auto f46 = construct_nondegenerate(4, 6);
    REQUIRE(f46);
    const auto f35again = construct_nondegenerate(3, 5);
    CHECK(*f46 == wedge(reindex(*f35again, 6, std::vector<unsigned>{1, 2, 3, 4, 5}), KForm::basis(6, {6})));
    for (unsigned r = 3; r <= 6; ++r) {
        for (unsigned n = r; n <= 10; ++n) {
            const auto f = construct_nondegenerate(r, n);
            CHECK(f.has_value() == (n != r + 1));
            if (f) {
                CHECK(f->degree() == r);
                CHECK(weak_nondegenerate(*f).weakly_nondegenerate);
            }
        }
    }
}

TEST_CASE("two-form normal form") {
    const auto sympl = two_form_normal_form(builtin_form("symplectic:3,6"));
    CHECK(sympl.k == 3);
    CHECK(sympl.basis_change == Matrix::identity(6));
    CHECK(two_form_normal_form(KForm(4, 2)).k == 0);

    RandomSource rs(kPropertySeed + 40);
    for (int i = 0; i < 40; ++i) {
        const unsigned n = static_cast<unsigned>(rs.integer(2, 7));
        const KForm w = rs.form(n, 2, 0.4);
        const auto nf = two_form_normal_form(w);
        CHECK(2 * nf.k == oracle::two_form_rank(oracle::from_library(w)));
        CHECK(2 * nf.k == two_form_rank(w));
        CHECK(rewedge(nf, n) == w);
        CHECK(rank(nf.basis_change) == n);
    }
}

TEST_CASE("holonomy identities") {
    for (const auto& name : holonomy_identity_names()) {
        const auto id = holonomy_identity(name);
        CHECK_MESSAGE(id.holds, name << ": " << id.computed << " vs " << id.expected);
    }
    CHECK(two_form_rank(contract(KVector::basis(8, {1, 2}), builtin_form("spin7"))) == 6);
}

TEST_CASE("the su(3) triple form is stable") {
    const LieAlgebra su3 = builtin_algebra("su3");
    const KForm rho = triple_form(su3, killing_form(su3).scaled(Scalar(-1)));
    const auto a = is_stable(rho);
    CHECK(a.stabilizer_dim == 8);
    CHECK(a.stable);
}
