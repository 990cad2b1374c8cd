#include <doctest.h>

#include <algorithm>

#include "lmmt/claims.hpp"
#include "lmmt/cohomology.hpp"
#include "lmmt/random.hpp"
#include "lmmt/salamon.hpp"
#include "lmmt/spectral.hpp"

using namespace lmmt;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

bool contains(const std::vector<ExtensionCertificate>& certs, const std::vector<long>& lambdas) {
    return std::any_of(certs.begin(), certs.end(), [&](const auto& c) { return c.lambdas == lambdas; });
}

std::vector<LieAlgebra> solvable_suite() {
    std::vector<LieAlgebra> out;
    for (const auto& e : triviality_catalog()) out.push_back(parse_salamon(e.salamon));
    for (const char* s : {"0,12,-1.13", "0,12,0.13", "0,0,12", "0,12,13,14,-2.15", "0,0,12,13"}) {
        out.push_back(parse_salamon(s));
    }
    RandomSource rs(kPropertySeed + 30);
    for (unsigned n = 3; n <= 6; ++n) {
        out.push_back(rs.solvable(n));
        out.push_back(rs.nilpotent(n));
    }
    return out;
}

}  // namespace

TEST_CASE("invariant cohomology examples") {
    const LieAlgebra g = parse_salamon("0,12,2.13");
    const auto h1 = invariant_cohomology(make_split(g, std::vector<unsigned>{2, 3}), 1);
    CHECK(h1.cohomology_dim == 2);
    CHECK(h1.invariant_dim == 0);

    const IdealSplit flat = make_split(LieAlgebra::abelian(3), std::vector<unsigned>{1, 2});
    for (unsigned q = 0; q <= 2; ++q) {
        const auto h = invariant_cohomology(flat, q);
        CHECK(h.invariant_dim == binomial(2, q));
        CHECK(h.cohomology_dim == binomial(2, q));
    }
    CHECK(invariant_cohomology(make_split(g, std::vector<unsigned>{2, 3}), 0).invariant_dim == 1);
}

TEST_CASE("split validation") {
    const LieAlgebra g = parse_salamon("0,12,2.13");
    CHECK_THROWS_AS(make_split(g, std::vector<unsigned>{1, 2}), ValidationError);
    CHECK_THROWS_AS(make_split(g, std::vector<unsigned>{3}), ValidationError);
    const LieAlgebra a4 = LieAlgebra::abelian(4);
    CHECK_THROWS_AS(hs_page(make_split(a4, std::vector<unsigned>{1}), 2, 2), Error);
}

TEST_CASE("hochschild-serre pages") {
    const LieAlgebra g = parse_salamon("0,12,2.13");
    const auto page = hs_page(make_split(g, std::vector<unsigned>{2, 3}), 2, 2);
    CHECK(page.at(0, 1) == 0);
    CHECK(page.at(1, 1) == 0);
    CHECK(page.at(0, 0) == 1);

    const auto flat = hs_page(make_split(LieAlgebra::abelian(3), std::vector<unsigned>{1, 2}), 2, 2);
    CHECK(flat.at(0, 1) == 2);

    const LieAlgebra h4 = parse_salamon("0,0,13+24,14");
    const auto p4 = hs_page(make_split(h4, std::vector<unsigned>{3, 4}), 2, 4);
    for (unsigned q = 1; q <= 4; ++q) CHECK(p4.at(2, q) == 0);
    for (unsigned p = 3; p <= 4; ++p) CHECK(p4.at(p, 0) == 0);
}

TEST_CASE("codimension two pages match invariant cohomology") {
    for (const LieAlgebra& g : solvable_suite()) {
        if (structural_report(g).derived_codimension != 2) continue;
        const IdealSplit split = make_split(g, derived_algebra(g));
        const auto page = hs_page(split, 2, 4);
        for (unsigned q = 0; q <= 4; ++q) {
            CHECK((page.at(2, q) == 0) == (invariant_cohomology(split, q).invariant_dim == 0));
        }
    }
}

TEST_CASE("reconstruction on codimension one splits") {
    for (const LieAlgebra& g : solvable_suite()) {
        const auto b = betti(g).betti;
        for (const auto& ideal : codim_one_ideals(g)) {
            const IdealSplit split = make_split(g, ideal);
            const Reconstruction r = reconstruction_check(split);
            CHECK(r.holds);
            CHECK(r.b3 == (b.size() > 3 ? b[3] : 0));
            const auto page = hs_page(split, 2, 4);
            for (unsigned q = 0; q <= 4; ++q) {
                CHECK(page.at(0, q) == page.at(1, q));
                CHECK(page.at(2, q) == 0);
            }
        }
    }
}

TEST_CASE("structure verification") {
    const auto a = verify_34_structure(parse_salamon("0,12,2.13"));
    CHECK(a.direct);
    CHECK(a.theorem_side);
    CHECK(a.consistent);
    const auto b = verify_34_structure(parse_salamon("0,12,-1.13"));
    CHECK_FALSE(b.direct);
    CHECK_FALSE(b.theorem_side);
    CHECK(b.consistent);
    const auto c = verify_34_structure(parse_salamon("0,0,13+24,14"));
    CHECK(c.codim == 2);
    CHECK(c.direct);
    REQUIRE(c.proposition_side);
    CHECK(*c.proposition_side);
    CHECK(c.consistent);
    for (const LieAlgebra& g : solvable_suite()) CHECK(verify_34_structure(g).consistent);
}

TEST_CASE("eigenvalue criterion") {
    CHECK(abelian_eigen_criterion(rationals({1, 2, 5})));
    CHECK_FALSE(abelian_eigen_criterion(rationals({1, -1})));
    CHECK_FALSE(abelian_eigen_criterion(rationals({1, 2, -3})));
    CHECK_FALSE(abelian_eigen_criterion(rationals({1, 1, 1, -3})));
    CHECK(abelian_eigen_criterion(rationals({1, 1, 1, 1, 1, 1})));
    CHECK(abelian_eigen_criterion({Rational(1, 2), Rational(1, 3)}));
    CHECK(eigen_extension(rationals({1, 1, 1, 5})) == parse_salamon("0,12,13,14,5.15"));
    CHECK(eigen_extension(rationals({1, 2})) == parse_salamon("0,12,2.13"));
}

TEST_CASE("criterion matches direct triviality") {
    for (unsigned m = 1; m <= 3; ++m) {
        const auto s = search_34_extensions(m, -3, 3);
        CHECK(s.disagreements.empty());
        CHECK(s.examined > 0);
        for (const auto& c : s.accepted) {
            CHECK(c.criterion);
            CHECK(c.trivial34);
            CHECK(c.agrees);
        }
    }
}

TEST_CASE("extension search") {
    CHECK(contains(search_34_extensions(2, 1, 2).accepted, {1, 2}));
    CHECK(contains(search_34_extensions(4, 1, 5).accepted, {1, 1, 1, 5}));
    const auto s = search_34_extensions(2, -1, 1);
    CHECK_FALSE(contains(s.accepted, {-1, 1}));
}

TEST_CASE("unimodular family at n = 7") {
    const LieAlgebra g = parse_salamon("0,0,13+23,14,15,16,-4.17-27");
    const auto r = betti(g);
    CHECK(is_trivial(g, {3, 4}).trivial);
    CHECK(r.betti[1] == 2);
    CHECK(r.betti[7] == 1);
    CHECK(structural_report(g).unimodular);
}
