#include <doctest.h>

#include "lmmt/claims.hpp"
#include "lmmt/cohomology.hpp"
#include "lmmt/json_io.hpp"
#include "lmmt/lie_algebra.hpp"
#include "lmmt/random.hpp"
#include "lmmt/salamon.hpp"

using namespace lmmt;

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<LieAlgebra> sample_algebras() {
    std::vector<LieAlgebra> out;
    for (const char* name : {"su2", "su3", "sl2", "heisenberg", "abelian:3"}) out.push_back(builtin_algebra(name));
    for (const auto& e : triviality_catalog()) out.push_back(parse_salamon(e.salamon));
    RandomSource rs(kPropertySeed + 10);
    for (unsigned n = 2; n <= 6; ++n) {
        out.push_back(rs.nilpotent(n));
        out.push_back(rs.solvable(n));
    }
    return out;
}

}  // namespace

TEST_CASE("salamon parsing") {
    const LieAlgebra g = parse_salamon("0,12,2.13");
    CHECK(g.dimension() == 3);
    CHECK(g.bracket(0, 1) == vec({0, -1, 0}));
    CHECK(g.bracket(0, 2) == vec({0, 0, -2}));
    CHECK(g.bracket(1, 2) == vec({0, 0, 0}));
    CHECK(parse_salamon("0,0,12") == builtin_algebra("heisenberg"));
    CHECK(parse_salamon("(0, 12, mu.13)", {{"mu", Rational(2)}}) == g);
    CHECK(parse_salamon("0,[1,2],2.[1,3]") == g);
}

TEST_CASE("salamon errors") {
    CHECK_THROWS_AS(parse_salamon("0,12,13,24"), JacobiError);
    CHECK_THROWS_AS(parse_salamon("0,12,mu.13"), ParseError);
    CHECK_THROWS_AS(parse_salamon("0,1x"), ParseError);
    try {
        parse_salamon("0,12,1?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("salamon and json round trips") {
    for (const LieAlgebra& g : sample_algebras()) {
        if (g.field() == 1) CHECK(parse_salamon(to_salamon(g)) == g);
        CHECK(algebra_from_json(Json::parse(algebra_to_json(g).dump())) == g);
    }
}

TEST_CASE("jacobi check") {
    CHECK_FALSE(jacobi_check(LieAlgebra::abelian(4)));
    CHECK_FALSE(jacobi_check(builtin_algebra("su2")));
    StructureConstants sc;
    sc.dim = 3;
    sc.add(0, 1, 2, Scalar(1));  // [e1,e2] = e3
    sc.add(0, 2, 0, Scalar(1));  // [e1,e3] = e1
    const auto fail = jacobi_check(sc);
    REQUIRE(fail);
    CHECK(fail->triple == std::array<unsigned, 3>{0, 1, 2});
    CHECK_THROWS_AS(LieAlgebra{sc}, JacobiError);
}

TEST_CASE("the L map") {
    const LieAlgebra su2 = builtin_algebra("su2");
    CHECK(lie_L(su2, KVector::basis(3, {1, 2})) == KVector::basis(3, {3}, -2));
    CHECK(lie_L(su2, KVector::basis(3, {1, 2, 3})).is_zero());
    for (unsigned s = 1; s <= 4; ++s) CHECK(lie_L_matrix(LieAlgebra::abelian(4), s).is_zero());
    for (const LieAlgebra& g : sample_algebras()) {
        for (unsigned s = 2; s <= g.dimension(); ++s) {
            CHECK((lie_L_matrix(g, s - 1) * lie_L_matrix(g, s)).is_zero());
        }
    }
}

TEST_CASE("structural reports") {
    const auto h = structural_report(builtin_algebra("heisenberg"));
    CHECK(h.nilpotent);
    CHECK(h.unimodular);
    CHECK(h.derived_codimension == 2);
    const auto s = structural_report(parse_salamon("0,12,2.13"));
    CHECK(s.solvable);
    CHECK_FALSE(s.nilpotent);
    CHECK_FALSE(s.unimodular);
    CHECK(s.derived_codimension == 1);
    const auto su2 = structural_report(builtin_algebra("su2"));
    CHECK_FALSE(su2.solvable);
    CHECK(su2.unimodular);
    CHECK(su2.derived_codimension == 0);
}

TEST_CASE("b1 equals the codimension of the derived algebra") {
    for (const LieAlgebra& g : sample_algebras()) {
        CHECK(betti(g).betti[1] == structural_report(g).derived_codimension);
    }
}

TEST_CASE("grading derivations") {
    const LieAlgebra heis = builtin_algebra("heisenberg");
    CHECK_NOTHROW(grading_derivation(heis, {1, 1, 2}));
    CHECK_THROWS_AS(grading_derivation(heis, {1, 1, 1}), ValidationError);

    const LieAlgebra k = parse_salamon("0,0,12,13,14,23+15");
    const LieAlgebra g = extend_by_derivations(k, {grading_derivation(k, {1, 3, 4, 5, 6, 7})});
    CHECK(g == parse_salamon("0,12,3.13,4.14+23,5.15+24,6.16+25,7.17+34+26"));
}

TEST_CASE("extensions by derivations") {
    const LieAlgebra r2 = LieAlgebra::abelian(2);
    Matrix t(2, 2);
    t.set(0, 0, Scalar(1));
    t.set(1, 1, Scalar(2));
    CHECK(extend_by_derivations(r2, {Derivation(r2, t)}) == parse_salamon("0,12,2.13"));

    const LieAlgebra heis = builtin_algebra("heisenberg");
    Matrix rot(3, 3);
    rot.set(0, 1, Scalar(1));
    rot.set(1, 0, Scalar(-1));
    const LieAlgebra five =
        extend_by_derivations(heis, {grading_derivation(heis, {1, 1, 2}), Derivation(heis, rot)});
    CHECK_FALSE(jacobi_check(five));
    CHECK(betti(five).betti == betti(parse_salamon("0,0,13+24,14-23,2.15+34")).betti);

    const LieAlgebra four = extend_by_derivations(heis, {grading_derivation(heis, {1, 1, 2})});
    CHECK(betti(four).betti == betti(parse_salamon("0,12,13,23+2.14")).betti);

    Matrix bad(3, 3);
    bad.set(0, 0, Scalar(1));
    CHECK_THROWS_AS(Derivation(heis, bad), LeibnizError);

    Matrix other(3, 3);
    other.set(0, 1, Scalar(1));
    CHECK_THROWS_AS(extend_by_derivations(heis, {grading_derivation(heis, {1, 2, 3}), Derivation(heis, other)}),
                    ValidationError);
}

TEST_CASE("extensions always satisfy jacobi") {
    RandomSource rs(kPropertySeed + 11);
    for (int i = 0; i < 10; ++i) {
        const LieAlgebra k = LieAlgebra::abelian(3);
        Matrix t(3, 3);
        for (unsigned r = 0; r < 3; ++r) {
            for (unsigned c = 0; c < 3; ++c) t.set(r, c, Scalar(rs.integer(-2, 2)));
        }
        CHECK_FALSE(jacobi_check(extend_by_derivations(k, {Derivation(k, t)})));
    }
}

TEST_CASE("builtins") {
    CHECK(builtin_algebra("su2").bracket(0, 1) == vec({0, 0, -2}));
    CHECK(builtin_algebra("su2").bracket(1, 2) == vec({-2, 0, 0}));
    CHECK(lie_L_matrix(builtin_algebra("abelian:4"), 2).is_zero());
    const LieAlgebra su3 = builtin_algebra("su3");
    CHECK(su3.dimension() == 8);
    CHECK_FALSE(jacobi_check(su3));
    // the basis is Killing-orthogonal, so negative definite means a negative diagonal
    const Matrix b = killing_form(su3);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (r == c) {
                CHECK(b.at(r, c).rational_part() < 0);
            } else {
                CHECK(b.at(r, c).is_zero());
            }
        }
    }
    CHECK_THROWS_AS(builtin_algebra("e8"), Error);
    CHECK(direct_sum(LieAlgebra::abelian(1), LieAlgebra::abelian(1)) == LieAlgebra::abelian(2));
}
