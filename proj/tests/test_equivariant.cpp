#include "k1witt/equivariant.hpp"

#include <doctest.h>

using namespace k1witt;

namespace {

Representation swap_rep_c2(Prime ell) {
    FpMatrix swap(2, 2, ell);
    swap.set(0, 1, Residue(1, ell));
    swap.set(1, 0, Residue(1, ell));
    return Representation(FiniteGroup::cyclic(2),
                          {FpMatrix::identity(2, ell), std::move(swap)});
}

Representation regular_rep_c2(Prime ell) {
    // Same matrices as the swap action; listed separately for readability
    // where the regular representation is meant.
    return swap_rep_c2(ell);
}

} // namespace

TEST_CASE("group tables") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    CHECK(c4.order() == 4);
    CHECK(c4.identity() == 0);
    CHECK(c4.mul(3, 2) == 1);
    CHECK(c4.inverse(1) == 3);
    CHECK(c4.is_p_group(2));
    CHECK_FALSE(c4.is_p_group(3));
    CHECK_FALSE(FiniteGroup::cyclic(6).is_p_group(2));

    FiniteGroup v4 = FiniteGroup::product(FiniteGroup::cyclic(2),
                                          FiniteGroup::cyclic(2));
    CHECK(v4.order() == 4);
    for (std::size_t a = 0; a < 4; ++a) CHECK(v4.mul(a, a) == v4.identity());

    // Broken tables are rejected.
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), precondition_error);
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {1, 0}}), precondition_error);
    CHECK_THROWS_AS(FiniteGroup({}), precondition_error);
}

TEST_CASE("homomorphisms") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);

    CHECK_NOTHROW(GroupHom(c2, c4, {0, 2})); // inclusion
    CHECK_NOTHROW(GroupHom(c2, c2, {0, 0})); // trivial map
    CHECK_THROWS_AS(GroupHom(c2, c4, {0, 1}), precondition_error);
    CHECK_THROWS_AS(GroupHom(c2, c2, {0}), precondition_error);
}

TEST_CASE("representation validation") {
    Prime p3(3);
    FiniteGroup c2 = FiniteGroup::cyclic(2);

    // Non-identity at the identity element.
    FpMatrix not_id(1, 1, p3);
    not_id.set(0, 0, Residue(2, p3));
    CHECK_THROWS_AS(Representation(c2, {not_id, not_id}), precondition_error);

    // Matrices that ignore the group law: rho(g)^2 != rho(e).
    FpMatrix doubling(1, 1, p3);
    doubling.set(0, 0, Residue(2, p3));
    FpMatrix id1 = FpMatrix::identity(1, p3);
    CHECK_THROWS_AS(Representation(FiniteGroup::cyclic(4),
                                   {id1, doubling, id1, doubling}),
                    precondition_error);
}

TEST_CASE("coinvariants") {
    Prime p5(5), p3(3);

    SUBCASE("trivial action has no relations") {
        Coinvariants co =
            coinvariants(Representation::trivial(FiniteGroup::cyclic(2), 2, p5));
        CHECK(co.projection == FpMatrix::identity(2, p5));
        CHECK(co.section == FpMatrix::identity(2, p5));
    }

    SUBCASE("swap action identifies the coordinates") {
        Coinvariants co = coinvariants(swap_rep_c2(p3));
        CHECK(co.projection.rows() == 1);
        // e1 - e2 spans the kernel, so both basis vectors map to the same
        // class.
        FpMatrix e1_minus_e2(2, 1, p3);
        e1_minus_e2.set(0, 0, Residue(1, p3));
        e1_minus_e2.set(1, 0, Residue(-1, p3));
        CHECK((co.projection * e1_minus_e2).is_zero());
        CHECK(co.projection * co.section == FpMatrix::identity(1, p3));
    }

    SUBCASE("regular representation of C_2") {
        CHECK(coinvariants(regular_rep_c2(p5)).projection.rows() == 1);
    }
}

TEST_CASE("norm map") {
    Prime p3(3), p5(5);

    SUBCASE("trivial action multiplies by the order") {
        FpMatrix nm =
            norm_map(Representation::trivial(FiniteGroup::cyclic(2), 1, p3));
        CHECK(nm.at(0, 0) == Residue(2, p3));
        FpMatrix nm4 =
            norm_map(Representation::trivial(FiniteGroup::cyclic(4), 1, p5));
        CHECK(nm4.at(0, 0) == Residue(4, p5));
    }

    SUBCASE("swap action lands on the diagonal") {
        FpMatrix nm = norm_map(swap_rep_c2(p3));
        CHECK(nm.rows() == 2);
        CHECK(nm.cols() == 1);
        CHECK(nm.at(0, 0) == Residue(1, p3));
        CHECK(nm.at(1, 0) == Residue(1, p3));
        CHECK(nm.rank() == 1);
    }
}

TEST_CASE("pushforward") {
    Prime p3(3), p5(5);

    SUBCASE("trivial C_2 action on <1> over F_3") {
        GramForm f = GramForm::scalar(Residue(1, p3));
        GramForm out = pushforward(restrict_trivial(f, FiniteGroup::cyclic(2)));
        CHECK(out == GramForm::scalar(Residue(2, p3)));
    }

    SUBCASE("trivial C_4 action on <3> over F_5") {
        GramForm f = GramForm::scalar(Residue(3, p5));
        GramForm out = pushforward(restrict_trivial(f, FiniteGroup::cyclic(4)));
        CHECK(out == GramForm::scalar(Residue(2, p5))); // 12 mod 5
    }

    SUBCASE("swap action on diag(1,1) over F_3") {
        EquivariantForm ef(
            swap_rep_c2(p3),
            GramForm::diagonal({Residue(1, p3), Residue(1, p3)}, p3));
        GramForm out = pushforward(ef);
        CHECK(out == GramForm::scalar(Residue(1, p3)));
    }

    SUBCASE("refused when the characteristic divides the order") {
        GramForm f = GramForm::scalar(Residue(1, p3));
        CHECK_THROWS_AS(
            pushforward(restrict_trivial(f, FiniteGroup::cyclic(3))),
            precondition_error);
    }
}

TEST_CASE("restriction and forget") {
    Prime p5(5);
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);

    GramForm d12 = GramForm::diagonal({Residue(1, p5), Residue(2, p5)}, p5);
    EquivariantForm trivial4 = restrict_trivial(d12, c4);
    CHECK(forget(trivial4) == d12);

    SUBCASE("restriction along the identity is the identity") {
        GroupHom id(c2, c2, {0, 1});
        EquivariantForm ef(swap_rep_c2(Prime(3)),
                           GramForm::diagonal(
                               {Residue(1, Prime(3)), Residue(1, Prime(3))},
                               Prime(3)));
        EquivariantForm restricted = restrict_hom(ef, id);
        CHECK(restricted.rep().matrix(1) == ef.rep().matrix(1));
    }

    SUBCASE("restriction along the trivial map kills the action") {
        GroupHom trivial(c2, c2, {0, 0});
        Prime p3(3);
        EquivariantForm ef(swap_rep_c2(p3),
                           GramForm::diagonal(
                               {Residue(1, p3), Residue(1, p3)}, p3));
        EquivariantForm restricted = restrict_hom(ef, trivial);
        CHECK(restricted.rep().matrix(1) == FpMatrix::identity(2, p3));
    }

    SUBCASE("restriction along C_2 -> C_4 picks out the squares") {
        GroupHom incl(c2, c4, {0, 2});
        EquivariantForm ef = restrict_trivial(d12, c4);
        EquivariantForm restricted = restrict_hom(ef, incl);
        CHECK(restricted.rep().group().order() == 2);
        CHECK(restricted.rep().matrix(1) == ef.rep().matrix(2));
    }

    SUBCASE("non-homomorphisms are rejected") {
        CHECK_THROWS_AS(GroupHom(c4, c2, {0, 1, 1, 0}), precondition_error);
    }
}

TEST_CASE("cardinality via forms") {
    CHECK(cardinality_via_forms(FiniteGroup::cyclic(2), Prime(3)) ==
          GWClass{1, 1});
    CHECK(cardinality_via_forms(FiniteGroup::cyclic(2), Prime(5)) ==
          GWClass{1, 1});
    FiniteGroup v4 =
        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(cardinality_via_forms(v4, Prime(3)) == GWClass{1, 0}); // 4 = 1 mod 3
    CHECK_THROWS_AS(cardinality_via_forms(FiniteGroup::cyclic(3), Prime(3)),
                    precondition_error);
}

TEST_CASE("total square") {
    Prime p3(3), p5(5);

    SUBCASE("one-dimensional forms get the trivial action") {
        EquivariantForm sq = total_square(GramForm::scalar(Residue(1, p3)));
        CHECK(sq.gram() == GramForm::scalar(Residue(1, p3)));
        CHECK(sq.rep().matrix(1) == FpMatrix::identity(1, p3));

        EquivariantForm sq2 = total_square(GramForm::scalar(Residue(2, p5)));
        CHECK(sq2.gram() == GramForm::scalar(Residue(4, p5)));
    }

    SUBCASE("diag(1,2) over F_5") {
        GramForm f = GramForm::diagonal({Residue(1, p5), Residue(2, p5)}, p5);
        EquivariantForm sq = total_square(f);
        CHECK(sq.gram() ==
              GramForm::diagonal({Residue(1, p5), Residue(2, p5),
                                  Residue(2, p5), Residue(4, p5)},
                                 p5));
        // The nontrivial element swaps the two middle tensor coordinates.
        FpMatrix expected(4, 4, p5);
        expected.set(0, 0, Residue(1, p5));
        expected.set(1, 2, Residue(1, p5));
        expected.set(2, 1, Residue(1, p5));
        expected.set(3, 3, Residue(1, p5));
        CHECK(sq.rep().matrix(1) == expected);
    }
}

TEST_CASE("integrated symmetric square") {
    Prime p3(3), p5(5);

    CHECK(alpha2_forms(GramForm::scalar(Residue(1, p3))) ==
          GramForm::scalar(Residue(2, p3)));

    for (std::uint32_t lambda = 1; lambda < 5; ++lambda) {
        CHECK(alpha2_forms(GramForm::scalar(Residue(lambda, p5))) ==
              GramForm::scalar(Residue(2 * lambda * lambda, p5)));
    }

    GramForm d11 = GramForm::diagonal({Residue(1, p3), Residue(1, p3)}, p3);
    CHECK(class_of(alpha2_forms(d11)) == GWClass{3, 0}); // det 4, a square
}

TEST_CASE("symmetric square closed form") {
    CHECK(sym2_rank_det(1, 0, Prime(3)) == GWClass{1, 1}); // 2 nonsquare mod 3
    CHECK(sym2_rank_det(2, 0, Prime(3)) == GWClass{3, 0});
    CHECK(sym2_rank_det(0, 0, Prime(7)) == GWClass{0, 0});
}
