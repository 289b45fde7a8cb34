#include "k1witt/fields.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace k1witt;

TEST_CASE("prime validation") {
    CHECK(Prime(3).value() == 3);
    CHECK(Prime(2147483647).value() == 2147483647u); // 2^31 - 1
    CHECK_THROWS_AS(Prime(2), precondition_error);
    CHECK_THROWS_AS(Prime(1), precondition_error);
    CHECK_THROWS_AS(Prime(9), precondition_error);
    CHECK_THROWS_AS(Prime(91), precondition_error); // 7 * 13
    CHECK_THROWS_AS(Prime(1u << 31), precondition_error);
}

TEST_CASE("residue arithmetic") {
    Prime p5(5), p3(3), p7(7);
    CHECK(Residue(2, p5).inverse() == Residue(3, p5));
    CHECK(Residue(2, p3) * Residue(2, p3) == Residue(1, p3));
    CHECK(Residue(4, p7) + Residue(5, p7) == Residue(2, p7));
    CHECK(Residue(-1, p5) == Residue(4, p5));
    CHECK(-Residue(0, p5) == Residue(0, p5));
    CHECK(Residue(3, p7).pow(0) == Residue(1, p7));

    CHECK_THROWS_AS(Residue(0, p5).inverse(), precondition_error);
    CHECK_THROWS_AS(Residue(1, p5) + Residue(1, p3), precondition_error);
    CHECK_THROWS_AS(Residue(1, p5) * Residue(1, p3), precondition_error);
}

TEST_CASE("square classes against enumeration") {
    // Enumerated squares: {1,4} mod 5, {1,2,4} mod 7.
    CHECK(oracles::squares_mod(5) == std::set<std::uint32_t>{1, 4});
    CHECK(oracles::squares_mod(7) == std::set<std::uint32_t>{1, 2, 4});

    CHECK(square_class(Residue(1, Prime(11))) == 0);
    CHECK(square_class(Residue(2, Prime(5))) == 1);
    CHECK(square_class(Residue(2, Prime(7))) == 0); // 3^2 = 2 mod 7
    CHECK_THROWS_AS(square_class(Residue(0, Prime(5))), precondition_error);
}

TEST_CASE("smallest nonsquare") {
    // From the enumerations above: squares mod 3 = {1}, mod 5 = {1,4},
    // mod 7 = {1,2,4}.
    CHECK(oracles::squares_mod(3) == std::set<std::uint32_t>{1});
    CHECK(smallest_nonsquare(Prime(3)) == Residue(2, Prime(3)));
    CHECK(smallest_nonsquare(Prime(5)) == Residue(2, Prime(5)));
    CHECK(smallest_nonsquare(Prime(7)) == Residue(3, Prime(7)));
}
