#include "k1witt/serialize.hpp"

#include "k1witt/rng.hpp"

#include <doctest.h>

using namespace k1witt;

TEST_CASE("gram round trip") {
    Rng rng(0xc0de);
    Prime ells[] = {Prime(3), Prime(5), Prime(13)};
    for (int trial = 0; trial < 50; ++trial) {
        Prime ell = ells[rng.below(3)];
        const std::size_t n = rng.below(5);
        FpMatrix m(n, n, ell);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Residue v(static_cast<std::int64_t>(rng.below(ell.value())), ell);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        if (m.determinant().is_zero()) continue;
        GramForm f(m);
        CHECK(gram_from_json(gram_to_json(f), ell) == f);
    }
    // Entries may arrive unreduced or negative.
    CHECK(gram_from_json(Json::parse("[[-1]]"), Prime(3)) ==
          GramForm::scalar(Residue(2, Prime(3))));
    CHECK_THROWS_AS(gram_from_json(Json::parse("[[1,0]]"), Prime(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gram_from_json(Json::parse("7"), Prime(3)),
                    std::invalid_argument);
}

TEST_CASE("class round trip") {
    const GWClass c{-3, 1};
    CHECK(gwclass_from_json(gwclass_to_json(c)) == c);
    CHECK(gwclass_to_json(c).dump() == R"({"rank":-3,"e":1})");
    CHECK_THROWS_AS(gwclass_from_json(Json::parse(R"({"rank":1,"e":2})")),
                    std::invalid_argument);
}

TEST_CASE("group specs") {
    const FiniteGroup c4 = group_from_json(Json::parse(R"({"cyclic":4})"));
    CHECK(c4.order() == 4);
    const FiniteGroup v4 = group_from_json(
        Json::parse(R"({"product":[{"cyclic":2},{"cyclic":2}]})"));
    CHECK(v4.order() == 4);
    CHECK(group_from_json(group_to_json(v4)) == v4);

    const FiniteGroup nested = group_from_json(Json::parse(
        R"({"product":[{"cyclic":2},{"product":[{"cyclic":2},{"cyclic":2}]}]})"));
    CHECK(nested.order() == 8);

    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"cyclic":0})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"what":3})")),
                    std::invalid_argument);
    // A well-formed JSON table that is not a group law is a precondition
    // failure, not a parse failure.
    CHECK_THROWS_AS(
        group_from_json(Json::parse(R"({"table":[[0,1],[1,1]]})")),
        precondition_error);
}

TEST_CASE("representation from JSON") {
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const Prime p3(3);
    const Representation rep = rep_from_json(
        Json::parse(R"([[[1,0],[0,1]],[[0,1],[1,0]]])"), c2, p3);
    CHECK(rep.dim() == 2);
    CHECK_THROWS_AS(rep_from_json(Json::parse(R"([[[1]]])"), c2, p3),
                    std::invalid_argument);
}

TEST_CASE("padic JSON carries its precision") {
    const PadicInt x(2, 124, 9);
    const Json j = padic_to_json(x);
    CHECK(j.dump() == R"({"p":2,"residue":"124","precision":9})");
    CHECK(padic_from_json(j) == x);
    CHECK(padic_from_json(j).precision() == 9);
}

TEST_CASE("element syntax") {
    const SphereElement a = sphere_from_string("3", 2, 16);
    CHECK(a.two_part().a().residue() == 3);
    CHECK(a.two_part().d() == 0);

    CHECK(sphere_from_string("-3+e", 2, 16).two_part().d() == 1);
    CHECK(sphere_from_string("-3+e", 2, 16).two_part().a().balanced() == -3);
    CHECK(sphere_from_string("e", 2, 16).two_part().a().is_zero());
    CHECK(sphere_from_string(" 1 + e", 2, 16).two_part().d() == 1);
    CHECK(sphere_from_string("-e", 2, 16).two_part().d() == 1);
    CHECK(sphere_from_string("7", 5, 16).odd_part().residue() == 7);

    CHECK_THROWS_AS(sphere_from_string("1+e", 3, 16), std::invalid_argument);
    CHECK_THROWS_AS(sphere_from_string("x", 2, 16), std::invalid_argument);
    CHECK_THROWS_AS(sphere_from_string("", 2, 16), std::invalid_argument);

    const SphereElement j =
        sphere_from_json(Json::parse(R"({"a":"5","d":1})"), 2, 16);
    CHECK(j.two_part().a().residue() == 5);
    CHECK(j.two_part().d() == 1);
    // Emitted elements re-parse to the same value.
    CHECK(sphere_from_json(sphere_to_json(j), 2, 16) == j);

    const SphereElement odd = sphere_from_json(
        Json::parse(R"({"p":3,"residue":"4","precision":8})"), 3, 16);
    CHECK(odd.odd_part().residue() == 4);
    CHECK(odd.odd_part().precision() == 8);
}

TEST_CASE("space JSON") {
    const PiFiniteSpace s =
        space_from_json(Json::parse(R"({"components":[[2],[4,2]]})"), 2);
    CHECK(s.components().size() == 2);
    CHECK(space_from_json(space_to_json(s), 2).components() == s.components());
    CHECK_THROWS_AS(
        space_from_json(Json::parse(R"({"p":3,"components":[[2]]})"), 2),
        std::invalid_argument);
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"components":[[0]]})"), 2),
                    std::invalid_argument);
}
