// Wires the randomized property suites into ctest with a fixed seed.

#include "k1witt/verify.hpp"

#include "k1witt/fields.hpp"

#include <doctest.h>

namespace {

void require_suite(const k1witt::verify::SuiteResult& s) {
    for (const auto& c : s.checks) {
        INFO(s.name << ": " << c.name << " — " << c.detail);
        CHECK(c.passed);
    }
}

constexpr std::uint64_t kSeed = 20829;

} // namespace

TEST_CASE("fields suite") { require_suite(k1witt::verify::run_fields_suite(kSeed)); }

TEST_CASE("forms suite") { require_suite(k1witt::verify::run_forms_suite(kSeed)); }

TEST_CASE("equivariant suite") {
    require_suite(k1witt::verify::run_equivariant_suite(kSeed));
}

TEST_CASE("padic suite") { require_suite(k1witt::verify::run_padic_suite(kSeed)); }

TEST_CASE("k1 suite") { require_suite(k1witt::verify::run_k1_suite(kSeed)); }

TEST_CASE("suite lookup") {
    CHECK(k1witt::verify::suite_names().size() == 5);
    CHECK_THROWS_AS(k1witt::verify::run_suite("nope", 1),
                    k1witt::precondition_error);
}
