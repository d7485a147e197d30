#include <doctest.h>

#include <stdexcept>

#include "annigraph/constructions.hpp"
#include "annigraph/formulas.hpp"
#include "annigraph/report.hpp"
#include "annigraph/ring.hpp"

using namespace annigraph;

TEST_CASE("epsilon_general is an exact integer ceil(log2)") {
    CHECK(epsilon_general(0) == 0);
    CHECK(epsilon_general(1) == 0);
    CHECK(epsilon_general(2) == 1);
    CHECK(epsilon_general(3) == 2);
    CHECK(epsilon_general(4) == 2);
    CHECK(epsilon_general(5) == 3);
    CHECK_THROWS_AS(epsilon_general(-1), std::domain_error);
}

TEST_CASE("epsilon_general against repeated doubling") {
    // reference: smallest e with 2^e >= beta
    long long beta = 2;
    for (int e = 1; beta <= 1'000'000; ++e, beta *= 2) {
        CHECK(epsilon_general(beta) == e);       // exact power
        CHECK(epsilon_general(beta - 1) == (beta - 1 <= 1 ? 0 : e));
        CHECK(epsilon_general(beta + 1) == e + 1);
    }
    for (long long b = 2; b <= 4096; ++b) {
        int e = 0;
        long long pow = 1;
        while (pow < b) {
            pow *= 2;
            ++e;
        }
        CHECK(epsilon_general(b) == e);
    }
}

TEST_CASE("dimension formula per case") {
    const DimBounds local = dim_bounds(parse_spec("4"));
    CHECK(local.ring_case == RingCase::Local);
    CHECK(local.exact == 1);

    const DimBounds two_fields = dim_bounds(parse_spec("1,1"));
    CHECK(two_fields.ring_case == RingCase::TwoMaximal);
    CHECK(two_fields.epsilon == 1);
    CHECK(two_fields.exact == 1);

    const DimBounds mixed = dim_bounds(parse_spec("2,1"));
    CHECK(mixed.epsilon == 0);
    CHECK(mixed.exact == 1);

    CHECK(dim_bounds(parse_spec("5,5")).exact == 8);

    const DimBounds general = dim_bounds(parse_spec("1,1,1"));
    CHECK(general.ring_case == RingCase::General);
    CHECK(general.beta == 3);
    CHECK(general.epsilon == 2);
    CHECK(general.lower == 2);
    CHECK(general.upper == 3);
    CHECK_FALSE(general.exact.has_value());

    const DimBounds no_fields = dim_bounds(parse_spec("3,3,3"));
    CHECK(no_fields.epsilon == 0);
    CHECK(no_fields.lower == 6);
    CHECK(no_fields.upper == 9);
}

TEST_CASE("local formula sequence") {
    const long long expect[] = {0, 0, 1, 1, 2, 2, 3, 3, 4};
    for (int n1 = 1; n1 <= 9; ++n1)
        CHECK(dim_bounds(RingSpec{{n1}}).exact == expect[n1 - 1]);
}

TEST_CASE("bounds are ordered and sized like the construction") {
    for (const RingSpec& spec : sweep_grid(5, 7, 100000)) {
        CAPTURE(to_string(spec));
        const DimBounds bounds = dim_bounds(spec);
        CHECK(bounds.lower >= 0);
        CHECK(bounds.lower <= bounds.upper);
        if (bounds.exact) {
            CHECK(*bounds.exact == bounds.lower);
            CHECK(*bounds.exact == bounds.upper);
        }
        CHECK(static_cast<long long>(construct_resolving_set(spec).size()) ==
              bounds.upper);
    }
}
