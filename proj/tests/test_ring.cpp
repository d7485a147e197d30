#include <doctest.h>

#include <stdexcept>

#include "annigraph/report.hpp"
#include "annigraph/ring.hpp"
#include "support/oracles.hpp"

using namespace annigraph;

namespace {
IdealVector iv(std::vector<int> exps) { return IdealVector{std::move(exps)}; }
}  // namespace

TEST_CASE("parse_spec accepts order lists") {
    CHECK(parse_spec("4").orders == std::vector<int>{4});
    CHECK(parse_spec("2,1").orders == std::vector<int>{2, 1});
    CHECK(parse_spec(" 2 , 1 , 3 ").orders == std::vector<int>{2, 1, 3});
}

TEST_CASE("parse_spec rejects bad input") {
    CHECK_THROWS_AS(parse_spec("0,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("2,x"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_spec("0,3"),
                         doctest::Contains("must be >= 1"),
                         std::invalid_argument);
}

TEST_CASE("spec_from_modulus factors by trial division") {
    CHECK(spec_from_modulus(16).orders == std::vector<int>{4});
    CHECK(spec_from_modulus(12).orders == std::vector<int>{2, 1});
    CHECK(spec_from_modulus(30).orders == std::vector<int>{1, 1, 1});
    CHECK(spec_from_modulus(2).orders == std::vector<int>{1});
    CHECK(spec_from_modulus(97).orders == std::vector<int>{1});
    CHECK(spec_from_modulus(360).orders == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(spec_from_modulus(1), std::domain_error);
    CHECK_THROWS_AS(spec_from_modulus(0), std::domain_error);
}

TEST_CASE("AG(Z_16) and AG(Z_81) share a spec") {
    CHECK(spec_from_modulus(16).orders == spec_from_modulus(81).orders);
}

TEST_CASE("canonicalized sorts descending") {
    CHECK(canonicalized(parse_spec("1,3,2")).orders ==
          std::vector<int>{3, 2, 1});
}

TEST_CASE("vertex and ideal counts") {
    CHECK(ideal_count(parse_spec("4")) == 5);
    CHECK(vertex_count(parse_spec("4")) == 3);
    CHECK(vertex_count(parse_spec("2,1")) == 4);
    CHECK(vertex_count(parse_spec("1")) == 0);
    CHECK(vertex_count(parse_spec("2")) == 1);
}

TEST_CASE("annihilator on chain-ring exponents") {
    CHECK(annihilator(parse_spec("4"), iv({1})) == iv({3}));
    CHECK(annihilator(parse_spec("2,1"), iv({0, 1})) == iv({2, 0}));
    CHECK(annihilator(parse_spec("3"), iv({3})) == iv({0}));
}

TEST_CASE("annihilator bounds checking") {
    CHECK_THROWS_AS(annihilator(parse_spec("2,1"), iv({3, 0})),
                    std::domain_error);
    CHECK_THROWS_AS(annihilator(parse_spec("2,1"), iv({1})),
                    std::domain_error);
    CHECK_THROWS_AS(annihilator(parse_spec("2"), iv({-1})), std::domain_error);
}

TEST_CASE("is_vertex excludes exactly the two extremes") {
    const RingSpec spec = parse_spec("2,1");
    CHECK(is_vertex(spec, iv({1, 1})));
    CHECK_FALSE(is_vertex(spec, iv({2, 1})));
    CHECK_FALSE(is_vertex(spec, iv({0, 0})));
    CHECK_FALSE(is_vertex(parse_spec("4"), iv({0})));
    CHECK(is_vertex(parse_spec("4"), iv({1})));
}

TEST_CASE("enumerate_vertices is lexicographic and complete") {
    CHECK(enumerate_vertices(parse_spec("4")) ==
          std::vector<IdealVector>{iv({1}), iv({2}), iv({3})});
    CHECK(enumerate_vertices(parse_spec("2,1")) ==
          std::vector<IdealVector>{iv({0, 1}), iv({1, 0}), iv({1, 1}),
                                   iv({2, 0})});
    CHECK(enumerate_vertices(parse_spec("1,1,1")).size() == 6);
    CHECK(enumerate_vertices(parse_spec("1")).empty());
}

TEST_CASE("ring properties hold exhaustively on small specs") {
    for (const RingSpec& spec : sweep_grid(7, 199, 198)) {
        CAPTURE(to_string(spec));
        const auto vertices = enumerate_vertices(spec);
        CHECK(vertices.size() == vertex_count(spec));
        CHECK(std::is_sorted(vertices.begin(), vertices.end()));

        // involution, oracle agreement, and vertex symmetry under Ann
        for (const auto& v : vertices) {
            const IdealVector ann = annihilator(spec, v);
            CHECK(annihilator(spec, ann) == v);
            CHECK(ann == testsupport::bruteforce_annihilator(spec, v));
            CHECK(is_vertex(spec, ann));
        }
    }
}

TEST_CASE("parse_ideal mirrors the spec grammar") {
    const RingSpec spec = parse_spec("2,1");
    CHECK(parse_ideal(spec, "0,1") == iv({0, 1}));
    CHECK_THROWS_AS(parse_ideal(spec, "3,0"), std::domain_error);
    CHECK_THROWS_AS(parse_ideal(spec, "0"), std::domain_error);
    CHECK_THROWS_AS(parse_ideal(spec, "a,b"), std::invalid_argument);
}

TEST_CASE("to_string renderings") {
    CHECK(to_string(parse_spec("2,1")) == "2,1");
    CHECK(to_string(iv({0, 1})) == "(0,1)");
    CHECK(to_string(iv({3})) == "(3)");
}
