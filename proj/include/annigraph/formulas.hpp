#pragma once

#include <optional>

#include "annigraph/ring.hpp"

namespace annigraph {

enum class RingCase {
    Local,       // one maximal ideal
    TwoMaximal,  // two maximal ideals
    General,     // three or more
};
const char* to_string(RingCase ring_case);

/// ceil(log2(beta)) for beta >= 2, else 0, in exact integer arithmetic.
int epsilon_general(long long beta);

/// Closed-form value or bounds for the metric dimension of AG(R).
struct DimBounds {
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;  // present iff lower == upper
    RingCase ring_case = RingCase::Local;
    int epsilon = 0;
    int beta = 0;  // number of field factors
};

/// Evaluates the dimension formula for the spec alone:
///   one factor:            exact floor((n_1 - 1)/2)
///   two factors:           exact n_1 + n_2 - 2 + eps, eps = 1 iff both fields
///   three or more factors: sum(n_i) - n + eps <= dim <= sum(n_i),
///                          eps = epsilon_general(beta)
DimBounds dim_bounds(const RingSpec& spec);

}  // namespace annigraph
