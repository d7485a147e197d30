#include "annigraph/formulas.hpp"

#include <bit>
#include <stdexcept>

namespace annigraph {

const char* to_string(RingCase ring_case) {
    switch (ring_case) {
        case RingCase::Local: return "Local";
        case RingCase::TwoMaximal: return "TwoMaximal";
        case RingCase::General: return "General";
    }
    return "?";
}

int epsilon_general(long long beta) {
    if (beta < 0)
        throw std::domain_error("field count must be >= 0, got " +
                                std::to_string(beta));
    if (beta <= 1) return 0;
    // ceil(log2(beta)) = bit_length(beta - 1) for beta >= 2
    return std::bit_width(static_cast<std::uint64_t>(beta - 1));
}

DimBounds dim_bounds(const RingSpec& spec) {
    if (spec.orders.empty())
        throw std::invalid_argument("ring spec has no factors");
    for (int order : spec.orders)
        if (order < 1) throw std::domain_error("chain ring order must be >= 1");

    const int n = spec.factor_count();
    DimBounds bounds;
    bounds.beta = spec.field_count();

    if (n == 1) {
        bounds.ring_case = RingCase::Local;
        bounds.lower = bounds.upper = (spec.orders[0] - 1) / 2;
        bounds.exact = bounds.lower;
        return bounds;
    }

    if (n == 2) {
        bounds.ring_case = RingCase::TwoMaximal;
        bounds.epsilon = bounds.beta == 2 ? 1 : 0;
        bounds.lower = bounds.upper =
            spec.orders[0] + spec.orders[1] - 2 + bounds.epsilon;
        bounds.exact = bounds.lower;
        return bounds;
    }

    bounds.ring_case = RingCase::General;
    bounds.epsilon = epsilon_general(bounds.beta);
    bounds.upper = spec.order_sum();
    bounds.lower = bounds.upper - n + bounds.epsilon;
    if (bounds.lower == bounds.upper) bounds.exact = bounds.lower;
    return bounds;
}

}  // namespace annigraph
