#include "annigraph/constructions.hpp"

#include <stdexcept>

namespace annigraph {

namespace {

void check_family_index(const RingSpec& spec, int s, int k) {
    const int n = spec.factor_count();
    if (s < 1 || s > n)
        throw std::domain_error("factor index " + std::to_string(s) +
                                " out of range 1.." + std::to_string(n));
    const int order = spec.orders[s - 1];
    if (k < 0 || k > order - 1)
        throw std::domain_error("exponent parameter " + std::to_string(k) +
                                " out of range 0.." + std::to_string(order - 1));
}

}  // namespace

IdealVector axis_ideal(const RingSpec& spec, int s, int k) {
    check_family_index(spec, s, k);
    IdealVector out;
    out.exps = spec.orders;  // zero ideal in every factor
    out.exps[s - 1] = k;
    return out;
}

IdealVector coaxis_ideal(const RingSpec& spec, int s, int k) {
    check_family_index(spec, s, k);
    IdealVector out;
    out.exps.assign(spec.orders.size(), 0);  // whole ring in every factor
    out.exps[s - 1] = spec.orders[s - 1] - k;
    return out;
}

std::vector<IdealVector> construct_resolving_set(const RingSpec& spec) {
    const int n = spec.factor_count();
    std::vector<IdealVector> out;

    if (n == 1) {
        const int top = (spec.orders[0] - 1) / 2;
        for (int k = 1; k <= top; ++k)
            out.push_back(IdealVector{{k}});
        return out;
    }

    if (n == 2) {
        const int beta = spec.field_count();
        if (beta == 2) {
            out.push_back(axis_ideal(spec, 1, 0));
        } else if (beta == 1) {
            const int a = spec.orders[0] > 1 ? 1 : 2;  // non-field factor
            for (int k = 0; k <= spec.orders[a - 1] - 2; ++k)
                out.push_back(axis_ideal(spec, a, k));
        } else {
            for (int s = 1; s <= 2; ++s)
                for (int k = 0; k <= spec.orders[s - 1] - 2; ++k)
                    out.push_back(axis_ideal(spec, s, k));
        }
        return out;
    }

    for (int s = 1; s <= n; ++s)
        for (int k = 0; k <= spec.orders[s - 1] - 1; ++k)
            out.push_back(axis_ideal(spec, s, k));
    return out;
}

}  // namespace annigraph
