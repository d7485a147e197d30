#pragma once

#include <vector>

#include "annigraph/ring.hpp"

namespace annigraph {

/// The ideal supported on factor s alone: zero in every other factor and
/// J_s^k at s (1-based s, 0 <= k <= n_s - 1). A vertex whenever the ring has
/// at least two factors, or k >= 1 in the local case.
IdealVector axis_ideal(const RingSpec& spec, int s, int k);

/// The complementary family: the whole ring in every factor except s and
/// J_s^{n_s - k} at s (1-based s, 0 <= k <= n_s - 1).
IdealVector coaxis_ideal(const RingSpec& spec, int s, int k);

/// The explicit resolving set whose size realizes the upper bound of the
/// dimension formula, assembled case by case:
///   one factor:   {J, J^2, ..., J^{floor((n_1-1)/2)}} (empty for n_1 <= 2)
///   two factors, both fields:   {axis_ideal(1, 0)}
///   two factors, one field:     {axis_ideal(a, k) : k <= n_a - 2},
///                               a the non-field factor
///   two factors, no fields:     {axis_ideal(s, k) : s in {1,2}, k <= n_s - 2}
///   three or more factors:      {axis_ideal(s, k) : all s, k <= n_s - 1}
/// Output is ordered by (s, k); ascending powers in the local case.
std::vector<IdealVector> construct_resolving_set(const RingSpec& spec);

}  // namespace annigraph
