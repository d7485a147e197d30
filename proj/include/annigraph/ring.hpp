#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace annigraph {

/// A finite commutative principal ring R = R_1 x ... x R_n, described up to
/// isomorphism of its annihilating-ideal graph: each local chain-ring factor
/// R_i is recorded only by the nilpotency order n_i of its Jacobson radical.
/// A factor is a field exactly when its order is 1.
struct RingSpec {
    std::vector<int> orders;

    int factor_count() const { return static_cast<int>(orders.size()); }
    int field_count() const;
    long long order_sum() const;

    bool operator==(const RingSpec&) const = default;
};

/// Parses a comma-separated list of orders, e.g. "4" or "2,1,3".
RingSpec parse_spec(std::string_view text);

/// Ring spec of Z/N: trial-divides N into prime powers p_1^{a_1}...p_k^{a_k}
/// (p_i ascending) and returns orders [a_1,...,a_k].
RingSpec spec_from_modulus(std::uint64_t modulus);

/// Orders sorted descending; two specs describe the same graph iff their
/// canonical forms are equal.
RingSpec canonicalized(const RingSpec& spec);

/// Number of ideals of R, i.e. prod (n_i + 1). Throws std::overflow_error
/// if the count does not fit in 64 bits.
std::uint64_t ideal_count(const RingSpec& spec);

/// Number of vertices of AG(R): all ideals except R itself and 0.
std::uint64_t vertex_count(const RingSpec& spec);

/// An ideal of the product ring as an exponent tuple: component m_i selects
/// J_i^{m_i}, with m_i = 0 the whole factor and m_i = n_i the zero ideal.
/// Ideal vectors order lexicographically; that order is the global
/// tie-breaking order everywhere.
struct IdealVector {
    std::vector<int> exps;

    auto operator<=>(const IdealVector&) const = default;
};

/// Throws std::domain_error unless ideal has one exponent per factor with
/// 0 <= m_i <= n_i.
void check_bounds(const RingSpec& spec, const IdealVector& ideal);

/// Annihilator of an ideal, computed componentwise: Ann(J^m) = J^{n-m}
/// in a chain ring of order n.
IdealVector annihilator(const RingSpec& spec, const IdealVector& ideal);

/// True iff the ideal is a vertex of AG(R): nonzero and with nonzero
/// annihilator, i.e. neither the all-zeros nor the all-orders vector.
bool is_vertex(const RingSpec& spec, const IdealVector& ideal);

/// All vertices of AG(R) in lexicographic order.
std::vector<IdealVector> enumerate_vertices(const RingSpec& spec);

/// Parses an exponent tuple such as "0,1" against the spec (bounds-checked).
IdealVector parse_ideal(const RingSpec& spec, std::string_view text);

std::string to_string(const RingSpec& spec);     // "2,1"
std::string to_string(const IdealVector& ideal); // "(0,1)"

}  // namespace annigraph
