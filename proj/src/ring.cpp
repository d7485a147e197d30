#include "annigraph/ring.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace annigraph {

int RingSpec::field_count() const {
    return static_cast<int>(std::count(orders.begin(), orders.end(), 1));
}

long long RingSpec::order_sum() const {
    long long sum = 0;
    for (int n : orders) sum += n;
    return sum;
}

namespace {

long long parse_integer(std::string_view token, std::string_view what) {
    const std::size_t b = token.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        throw std::invalid_argument(std::string(what) + ": empty entry");
    const std::size_t e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);

    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument(std::string(what) + ": not an integer: '" +
                                    std::string(token) + "'");
    return value;
}

std::vector<long long> parse_integer_list(std::string_view text,
                                          std::string_view what) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? comma
                                                             : comma - pos);
        values.push_back(parse_integer(token, what));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return values;
}

}  // namespace

RingSpec parse_spec(std::string_view text) {
    if (text.find_first_not_of(" \t") == std::string_view::npos)
        throw std::invalid_argument("ring spec: empty order list");
    RingSpec spec;
    for (long long v : parse_integer_list(text, "ring spec")) {
        if (v < 1)
            throw std::invalid_argument("ring spec: order must be >= 1, got " +
                                        std::to_string(v));
        if (v > INT32_MAX)
            throw std::invalid_argument("ring spec: order too large: " +
                                        std::to_string(v));
        spec.orders.push_back(static_cast<int>(v));
    }
    return spec;
}

RingSpec spec_from_modulus(std::uint64_t modulus) {
    if (modulus < 2)
        throw std::domain_error("modulus must be >= 2, got " +
                                std::to_string(modulus));
    RingSpec spec;
    std::uint64_t m = modulus;
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        spec.orders.push_back(a);
    }
    if (m > 1) spec.orders.push_back(1);
    return spec;
}

RingSpec canonicalized(const RingSpec& spec) {
    RingSpec out = spec;
    std::sort(out.orders.begin(), out.orders.end(), std::greater<int>());
    return out;
}

std::uint64_t ideal_count(const RingSpec& spec) {
    if (spec.orders.empty())
        throw std::invalid_argument("ring spec has no factors");
    std::uint64_t prod = 1;
    for (int n : spec.orders) {
        if (n < 1) throw std::domain_error("chain ring order must be >= 1");
        if (__builtin_mul_overflow(prod, static_cast<std::uint64_t>(n) + 1,
                                   &prod))
            throw std::overflow_error("ideal count exceeds 64 bits");
    }
    return prod;
}

std::uint64_t vertex_count(const RingSpec& spec) {
    return ideal_count(spec) - 2;
}

void check_bounds(const RingSpec& spec, const IdealVector& ideal) {
    if (ideal.exps.size() != spec.orders.size())
        throw std::domain_error(
            "ideal vector has " + std::to_string(ideal.exps.size()) +
            " components, ring has " + std::to_string(spec.orders.size()));
    for (std::size_t i = 0; i < ideal.exps.size(); ++i)
        if (ideal.exps[i] < 0 || ideal.exps[i] > spec.orders[i])
            throw std::domain_error("ideal component " + std::to_string(i + 1) +
                                    " out of range in " + to_string(ideal));
}

IdealVector annihilator(const RingSpec& spec, const IdealVector& ideal) {
    check_bounds(spec, ideal);
    IdealVector out;
    out.exps.resize(ideal.exps.size());
    for (std::size_t i = 0; i < ideal.exps.size(); ++i)
        out.exps[i] = spec.orders[i] - ideal.exps[i];
    return out;
}

bool is_vertex(const RingSpec& spec, const IdealVector& ideal) {
    check_bounds(spec, ideal);
    bool nonzero = false;     // some component below its order
    bool ann_nonzero = false; // some component above zero
    for (std::size_t i = 0; i < ideal.exps.size(); ++i) {
        nonzero |= ideal.exps[i] < spec.orders[i];
        ann_nonzero |= ideal.exps[i] > 0;
    }
    return nonzero && ann_nonzero;
}

std::vector<IdealVector> enumerate_vertices(const RingSpec& spec) {
    const std::uint64_t count = vertex_count(spec);
    std::vector<IdealVector> out;
    out.reserve(static_cast<std::size_t>(count));

    const std::size_t n = spec.orders.size();
    std::vector<int> exps(n, 0);
    while (true) {
        bool nonzero = false, ann_nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            nonzero |= exps[i] < spec.orders[i];
            ann_nonzero |= exps[i] > 0;
        }
        if (nonzero && ann_nonzero) out.push_back(IdealVector{exps});

        // mixed-radix increment; last component fastest keeps lex order
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (exps[i] < spec.orders[i]) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
            if (i == 0) return out;
        }
    }
}

IdealVector parse_ideal(const RingSpec& spec, std::string_view text) {
    if (text.find_first_not_of(" \t") == std::string_view::npos)
        throw std::invalid_argument("ideal: empty exponent list");
    IdealVector ideal;
    for (long long v : parse_integer_list(text, "ideal")) {
        if (v < 0 || v > INT32_MAX)
            throw std::invalid_argument("ideal: exponent out of range: " +
                                        std::to_string(v));
        ideal.exps.push_back(static_cast<int>(v));
    }
    check_bounds(spec, ideal);
    return ideal;
}

std::string to_string(const RingSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.orders.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.orders[i]);
    }
    return out;
}

std::string to_string(const IdealVector& ideal) {
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.exps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ideal.exps[i]);
    }
    out += ')';
    return out;
}

}  // namespace annigraph
