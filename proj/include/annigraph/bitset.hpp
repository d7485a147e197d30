#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace annigraph {

// Fixed-width bitset over 64-bit words; just the operations the adjacency
// matrix and the subset search need.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] |= word_bit(i);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] &= ~word_bit(i);
    }
    bool test(std::size_t i) const {
        assert(i < n_);
        return (words_[i >> 6] & word_bit(i)) != 0;
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const Bitset& other) const {
        assert(n_ == other.n_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    std::size_t count_and(const Bitset& other) const {
        assert(n_ == other.n_);
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & other.words_[k]);
        return c;
    }

    Bitset and_with(const Bitset& other) const {
        assert(n_ == other.n_);
        Bitset out(n_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] = words_[k] & other.words_[k];
        return out;
    }

    // this |= a & b
    void or_and(const Bitset& a, const Bitset& b) {
        assert(n_ == a.n_ && n_ == b.n_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= a.words_[k] & b.words_[k];
    }

    // this = a & b, in place
    void assign_and(const Bitset& a, const Bitset& b) {
        assert(n_ == a.n_ && n_ == b.n_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] & b.words_[k];
    }

    // Index of the first set bit at or after `from`; size() if none.
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~0ull << (from & 63));
        while (true) {
            if (w) return (k << 6) + std::countr_zero(w);
            if (++k == words_.size()) return n_;
            w = words_[k];
        }
    }

    bool operator==(const Bitset&) const = default;

private:
    static std::uint64_t word_bit(std::size_t i) { return 1ull << (i & 63); }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace annigraph
