#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dohf {

// Fixed-size bit set, one 64-bit word per 64 positions. Adjacency rows and
// the candidate sets of the exact searches live in these; a single word
// covers the usual desk-scale graphs (n <= 64).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // set difference: this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    // index of the first set bit at position >= from, or -1
    int next(int from) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (wi = wi + 1; wi < static_cast<int>(words_.size()); ++wi)
            if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
        return -1;
    }

    bool operator==(const Bitset& o) const = default;

    // range-for over set bits
    struct const_iterator {
        const Bitset* bs;
        int pos;
        int operator*() const { return pos; }
        const_iterator& operator++() {
            pos = bs->next(pos + 1);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return pos != o.pos; }
    };
    const_iterator begin() const { return {this, next(0)}; }
    const_iterator end() const { return {this, -1}; }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dohf
