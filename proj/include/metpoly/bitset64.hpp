#ifndef METPOLY_BITSET64_HPP
#define METPOLY_BITSET64_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace metpoly {

/// Fixed-capacity bitset over 64-bit words; used for tight-constraint sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64) {}

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return bits_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t k = 0; k < a.words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
        return c;
    }

    static Bitset intersect(const Bitset& a, const Bitset& b) {
        Bitset r(a.bits_);
        for (std::size_t k = 0; k < a.words_.size(); ++k) r.words_[k] = a.words_[k] & b.words_[k];
        return r;
    }

    /// Indices of set bits, ascending.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                out.push_back(static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const Bitset& o) const { return bits_ == o.bits_ && words_ == o.words_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace metpoly

#endif
