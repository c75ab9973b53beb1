#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qmb {

/// A fixed-width set of element indices backed by 64-bit words.
/// Width is the size of the ground set; all binary operations
/// require operands of equal width.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    /// The set {0, ..., nbits-1}.
    static Bitset full(std::size_t nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t width() const { return nbits_; }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    /// True iff every index 0..width-1 is present.
    bool all() const { return count() == nbits_; }

    /// Index of the smallest member, or -1 when empty.
    int lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// True iff this ∪ o covers the whole width. The hot loop of the
    /// strong-compatibility check.
    bool union_is_full(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        if (words_.empty()) return nbits_ == 0;
        for (std::size_t i = 0; i + 1 < words_.size(); ++i)
            if ((words_[i] | o.words_[i]) != ~std::uint64_t{0}) return false;
        return (words_.back() | o.words_.back()) == tail_mask();
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const = default;
    auto operator<=>(const Bitset& o) const = default;

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + w;
        return h;
    }

private:
    std::uint64_t tail_mask() const {
        const std::size_t rem = nbits_ & 63;
        return rem ? (~std::uint64_t{0} >> (64 - rem)) : ~std::uint64_t{0};
    }

    void trim() {
        if (!words_.empty()) words_.back() &= tail_mask();
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qmb
