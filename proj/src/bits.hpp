#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sparselab::detail {

/// Fixed-width dynamic bitset for the search routines.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int width() const { return n_; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    int intersect_count(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sparselab::detail
