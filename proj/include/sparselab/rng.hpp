#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace sparselab {

/// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D), seeded
/// through one splitmix64 step so that seed 0 is usable. All derived draws
/// below are specified here rather than delegated to <random> distributions,
/// whose outputs differ between standard libraries.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, bound) by rejection of the biased tail.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do x = (*this)();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    /// 53-bit uniform double in [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace sparselab
