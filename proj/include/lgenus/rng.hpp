#ifndef LGENUS_RNG_HPP
#define LGENUS_RNG_HPP

#include <cstdint>

namespace lgenus {

/// SplitMix64.  Used for every seeded sweep so that reports are byte-stable
/// across standard libraries and worker counts (seed per item, not per
/// thread).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw from [lo, hi] (modulo bias is irrelevant here).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Stream for the i-th item of a seeded sweep.
inline SplitMix64 item_rng(std::uint64_t seed, std::uint64_t item) {
    return SplitMix64(seed + 0x9e3779b97f4a7c15ULL * (item + 1));
}

}  // namespace lgenus

#endif
