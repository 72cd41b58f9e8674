#pragma once

#include <cstdint>
#include <random>

namespace vbess {

// Deterministic RNG wrapper. Only hand-rolled transforms are used on top of
// mt19937_64 so that streams are bit-reproducible across standard libraries
// (std::normal_distribution et al. are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)), gen_(state_) {}

    // [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        int span = hi - lo + 1;
        int v = lo + static_cast<int>(uniform() * static_cast<double>(span));
        return v > hi ? hi : v;
    }

    // Named substream: independent generator derived from this seed and a tag.
    Rng stream(std::uint64_t tag) const {
        return Rng(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    }

    std::uint64_t next_u64() { return gen_(); }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
    std::mt19937_64 gen_;
};

}  // namespace vbess
