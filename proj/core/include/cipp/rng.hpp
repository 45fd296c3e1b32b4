#pragma once

#include <cstdint>

namespace cipp {

// splitmix64. Chosen over std::mt19937_64 because sub-streams keyed by
// (iteration, ant) are cheap to derive, which keeps runs reproducible no
// matter how tour construction is scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return finalize(state_);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [0, n)
    std::uint64_t next_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
    }

    // independent stream for a (major, minor) work item under one seed
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t major, std::uint64_t minor) {
        std::uint64_t s = finalize(seed + 0x9e3779b97f4a7c15ULL);
        s = finalize(s ^ (major + 0xbf58476d1ce4e5b9ULL));
        s = finalize(s ^ (minor + 0x94d049bb133111ebULL));
        return SplitMix64(s);
    }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace cipp
