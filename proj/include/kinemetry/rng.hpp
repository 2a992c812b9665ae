#pragma once

#include <cstdint>

namespace kinemetry {

// SplitMix64 (Steele, Lea, Flood 2014): the fixed generator behind every
// estimator in this library. The state advances by the 64-bit golden gamma and
// each output is a pure function of the state, so the stream for a given seed
// is reproducible across platforms and languages from this description alone:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Uniform doubles in [0,1) take the top 53 bits: (x >> 11) * 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

// Splittable chunk scheme: chunk c of a run seeded with s starts a fresh
// SplitMix64 at the c-th output of a master SplitMix64 seeded with s.  This is
// the SplittableRandom "split" idiom; chunk streams are independent for all
// practical purposes and the whole schedule is a pure function of (s, c).
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    SplitMix64 master(seed + chunk * 0x9E3779B97F4A7C15ULL);
    return master.next();
}

// Fixed chunk length for parallel estimators.  The chunk schedule depends only
// on the sample count, never on the worker count, so results are bit-for-bit
// identical for any KINEMETRY_THREADS setting.
inline constexpr std::uint64_t kChunkSamples = 1u << 16;

}  // namespace kinemetry
