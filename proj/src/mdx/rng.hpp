#pragma once

#include <cstdint>

namespace mdx {

// splitmix64 step; the whole test corpus derives from this one function so
// trial streams are identical across platforms and standard libraries.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform-ish value in [0, n); the modulo bias is irrelevant here and
    // keeping the stream portable matters more.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long long range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

  private:
    std::uint64_t state_;
};

// Decorrelates (seed, trial) pairs into fresh streams.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (trial * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    return Rng(splitmix64(s));
}

}  // namespace mdx
