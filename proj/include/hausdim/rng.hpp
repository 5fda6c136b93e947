#pragma once

#include <cstdint>
#include <random>

namespace hausdim {

// splitmix64 finalizer; used to derive independent seed streams.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a child seed from (seed, stream, substream, index). Every consumer
// of randomness gets its own derived stream so results never depend on
// evaluation order or thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t substream = 0, std::uint64_t index = 0) {
    std::uint64_t h = mix_seed(seed ^ 0x853c49e6748fea9bULL);
    h = mix_seed(h ^ stream);
    h = mix_seed(h ^ substream);
    h = mix_seed(h ^ index);
    return h;
}

// Seeded generator. The uint64 -> double conversion is done by hand so the
// emitted values do not depend on standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    std::size_t next_index(std::size_t n) {
        return n == 0 ? 0 : static_cast<std::size_t>(next_double() * static_cast<double>(n)) % n;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hausdim
