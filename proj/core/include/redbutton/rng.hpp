#pragma once

#include <cstdint>
#include <random>

namespace redbutton {

/// Seeded random stream with pinned draw semantics.
///
/// Wraps std::mt19937_64 (bit-exact across platforms) and provides the
/// two draw primitives the simulator uses. The helpers avoid
/// std::uniform_*_distribution, whose output is implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be > 0.
    int below(int n) {
        auto r = static_cast<unsigned __int128>(next());
        return static_cast<int>((r * static_cast<unsigned __int128>(n)) >> 64);
    }

    /// Derives a child seed from a master seed and a stream index
    /// (splitmix64 finalizer). Used for per-trial streams.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace redbutton
