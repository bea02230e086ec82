#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ramsat {

/// Seeded 64-bit generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the real and bounded-integer
/// conversions below are spelled out here rather than delegated to the
/// implementation-defined std distributions.
class Rng {
public:
    static constexpr std::string_view name = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (;;) {
            const std::uint64_t x = engine_();
            if (x < limit)
                return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ramsat
