#pragma once

#include <cstdint>
#include <random>

namespace infoflow {

/// Portable seeded random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard library distributions are not portable, so the
/// transforms are spelled out here:
///   uniform(): top 53 bits of one draw times 2^-53, in [0, 1).
///   normal():  Box-Muller on two uniforms (u1 mapped to (0, 1]),
///              cos branch first, sin branch cached for the next call.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace infoflow
