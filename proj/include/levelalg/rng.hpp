#pragma once

#include <cstdint>
#include <string_view>

namespace levelalg {

// SplitMix64 streams. A stream is keyed by (master seed, label); the label is
// folded in with 64-bit FNV-1a so output depends only on those two values.
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view label);
    explicit Stream(std::uint64_t state) : state_(state) {}

    std::uint64_t next();
    // Uniform in [0, n), by rejection.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    long long between(long long lo, long long hi);
    Stream split(std::string_view label);

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t mix64(std::uint64_t z);

}  // namespace levelalg
