#include "levelalg/rng.hpp"

#include <stdexcept>

namespace levelalg {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed, std::string_view label) : state_(mix64(seed) ^ fnv1a64(label)) {}

std::uint64_t Stream::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
}

std::uint64_t Stream::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Stream::below(0)");
    const std::uint64_t limit = -n % n;  // 2^64 mod n
    while (true) {
        std::uint64_t x = next();
        if (x >= limit) return x % n;
    }
}

long long Stream::between(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("Stream::between: empty range");
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Stream Stream::split(std::string_view label) { return Stream(next(), label); }

}  // namespace levelalg
