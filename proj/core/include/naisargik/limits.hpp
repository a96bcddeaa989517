#pragma once

#include <cstdint>

namespace naisargik {

// Desk-scale guards shared by every exhaustive routine.
struct Limits {
    std::uint64_t max_enumeration = std::uint64_t{1} << 24;  // 4^12 words
    std::uint64_t max_sphere_subsets = 10'000'000;           // C(|x|, s) per word
    unsigned workers = 1;
};

}  // namespace naisargik
