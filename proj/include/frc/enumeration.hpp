#pragma once

#include <cstdint>
#include <string>

namespace frc {

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

// Upper bound on the number of subsets a single exhaustive pass may visit.
struct EnumerationCap {
    std::uint64_t max_subsets = kDefaultSubsetCap;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// Throws LimitError naming C(n, k) when it exceeds the cap.
void require_within_cap(int n, int k, const EnumerationCap& cap, const std::string& what);

}  // namespace frc
