#include "frc/enumeration.hpp"

#include <limits>
#include <numeric>

#include "frc/errors.hpp"

namespace frc {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n-k+i) / i is integral; divide out gcd(result, i) first so
        // the product only overflows when the true value does
        const auto den = static_cast<std::uint64_t>(i);
        const auto g = std::gcd(result, den);
        result /= g;
        const auto factor = static_cast<std::uint64_t>(n - k + i) / (den / g);
        if (__builtin_mul_overflow(result, factor, &result)) return kMax;
    }
    return result;
}

void require_within_cap(int n, int k, const EnumerationCap& cap, const std::string& what) {
    const auto count = binomial(n, k);
    if (count > cap.max_subsets) {
        throw LimitError(what + ": C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                             std::to_string(count) + " subsets exceeds cap " + std::to_string(cap.max_subsets),
                         count, cap.max_subsets);
    }
}

}  // namespace frc
