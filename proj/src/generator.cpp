#include "frc/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "frc/errors.hpp"

namespace frc {
namespace {

constexpr int kMaxRetries = 1000;

// Unbiased draw from [0, bound) using only raw engine output, so results do
// not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
    }
}

void check_common(const GenSpec& spec) {
    if (spec.n < 1 || spec.theta < 1 || spec.rho < 1) {
        throw ParameterError("n, theta and rho must all be >= 1");
    }
    if (spec.rho > spec.n) {
        throw ParameterError("rho = " + std::to_string(spec.rho) + " exceeds n = " + std::to_string(spec.n) +
                             "; replicas must live on distinct nodes");
    }
}

// Swaps one copy of a duplicated packet on `a` with a packet from another
// node that lacks it. Returns false when no such swap exists.
bool repair_duplicate(std::vector<std::vector<int>>& slots, std::size_t a, std::size_t slot_a,
                      std::mt19937_64& rng) {
    const int dup = slots[a][slot_a];
    std::vector<std::size_t> order(slots.size());
    for (std::size_t b = 0; b < order.size(); ++b) order[b] = b;
    shuffle(order, rng);
    for (std::size_t b : order) {
        if (b == a) continue;
        auto& other = slots[b];
        if (std::find(other.begin(), other.end(), dup) != other.end()) continue;
        for (std::size_t s = 0; s < other.size(); ++s) {
            if (std::find(slots[a].begin(), slots[a].end(), other[s]) == slots[a].end()) {
                std::swap(slots[a][slot_a], other[s]);
                return true;
            }
        }
    }
    return false;
}

// Locates a packet that appears twice on one node: (node, slot of second copy).
std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const std::vector<std::vector<int>>& slots) {
    for (std::size_t a = 0; a < slots.size(); ++a) {
        const auto& s = slots[a];
        for (std::size_t x = 0; x < s.size(); ++x) {
            for (std::size_t y = x + 1; y < s.size(); ++y) {
                if (s[x] == s[y]) return std::make_pair(a, y);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

FRCode generate_random(const GenSpec& spec) {
    check_common(spec);
    std::mt19937_64 rng(spec.seed);
    std::vector<int> node_order(static_cast<std::size_t>(spec.n));

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::vector<PacketList> nodes(static_cast<std::size_t>(spec.n));
        for (int j = 1; j <= spec.theta; ++j) {
            for (int i = 0; i < spec.n; ++i) node_order[static_cast<std::size_t>(i)] = i;
            // partial Fisher-Yates: the first rho entries are a uniform rho-subset
            for (int r = 0; r < spec.rho; ++r) {
                const auto pick = static_cast<std::size_t>(r) +
                                  uniform_below(rng, static_cast<std::uint64_t>(spec.n - r));
                std::swap(node_order[static_cast<std::size_t>(r)], node_order[pick]);
                nodes[static_cast<std::size_t>(node_order[static_cast<std::size_t>(r)])].push_back(j);
            }
        }
        const bool any_empty =
            std::any_of(nodes.begin(), nodes.end(), [](const PacketList& u) { return u.empty(); });
        if (!any_empty) return FRCode(spec.theta, spec.rho, std::move(nodes));
    }
    throw ExhaustionError("no placement without empty nodes after " + std::to_string(kMaxRetries) + " attempts");
}

FRCode generate_strong(const GenSpec& spec) {
    check_common(spec);
    const std::int64_t stubs = static_cast<std::int64_t>(spec.rho) * spec.theta;
    if (stubs % spec.n != 0) {
        throw ParameterError("n = " + std::to_string(spec.n) + " does not divide rho*theta = " +
                             std::to_string(stubs));
    }
    const auto alpha = static_cast<std::size_t>(stubs / spec.n);
    std::mt19937_64 rng(spec.seed);

    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(stubs));
    for (int j = 1; j <= spec.theta; ++j) {
        for (int r = 0; r < spec.rho; ++r) pool.push_back(j);
    }

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        shuffle(pool, rng);
        std::vector<std::vector<int>> slots(static_cast<std::size_t>(spec.n));
        for (std::size_t i = 0; i < slots.size(); ++i) {
            slots[i].assign(pool.begin() + static_cast<std::ptrdiff_t>(i * alpha),
                            pool.begin() + static_cast<std::ptrdiff_t>((i + 1) * alpha));
        }
        // each successful swap removes one duplicate and creates none
        bool stuck = false;
        while (auto dup = find_duplicate(slots)) {
            if (!repair_duplicate(slots, dup->first, dup->second, rng)) {
                stuck = true;
                break;
            }
        }
        if (!stuck) return FRCode(spec.theta, spec.rho, std::move(slots));
    }
    throw ExhaustionError("strong placement failed after " + std::to_string(kMaxRetries) + " attempts");
}

FRCode generate(const GenSpec& spec) {
    return spec.kind == GenKind::strong ? generate_strong(spec) : generate_random(spec);
}

const std::vector<NamedCode>& corpus() {
    static const std::vector<NamedCode> codes = {
        {"table1", FRCode(8, 3, {{1, 6, 7, 8}, {1, 2, 7, 8}, {1, 2, 3, 8}, {2, 3, 4, 7}, {3, 4, 5}, {4, 5, 6}, {5, 6}})},
        {"table2", FRCode(9, 2, {{1, 2, 3, 4}, {1, 6, 9}, {2, 5, 7, 9}, {3, 5, 6, 8}, {4, 7, 8}})},
        {"table3", FRCode(8, 2, {{1, 2, 3, 4}, {1, 2, 5, 7}, {3, 4, 6, 8}, {7, 8}, {6}})},
        {"m11x8", FRCode(8, 3,
                         {{1, 4, 7}, {2, 5, 8}, {3}, {6}, {1, 2, 3, 4}, {5, 8}, {6, 7}, {1, 4, 5}, {2, 3, 6}, {7}, {8}})},
    };
    return codes;
}

std::optional<FRCode> corpus_code(const std::string& name) {
    for (const auto& [key, code] : corpus()) {
        if (key == name) return code;
    }
    return std::nullopt;
}

}  // namespace frc
