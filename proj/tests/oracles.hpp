#pragma once

// Brute-force reference computations used only by the tests. They work on
// plain std::set node lists and bitmask enumeration over all 2^n node subsets,
// sharing no code with the library's search routines.

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Nodes = std::vector<std::set<int>>;

inline Nodes from_lists(const std::vector<std::vector<int>>& lists) {
    Nodes out;
    for (const auto& l : lists) out.emplace_back(l.begin(), l.end());
    return out;
}

inline int union_size(const Nodes& nodes, std::uint32_t mask) {
    std::set<int> u;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (mask & (1u << i)) u.insert(nodes[i].begin(), nodes[i].end());
    }
    return static_cast<int>(u.size());
}

inline int rate(const Nodes& nodes, int k) {
    const auto n = static_cast<std::uint32_t>(nodes.size());
    int best = 1 << 30;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) == k) best = std::min(best, union_size(nodes, mask));
    }
    return best;
}

inline std::optional<int> k_star(const Nodes& nodes, int theta) {
    const auto n = static_cast<std::uint32_t>(nodes.size());
    std::optional<int> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (union_size(nodes, mask) >= theta - 1) {
            const int t = std::popcount(mask);
            if (!best || t < *best) best = t;
        }
    }
    return best;
}

// Direct quantification: smallest t where no t-subset falls short.
inline std::optional<int> k_fr(const Nodes& nodes, int theta) {
    const auto n = static_cast<std::uint32_t>(nodes.size());
    std::vector<bool> some_short(n + 1, false);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (union_size(nodes, mask) < theta - 1) some_short[static_cast<std::size_t>(std::popcount(mask))] = true;
    }
    for (std::uint32_t t = 1; t <= n; ++t) {
        if (!some_short[t]) return static_cast<int>(t);
    }
    return std::nullopt;
}

// Fewest other nodes whose union contains node i (0-based), scanning all
// helper masks; nullopt if no cover exists.
inline std::optional<int> repair_degree(const Nodes& nodes, std::size_t i) {
    const auto n = static_cast<std::uint32_t>(nodes.size());
    std::optional<int> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (mask & (1u << i)) continue;
        std::set<int> u;
        for (std::size_t h = 0; h < nodes.size(); ++h) {
            if (mask & (1u << h)) u.insert(nodes[h].begin(), nodes[h].end());
        }
        bool covers = true;
        for (int p : nodes[i]) covers = covers && u.count(p);
        if (covers && (!best || std::popcount(mask) < *best)) best = std::popcount(mask);
    }
    return best;
}

inline std::vector<int> replication(const Nodes& nodes, int theta) {
    std::vector<int> counts(static_cast<std::size_t>(theta), 0);
    for (const auto& u : nodes) {
        for (int p : u) ++counts[static_cast<std::size_t>(p - 1)];
    }
    return counts;
}

}  // namespace oracle
