#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frc/code.hpp"

namespace frc {

enum class GenKind { random, strong };

struct GenSpec {
    int n = 0;
    int theta = 0;
    int rho = 0;
    std::uint64_t seed = 0;
    GenKind kind = GenKind::random;
};

// Places every packet on rho distinct pseudo-random nodes. Placements that
// leave a node empty are re-rolled up to 1000 times before ExhaustionError.
// Throws ParameterError when rho > n or a parameter is below 1.
FRCode generate_random(const GenSpec& spec);

// A rho-regular code with every node holding exactly rho*theta/n packets:
// configuration-model placement, then swaps that move duplicate copies off
// overfull nodes. Throws ParameterError unless n divides rho*theta and rho <= n.
FRCode generate_strong(const GenSpec& spec);

// Dispatches on spec.kind.
FRCode generate(const GenSpec& spec);

using NamedCode = std::pair<std::string, FRCode>;

// The four built-in codes: table1 (7,8,4,3), table2 (5,9,4,2), table3 (5,8,4,2)
// and m11x8 (11 nodes, 8 packets, rho 3).
const std::vector<NamedCode>& corpus();

std::optional<FRCode> corpus_code(const std::string& name);

}  // namespace frc
