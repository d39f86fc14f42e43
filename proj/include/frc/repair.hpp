#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frc/code.hpp"
#include "frc/enumeration.hpp"

namespace frc {

// For a failed node i: each packet j of U_i mapped to H_j \ {i}, the surviving
// nodes that still hold j. Entries are packet-indexed, so two packets with the
// same helper set stay separate.
struct HelperSets {
    NodeId node;
    std::map<PacketId, std::vector<NodeId>> entries;

    std::vector<int> orphaned_packets() const;  // packets whose helper set is empty
};

HelperSets helper_sets(const FRCode& code, NodeId i);

// Packets of the failed node fetched together from one common helper.
struct RepairGroup {
    NodeId helper;
    PacketList packets;
};

struct GreedyRepair {
    int degree = 0;  // alpha_i - sum of (|T_q| - 1)
    std::vector<RepairGroup> groups;
};

// Repeatedly takes the largest set T of still-missing packets whose helper
// sets share a node, until U_i is covered. The largest T is found by counting,
// for each surviving node h, the missing packets h holds; ties go to the
// smallest h. Throws UnrepairableError if some packet of U_i exists nowhere else.
GreedyRepair repair_degree_greedy(const FRCode& code, NodeId i);

// Minimum number of surviving nodes whose union contains U_i, by exhaustive
// search in increasing cover size. Throws UnrepairableError or LimitError.
int repair_degree_exact(const FRCode& code, NodeId i, const EnumerationCap& cap = {});

enum class RepairMode { greedy, exact, both };

struct NodeRepair {
    NodeId node;
    int alpha_i = 0;
    std::vector<int> unrepairable_packets;  // non-empty means both degrees are undefined
    std::optional<int> d_greedy;
    std::optional<int> d_exact;
    bool exact_capped = false;
    std::vector<RepairGroup> groups;

    bool repairable() const { return unrepairable_packets.empty(); }
};

struct RepairReport {
    std::vector<NodeRepair> per_node;
};

NodeRepair repair_node(const FRCode& code, NodeId i, RepairMode mode, const EnumerationCap& cap = {});

RepairReport repair_report(const FRCode& code, RepairMode mode = RepairMode::both, const EnumerationCap& cap = {});

}  // namespace frc
