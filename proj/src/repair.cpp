#include "frc/repair.hpp"

#include <sstream>

#include "frc/errors.hpp"

namespace frc {
namespace {

[[noreturn]] void throw_unrepairable(NodeId i, const std::vector<int>& packets) {
    std::ostringstream os;
    os << "node " << i.value << " is unrepairable: packet";
    if (packets.size() > 1) os << 's';
    for (std::size_t k = 0; k < packets.size(); ++k) os << (k ? ", " : " ") << packets[k];
    os << " stored nowhere else";
    throw UnrepairableError(os.str(), i.value, packets);
}

void require_repairable(const HelperSets& hs) {
    auto orphans = hs.orphaned_packets();
    if (!orphans.empty()) throw_unrepairable(hs.node, orphans);
}

}  // namespace

std::vector<int> HelperSets::orphaned_packets() const {
    std::vector<int> out;
    for (const auto& [packet, helpers] : entries) {
        if (helpers.empty()) out.push_back(packet.value);
    }
    return out;
}

HelperSets helper_sets(const FRCode& code, NodeId i) {
    code.require_structural();
    HelperSets hs;
    hs.node = i;
    for (int p : code.node(i)) {
        auto& helpers = hs.entries[PacketId{p}];
        for (int h = 1; h <= code.n(); ++h) {
            if (h != i.value && code.node_sets()[static_cast<std::size_t>(h - 1)].test(static_cast<std::size_t>(p - 1))) {
                helpers.emplace_back(h);
            }
        }
    }
    return hs;
}

GreedyRepair repair_degree_greedy(const FRCode& code, NodeId i) {
    const auto hs = helper_sets(code, i);
    require_repairable(hs);

    PacketSet missing = code.node_set(i);
    const auto alpha_i = static_cast<int>(missing.count());
    GreedyRepair out;
    int saved = 0;  // sum of l_q = |T_q| - 1
    while (missing.any()) {
        int best = -1;
        std::size_t best_count = 0;
        for (int h = 1; h <= code.n(); ++h) {
            if (h == i.value) continue;
            const auto count = (code.node_sets()[static_cast<std::size_t>(h - 1)] & missing).count();
            if (count > best_count) {
                best = h;
                best_count = count;
            }
        }
        // every missing packet has a helper, so best is always found
        const PacketSet group = code.node_sets()[static_cast<std::size_t>(best - 1)] & missing;
        out.groups.push_back({NodeId{best}, to_packet_list(group)});
        saved += static_cast<int>(best_count) - 1;
        missing -= group;
    }
    out.degree = alpha_i - saved;
    return out;
}

int repair_degree_exact(const FRCode& code, NodeId i, const EnumerationCap& cap) {
    const auto hs = helper_sets(code, i);
    require_repairable(hs);

    const PacketSet& target = code.node_set(i);
    std::vector<PacketSet> pieces;
    for (int h = 1; h <= code.n(); ++h) {
        if (h == i.value) continue;
        PacketSet piece = code.node_sets()[static_cast<std::size_t>(h - 1)] & target;
        if (piece.any()) pieces.push_back(std::move(piece));
    }
    const int m = static_cast<int>(pieces.size());
    const auto need = target.count();

    // Increasing cover size t; the first t with a covering t-subset is the answer.
    std::vector<int> idx;
    std::vector<PacketSet> acc;
    for (int t = 1; t <= m; ++t) {
        require_within_cap(m, t, cap, "repair degree exact (node " + std::to_string(i.value) + ")");
        idx.assign(static_cast<std::size_t>(t), 0);
        acc.assign(static_cast<std::size_t>(t) + 1, PacketSet(target.size()));
        int depth = 0;
        idx[0] = 0;
        // iterative lexicographic walk over t-subsets of the pieces
        while (depth >= 0) {
            const auto d = static_cast<std::size_t>(depth);
            if (idx[d] > m - (t - depth)) {
                --depth;
                if (depth >= 0) ++idx[static_cast<std::size_t>(depth)];
                continue;
            }
            acc[d + 1] = acc[d];
            acc[d + 1] |= pieces[static_cast<std::size_t>(idx[d])];
            if (depth + 1 == t) {
                if (acc[d + 1].count() == need) return t;
                ++idx[d];
            } else {
                idx[d + 1] = idx[d] + 1;
                ++depth;
            }
        }
    }
    throw_unrepairable(i, {});
}

NodeRepair repair_node(const FRCode& code, NodeId i, RepairMode mode, const EnumerationCap& cap) {
    NodeRepair r;
    r.node = i;
    r.alpha_i = static_cast<int>(code.node(i).size());
    r.unrepairable_packets = helper_sets(code, i).orphaned_packets();
    if (!r.repairable()) return r;
    if (mode != RepairMode::exact) {
        auto g = repair_degree_greedy(code, i);
        r.d_greedy = g.degree;
        r.groups = std::move(g.groups);
    }
    if (mode != RepairMode::greedy) {
        try {
            r.d_exact = repair_degree_exact(code, i, cap);
        } catch (const LimitError&) {
            r.exact_capped = true;
        }
    }
    return r;
}

RepairReport repair_report(const FRCode& code, RepairMode mode, const EnumerationCap& cap) {
    code.require_structural();
    RepairReport report;
    report.per_node.reserve(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) report.per_node.push_back(repair_node(code, NodeId{i}, mode, cap));
    return report;
}

}  // namespace frc
