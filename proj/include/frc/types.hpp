#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace frc {

// 1-based index of a storage node U_i.
struct NodeId {
    int value = 0;

    constexpr NodeId() = default;
    constexpr explicit NodeId(int v) : value(v) {}
    friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

// 1-based packet id in {1..theta}.
struct PacketId {
    int value = 0;

    constexpr PacketId() = default;
    constexpr explicit PacketId(int v) : value(v) {}
    friend constexpr auto operator<=>(PacketId, PacketId) = default;
};

// Packet membership over {1..theta}; bit j-1 stands for packet j.
using PacketSet = boost::dynamic_bitset<std::uint64_t>;

// Ascending packet ids of a node, 1-based.
using PacketList = std::vector<int>;

PacketSet to_packet_set(const PacketList& packets, int theta);
PacketList to_packet_list(const PacketSet& set);

}  // namespace frc
