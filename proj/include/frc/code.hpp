#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frc/types.hpp"

namespace frc {

// A fractional repetition code: n node packet-sets U_1..U_n over the packet
// universe {1..theta}, with nominal replication factor rho.
//
// Construction only checks n, theta, rho >= 1 and normalizes every node to
// an ascending duplicate-free list. Empty nodes, out-of-range ids and
// replication defects are kept so that validate() can report them; analysis
// routines call require_structural() before touching the sets.
class FRCode {
public:
    FRCode(int theta, int rho, std::vector<PacketList> nodes);

    int n() const noexcept { return static_cast<int>(nodes_.size()); }
    int theta() const noexcept { return theta_; }
    int rho() const noexcept { return rho_; }

    const std::vector<PacketList>& nodes() const noexcept { return nodes_; }
    const PacketList& node(NodeId i) const;

    // Bitset view of U_i. Out-of-range ids are dropped.
    const PacketSet& node_set(NodeId i) const;
    const std::vector<PacketSet>& node_sets() const noexcept { return sets_; }

    // True when every node is non-empty and every id lies in 1..theta.
    bool structurally_sound() const noexcept { return sound_; }

    // Throws StructuralError unless structurally_sound().
    void require_structural() const;

    friend bool operator==(const FRCode& a, const FRCode& b) {
        return a.theta_ == b.theta_ && a.rho_ == b.rho_ && a.nodes_ == b.nodes_;
    }

private:
    int theta_;
    int rho_;
    std::vector<PacketList> nodes_;
    std::vector<PacketSet> sets_;
    bool sound_ = true;
};

struct DerivedParams {
    int alpha = 0;
    std::vector<int> alpha_i;
    std::vector<int> delta_i;
    std::int64_t delta = 0;
    bool strong = false;
};

DerivedParams derive_params(const FRCode& code);

// n*alpha - rho*theta - delta; zero exactly when the node sizes sum to rho*theta.
std::int64_t eq1_residual(const FRCode& code, const DerivedParams& params);

struct Violation {
    enum class Kind { replication, out_of_range, empty_node };

    Kind kind;
    int node = 0;      // 1-based; 0 when not node-specific
    int packet = 0;    // packet id (or the offending raw id for out_of_range)
    int actual = 0;    // observed replication count
    int expected = 0;  // rho

    std::string describe() const;
};

const char* to_string(Violation::Kind kind);

struct ValidationReport {
    bool ok = true;
    std::vector<int> per_packet_replication;  // index j-1 -> |{i : j in U_i}|
    std::vector<Violation> violations;
    std::int64_t eq1_residual = 0;

    bool rho_regular() const;
};

ValidationReport validate(const FRCode& code);

}  // namespace frc
