#include "frc/code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frc/errors.hpp"

namespace frc {

PacketSet to_packet_set(const PacketList& packets, int theta) {
    PacketSet set(static_cast<std::size_t>(theta));
    for (int p : packets) {
        if (p >= 1 && p <= theta) set.set(static_cast<std::size_t>(p - 1));
    }
    return set;
}

PacketList to_packet_list(const PacketSet& set) {
    PacketList out;
    out.reserve(set.count());
    for (auto b = set.find_first(); b != PacketSet::npos; b = set.find_next(b)) {
        out.push_back(static_cast<int>(b) + 1);
    }
    return out;
}

FRCode::FRCode(int theta, int rho, std::vector<PacketList> nodes)
    : theta_(theta), rho_(rho), nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw ParameterError("code needs at least one node");
    if (theta_ < 1) throw ParameterError("theta must be >= 1");
    if (rho_ < 1) throw ParameterError("rho must be >= 1");

    sets_.reserve(nodes_.size());
    for (auto& node : nodes_) {
        std::sort(node.begin(), node.end());
        node.erase(std::unique(node.begin(), node.end()), node.end());
        if (node.empty()) sound_ = false;
        if (!node.empty() && (node.front() < 1 || node.back() > theta_)) sound_ = false;
        sets_.push_back(to_packet_set(node, theta_));
    }
}

const PacketList& FRCode::node(NodeId i) const {
    if (i.value < 1 || i.value > n()) {
        throw RangeError("node " + std::to_string(i.value) + " out of range 1.." + std::to_string(n()));
    }
    return nodes_[static_cast<std::size_t>(i.value - 1)];
}

const PacketSet& FRCode::node_set(NodeId i) const {
    node(i);
    return sets_[static_cast<std::size_t>(i.value - 1)];
}

void FRCode::require_structural() const {
    if (sound_) return;
    for (int i = 0; i < n(); ++i) {
        const auto& node = nodes_[static_cast<std::size_t>(i)];
        if (node.empty()) throw StructuralError("node " + std::to_string(i + 1) + " is empty");
        for (int p : node) {
            if (p < 1 || p > theta_) {
                throw StructuralError("node " + std::to_string(i + 1) + " holds packet " + std::to_string(p) +
                                      " outside 1.." + std::to_string(theta_));
            }
        }
    }
}

DerivedParams derive_params(const FRCode& code) {
    DerivedParams p;
    p.alpha_i.reserve(code.nodes().size());
    for (const auto& node : code.nodes()) p.alpha_i.push_back(static_cast<int>(node.size()));
    p.alpha = *std::max_element(p.alpha_i.begin(), p.alpha_i.end());
    p.delta_i.reserve(p.alpha_i.size());
    for (int a : p.alpha_i) {
        p.delta_i.push_back(p.alpha - a);
        p.delta += p.alpha - a;
    }
    p.strong = p.delta == 0;
    return p;
}

std::int64_t eq1_residual(const FRCode& code, const DerivedParams& params) {
    return static_cast<std::int64_t>(code.n()) * params.alpha -
           static_cast<std::int64_t>(code.rho()) * code.theta() - params.delta;
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::replication: return "replication";
        case Violation::Kind::out_of_range: return "out_of_range";
        case Violation::Kind::empty_node: return "empty_node";
    }
    return "unknown";
}

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::replication:
            os << "packet " << packet << " replication " << actual << " != " << expected;
            break;
        case Kind::out_of_range:
            os << "node " << node << " holds out-of-range packet id " << packet;
            break;
        case Kind::empty_node:
            os << "node " << node << " is empty";
            break;
    }
    return os.str();
}

bool ValidationReport::rho_regular() const {
    return std::none_of(violations.begin(), violations.end(),
                        [](const Violation& v) { return v.kind == Violation::Kind::replication; });
}

ValidationReport validate(const FRCode& code) {
    ValidationReport r;
    r.per_packet_replication.assign(static_cast<std::size_t>(code.theta()), 0);

    for (int i = 0; i < code.n(); ++i) {
        const auto& node = code.nodes()[static_cast<std::size_t>(i)];
        if (node.empty()) r.violations.push_back({Violation::Kind::empty_node, i + 1, 0, 0, 0});
        for (int p : node) {
            if (p < 1 || p > code.theta()) {
                r.violations.push_back({Violation::Kind::out_of_range, i + 1, p, 0, 0});
            } else {
                ++r.per_packet_replication[static_cast<std::size_t>(p - 1)];
            }
        }
    }
    for (int j = 1; j <= code.theta(); ++j) {
        int count = r.per_packet_replication[static_cast<std::size_t>(j - 1)];
        if (count != code.rho()) {
            r.violations.push_back({Violation::Kind::replication, 0, j, count, code.rho()});
        }
    }
    r.eq1_residual = eq1_residual(code, derive_params(code));
    r.ok = r.violations.empty();
    return r;
}

}  // namespace frc
