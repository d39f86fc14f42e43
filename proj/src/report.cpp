#include "frc/report.hpp"

#include "frc/frc_format.hpp"

namespace frc {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json node_ids(const std::vector<NodeId>& ids) {
    json out = json::array();
    for (NodeId id : ids) out.push_back(id.value);
    return out;
}

}  // namespace

AnalysisReport base_report(const FRCode& code, ToolMetadata tool) {
    AnalysisReport r;
    r.tool = std::move(tool);
    r.code = code;
    r.validation = validate(code);
    r.params = derive_params(code);
    return r;
}

json to_json(const FRCode& code) {
    return json{{"n", code.n()}, {"theta", code.theta()}, {"rho", code.rho()}, {"nodes", code.nodes()}};
}

json to_json(const ValidationReport& v) {
    json violations = json::array();
    for (const auto& x : v.violations) {
        json item{{"kind", to_string(x.kind)}, {"message", x.describe()}};
        if (x.node) item["node"] = x.node;
        if (x.kind != Violation::Kind::empty_node) item["packet"] = x.packet;
        if (x.kind == Violation::Kind::replication) {
            item["actual"] = x.actual;
            item["expected"] = x.expected;
        }
        violations.push_back(std::move(item));
    }
    return json{{"ok", v.ok},
                {"rho_regular", v.rho_regular()},
                {"per_packet_replication", v.per_packet_replication},
                {"violations", std::move(violations)},
                {"eq1_residual", v.eq1_residual}};
}

json to_json(const DerivedParams& p) {
    return json{{"alpha", p.alpha}, {"alpha_i", p.alpha_i}, {"delta_i", p.delta_i},
                {"delta", p.delta}, {"strong", p.strong}};
}

json to_json(const GreedyTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back(json{{"node", s.chosen.value}, {"kind", to_string(s.kind)}, {"packets", s.packets},
                             {"counter", s.counter}});
    }
    return json{{"seed", t.seed.value}, {"outcome", to_string(t.outcome)}, {"steps", std::move(steps)}};
}

json to_json(const DegreeReport& d, bool include_traces) {
    json out = json::object();
    if (d.k_star_greedy) {
        out["k_star_greedy"] = *d.k_star_greedy;
        out["k_star_seeds"] = node_ids(d.k_star_seeds);
    }
    if (d.k_fr_greedy_ran) {
        out["k_fr_greedy"] = d.k_fr_greedy ? json(*d.k_fr_greedy) : json("no valid run");
    }
    if (d.k_star_exact) out["k_star_exact"] = *d.k_star_exact;
    if (d.k_fr_exact) out["k_fr_exact"] = *d.k_fr_exact;
    if (include_traces && d.k_fr_greedy_ran) {
        json ks = json::array();
        for (const auto& t : d.k_star_traces) ks.push_back(to_json(t));
        json kf = json::array();
        for (const auto& t : d.k_fr_traces) kf.push_back(to_json(t));
        out["traces"] = json{{"k_star", std::move(ks)}, {"k_fr", std::move(kf)}};
    }
    return out;
}

json to_json(const RepairReport& r) {
    json nodes = json::array();
    for (const auto& n : r.per_node) {
        json item{{"node", n.node.value}, {"alpha_i", n.alpha_i}, {"repairable", n.repairable()}};
        if (!n.repairable()) {
            item["unrepairable_packets"] = n.unrepairable_packets;
        } else {
            item["d_greedy"] = optional_int(n.d_greedy);
            item["d_exact"] = n.exact_capped ? json("cap exceeded") : optional_int(n.d_exact);
            json groups = json::array();
            for (const auto& g : n.groups) groups.push_back(json{{"helper", g.helper.value}, {"packets", g.packets}});
            item["groups"] = std::move(groups);
        }
        nodes.push_back(std::move(item));
    }
    return json{{"nodes", std::move(nodes)}};
}

json to_json(const IncidenceMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(NodeId{i}, PacketId{j}) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"bits", std::move(rows)}};
}

json to_json(const AnalysisReport& r) {
    json tool{{"name", kToolName}, {"version", kToolVersion}, {"command", r.tool.command}, {"cap", r.tool.cap}};
    if (r.tool.seed) tool["seed"] = *r.tool.seed;
    if (r.tool.mode) tool["mode"] = *r.tool.mode;

    json out{{"format", kReportFormat}, {"tool", std::move(tool)}};
    if (r.code) {
        out["code"] = to_json(*r.code);
        if (r.code->structurally_sound()) out["frc"] = write_frc(*r.code);
    }
    if (r.validation) out["validation"] = to_json(*r.validation);
    if (r.params) out["params"] = to_json(*r.params);
    if (r.degrees) out["degrees"] = to_json(*r.degrees, r.include_traces);
    if (r.repair) out["repair"] = to_json(*r.repair);
    if (r.rate_profile) out["rate_profile"] = *r.rate_profile;
    if (r.rate) out["rate"] = json{{"k", r.rate->first}, {"value", r.rate->second}};
    if (r.matrix) out["matrix"] = to_json(*r.matrix);
    return out;
}

std::string serialize(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace frc
