#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frc/code.hpp"
#include "frc/enumeration.hpp"

namespace frc {

// Distinct packets sufficient to rebuild the file: the outer MDS parity
// recovers one missing packet, so theta - 1 are enough.
struct CoverageTarget {
    int required = 0;

    static CoverageTarget for_code(const FRCode& code) { return {code.theta() - 1}; }
};

// |union of U_i for i in nodes|. Throws RangeError on an out-of-range node.
int coverage(const FRCode& code, std::span<const NodeId> nodes);

// R(k): the minimum coverage over all k-node subsets.
int rate(const FRCode& code, int k, const EnumerationCap& cap = {});

// R(1..n); the cap is checked against the largest level C(n, n/2).
std::vector<int> rate_profile(const FRCode& code, const EnumerationCap& cap = {});

// Smallest t >= 1 such that SOME t-subset covers >= theta-1 packets.
int k_star_exact(const FRCode& code, const EnumerationCap& cap = {});

// Smallest t >= 1 such that EVERY t-subset covers >= theta-1 packets.
int k_fr_exact(const FRCode& code, const EnumerationCap& cap = {});

// min{k : profile[k-1] >= theta-1}; nullopt if no such k.
std::optional<int> k_fr_from_rate_profile(std::span<const int> profile, int theta);

enum class StepKind {
    seed,      // P initialised from a single node
    disjoint,  // node of maximum size disjoint from P
    max_gain,  // node maximising |U \ P| among nodes not inside P
};

const char* to_string(StepKind kind);

struct GreedyStep {
    NodeId chosen;
    StepKind kind = StepKind::seed;
    PacketList packets;  // P after the union
    int counter = 0;
};

enum class TraceOutcome { completed, failed };

const char* to_string(TraceOutcome outcome);

struct GreedyTrace {
    NodeId seed;
    std::vector<GreedyStep> steps;
    TraceOutcome outcome = TraceOutcome::completed;

    int counter() const { return steps.empty() ? 0 : steps.back().counter; }
};

struct KStarGreedyResult {
    int value = 0;                  // k*_upp, min counter over the seed runs
    std::vector<NodeId> survivors;  // nodes left after dropping packet theta and contained nodes
    std::vector<NodeId> seeds;      // survivors of maximum size
    std::vector<GreedyTrace> traces;
};

// Upper bound on k*: drop packet theta, discard empty and contained nodes,
// then grow P greedily from every maximum-size node. Ties go to the smallest
// node index. Throws DegenerateError when no packet survives the deletion.
KStarGreedyResult k_star_greedy(const FRCode& code);

struct KFrGreedyResult {
    std::optional<int> value;  // max counter over completed runs; nullopt when every run stalled
    std::vector<GreedyTrace> traces;  // one per m = n..1
};

// Greedy k_FR heuristic: for m = n..1 seed P = U_m inside {U_1..U_m} and grow
// until at most one packet of {1..theta} is missing. Runs that can no longer
// grow are marked failed and excluded from the max.
KFrGreedyResult k_fr_greedy(const FRCode& code);

enum class DegreeMode { greedy, exact, both };

struct DegreeReport {
    std::optional<int> k_star_greedy;
    std::optional<int> k_star_exact;
    std::optional<int> k_fr_greedy;  // also nullopt for "no valid run" when greedy ran
    std::optional<int> k_fr_exact;
    bool k_fr_greedy_ran = false;
    std::vector<NodeId> k_star_seeds;
    std::vector<GreedyTrace> k_star_traces;
    std::vector<GreedyTrace> k_fr_traces;
};

// Runs the requested computations. Exact errors (LimitError, InfeasibleError)
// and greedy errors (DegenerateError) propagate.
DegreeReport degree_report(const FRCode& code, DegreeMode mode, const EnumerationCap& cap = {});

}  // namespace frc
