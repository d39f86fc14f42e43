#include "frc/reconstruction.hpp"

#include <algorithm>
#include <string>

#include "frc/errors.hpp"

namespace frc {
namespace {

// Depth-first walk over the k-subsets of `sets` (lexicographic order) that
// keeps the running union for every prefix, so each visited subset costs one OR.
class UnionWalk {
public:
    UnionWalk(const std::vector<PacketSet>& sets, int k, std::size_t bits)
        : sets_(sets), n_(static_cast<int>(sets.size())), k_(k), stack_(static_cast<std::size_t>(k) + 1, PacketSet(bits)) {}

    // leaf(union) returns false to stop the walk; prune(union) returns true to
    // skip every extension of the current prefix. Returns false if stopped.
    template <class Leaf, class Prune>
    bool run(Leaf&& leaf, Prune&& prune) {
        return descend(0, 0, leaf, prune);
    }

private:
    template <class Leaf, class Prune>
    bool descend(int start, int depth, Leaf& leaf, Prune& prune) {
        if (depth == k_) return leaf(stack_[static_cast<std::size_t>(depth)]);
        const auto next = static_cast<std::size_t>(depth) + 1;
        for (int i = start; i <= n_ - (k_ - depth); ++i) {
            stack_[next] = stack_[next - 1];
            stack_[next] |= sets_[static_cast<std::size_t>(i)];
            if (prune(stack_[next])) continue;
            if (!descend(i + 1, depth + 1, leaf, prune)) return false;
        }
        return true;
    }

    const std::vector<PacketSet>& sets_;
    int n_;
    int k_;
    std::vector<PacketSet> stack_;
};

int total_coverage(const FRCode& code) {
    PacketSet all(static_cast<std::size_t>(code.theta()));
    for (const auto& s : code.node_sets()) all |= s;
    return static_cast<int>(all.count());
}

void require_feasible(const FRCode& code, const char* what) {
    const int total = total_coverage(code);
    const int required = CoverageTarget::for_code(code).required;
    if (total < required) {
        throw InfeasibleError(std::string(what) + ": all " + std::to_string(code.n()) + " nodes cover " +
                              std::to_string(total) + " packets, fewer than theta-1 = " + std::to_string(required));
    }
}

int min_union(const FRCode& code, int k) {
    int best = code.theta() + 1;
    UnionWalk walk(code.node_sets(), k, static_cast<std::size_t>(code.theta()));
    walk.run(
        [&](const PacketSet& u) {
            best = std::min(best, static_cast<int>(u.count()));
            return true;
        },
        // coverage only grows along a prefix, so a prefix at or above best cannot improve it
        [&](const PacketSet& u) { return static_cast<int>(u.count()) >= best; });
    return best;
}

GreedyStep make_step(NodeId chosen, StepKind kind, const PacketSet& p, int counter) {
    return GreedyStep{chosen, kind, to_packet_list(p), counter};
}

}  // namespace

const char* to_string(StepKind kind) {
    switch (kind) {
        case StepKind::seed: return "seed";
        case StepKind::disjoint: return "disjoint";
        case StepKind::max_gain: return "max_gain";
    }
    return "unknown";
}

const char* to_string(TraceOutcome outcome) {
    return outcome == TraceOutcome::completed ? "completed" : "failed";
}

int coverage(const FRCode& code, std::span<const NodeId> nodes) {
    PacketSet acc(static_cast<std::size_t>(code.theta()));
    for (NodeId i : nodes) acc |= code.node_set(i);
    return static_cast<int>(acc.count());
}

int rate(const FRCode& code, int k, const EnumerationCap& cap) {
    code.require_structural();
    if (k < 1 || k > code.n()) {
        throw RangeError("k = " + std::to_string(k) + " out of range 1.." + std::to_string(code.n()));
    }
    require_within_cap(code.n(), k, cap, "rate");
    return min_union(code, k);
}

std::vector<int> rate_profile(const FRCode& code, const EnumerationCap& cap) {
    code.require_structural();
    require_within_cap(code.n(), code.n() / 2, cap, "rate profile");
    std::vector<int> profile;
    profile.reserve(static_cast<std::size_t>(code.n()));
    for (int k = 1; k <= code.n(); ++k) profile.push_back(min_union(code, k));
    return profile;
}

int k_star_exact(const FRCode& code, const EnumerationCap& cap) {
    code.require_structural();
    require_feasible(code, "k* exact");
    const int required = CoverageTarget::for_code(code).required;
    for (int t = 1; t <= code.n(); ++t) {
        require_within_cap(code.n(), t, cap, "k* exact");
        UnionWalk walk(code.node_sets(), t, static_cast<std::size_t>(code.theta()));
        const bool exhausted = walk.run([&](const PacketSet& u) { return static_cast<int>(u.count()) < required; },
                                        [](const PacketSet&) { return false; });
        if (!exhausted) return t;
    }
    // unreachable: the full node set is feasible
    throw InfeasibleError("k* exact: no subset reaches theta-1");
}

int k_fr_exact(const FRCode& code, const EnumerationCap& cap) {
    code.require_structural();
    require_feasible(code, "k_FR exact");
    const int required = CoverageTarget::for_code(code).required;
    for (int t = 1; t <= code.n(); ++t) {
        require_within_cap(code.n(), t, cap, "k_FR exact");
        UnionWalk walk(code.node_sets(), t, static_cast<std::size_t>(code.theta()));
        const bool all_cover =
            walk.run([&](const PacketSet& u) { return static_cast<int>(u.count()) >= required; },
                     // every extension of a covering prefix covers too
                     [&](const PacketSet& u) { return static_cast<int>(u.count()) >= required; });
        if (all_cover) return t;
    }
    throw InfeasibleError("k_FR exact: no subset size reaches theta-1");
}

std::optional<int> k_fr_from_rate_profile(std::span<const int> profile, int theta) {
    for (std::size_t k = 0; k < profile.size(); ++k) {
        if (profile[k] >= theta - 1) return static_cast<int>(k) + 1;
    }
    return std::nullopt;
}

KStarGreedyResult k_star_greedy(const FRCode& code) {
    code.require_structural();
    const auto bits = static_cast<std::size_t>(code.theta());

    std::vector<PacketSet> reduced = code.node_sets();
    for (auto& v : reduced) v.reset(bits - 1);

    std::vector<int> alive;
    for (int i = 0; i < code.n(); ++i) {
        if (reduced[static_cast<std::size_t>(i)].any()) alive.push_back(i);
    }
    if (alive.empty()) {
        throw DegenerateError("every node is empty once packet " + std::to_string(code.theta()) + " is removed");
    }

    // Drop V_j when it sits inside another node; of two equal nodes the lower index stays.
    KStarGreedyResult result;
    std::vector<int> kept;
    for (int j : alive) {
        const auto& vj = reduced[static_cast<std::size_t>(j)];
        bool contained = false;
        for (int i : alive) {
            if (i == j) continue;
            const auto& vi = reduced[static_cast<std::size_t>(i)];
            if (vj.is_proper_subset_of(vi) || (vj == vi && i < j)) {
                contained = true;
                break;
            }
        }
        if (!contained) kept.push_back(j);
    }
    for (int j : kept) result.survivors.emplace_back(j + 1);

    std::size_t widest = 0;
    for (int j : kept) widest = std::max(widest, reduced[static_cast<std::size_t>(j)].count());
    for (int j : kept) {
        if (reduced[static_cast<std::size_t>(j)].count() == widest) result.seeds.emplace_back(j + 1);
    }

    result.value = code.n() + 1;
    for (NodeId seed : result.seeds) {
        GreedyTrace trace;
        trace.seed = seed;
        PacketSet p = reduced[static_cast<std::size_t>(seed.value - 1)];
        int counter = 1;
        trace.steps.push_back(make_step(seed, StepKind::seed, p, counter));

        for (;;) {
            int pick = -1;
            std::size_t pick_size = 0;
            for (int j : kept) {
                const auto& v = reduced[static_cast<std::size_t>(j)];
                if (!v.intersects(p) && v.count() > pick_size) {
                    pick = j;
                    pick_size = v.count();
                }
            }
            if (pick < 0) break;
            p |= reduced[static_cast<std::size_t>(pick)];
            trace.steps.push_back(make_step(NodeId{pick + 1}, StepKind::disjoint, p, ++counter));
        }

        for (;;) {
            int pick = -1;
            std::size_t best_gain = 0;
            for (int j : kept) {
                const auto gain = (reduced[static_cast<std::size_t>(j)] - p).count();
                if (gain > best_gain) {
                    pick = j;
                    best_gain = gain;
                }
            }
            if (pick < 0) break;
            p |= reduced[static_cast<std::size_t>(pick)];
            trace.steps.push_back(make_step(NodeId{pick + 1}, StepKind::max_gain, p, ++counter));
        }

        trace.outcome = TraceOutcome::completed;
        result.value = std::min(result.value, counter);
        result.traces.push_back(std::move(trace));
    }
    return result;
}

KFrGreedyResult k_fr_greedy(const FRCode& code) {
    code.require_structural();
    const auto& sets = code.node_sets();
    const int theta = code.theta();
    auto done = [theta](const PacketSet& p) { return static_cast<int>(p.count()) >= theta - 1; };

    KFrGreedyResult result;
    for (int m = code.n(); m >= 1; --m) {
        GreedyTrace trace;
        trace.seed = NodeId{m};
        PacketSet p = sets[static_cast<std::size_t>(m - 1)];
        int counter = 1;
        trace.steps.push_back(make_step(trace.seed, StepKind::seed, p, counter));

        while (!done(p)) {
            int pick = -1;
            std::size_t pick_size = 0;
            for (int j = 0; j < m; ++j) {
                const auto& u = sets[static_cast<std::size_t>(j)];
                if (!u.intersects(p) && u.count() > pick_size) {
                    pick = j;
                    pick_size = u.count();
                }
            }
            if (pick < 0) break;
            p |= sets[static_cast<std::size_t>(pick)];
            trace.steps.push_back(make_step(NodeId{pick + 1}, StepKind::disjoint, p, ++counter));
        }

        while (!done(p)) {
            int pick = -1;
            std::size_t best_gain = 0;
            for (int j = 0; j < m; ++j) {
                const auto gain = (sets[static_cast<std::size_t>(j)] - p).count();
                if (gain > best_gain) {
                    pick = j;
                    best_gain = gain;
                }
            }
            if (pick < 0) break;
            p |= sets[static_cast<std::size_t>(pick)];
            trace.steps.push_back(make_step(NodeId{pick + 1}, StepKind::max_gain, p, ++counter));
        }

        trace.outcome = done(p) ? TraceOutcome::completed : TraceOutcome::failed;
        if (trace.outcome == TraceOutcome::completed) {
            result.value = std::max(result.value.value_or(0), counter);
        }
        result.traces.push_back(std::move(trace));
    }
    return result;
}

DegreeReport degree_report(const FRCode& code, DegreeMode mode, const EnumerationCap& cap) {
    DegreeReport r;
    if (mode != DegreeMode::exact) {
        auto ks = k_star_greedy(code);
        r.k_star_greedy = ks.value;
        r.k_star_seeds = std::move(ks.seeds);
        r.k_star_traces = std::move(ks.traces);
        auto kf = k_fr_greedy(code);
        r.k_fr_greedy = kf.value;
        r.k_fr_greedy_ran = true;
        r.k_fr_traces = std::move(kf.traces);
    }
    if (mode != DegreeMode::greedy) {
        r.k_star_exact = k_star_exact(code, cap);
        r.k_fr_exact = k_fr_exact(code, cap);
    }
    return r;
}

}  // namespace frc
