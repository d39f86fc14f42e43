#include "frc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frc/errors.hpp"
#include "frc/frc_format.hpp"
#include "frc/generator.hpp"
#include "frc/report.hpp"

namespace frc {
namespace {

struct Options {
    bool json = false;
    bool strict = false;
    std::uint64_t cap = kDefaultSubsetCap;
    std::string file;
    std::string mode = "both";
    bool trace = false;
    int node = 0;
    int k = 0;
    bool profile = false;
    int gen_n = 0;
    int gen_theta = 0;
    int gen_rho = 0;
    bool strong = false;
    std::uint64_t seed = 1;
    std::string corpus_name;
    bool list = false;
};

// Exit with a specific code after printing a diagnostic.
struct Exit {
    int code;
};

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += sep;
        out += std::to_string(v[k]);
    }
    return out;
}

std::string braces(const std::vector<int>& v) { return "{" + join(v, ",") + "}"; }

FRCode load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_frc(buf.str());
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    ToolMetadata meta(const std::string& command, bool with_mode) const {
        ToolMetadata m;
        m.command = command;
        m.cap = o_.cap;
        if (with_mode) m.mode = o_.mode;
        return m;
    }

    FRCode load_checked() const {
        FRCode code = load(o_.file);
        if (o_.strict) {
            auto v = validate(code);
            if (!v.ok) {
                for (const auto& x : v.violations) err_ << "frc: validation failed: " << x.describe() << '\n';
                throw Exit{kExitValidation};
            }
        }
        return code;
    }

    int analyze() {
        const FRCode code = load_checked();
        auto report = base_report(code, meta("analyze", false));
        if (o_.json) return emit(report);

        const auto& p = *report.params;
        const auto& v = *report.validation;
        out_ << "code: n=" << code.n() << " theta=" << code.theta() << " rho=" << code.rho() << '\n';
        out_ << "alpha: " << p.alpha << '\n';
        out_ << "alpha_i: " << join(p.alpha_i) << '\n';
        out_ << "delta_i: " << join(p.delta_i) << '\n';
        out_ << "delta: " << p.delta << '\n';
        out_ << "strong: " << (p.strong ? "yes" : "no") << '\n';
        out_ << "replication: " << join(v.per_packet_replication) << '\n';
        out_ << "eq1 residual: " << v.eq1_residual << " (n*alpha = " << std::int64_t{code.n()} * p.alpha
             << ", rho*theta + delta = " << std::int64_t{code.rho()} * code.theta() + p.delta << ")\n";
        if (v.ok) {
            out_ << "validation: ok\n";
        } else {
            out_ << "validation: " << v.violations.size() << " violation(s)\n";
            for (const auto& x : v.violations) out_ << "  " << x.describe() << '\n';
        }
        return kExitOk;
    }

    int reconstruct() {
        const FRCode code = load_checked();
        const auto mode = o_.mode == "greedy" ? DegreeMode::greedy
                          : o_.mode == "exact" ? DegreeMode::exact
                                               : DegreeMode::both;
        auto report = base_report(code, meta("reconstruct", true));
        report.degrees = degree_report(code, mode, EnumerationCap{o_.cap});
        report.include_traces = o_.trace;
        if (o_.json) return emit(report);

        const auto& d = *report.degrees;
        if (d.k_star_greedy) out_ << "k* greedy = " << *d.k_star_greedy << '\n';
        if (d.k_star_exact) out_ << "k* exact = " << *d.k_star_exact << '\n';
        if (d.k_fr_greedy_ran) {
            out_ << "k_FR greedy = " << (d.k_fr_greedy ? std::to_string(*d.k_fr_greedy) : "no valid run") << '\n';
        }
        if (d.k_fr_exact) out_ << "k_FR exact = " << *d.k_fr_exact << '\n';
        if (o_.trace && d.k_fr_greedy_ran) {
            for (const auto& t : d.k_star_traces) print_trace("k*", t);
            for (const auto& t : d.k_fr_traces) print_trace("k_FR", t);
        }
        return kExitOk;
    }

    int repair() {
        const FRCode code = load_checked();
        const auto mode = o_.mode == "greedy" ? RepairMode::greedy
                          : o_.mode == "exact" ? RepairMode::exact
                                               : RepairMode::both;
        const EnumerationCap cap{o_.cap};
        auto report = base_report(code, meta("repair", true));

        if (o_.node != 0) {
            const NodeRepair r = repair_node(code, NodeId{o_.node}, mode, cap);
            if (!r.repairable()) {
                err_ << "frc: node " << o_.node << " is unrepairable: packet(s) " << join(r.unrepairable_packets)
                     << " stored nowhere else\n";
                return kExitInfeasible;
            }
            if (r.exact_capped) {
                // rerun to surface the limit message
                repair_degree_exact(code, NodeId{o_.node}, cap);
            }
            report.repair = RepairReport{{r}};
        } else {
            report.repair = repair_report(code, mode, cap);
        }

        bool capped = false;
        for (const auto& r : report.repair->per_node) capped = capped || r.exact_capped;
        if (capped) err_ << "frc: enumeration cap exceeded for some nodes; d_exact omitted\n";

        if (o_.json) {
            emit(report);
        } else {
            for (const auto& r : report.repair->per_node) print_repair(r);
        }
        return capped ? kExitCap : kExitOk;
    }

    int rate_cmd() {
        const FRCode code = load_checked();
        const EnumerationCap cap{o_.cap};
        auto report = base_report(code, meta("rate", false));
        if (o_.profile) {
            report.rate_profile = rate_profile(code, cap);
            if (o_.json) return emit(report);
            out_ << join(*report.rate_profile) << '\n';
        } else {
            report.rate = std::make_pair(o_.k, rate(code, o_.k, cap));
            if (o_.json) return emit(report);
            out_ << report.rate->second << '\n';
        }
        return kExitOk;
    }

    int matrix() {
        const FRCode code = load_checked();
        auto report = base_report(code, meta("matrix", false));
        report.matrix = incidence_matrix(code);
        if (o_.json) return emit(report);
        const auto& m = *report.matrix;
        for (int i = 1; i <= m.rows(); ++i) {
            for (int j = 1; j <= m.cols(); ++j) out_ << (j > 1 ? " " : "") << (m.at(NodeId{i}, PacketId{j}) ? 1 : 0);
            out_ << '\n';
        }
        return kExitOk;
    }

    int generate_cmd() {
        GenSpec spec{o_.gen_n, o_.gen_theta, o_.gen_rho, o_.seed, o_.strong ? GenKind::strong : GenKind::random};
        const FRCode code = generate(spec);
        if (o_.json) {
            auto m = meta("generate", false);
            m.seed = o_.seed;
            m.mode = o_.strong ? "strong" : "random";
            return emit(base_report(code, m));
        }
        out_ << write_frc(code);
        return kExitOk;
    }

    int corpus_cmd() {
        if (o_.list || o_.corpus_name.empty()) {
            for (const auto& [name, code] : corpus()) out_ << name << '\n';
            return o_.list ? kExitOk : (err_ << "frc: corpus needs a name\n", kExitUsage);
        }
        auto code = corpus_code(o_.corpus_name);
        if (!code) {
            err_ << "frc: unknown corpus code '" << o_.corpus_name << "' (try --list)\n";
            return kExitUsage;
        }
        if (o_.json) return emit(base_report(*code, meta("corpus", false)));
        out_ << write_frc(*code);
        return kExitOk;
    }

private:
    int emit(const AnalysisReport& report) {
        out_ << serialize(report);
        return kExitOk;
    }

    void print_trace(const char* label, const GreedyTrace& t) {
        out_ << label << " trace: seed " << t.seed.value << ", " << to_string(t.outcome) << ", counter "
             << t.counter() << '\n';
        for (const auto& s : t.steps) {
            out_ << "  " << s.counter << ": node " << s.chosen.value << " (" << to_string(s.kind)
                 << ") P = " << braces(s.packets) << '\n';
        }
    }

    void print_repair(const NodeRepair& r) {
        out_ << "node " << r.node.value << " (alpha_i = " << r.alpha_i << "): ";
        if (!r.repairable()) {
            out_ << "unrepairable, packet(s) " << join(r.unrepairable_packets) << " stored nowhere else\n";
            return;
        }
        std::vector<std::string> parts;
        if (r.d_greedy) parts.push_back("d_greedy = " + std::to_string(*r.d_greedy));
        if (r.exact_capped) {
            parts.push_back("d_exact = cap exceeded");
        } else if (r.d_exact) {
            parts.push_back("d_exact = " + std::to_string(*r.d_exact));
        }
        for (std::size_t k = 0; k < parts.size(); ++k) out_ << (k ? ", " : "") << parts[k];
        if (!r.groups.empty()) {
            out_ << "; groups";
            for (const auto& g : r.groups) out_ << ' ' << braces(g.packets) << "@" << g.helper.value;
        }
        out_ << '\n';
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Fractional repetition code analysis", "frc"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit the machine-readable JSON report");
    app.add_option("--cap", o.cap, "Maximum subsets per exhaustive enumeration level")
        ->check(CLI::PositiveNumber);
    app.add_flag("--strict", o.strict, "Treat validation violations as fatal (exit 1)");

    const auto modes = CLI::IsMember({"greedy", "exact", "both"});

    auto* analyze = app.add_subcommand("analyze", "Validation, derived parameters and the n*alpha identity");
    analyze->add_option("file", o.file, "FRC1 file")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruction degrees k* and k_FR");
    reconstruct->add_option("file", o.file, "FRC1 file")->required();
    reconstruct->add_option("--mode", o.mode, "greedy | exact | both")->check(modes);
    reconstruct->add_flag("--trace", o.trace, "Print the greedy step traces");

    auto* repair = app.add_subcommand("repair", "Per-node repair degrees");
    repair->add_option("file", o.file, "FRC1 file")->required();
    repair->add_option("--node", o.node, "Single node (1-based)");
    repair->add_option("--mode", o.mode, "greedy | exact | both")->check(modes);

    auto* rate = app.add_subcommand("rate", "Guaranteed distinct packets R(k)");
    rate->add_option("file", o.file, "FRC1 file")->required();
    auto* k_opt = rate->add_option("-k", o.k, "Number of contacted nodes");
    auto* profile_opt = rate->add_flag("--profile", o.profile, "R(k) for every k = 1..n");
    k_opt->excludes(profile_opt);

    auto* matrix = app.add_subcommand("matrix", "Node-packet incidence matrix");
    matrix->add_option("file", o.file, "FRC1 file")->required();

    auto* generate = app.add_subcommand("generate", "Emit a generated code as FRC1 text");
    generate->add_option("--n", o.gen_n, "Node count")->required();
    generate->add_option("--theta", o.gen_theta, "Packet count")->required();
    generate->add_option("--rho", o.gen_rho, "Replication factor")->required();
    generate->add_flag("--strong", o.strong, "Equal node sizes (n must divide rho*theta)");
    generate->add_option("--seed", o.seed, "Reproducibility seed");

    auto* corpus_sc = app.add_subcommand("corpus", "Emit a built-in code as FRC1 text");
    corpus_sc->add_option("name", o.corpus_name, "table1 | table2 | table3 | m11x8");
    corpus_sc->add_flag("--list", o.list, "List the built-in names");

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "frc: " << e.what() << '\n';
        return kExitUsage;
    }

    if (rate->parsed() && k_opt->count() == 0 && !o.profile) {
        err << "frc: rate needs -k K or --profile\n";
        return kExitUsage;
    }

    Runner run(o, out, err);
    try {
        if (analyze->parsed()) return run.analyze();
        if (reconstruct->parsed()) return run.reconstruct();
        if (repair->parsed()) return run.repair();
        if (rate->parsed()) return run.rate_cmd();
        if (matrix->parsed()) return run.matrix();
        if (generate->parsed()) return run.generate_cmd();
        if (corpus_sc->parsed()) return run.corpus_cmd();
    } catch (const Exit& e) {
        return e.code;
    } catch (const LimitError& e) {
        err << "frc: " << e.what() << '\n';
        return kExitCap;
    } catch (const InfeasibleError& e) {
        err << "frc: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const UnrepairableError& e) {
        err << "frc: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const DegenerateError& e) {
        err << "frc: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ExhaustionError& e) {
        err << "frc: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const Error& e) {
        err << "frc: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace frc
