#include "frc/frc_format.hpp"

#include <charconv>
#include <vector>

#include "frc/errors.hpp"

namespace frc {
namespace {

struct Line {
    int number;
    std::string_view text;
};

[[noreturn]] void fail(const std::string& what, int line) {
    throw ParseError(what + ", line " + std::to_string(line), line);
}

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.front() != '#') out.push_back({number, line});
        pos = end + 1;
    }
    return out;
}

// Splits on single spaces into base-10 non-negative integers.
std::vector<long long> integers(const Line& line) {
    std::vector<long long> values;
    std::size_t pos = 0;
    const auto s = line.text;
    for (;;) {
        auto end = s.find(' ', pos);
        if (end == std::string_view::npos) end = s.size();
        auto field = s.substr(pos, end - pos);
        if (field.empty()) fail("expected single spaces between integers", line.number);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.front() == '-' || ec != std::errc{} || ptr != field.data() + field.size()) {
            fail("invalid integer '" + std::string(field) + "'", line.number);
        }
        values.push_back(value);
        if (end == s.size()) break;
        pos = end + 1;
    }
    return values;
}

int positive_int(long long v, const char* name, int line) {
    if (v < 1 || v > 1'000'000'000) fail(std::string(name) + " must be between 1 and 1000000000", line);
    return static_cast<int>(v);
}

}  // namespace

FRCode parse_frc(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("missing FRC1 magic line", 0);
    if (lines[0].text != "FRC1") fail("expected magic 'FRC1'", lines[0].number);
    if (lines.size() < 2) throw ParseError("missing header line 'n theta rho'", 0);

    const auto header = integers(lines[1]);
    if (header.size() != 3) fail("header must be 'n theta rho'", lines[1].number);
    const int n = positive_int(header[0], "n", lines[1].number);
    const int theta = positive_int(header[1], "theta", lines[1].number);
    const int rho = positive_int(header[2], "rho", lines[1].number);

    const auto found = lines.size() - 2;
    if (found < static_cast<std::size_t>(n)) {
        throw ParseError("expected " + std::to_string(n) + " node lines, found " + std::to_string(found), 0);
    }
    if (found > static_cast<std::size_t>(n)) {
        fail("unexpected extra node line (header declares n = " + std::to_string(n) + ")",
             lines[static_cast<std::size_t>(n) + 2].number);
    }

    std::vector<PacketList> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (std::size_t k = 2; k < lines.size(); ++k) {
        const auto& line = lines[k];
        const auto values = integers(line);
        PacketList node;
        node.reserve(values.size());
        for (long long v : values) {
            if (v < 1 || v > theta) {
                fail("packet " + std::to_string(v) + " outside 1.." + std::to_string(theta), line.number);
            }
            const int p = static_cast<int>(v);
            if (!node.empty() && p == node.back()) fail("duplicate packet " + std::to_string(p), line.number);
            if (!node.empty() && p < node.back()) fail("packets not ascending", line.number);
            node.push_back(p);
        }
        nodes.push_back(std::move(node));
    }
    return FRCode(theta, rho, std::move(nodes));
}

std::string write_frc(const FRCode& code) {
    code.require_structural();
    std::string out = "FRC1\n";
    out += std::to_string(code.n()) + ' ' + std::to_string(code.theta()) + ' ' + std::to_string(code.rho()) + '\n';
    for (const auto& node : code.nodes()) {
        for (std::size_t k = 0; k < node.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(node[k]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace frc
