#include "frc/incidence.hpp"

#include <string>

#include "frc/errors.hpp"

namespace frc {

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 1 || cols < 1) throw ParameterError("incidence matrix needs positive dimensions");
}

std::size_t IncidenceMatrix::offset(NodeId i, PacketId j) const {
    if (i.value < 1 || i.value > rows_) {
        throw RangeError("row " + std::to_string(i.value) + " out of range 1.." + std::to_string(rows_));
    }
    if (j.value < 1 || j.value > cols_) {
        throw RangeError("column " + std::to_string(j.value) + " out of range 1.." + std::to_string(cols_));
    }
    return static_cast<std::size_t>(i.value - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j.value - 1);
}

bool IncidenceMatrix::at(NodeId i, PacketId j) const { return bits_[offset(i, j)] != 0; }

void IncidenceMatrix::set(NodeId i, PacketId j, bool value) { bits_[offset(i, j)] = value ? 1 : 0; }

int IncidenceMatrix::row_weight(NodeId i) const {
    int w = 0;
    for (int j = 1; j <= cols_; ++j) w += at(i, PacketId{j});
    return w;
}

int IncidenceMatrix::column_weight(PacketId j) const {
    int w = 0;
    for (int i = 1; i <= rows_; ++i) w += at(NodeId{i}, j);
    return w;
}

IncidenceMatrix incidence_matrix(const FRCode& code) {
    code.require_structural();
    IncidenceMatrix m(code.n(), code.theta());
    for (int i = 1; i <= code.n(); ++i) {
        for (int p : code.node(NodeId{i})) m.set(NodeId{i}, PacketId{p}, true);
    }
    return m;
}

std::vector<NodeId> column_support(const IncidenceMatrix& m, PacketId j) {
    if (j.value < 1 || j.value > m.cols()) {
        throw RangeError("packet " + std::to_string(j.value) + " out of range 1.." + std::to_string(m.cols()));
    }
    std::vector<NodeId> support;
    for (int i = 1; i <= m.rows(); ++i) {
        if (m.at(NodeId{i}, j)) support.emplace_back(i);
    }
    return support;
}

FRCode code_from_matrix(const IncidenceMatrix& m, int rho) {
    std::vector<PacketList> nodes(static_cast<std::size_t>(m.rows()));
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (m.at(NodeId{i}, PacketId{j})) nodes[static_cast<std::size_t>(i - 1)].push_back(j);
        }
    }
    return FRCode(m.cols(), rho, std::move(nodes));
}

}  // namespace frc
