#pragma once

#include <cstdint>
#include <vector>

#include "frc/code.hpp"

namespace frc {

// Binary n x theta node-packet incidence matrix, m_ij = 1 iff packet j is in U_i.
class IncidenceMatrix {
public:
    IncidenceMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool at(NodeId i, PacketId j) const;
    void set(NodeId i, PacketId j, bool value);

    int row_weight(NodeId i) const;
    int column_weight(PacketId j) const;

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    std::size_t offset(NodeId i, PacketId j) const;

    int rows_;
    int cols_;
    std::vector<std::uint8_t> bits_;
};

IncidenceMatrix incidence_matrix(const FRCode& code);

// H_j: the nodes storing packet j, ascending. Throws RangeError if j is not in 1..cols.
std::vector<NodeId> column_support(const IncidenceMatrix& m, PacketId j);

// Reads node sets back from the rows of m.
FRCode code_from_matrix(const IncidenceMatrix& m, int rho);

}  // namespace frc
