#pragma once

#include <string>
#include <string_view>

#include "frc/code.hpp"

namespace frc {

// FRC1 text format:
//
//   FRC1
//   <n> <theta> <rho>
//   <packets of U_1, strictly ascending>
//   ...
//   <packets of U_n>
//
// Fields are separated by single spaces. Lines starting with '#' and empty
// lines are ignored anywhere; the trailing newline is optional. Throws
// ParseError carrying the offending line number.
FRCode parse_frc(std::string_view text);

// Canonical form: no comments, a single trailing newline. The code must be
// structurally sound (an empty node has no FRC1 spelling).
std::string write_frc(const FRCode& code);

}  // namespace frc
