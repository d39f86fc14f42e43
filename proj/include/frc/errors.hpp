#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An id (node or packet) outside its valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

// The code violates a structural precondition (empty node, out-of-range id).
class StructuralError : public Error {
public:
    using Error::Error;
};

// An exhaustive search would visit more subsets than the configured cap.
class LimitError : public Error {
public:
    LimitError(const std::string& what, std::uint64_t subsets, std::uint64_t cap)
        : Error(what), subsets_(subsets), cap_(cap) {}

    std::uint64_t subsets() const noexcept { return subsets_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t subsets_;
    std::uint64_t cap_;
};

// No node subset reaches the coverage target.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

class UnrepairableError : public Error {
public:
    UnrepairableError(const std::string& what, int node, std::vector<int> packets)
        : Error(what), node_(node), packets_(std::move(packets)) {}

    int node() const noexcept { return node_; }
    const std::vector<int>& packets() const noexcept { return packets_; }

private:
    int node_;
    std::vector<int> packets_;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class ExhaustionError : public Error {
public:
    using Error::Error;
};

// Malformed or semantically invalid FRC1 text. line() is 1-based, 0 when
// the problem is not tied to a single line (e.g. missing node lines).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line) : Error(what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace frc
