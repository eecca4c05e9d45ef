#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlab {

// Base class of everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input; `offset` is the byte position of the defect.
struct syntax_error : error {
    syntax_error(const std::string& what, std::size_t at)
        : error(what + " at offset " + std::to_string(at)), offset(at) {}

    std::size_t offset;
};

// Structurally valid input outside an operation's mathematical domain.
struct domain_error : error {
    using error::error;
};

// A coefficient or count does not fit the fixed-width natural range.
struct overflow_error : domain_error {
    using domain_error::domain_error;
};

// Desk-scale guardrail tripped: the input is too large to enumerate exactly.
struct capacity_error : error {
    using error::error;
};

}  // namespace ordlab
