#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ordlab/errors.hpp"

namespace ordlab {

// Exact arbitrary-precision rationals. Removability is a strict-inequality
// decision, so there are no tolerances anywhere in the engine.
using bigint = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format(const rat& q);

// Accepts an optional sign, digits, and an optional "/digits" part.
// Throws syntax_error for malformed text, domain_error for a zero denominator.
rat parse_rational(std::string_view text);

}  // namespace ordlab
