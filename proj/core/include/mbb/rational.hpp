#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mbb {

// All counting is exact: arbitrary-precision integers for weights and tree
// counts, arbitrary-precision rationals for probabilities and assignments.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serializes in lowest terms: "1/2", "2", "0", "-3/4".
std::string rat_to_string(const Rat &r);

std::string int_to_string(const Int &i);

// Accepts "p" or "p/q" with optional sign; throws ParseError on anything else
// or on q == 0.
Rat parse_rational(const std::string &text);

// r^e for e >= 0.
Rat rat_pow(const Rat &r, std::int64_t e);

Rat rat_abs(const Rat &r);

} // namespace mbb
