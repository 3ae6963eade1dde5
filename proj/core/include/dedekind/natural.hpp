#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dedekind {

// Arbitrary-precision natural number. The backing integer type is signed;
// every producer in this library keeps values non-negative.
using Natural = boost::multiprecision::cpp_int;

// Parses a non-empty run of ASCII digits. Throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace dedekind
