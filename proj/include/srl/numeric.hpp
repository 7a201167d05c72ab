#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace srl {

using Int = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with q > 0 after normalisation.
Rat parse_rational(std::string_view text);

// "p" when the denominator is one, otherwise "p/q".
std::string format_rational(const Rat& q);

std::string format_int(const Int& v);

}  // namespace srl
