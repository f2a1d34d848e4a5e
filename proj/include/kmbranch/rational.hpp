#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace kmbranch {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Largest integer <= r / smallest integer >= r.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

bool is_integer(const Rat& r);

// Requires is_integer(r) and a value that fits in long long.
long long to_int64(const Rat& r);

// Accepts "7", "-3/4" and plain decimal strings like "1.25".
Rat parse_rational(const std::string& s);

// Integers render bare ("7"), everything else as "p/q" in lowest terms.
std::string format_rational(const Rat& r);

using RatVec = std::vector<Rat>;

}  // namespace kmbranch
