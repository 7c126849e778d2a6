#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace codp {

// Exact rational arithmetic. Law checks and decision objectives compare
// exactly, so floating point is never used for weights or scores.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "3", "-1/2"
std::string rat_to_string(const Rat& r);

// Accepts "n" and "n/d"; throws ParseError on anything else or d == 0.
Rat rat_from_string(const std::string& text);

}  // namespace codp
