#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace circulant {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

} // namespace circulant
