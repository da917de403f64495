#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace squiral {

// Exact rational scalar: always reduced, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

} // namespace squiral
