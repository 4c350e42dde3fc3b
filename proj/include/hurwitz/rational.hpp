#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value of a (weighted) Hurwitz count.  Denominators come from 1/d! and
// 1/|Aut|, so the value is rational in general.
using HurwitzValue = Rational;

BigInt factorial(int n);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Inverse of to_string; accepts "p" and "p/q".
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);

// Parity of an integral rational; throws NonIntegralError otherwise.
int parity(const Rational& value);

double log_value(const Rational& value);

}  // namespace hurwitz
