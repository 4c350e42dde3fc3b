#include "hurwitz/rational.hpp"

#include <cmath>

#include "hurwitz/errors.hpp"

namespace hurwitz {

BigInt factorial(int n) {
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

int parity(const Rational& value) {
    if (!is_integer(value)) {
        throw NonIntegralError("parity of non-integral value " + to_string(value));
    }
    const BigInt num = boost::multiprecision::numerator(value);
    return static_cast<int>(num & 1);
}

double log_value(const Rational& value) {
    // Values can overflow a double well before they overflow memory, so take
    // logs of numerator and denominator separately via their decimal length.
    auto log_big = [](const BigInt& x) {
        const std::string digits = x.str();
        if (digits.size() <= 15) {
            return std::log(std::stod(digits));
        }
        const double mantissa = std::stod(digits.substr(0, 15));
        return std::log(mantissa) +
               static_cast<double>(digits.size() - 15) * std::log(10.0);
    };
    return log_big(boost::multiprecision::numerator(value)) -
           log_big(boost::multiprecision::denominator(value));
}

}  // namespace hurwitz
