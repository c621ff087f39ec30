#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffp {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Thrown when an enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", optional leading sign; the result is canonical.
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

Integer factorial(int n);

/// Zero when k < 0 or k > n (n >= 0). Negative n is rejected.
Integer binomial(int n, int k);

/// n (n-1) ... (n-j+1); empty product is 1.
Integer falling_factorial(int n, int j);
Rational falling_factorial(const Rational& n, int j);

Rational pow(const Rational& base, int exponent);

inline int sign_power(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace ffp
