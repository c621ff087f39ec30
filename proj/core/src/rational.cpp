#include "ffp/rational.hpp"

#include <cctype>

namespace ffp {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Integer falling_factorial(int n, int j) {
    if (j < 0) throw std::invalid_argument("falling factorial with negative length");
    Integer out = 1;
    for (int i = 0; i < j; ++i) out *= n - i;
    return out;
}

Rational falling_factorial(const Rational& n, int j) {
    if (j < 0) throw std::invalid_argument("falling factorial with negative length");
    Rational out = 1;
    for (int i = 0; i < j; ++i) out *= n - i;
    return out;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational out = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) out *= b;
        b *= b;
        exponent >>= 1;
    }
    return out;
}

}  // namespace ffp
