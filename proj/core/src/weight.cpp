#include "nswpd/weight.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace nswpd {

Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    long long integer_part = 0;
    long long numerator = 0;
    long long denominator = 1;
    bool any_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        integer_part = integer_part * 10 + (text[i] - '0');
        any_digit = true;
        ++i;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            numerator = numerator * 10 + (text[i] - '0');
            denominator *= 10;
            any_digit = true;
            ++i;
        }
    }
    // Scientific notation shows up in some tools' output.
    long long exponent = 0;
    if (any_digit && i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        bool exp_digit = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exponent = exponent * 10 + (text[i] - '0');
            exp_digit = true;
            ++i;
        }
        if (!exp_digit || exponent > 18) throw std::invalid_argument("bad exponent: " + text);
        if (exp_neg) exponent = -exponent;
    }
    if (!any_digit || i != text.size()) throw std::invalid_argument("malformed number: " + text);
    Rational value(integer_part);
    value += Rational(numerator, denominator);
    for (long long e = 0; e < exponent; ++e) value *= 10;
    for (long long e = 0; e > exponent; --e) value /= 10;
    if (negative) value = -value;
    return value;
}

std::string decimal_string(const Rational& value) {
    long long num = value.numerator();
    long long den = value.denominator();
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    // Scale the denominator up to a power of ten if it only has factors 2 and 5.
    long long d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) {
        return sign + std::to_string(num) + "/" + std::to_string(den);
    }
    int digits = twos > fives ? twos : fives;
    long long scale = 1;
    for (int i = twos; i < digits; ++i) scale *= 2;
    for (int i = fives; i < digits; ++i) scale *= 5;
    num *= scale;
    long long pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    long long whole = num / pow10;
    long long frac = num % pow10;
    if (digits == 0 || frac == 0) return sign + std::to_string(whole);
    std::string frac_str = std::to_string(frac);
    frac_str.insert(frac_str.begin(), digits - frac_str.size(), '0');
    while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();
    return sign + std::to_string(whole) + "." + frac_str;
}

}  // namespace nswpd
