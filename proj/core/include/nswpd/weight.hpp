#ifndef NSWPD_WEIGHT_HPP
#define NSWPD_WEIGHT_HPP

#include <boost/rational.hpp>
#include <string>

namespace nswpd {

// Edge weights are exact rationals so that fractional branch lengths survive
// round-trips; every algorithm only ever adds and compares them.
using Rational = boost::rational<long long>;

// Parses "12", "3.25", "-0.5" into an exact rational.
// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

// Exact decimal rendering when the denominator is of the form 2^a * 5^b
// (always the case for values parsed from decimals), "p/q" otherwise.
std::string decimal_string(const Rational& value);

}  // namespace nswpd

#endif
