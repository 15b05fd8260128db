#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "operad/linalg.hpp"

namespace operad {

// Exact rationals, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;
using QSubspace = Subspace<Rational>;

// "p" or "p/q".
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace operad
