#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlag {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// C(n, k) as an unsigned 64-bit value. Throws SizeError on overflow.
std::uint64_t binomial_u64(long n, long k);

/// Generalized binomial x(x-1)...(x-k+1)/k! for real x.
double binomial_real(double x, int k);

/// Best continued-fraction convergent of `x` whose denominator does not
/// exceed `max_denominator`. `x` must be finite.
Rational rationalize(double x, long max_denominator = 1000000);

/// "p/q" or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p/q", "p" or a decimal literal ("0.25") exactly.
Rational parse_rational(const std::string& text);

/// %.12g rendering used in every report.
std::string format_real(double x);

double to_double(const Rational& q);

}  // namespace hyperlag
