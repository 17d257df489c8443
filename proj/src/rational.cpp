#include "hyperlag/rational.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <regex>

#include "hyperlag/errors.hpp"

namespace hyperlag {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binomial_u64(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw SizeError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

double binomial_real(double x, int k) {
  double num = 1.0;
  double den = 1.0;
  for (int i = 0; i < k; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

Rational rationalize(double x, long max_denominator) {
  if (!std::isfinite(x)) throw ArgumentError("cannot rationalize a non-finite value");
  const bool negative = x < 0;
  double rem = std::fabs(x);
  // convergents h/k
  Integer h_prev = 1, h = static_cast<long>(std::floor(rem));
  Integer k_prev = 0, k = 1;
  double frac = rem - std::floor(rem);
  for (int iter = 0; iter < 64 && frac > 1e-300; ++iter) {
    rem = 1.0 / frac;
    double a_d = std::floor(rem);
    frac = rem - a_d;
    if (a_d > 1e18) break;
    Integer a = static_cast<unsigned long>(a_d);
    Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    Integer h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational out(negative ? Integer(-h) : h, k);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch mt;
  if (std::regex_match(text, mt, fraction)) {
    Integer den(mt[2].str(), 10);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational out(Integer(mt[1].str(), 10), den);
    out.canonicalize();
    return out;
  }
  if (std::regex_match(text, mt, decimal) && (mt[2].length() > 0 || mt[3].length() > 0)) {
    const std::string frac = mt[3].str();
    long exponent = mt[4].matched ? std::stol(mt[4].str()) : 0;
    if (exponent > 4096 || exponent < -4096) throw ParseError("exponent out of range in '" + text + "'");
    exponent -= static_cast<long>(frac.size());
    Integer num(mt[2].str() + frac, 10);
    if (mt[1] == "-") num = -num;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational out = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
    out.canonicalize();
    return out;
  }
  throw ParseError("malformed rational literal '" + text + "'");
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hyperlag
