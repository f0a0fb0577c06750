#ifndef MONOWALK_RATIONAL_HPP_
#define MONOWALK_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monowalk {

  using Rational = mpq_class;
  using Integer  = mpz_class;

  // Canonical "p/q" (or "p" when q = 1); this is the only rendering used in
  // reports, so equal values always print identically.
  std::string to_string(Rational const& q);
  std::string to_string(Integer const& z);

  // Accepts "p", "p/q" and "-p/q"; the result is canonicalised.
  Rational parse_rational(std::string_view text);

  Rational    power(Rational const& base, std::uint64_t exponent);
  Integer     ceil(Rational const& q);
  double      to_double(Rational const& q);
  std::string to_decimal(Rational const& q, int digits = 12);

  Integer factorial(std::uint64_t n);
  Integer binomial(std::uint64_t n, std::uint64_t k);
  // Zero if any part is negative.
  Integer multinomial(std::vector<std::int64_t> const& parts);

  Rational sum(std::vector<Rational> const& values);

}  // namespace monowalk

#endif  // MONOWALK_RATIONAL_HPP_
