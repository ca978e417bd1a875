#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace chardeg {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(Rational const &r)
{
  return r.get_str();
}

} // namespace chardeg
