#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace q3inv {

// Exact rational scalar. GMP supplies the arbitrary-precision arithmetic;
// everything on top of it (cyclotomic layer, solvers, serialization) keeps
// values exact end to end.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses decimal integer strings (optional leading '-').
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  BigInt n, d;
  if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad integer string: " + num);
  if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad integer string: " + den);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string numerator_string(const Rational& r) { return r.get_num().get_str(); }
inline std::string denominator_string(const Rational& r) { return r.get_den().get_str(); }

}  // namespace q3inv
