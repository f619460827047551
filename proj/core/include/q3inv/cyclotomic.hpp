#pragma once

#include <q3inv/rational.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace q3inv {

// Exact element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N).
//
// Canonical representation: coordinates in the power basis
// 1, z, z^2, ..., z^{phi(N)-1} after reduction modulo the N-th cyclotomic
// polynomial Phi_N. Since Phi_N is the minimal polynomial of zeta_N, two
// values at the same order are equal iff their coordinate vectors are equal,
// which makes equality (and zero-testing) decidable. Operands of different
// orders are first embedded into Q(zeta_lcm) via zeta_M -> zeta_N^{N/M}.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1u) {}  // zero of order 1
  explicit Cyclotomic(unsigned order);

  static Cyclotomic zero() { return Cyclotomic(1u); }
  static Cyclotomic one() { return from_rational(Rational(1)); }
  static Cyclotomic integer(long v) { return from_rational(Rational(v)); }
  static Cyclotomic from_rational(const Rational& r);
  // zeta_N^k (k may be negative; reduced mod N).
  static Cyclotomic root_of_unity(unsigned N, long k = 1);
  // Build from raw power-basis coordinates c[0..] meaning sum c[i] * zeta_N^i;
  // the vector may have any length and is reduced mod Phi_N.
  static Cyclotomic from_coeffs(unsigned N, std::vector<Rational> c);

  // An exact square root of the integer n, expressed in a cyclotomic field
  // (quadratic Gauss sums; every integer square root is cyclotomic). The
  // returned value squares to n; which of the two roots you get is fixed but
  // unspecified.
  static Cyclotomic sqrt_of_integer(long n);
  static Cyclotomic sqrt_of_rational(const Rational& r);

  unsigned order() const { return order_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // The value as a rational if it is one (i.e. all higher coordinates vanish).
  std::optional<Rational> rational_value() const;

  // Same value re-expressed in Q(zeta_M); M must be a multiple of order().
  Cyclotomic embedded(unsigned M) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  // Galois twist zeta -> zeta^k, gcd(k, order) = 1. k = -1 is complex
  // conjugation.
  Cyclotomic galois(long k) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Numeric shadow for display only; all decisions are made exactly.
  std::complex<double> approx() const;
  std::string str() const;

  // phi(N) and the integer coefficients of Phi_N (cached).
  static unsigned phi(unsigned N);
  static const std::vector<BigInt>& cyclotomic_polynomial(unsigned N);

 private:
  unsigned order_;                 // N
  std::vector<Rational> coeffs_;   // dense, size phi(N), index = power of zeta_N

  void reduce_from(std::vector<Rational>& raw);  // raw poly in zeta_N -> canonical
  static Cyclotomic sqrt_of_prime(long p);
  static unsigned lcm(unsigned a, unsigned b);
  static void align(Cyclotomic& a, Cyclotomic& b);
};

}  // namespace q3inv
