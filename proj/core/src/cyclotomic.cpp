#include <q3inv/cyclotomic.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace q3inv {

namespace {

// ---- small polynomial helpers (little-endian coefficient vectors) ----

template <typename T>
int poly_deg(const std::vector<T>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division of integer polynomials, divisor monic.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  int dn = poly_deg(num), dd = poly_deg(den);
  if (dd < 0) throw std::domain_error("division by zero polynomial");
  std::vector<BigInt> q(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    if (num[i] == 0) continue;
    BigInt c = num[i];
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  int da = poly_deg(a), db = poly_deg(b);
  if (da < 0 || db < 0) return {Rational(0)};
  std::vector<Rational> r(da + db + 1, Rational(0));
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Extended gcd over Q[x]: returns (g, u) with u*a + (something)*m = g, g monic
// gcd. Only u is needed for inverses mod m.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_ext_gcd_u(
    std::vector<Rational> a, std::vector<Rational> m) {
  std::vector<Rational> r0 = std::move(m), r1 = std::move(a);
  std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
  while (poly_deg(r1) >= 0) {
    // divide r0 by r1
    std::vector<Rational> q(std::max(poly_deg(r0) - poly_deg(r1) + 1, 1), Rational(0));
    std::vector<Rational> rem = r0;
    int d1 = poly_deg(r1);
    Rational lead = r1[d1];
    for (int i = poly_deg(rem); i >= d1; --i) {
      if (rem[i] == 0) continue;
      Rational c = rem[i] / lead;
      q[i - d1] = c;
      for (int j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    std::vector<Rational> u2 = u0;
    {
      std::vector<Rational> qu = poly_mul(q, u1);
      if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
      for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  int dg = poly_deg(r0);
  if (dg < 0) throw std::domain_error("gcd of zero polynomials");
  Rational lead = r0[dg];
  for (auto& c : r0) c /= lead;
  for (auto& c : u0) c /= lead;
  return {r0, u0};
}

std::map<unsigned, std::vector<BigInt>>& phi_cache() {
  static std::map<unsigned, std::vector<BigInt>> cache;
  return cache;
}

}  // namespace

unsigned Cyclotomic::phi(unsigned N) {
  unsigned result = N, n = N;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<BigInt>& Cyclotomic::cyclotomic_polynomial(unsigned N) {
  auto& cache = phi_cache();
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> p;
  if (N == 1) {
    p = {BigInt(-1), BigInt(1)};  // x - 1
  } else {
    p.assign(N + 1, BigInt(0));
    p[0] = -1;
    p[N] = 1;  // x^N - 1
    for (unsigned d = 1; d < N; ++d)
      if (N % d == 0) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return cache.emplace(N, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(unsigned order) : order_(order == 0 ? 1 : order) {
  coeffs_.assign(phi(order_), Rational(0));
}

void Cyclotomic::reduce_from(std::vector<Rational>& raw) {
  const auto& phiN = cyclotomic_polynomial(order_);
  int dm = static_cast<int>(phiN.size()) - 1;
  for (int i = poly_deg(raw); i >= dm; --i) {
    if (raw[i] == 0) continue;
    Rational c = raw[i];
    raw[i] = 0;
    for (int j = 0; j < dm; ++j) {
      if (phiN[j] != 0) raw[i - dm + j] -= c * Rational(phiN[j]);
    }
  }
  raw.resize(dm, Rational(0));
  coeffs_ = std::move(raw);
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
  Cyclotomic c(1u);
  c.coeffs_[0] = r;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned N, long k) {
  if (N == 0) throw std::domain_error("root_of_unity: order must be positive");
  long kk = k % static_cast<long>(N);
  if (kk < 0) kk += N;
  Cyclotomic c(N);
  std::vector<Rational> raw(static_cast<size_t>(kk) + 1, Rational(0));
  raw[static_cast<size_t>(kk)] = 1;
  c.reduce_from(raw);
  return c;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned N, std::vector<Rational> c) {
  Cyclotomic r(N);
  c.resize(std::max<size_t>(c.size(), 1), Rational(0));
  r.reduce_from(c);
  return r;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

unsigned Cyclotomic::lcm(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

Cyclotomic Cyclotomic::embedded(unsigned M) const {
  if (M == order_) return *this;
  if (M % order_ != 0) throw std::domain_error("embedded: target order not a multiple");
  unsigned stride = M / order_;
  Cyclotomic out(M);
  std::vector<Rational> raw(static_cast<size_t>(coeffs_.size() - 1) * stride + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) raw[i * stride] = coeffs_[i];
  out.reduce_from(raw);
  return out;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
  if (a.order_ == b.order_) return;
  unsigned N = lcm(a.order_, b.order_);
  if (N != a.order_) a = a.embedded(N);
  if (N != b.order_) b = b.embedded(N);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (order_ != o.order_) {
    Cyclotomic b = o;
    align(*this, b);
    return *this *= b;
  }
  size_t da = coeffs_.size(), db = o.coeffs_.size();
  std::vector<Rational> raw(da + db - 1, Rational(0));
  for (size_t i = 0; i < da; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < db; ++j)
      if (o.coeffs_[j] != 0) raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_from(raw);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic scalar");
  if (is_rational()) return from_rational(Rational(1) / coeffs_[0]);
  const auto& phiN = cyclotomic_polynomial(order_);
  std::vector<Rational> m(phiN.size());
  for (size_t i = 0; i < phiN.size(); ++i) m[i] = Rational(phiN[i]);
  std::vector<Rational> a(coeffs_.begin(), coeffs_.end());
  auto [g, u] = poly_ext_gcd_u(std::move(a), std::move(m));
  if (poly_deg(g) != 0)
    throw std::logic_error("cyclotomic polynomial not coprime with nonzero element");
  Cyclotomic r(order_);
  u.resize(std::max<size_t>(u.size(), 1), Rational(0));
  r.reduce_from(u);
  return r;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = Cyclotomic::one();
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

Cyclotomic Cyclotomic::galois(long k) const {
  long n = static_cast<long>(order_);
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw std::domain_error("galois exponent not coprime with order");
  std::vector<Rational> raw(order_, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) raw[(i * static_cast<size_t>(kk)) % order_] += coeffs_[i];
  Cyclotomic r(order_);
  r.reduce_from(raw);
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (order_ == o.order_) return coeffs_ == o.coeffs_;
  Cyclotomic a = *this, b = o;
  align(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> sum(0.0, 0.0);
  const double two_pi = 6.283185307179586476925286766559;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double c = coeffs_[i].get_d();
    sum += c * std::polar(1.0, two_pi * static_cast<double>(i) / static_cast<double>(order_));
  }
  return sum;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[i].get_str() << ")";
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " [order " << order_ << "]";
  return os.str();
}

Cyclotomic Cyclotomic::sqrt_of_rational(const Rational& r) {
  if (r == 0) return Cyclotomic::zero();
  // sqrt(n/d) = sqrt(n*d)/d.
  BigInt nd = r.get_num() * r.get_den();
  if (!nd.fits_slong_p())
    throw std::domain_error("sqrt_of_rational: operand too large");
  Cyclotomic s = sqrt_of_integer(nd.get_si());
  return s * Rational(BigInt(1), r.get_den());
}

Cyclotomic Cyclotomic::sqrt_of_integer(long n) {
  if (n == 0) return Cyclotomic::zero();
  Cyclotomic result = Cyclotomic::one();
  long m = n;
  if (m < 0) {
    result *= root_of_unity(4, 1);  // i
    m = -m;
  }
  // Factor out squares; attach a quadratic Gauss sum per leftover prime.
  for (long p = 2; p * p <= m; ++p) {
    long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e == 0) continue;
    for (long k = 0; k < e / 2; ++k) result *= integer(p);
    if (e % 2) result *= sqrt_of_prime(p);
  }
  if (m > 1) result *= sqrt_of_prime(m);
  return result;
}

Cyclotomic Cyclotomic::sqrt_of_prime(long p) {
  if (p == 2) {
    // (zeta_8 + zeta_8^7)^2 = 2.
    return root_of_unity(8, 1) + root_of_unity(8, 7);
  }
  // Quadratic Gauss sum g = sum_a zeta_p^{a^2} satisfies g^2 = (-1)^{(p-1)/2} p.
  Cyclotomic g(static_cast<unsigned>(p));
  std::vector<Rational> raw(static_cast<size_t>(p), Rational(0));
  for (long a = 0; a < p; ++a) raw[static_cast<size_t>((a * a) % p)] += 1;
  g.reduce_from(raw);
  if (p % 4 == 1) return g;
  // p = 3 mod 4: g^2 = -p, so (-i*g)^2 = p.
  return g * root_of_unity(4, 3);
}

}  // namespace q3inv
