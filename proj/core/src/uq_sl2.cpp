#include <q3inv/uq_sl2.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace q3inv {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Sparse element keyed by PBW index, used while building the tables.
using Sparse = std::map<unsigned, Cyclotomic>;

struct UqBuilder {
  long p;
  unsigned dim;
  std::vector<Cyclotomic> qp;  // qp[k] = q^k for k in [0, p)

  explicit UqBuilder(long prime) : p(prime), dim(unsigned(prime * prime * prime)) {
    qp.reserve(p);
    for (long k = 0; k < p; ++k) qp.push_back(Cyclotomic::root_of_unity(unsigned(p), k));
  }

  unsigned idx(long a, long b, long c) const {
    return unsigned((a * p + b) * p + ((c % p + p) % p));
  }
  long adeg(unsigned i) const { return long(i) / (p * p); }
  long bdeg(unsigned i) const { return (long(i) / p) % p; }
  long kexp(unsigned i) const { return long(i) % p; }

  const Cyclotomic& qpow(long e) const { return qp[size_t(((e % p) + p) % p)]; }

  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
  Cyclotomic qint(long n) const {
    Cyclotomic s = Cyclotomic::zero();
    for (long i = 0; i < n; ++i) s = s + qpow(n - 1 - 2 * i);
    return s;
  }

  static void accum(Sparse& out, unsigned i, const Cyclotomic& c) {
    auto it = out.find(i);
    if (it == out.end()) {
      out.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }

  // x * K
  Sparse mul_k(const Sparse& x) const {
    Sparse out;
    for (const auto& [i, c] : x) out.emplace(idx(adeg(i), bdeg(i), kexp(i) + 1), c);
    return out;
  }

  // x * Ftil, using K^c Ftil = q^{-2c} Ftil K^c and Ftil^p = 0.
  Sparse mul_f(const Sparse& x) const {
    Sparse out;
    for (const auto& [i, c] : x) {
      long b = bdeg(i);
      if (b + 1 >= p) continue;
      accum(out, idx(adeg(i), b + 1, kexp(i)), c * qpow(-2 * kexp(i)));
    }
    return out;
  }

  // x * E, using K^c E = q^{2c} E K^c and the straightening rule
  // Ftil^b E = E Ftil^b - [b] Ftil^{b-1} (q^{1-b} K - q^{b-1} K^{-1}).
  Sparse mul_e(const Sparse& x) const {
    Sparse out;
    for (const auto& [i, c] : x) {
      long a = adeg(i), b = bdeg(i), k = kexp(i);
      Cyclotomic base = c * qpow(2 * k);
      if (a + 1 < p) accum(out, idx(a + 1, b, k), base);
      if (b >= 1) {
        Cyclotomic nb = base * qint(b);
        accum(out, idx(a, b - 1, k + 1), -(nb * qpow(1 - b)));
        accum(out, idx(a, b - 1, k - 1), nb * qpow(b - 1));
      }
    }
    return out;
  }
};

struct UqHooks : CertifyHooks {
  bool fast_associativity(const HopfAlgebra& H, std::string& witness) const override {
    const unsigned n = H.dim;
    for (unsigned g : H.generating_indices()) {
      for (unsigned i = 0; i < n; ++i) {
        const auto& gi = H.mul[g * n + i];
        for (unsigned j = 0; j < n; ++j) {
          Sparse lhs, rhs;
          for (const auto& [t, c] : gi)
            for (const auto& [k, m] : H.mul[t * n + j]) UqBuilder::accum(lhs, k, c * m);
          for (const auto& [t, c] : H.mul[i * n + j])
            for (const auto& [k, m] : H.mul[g * n + t]) UqBuilder::accum(rhs, k, c * m);
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(" << H.labels[g] << ", " << H.labels[i] << ", " << H.labels[j] << ")";
            witness = os.str();
            return false;
          }
        }
      }
    }
    return true;
  }

  bool fast_comul_multiplicative(const HopfAlgebra& H, std::string& witness) const override {
    const unsigned n = H.dim;
    for (unsigned g : H.generating_indices()) {
      TensorElement dg = H.comul_of(H.basis_elem(g));
      for (unsigned j = 0; j < n; ++j) {
        TensorElement lhs(2);
        for (const auto& [k, c] : H.mul[g * n + j])
          for (const auto& [a, b, m] : H.comul[k]) lhs.add({a, b}, c * m);
        TensorElement rhs = H.mul_tensor(dg, H.comul_of(H.basis_elem(j)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "(" << H.labels[g] << ", " << H.labels[j] << ")";
          witness = os.str();
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

HopfAlgebra uq_sl2(long p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("uq_sl2 requires an odd prime order, got " +
                                std::to_string(p));
  UqBuilder B(p);
  HopfAlgebra H;
  H.dim = B.dim;
  H.family = "uq_sl2";
  H.familyParam = p;

  H.labels.resize(H.dim);
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c) {
        std::ostringstream os;
        if (a) os << "E" << (a > 1 ? "^" + std::to_string(a) : "");
        if (b) os << "F" << (b > 1 ? "^" + std::to_string(b) : "");
        if (c) os << "K" << (c > 1 ? "^" + std::to_string(c) : "");
        H.labels[B.idx(a, b, c)] = os.str().empty() ? "1" : os.str();
      }

  // Multiplication table e_i e_j, filling the j-lattice so each entry is one
  // generator step away from one already computed.
  H.mul.resize(size_t(H.dim) * H.dim);
  for (unsigned i = 0; i < H.dim; ++i) {
    std::vector<Sparse> row(H.dim);
    row[B.idx(0, 0, 0)] = Sparse{{i, Cyclotomic::one()}};
    for (long a = 0; a < p; ++a) {
      if (a > 0) row[B.idx(a, 0, 0)] = B.mul_e(row[B.idx(a - 1, 0, 0)]);
      for (long b = 0; b < p; ++b) {
        if (b > 0) row[B.idx(a, b, 0)] = B.mul_f(row[B.idx(a, b - 1, 0)]);
        for (long c = 1; c < p; ++c) row[B.idx(a, b, c)] = B.mul_k(row[B.idx(a, b, c - 1)]);
      }
    }
    for (unsigned j = 0; j < H.dim; ++j) {
      auto& cell = H.mul[size_t(i) * H.dim + j];
      cell.reserve(row[j].size());
      for (auto& [k, c] : row[j]) cell.emplace_back(k, std::move(c));
    }
  }

  H.unit = Elem(H.dim);
  H.unit[B.idx(0, 0, 0)] = Cyclotomic::one();

  // Comultiplication: Delta(E) = 1⊗E + E⊗K, Delta(F) = K^{-1}⊗F + F⊗1,
  // Delta(K) = K⊗K, extended multiplicatively over the same lattice.
  const unsigned iE = B.idx(1, 0, 0), iF = B.idx(0, 1, 0), iK = B.idx(0, 0, 1);
  {
    H.comul.resize(H.dim);
    TensorElement dE(2), dF(2), dK(2);
    dE.add({B.idx(0, 0, 0), iE}, Cyclotomic::one());
    dE.add({iE, iK}, Cyclotomic::one());
    dF.add({B.idx(0, 0, p - 1), iF}, Cyclotomic::one());
    dF.add({iF, B.idx(0, 0, 0)}, Cyclotomic::one());
    dK.add({iK, iK}, Cyclotomic::one());
    std::vector<TensorElement> lat(H.dim, TensorElement(2));
    TensorElement unit2(2);
    unit2.add({B.idx(0, 0, 0), B.idx(0, 0, 0)}, Cyclotomic::one());
    lat[B.idx(0, 0, 0)] = unit2;
    for (long a = 0; a < p; ++a) {
      if (a > 0) lat[B.idx(a, 0, 0)] = H.mul_tensor(lat[B.idx(a - 1, 0, 0)], dE);
      for (long b = 0; b < p; ++b) {
        if (b > 0) lat[B.idx(a, b, 0)] = H.mul_tensor(lat[B.idx(a, b - 1, 0)], dF);
        for (long c = 1; c < p; ++c)
          lat[B.idx(a, b, c)] = H.mul_tensor(lat[B.idx(a, b, c - 1)], dK);
      }
    }
    for (unsigned j = 0; j < H.dim; ++j) {
      auto& cell = H.comul[j];
      cell.reserve(lat[j].term_count());
      for (const auto& [t, c] : lat[j].terms()) cell.emplace_back(t[0], t[1], c);
    }
  }

  H.counit = LinearForm(H.dim);
  for (long c = 0; c < p; ++c) H.counit[B.idx(0, 0, c)] = Cyclotomic::one();

  // Antipode: S(E) = -E K^{-1}, S(F) = -K F = -q^{-2} F K, S(K) = K^{-1};
  // anti-multiplicative, so S(E^a F^b K^c) = S(K)^c S(F)^b S(E)^a.
  {
    H.antipode = Matrix(H.dim, H.dim);
    // Closed powers of the single-monomial antipode images:
    // S(K)^c S(F)^b = (-1)^b q^{2cb - 2b - b(b-1)} F^b K^{b-c},
    // S(E)^a = (-1)^a q^{-a(a-1)} E^a K^{-a}.
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        for (long c = 0; c < p; ++c) {
          Cyclotomic coeff = B.qpow(2 * c * b - 2 * b - b * (b - 1) - a * (a - 1));
          if ((a + b) % 2 == 1) coeff = -coeff;
          Sparse x{{B.idx(0, b, b - c), coeff}};
          for (long s = 0; s < a; ++s) x = B.mul_e(x);
          for (long s = 0; s < (p - a) % p; ++s) x = B.mul_k(x);
          for (const auto& [k, cc] : x) H.antipode.at(k, B.idx(a, b, c)) = cc;
        }
  }

  H.G = Elem(H.dim);
  (*H.G)[iK] = Cyclotomic::one();

  H.generators = {iE, iF, iK};
  H.hooks = std::make_shared<UqHooks>();

  // R = (1/p) sum_{n,a,b} q^{n(n-1)/2} [n]!^{-1} q^{2an - 2bn - 2ab}
  //                        (E^n K^a) ⊗ (F^n K^b)
  {
    TensorElement R(2);
    Rational invp = make_rational(1, p);
    Cyclotomic fact = Cyclotomic::one();
    for (long n = 0; n < p; ++n) {
      if (n > 0) fact = fact * B.qint(n);
      Cyclotomic cn = B.qpow(n * (n - 1) / 2) * fact.inverse() * invp;
      for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
          R.add({B.idx(n, 0, a), B.idx(0, n, b)}, cn * B.qpow(2 * a * n - 2 * b * n - 2 * a * b));
    }
    H.R = std::move(R);
  }

  return H;
}

}  // namespace q3inv
