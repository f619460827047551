#include <q3inv/catalog.hpp>

#include <q3inv/zoo.hpp>

#include <stdexcept>

namespace q3inv {

namespace {

Cyclotomic mat_trace(const Matrix& m) {
  Cyclotomic t;
  for (size_t i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

// trace(a * b) without forming the product.
Cyclotomic trace_of_product(const Matrix& a, const Matrix& b) {
  Cyclotomic t;
  for (size_t r = 0; r < a.rows; ++r)
    for (size_t c = 0; c < a.cols; ++c)
      if (!a.at(r, c).is_zero() && !b.at(c, r).is_zero()) t += a.at(r, c) * b.at(c, r);
  return t;
}

Matrix one_by_one(const Cyclotomic& v) {
  Matrix m(1, 1);
  m.at(0, 0) = v;
  return m;
}

void build_trivial(const HopfAlgebra&, IrrepCatalog& cat) {
  IrrepEntry e;
  e.label = "1";
  e.dim = 1;
  e.action = {one_by_one(Cyclotomic::one())};
  cat.entries.push_back(std::move(e));
  cat.globalDim = Cyclotomic::one();
}

void build_cyclic_group(const HopfAlgebra& H, IrrepCatalog& cat, unsigned n) {
  for (unsigned j = 0; j < n; ++j) {
    IrrepEntry e;
    e.label = "chi^" + std::to_string(j);
    e.dim = 1;
    e.action.resize(H.dim);
    for (unsigned a = 0; a < n; ++a)
      e.action[a] = one_by_one(Cyclotomic::root_of_unity(n, long(j) * a));
    cat.entries.push_back(std::move(e));
  }
  cat.globalDim = Cyclotomic::sqrt_of_integer(n);
}

void build_s3_group(const HopfAlgebra& H, IrrepCatalog& cat) {
  // Basis order: e, (01), (02), (12), (012), (021).
  IrrepEntry triv;
  triv.label = "trivial";
  triv.dim = 1;
  for (unsigned a = 0; a < 6; ++a) triv.action.push_back(one_by_one(Cyclotomic::one()));

  IrrepEntry sgn;
  sgn.label = "sign";
  sgn.dim = 1;
  static const long signs[6] = {1, -1, -1, -1, 1, 1};
  for (unsigned a = 0; a < 6; ++a) sgn.action.push_back(one_by_one(Cyclotomic::integer(signs[a])));

  // The two-dimensional representation on { (x0,x1,x2) : sum = 0 } with the
  // coordinate-permutation action, in the basis u1 = e0-e1, u2 = e1-e2.
  IrrepEntry std2;
  std2.label = "standard";
  std2.dim = 2;
  static const long mats[6][4] = {{1, 0, 0, 1},   {-1, 1, 0, 1}, {0, -1, -1, 0},
                                  {1, 0, 1, -1},  {0, -1, 1, -1}, {-1, 1, -1, 0}};
  for (unsigned a = 0; a < 6; ++a) {
    Matrix m(2, 2);
    m.at(0, 0) = Cyclotomic::integer(mats[a][0]);
    m.at(0, 1) = Cyclotomic::integer(mats[a][1]);
    m.at(1, 0) = Cyclotomic::integer(mats[a][2]);
    m.at(1, 1) = Cyclotomic::integer(mats[a][3]);
    std2.action.push_back(std::move(m));
  }
  (void)H;
  cat.entries = {std::move(triv), std::move(sgn), std::move(std2)};
  cat.globalDim = Cyclotomic::sqrt_of_integer(6);
}

void build_cyclic_double(const HopfAlgebra& H, IrrepCatalog& cat, unsigned n) {
  // Basis (delta_a, g^b) at a*n+b; the irreducibles of the commutative double
  // are indexed by (support point c, character j).
  for (unsigned c = 0; c < n; ++c)
    for (unsigned j = 0; j < n; ++j) {
      IrrepEntry e;
      e.label = "rho[" + std::to_string(c) + "," + std::to_string(j) + "]";
      e.dim = 1;
      e.action.resize(H.dim);
      for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
          e.action[a * n + b] = one_by_one(
              a == c ? Cyclotomic::root_of_unity(n, long(j) * b) : Cyclotomic::zero());
      cat.entries.push_back(std::move(e));
    }
  cat.globalDim = Cyclotomic::integer(n);
}

void build_uq(const HopfAlgebra& H, IrrepCatalog& cat, long p) {
  const Cyclotomic q = Cyclotomic::root_of_unity(unsigned(p));
  auto qpow = [p](long e) { return Cyclotomic::root_of_unity(unsigned(p), e); };
  auto qint = [&](long m) {
    Cyclotomic s;
    for (long i = 0; i < m; ++i) s += qpow(m - 1 - 2 * i);
    return s;
  };
  auto idx = [p](long a, long b, long c) { return unsigned((a * p + b) * p + c); };

  // Highest-weight module of highest weight lam and dimension lam+1, on
  // v_0..v_lam:  K v_k = q^{lam-2k} v_k,  E v_k = [k][lam-k+1] v_{k-1},
  // F v_k = (q - q^{-1}) v_{k+1}.  The dimension-p module is omitted: its
  // balancing trace is [p] = 0, so it contributes nothing to the quotient.
  for (long lam = 0; lam + 1 < p; ++lam) {
    IrrepEntry e;
    e.dim = unsigned(lam + 1);
    e.label = "V" + std::to_string(lam + 1);
    Matrix mE(e.dim, e.dim), mF(e.dim, e.dim), mK(e.dim, e.dim);
    for (long k = 0; k <= lam; ++k) {
      mK.at(k, k) = qpow(lam - 2 * k);
      if (k >= 1) mE.at(k - 1, k) = qint(k) * qint(lam - k + 1);
      if (k < lam) mF.at(k + 1, k) = q - qpow(-1);
    }
    std::vector<Matrix> Ep{Matrix::identity(e.dim)}, Fp{Matrix::identity(e.dim)},
        Kp{Matrix::identity(e.dim)};
    for (long i = 1; i < p; ++i) {
      Ep.push_back(Ep.back() * mE);
      Fp.push_back(Fp.back() * mF);
      Kp.push_back(Kp.back() * mK);
    }
    e.action.resize(H.dim);
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        Matrix ab = Ep[size_t(a)] * Fp[size_t(b)];
        for (long c = 0; c < p; ++c) e.action[idx(a, b, c)] = ab * Kp[size_t(c)];
      }
    cat.entries.push_back(std::move(e));
  }
  cat.globalDim = Cyclotomic::sqrt_of_integer(-2 * p) * (q - qpow(-1)).inverse();
}

// Verifies each entry against the structure constants, fills the quantum
// dimensions and global dimension, and resolves the dual permutation.
void finalize_catalog(const HopfAlgebra& H, IrrepCatalog& cat) {
  if (!H.G) throw std::runtime_error("catalog requires a balancing element");
  const unsigned n = H.dim;

  // Entry 0 must be the trivial representation (the counit).
  const IrrepEntry& t0 = cat.entries.at(0);
  if (t0.dim != 1) throw std::runtime_error("catalog entry 0 is not one-dimensional");
  for (unsigned i = 0; i < n; ++i)
    if (t0.action[i].at(0, 0) != H.counit[i])
      throw std::runtime_error("catalog entry 0 does not act by the counit");

  for (const IrrepEntry& e : cat.entries) {
    if (e.action.size() != n) throw std::runtime_error("catalog entry " + e.label + ": wrong arity");
    // The unit must act as the identity; together with multiplicativity on
    // (generator, basis) pairs this extends to all products by induction,
    // because the basis consists of left-normed words in the generating set
    // (or the generating set is the whole basis).
    Matrix unitM(e.dim, e.dim);
    for (unsigned i = 0; i < n; ++i)
      if (!H.unit[i].is_zero()) unitM = unitM + e.action[i].scaled(H.unit[i]);
    if (unitM != Matrix::identity(e.dim))
      throw std::runtime_error("catalog entry " + e.label + ": unit does not act as identity");
    for (unsigned g : H.generating_indices())
      for (unsigned j = 0; j < n; ++j) {
        Matrix lhs = e.action[g] * e.action[j];
        Matrix rhs(e.dim, e.dim);
        for (const auto& [t, c] : H.mul[size_t(g) * n + j]) rhs = rhs + e.action[t].scaled(c);
        if (lhs != rhs)
          throw std::runtime_error("catalog entry " + e.label +
                                   ": action is not an algebra homomorphism at (" + H.labels[g] +
                                   ", " + H.labels[j] + ")");
      }
  }

  // Quantum dimensions: traces of the balancing element.
  cat.quantumDims.clear();
  cat.globalDimSq = Cyclotomic::zero();
  for (unsigned j = 0; j < cat.entries.size(); ++j) {
    Cyclotomic d = mat_trace(cat.act(j, *H.G));
    if (d.is_zero())
      throw std::runtime_error("catalog entry " + cat.entries[j].label +
                               " has zero quantum dimension");
    cat.globalDimSq += d * d;
    cat.quantumDims.push_back(std::move(d));
  }
  if (cat.quantumDims[0] != Cyclotomic::one())
    throw std::runtime_error("trivial entry has quantum dimension != 1");
  if (cat.globalDim * cat.globalDim != cat.globalDimSq || cat.globalDim.is_zero())
    throw std::runtime_error("global dimension does not square to sum of d(j)^2");

  // Dual permutation: V_k^* is the entry whose character equals chi_k o S.
  std::vector<std::vector<Cyclotomic>> chars(cat.entries.size());
  for (unsigned k = 0; k < cat.entries.size(); ++k) {
    chars[k].resize(n);
    for (unsigned i = 0; i < n; ++i) chars[k][i] = mat_trace(cat.entries[k].action[i]);
  }
  cat.dualIndex.assign(cat.entries.size(), 0);
  for (unsigned k = 0; k < cat.entries.size(); ++k) {
    std::vector<Cyclotomic> dual(n);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned t = 0; t < n; ++t) {
        const Cyclotomic& s = H.antipode.at(t, i);
        if (!s.is_zero()) dual[i] += s * chars[k][t];
      }
    }
    int found = -1;
    for (unsigned m = 0; m < cat.entries.size(); ++m)
      if (chars[m] == dual) {
        if (found >= 0) throw std::runtime_error("dual of " + cat.entries[k].label + " ambiguous");
        found = int(m);
      }
    if (found < 0)
      throw std::runtime_error("dual of " + cat.entries[k].label + " not in the catalog");
    cat.dualIndex[k] = unsigned(found);
  }
  for (unsigned k = 0; k < cat.entries.size(); ++k) {
    if (cat.dualIndex[cat.dualIndex[k]] != k)
      throw std::runtime_error("dual permutation is not an involution");
    if (cat.quantumDims[cat.dualIndex[k]] != cat.quantumDims[k])
      throw std::runtime_error("quantum dimension differs from that of the dual");
  }
}

}  // namespace

Matrix IrrepCatalog::act(unsigned j, const Elem& x) const {
  const IrrepEntry& e = entries.at(j);
  Matrix out(e.dim, e.dim);
  for (unsigned i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + e.action[i].scaled(x[i]);
  return out;
}

Cyclotomic IrrepCatalog::character(unsigned j, unsigned i) const {
  return mat_trace(entries.at(j).action.at(i));
}

IrrepCatalog irrep_catalog(const HopfAlgebra& H) {
  IrrepCatalog cat;
  if (H.family == "trivial") {
    build_trivial(H, cat);
  } else if (H.family == "group") {
    const unsigned n = unsigned(H.familyParam);
    if (H.mul == group_algebra(FiniteGroupTable::cyclic(n)).mul)
      build_cyclic_group(H, cat, n);
    else if (n == 6 && H.mul == group_algebra(FiniteGroupTable::symmetric3()).mul)
      build_s3_group(H, cat);
    else
      throw std::invalid_argument("no built-in character table for this group algebra");
  } else if (H.family == "double") {
    const unsigned n = unsigned(H.familyParam);
    if (H.mul == drinfeld_double(FiniteGroupTable::cyclic(n)).mul)
      build_cyclic_double(H, cat, n);
    else
      throw std::invalid_argument("no catalog for doubles of nonabelian groups");
  } else if (H.family == "uq_sl2") {
    build_uq(H, cat, H.familyParam);
  } else {
    throw std::invalid_argument("no representation catalog for algebra family '" + H.family + "'");
  }
  finalize_catalog(H, cat);
  return cat;
}

bool is_semisimple(const HopfAlgebra& H, const IntegralSet& I) {
  return !H.form_on(I.muR, H.unit).is_zero();
}

CentralElement compute_Q(const HopfAlgebra& H, const IrrepCatalog& cat, const IntegralSet& I) {
  const unsigned n = H.dim;
  // Transposed Gram matrix of the right-integral form: row y, column i holds
  // mu^R(e_i e_y). Invertibility is the exact nondegeneracy check.
  Matrix Bt(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Cyclotomic s;
      for (const auto& [t, c] : H.mul[size_t(i) * n + j])
        if (!I.muR[t].is_zero()) s += c * I.muR[t];
      Bt.at(j, i) = std::move(s);
    }
  auto BtInv = inverse(Bt);
  if (!BtInv)
    throw std::runtime_error(
        "the bilinear form of the right integral is degenerate; "
        "the canonical central element is not determined");

  // phi(y) = D^{-1} sum_j d(j) tr(G^{-1} y on V_j). The inverse balancing is
  // the twist under which phi(xy) = phi(S^2(y) x), the exact symmetry class
  // of functionals mu^R(Q -) with Q central and S^2-invariant for this
  // integral convention; the centrality check below enforces it.
  if (!H.Ginv) throw std::runtime_error("ribbon data required to compute the central element");
  const Cyclotomic Dinv = cat.globalDim.inverse();
  Vec phi(n);
  for (unsigned k = 0; k < cat.entries.size(); ++k) {
    Matrix GM = cat.act(k, *H.Ginv);
    for (unsigned j = 0; j < n; ++j) {
      Cyclotomic t = trace_of_product(GM, cat.entries[k].action[j]);
      if (!t.is_zero()) phi[j] += cat.quantumDims[k] * t;
    }
  }
  for (auto& x : phi) x *= Dinv;

  Elem Q = BtInv->apply(phi);
  if (!H.is_central(Q))
    throw std::runtime_error("canonical central element is not central: catalog inconsistent");
  if (H.apply_antipode(Q) != Q)
    throw std::runtime_error("canonical central element is not antipode-invariant");
  if (!is_semisimple(H, I) && !H.elem_is_zero(H.mul_elems(Q, Q)))
    throw std::runtime_error("canonical central element of a non-semisimple algebra must square to zero");
  return {std::move(Q), true, true};
}

CentralElement compute_Q_semisimple(const HopfAlgebra& H, const IntegralSet& I) {
  if (!is_semisimple(H, I))
    throw std::invalid_argument(
        "algebra is not semisimple; compute the canonical central element from a catalog");
  return {H.unit, true, true};
}

}  // namespace q3inv
