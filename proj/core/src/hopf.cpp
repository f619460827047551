#include <q3inv/hopf.hpp>

#include <sstream>
#include <stdexcept>

namespace q3inv {

namespace {

std::string idx_name(const HopfAlgebra& H, unsigned i) {
  if (i < H.labels.size() && !H.labels[i].empty()) return H.labels[i];
  std::ostringstream os;
  os << "e" << i;
  return os.str();
}

std::string witness1(const HopfAlgebra& H, unsigned i) { return idx_name(H, i); }

std::string witness2(const HopfAlgebra& H, unsigned i, unsigned j) {
  return "(" + idx_name(H, i) + ", " + idx_name(H, j) + ")";
}

std::string witness3(const HopfAlgebra& H, unsigned i, unsigned j, unsigned k) {
  return "(" + idx_name(H, i) + ", " + idx_name(H, j) + ", " + idx_name(H, k) + ")";
}

}  // namespace

Elem HopfAlgebra::basis_elem(unsigned i) const {
  Elem e(dim);
  e[i] = Cyclotomic::one();
  return e;
}

Elem HopfAlgebra::scalar_elem(const Cyclotomic& c) const {
  Elem e(dim);
  for (unsigned i = 0; i < dim; ++i)
    if (!unit[i].is_zero()) e[i] = unit[i] * c;
  return e;
}

bool HopfAlgebra::elem_is_zero(const Elem& x) const {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

Elem HopfAlgebra::mul_elems(const Elem& a, const Elem& b) const {
  Elem r(dim);
  for (unsigned i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Cyclotomic c = a[i] * b[j];
      for (const auto& [k, s] : mul[i * dim + j]) r[k] += c * s;
    }
  }
  return r;
}

Elem HopfAlgebra::mul_basis(const Elem& a, unsigned j) const {
  Elem r(dim);
  for (unsigned i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [k, s] : mul[i * dim + j]) r[k] += a[i] * s;
  }
  return r;
}

Elem HopfAlgebra::basis_mul(unsigned i, const Elem& b) const {
  Elem r(dim);
  for (unsigned j = 0; j < dim; ++j) {
    if (b[j].is_zero()) continue;
    for (const auto& [k, s] : mul[i * dim + j]) r[k] += b[j] * s;
  }
  return r;
}

Elem HopfAlgebra::pow_elem(const Elem& a, long e) const {
  if (e < 0) {
    auto inv = invert_elem(a);
    if (!inv) throw std::domain_error("negative power of a non-invertible element");
    return pow_elem(*inv, -e);
  }
  Elem acc = unit, base = a;
  while (e) {
    if (e & 1) acc = mul_elems(acc, base);
    e >>= 1;
    if (e) base = mul_elems(base, base);
  }
  return acc;
}

const Matrix& HopfAlgebra::antipode_inverse() const {
  if (!antipodeInv_) {
    auto inv = inverse(antipode);
    if (!inv) throw std::runtime_error("antipode matrix is singular");
    antipodeInv_ = std::move(*inv);
  }
  return *antipodeInv_;
}

Elem HopfAlgebra::apply_antipode(const Elem& x, long power) const {
  Elem r = x;
  for (long t = 0; t < power; ++t) r = antipode.apply(r);
  for (long t = 0; t > power; --t) r = antipode_inverse().apply(r);
  return r;
}

Cyclotomic HopfAlgebra::counit_of(const Elem& x) const { return form_on(counit, x); }

Cyclotomic HopfAlgebra::form_on(const LinearForm& f, const Elem& x) const {
  Cyclotomic r = Cyclotomic::zero();
  for (unsigned i = 0; i < dim; ++i)
    if (!f[i].is_zero() && !x[i].is_zero()) r += f[i] * x[i];
  return r;
}

TensorElement HopfAlgebra::comul_of(const Elem& x) const {
  TensorElement t(2);
  for (unsigned i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [a, b, c] : comul[i]) t.add({a, b}, x[i] * c);
  }
  return t;
}

TensorElement HopfAlgebra::comul_op_of(const Elem& x) const { return comul_of(x).flipped(); }

TensorElement HopfAlgebra::iterated_comul(const Elem& x, unsigned legs) const {
  if (legs == 0) throw std::invalid_argument("iterated_comul needs at least one leg");
  TensorElement t = elem_to_tensor(x);
  while (t.arity() < legs) {
    TensorElement next(t.arity() + 1);
    TensorElement::Index idx(t.arity() + 1);
    for (const auto& [ix, c] : t.terms()) {
      std::copy(ix.begin() + 1, ix.end(), idx.begin() + 2);
      for (const auto& [a, b, c2] : comul[ix[0]]) {
        idx[0] = a;
        idx[1] = b;
        next.add(idx, c * c2);
      }
    }
    t = std::move(next);
  }
  return t;
}

bool HopfAlgebra::is_central(const Elem& x) const {
  for (unsigned b = 0; b < dim; ++b) {
    Elem xb = mul_basis(x, b);
    Elem bx = basis_mul(b, x);
    for (unsigned k = 0; k < dim; ++k)
      if (xb[k] != bx[k]) return false;
  }
  return true;
}

std::vector<unsigned> HopfAlgebra::generating_indices() const {
  if (!generators.empty()) return generators;
  std::vector<unsigned> all(dim);
  for (unsigned i = 0; i < dim; ++i) all[i] = i;
  return all;
}

std::optional<Elem> HopfAlgebra::invert_elem(const Elem& x) const {
  Matrix L = left_mult_matrix(x);
  auto y = solve(L, unit);
  if (!y) return std::nullopt;
  // x y = 1 by construction; verify y x = 1 as well.
  Elem yx = mul_elems(*y, x);
  for (unsigned k = 0; k < dim; ++k)
    if (yx[k] != unit[k]) return std::nullopt;
  return y;
}

Matrix HopfAlgebra::left_mult_matrix(const Elem& x) const {
  Matrix L(dim, dim);
  for (unsigned j = 0; j < dim; ++j) {
    Elem col(dim);
    for (unsigned i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, s] : mul[i * dim + j]) col[k] += x[i] * s;
    }
    for (unsigned k = 0; k < dim; ++k) L.at(k, j) = col[k];
  }
  return L;
}

Matrix HopfAlgebra::right_mult_matrix(const Elem& x) const {
  Matrix Rm(dim, dim);
  for (unsigned i = 0; i < dim; ++i) {
    Elem col(dim);
    for (unsigned j = 0; j < dim; ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [k, s] : mul[i * dim + j]) col[k] += x[j] * s;
    }
    for (unsigned k = 0; k < dim; ++k) Rm.at(k, i) = col[k];
  }
  return Rm;
}

TensorElement HopfAlgebra::mul_tensor(const TensorElement& a, const TensorElement& b) const {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor product arity mismatch");
  const unsigned k = a.arity();
  TensorElement r(k);
  std::vector<const std::vector<std::pair<unsigned, Cyclotomic>>*> legs(k);
  TensorElement::Index idx(k);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      for (unsigned t = 0; t < k; ++t) legs[t] = &mul[ia[t] * dim + ib[t]];
      // Cartesian accumulation over the per-leg product expansions.
      std::vector<size_t> pos(k, 0);
      bool any_empty = false;
      for (unsigned t = 0; t < k; ++t)
        if (legs[t]->empty()) any_empty = true;
      if (any_empty) continue;
      Cyclotomic base = ca * cb;
      while (true) {
        Cyclotomic c = base;
        for (unsigned t = 0; t < k; ++t) {
          idx[t] = (*legs[t])[pos[t]].first;
          c *= (*legs[t])[pos[t]].second;
        }
        r.add(idx, c);
        unsigned t = 0;
        while (t < k) {
          if (++pos[t] < legs[t]->size()) break;
          pos[t] = 0;
          ++t;
        }
        if (t == k) break;
      }
    }
  }
  return r;
}

TensorElement HopfAlgebra::elem_to_tensor(const Elem& x) const {
  TensorElement t(1);
  for (unsigned i = 0; i < dim; ++i)
    if (!x[i].is_zero()) t.add({i}, x[i]);
  return t;
}

Elem HopfAlgebra::tensor_to_elem(const TensorElement& t) const {
  if (t.arity() != 1) throw std::invalid_argument("tensor_to_elem needs arity 1");
  Elem x(dim);
  for (const auto& [idx, c] : t.terms()) x[idx[0]] = c;
  return x;
}

bool CertificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string CertificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.witness.empty()) os << " at " << c.witness;
    os << "\n";
  }
  return os.str();
}

namespace {

bool elems_equal(const Elem& a, const Elem& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

void check_shapes(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"structure shapes", true, ""};
  auto fail = [&](const std::string& w) {
    r.pass = false;
    if (r.witness.empty()) r.witness = w;
  };
  if (H.dim == 0) fail("dim = 0");
  if (H.mul.size() != size_t(H.dim) * H.dim) fail("mul table size");
  if (H.comul.size() != H.dim) fail("comul table size");
  if (H.unit.size() != H.dim) fail("unit size");
  if (H.counit.size() != H.dim) fail("counit size");
  if (H.antipode.rows != H.dim || H.antipode.cols != H.dim) fail("antipode shape");
  for (const auto& cell : H.mul)
    for (const auto& [k, c] : cell)
      if (k >= H.dim) fail("mul index range");
  for (const auto& cell : H.comul)
    for (const auto& [a, b, c] : cell)
      if (a >= H.dim || b >= H.dim) fail("comul index range");
  if (H.R && H.R->arity() != 2) fail("R arity");
  if (H.G && H.G->size() != H.dim) fail("G size");
  if (!r.pass) throw std::invalid_argument("malformed Hopf data: " + r.witness);
  rep.checks.push_back(std::move(r));
}

void check_associativity(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"associativity", true, ""};
  auto* fast = dynamic_cast<const CertifyHooks*>(H.hooks.get());
  if (fast) {
    std::string w;
    r.pass = fast->fast_associativity(H, w);
    r.witness = w;
    rep.checks.push_back(std::move(r));
    return;
  }
  for (unsigned i = 0; i < H.dim && r.pass; ++i) {
    for (unsigned j = 0; j < H.dim && r.pass; ++j) {
      Elem ij = H.basis_mul(i, H.basis_elem(j));
      for (unsigned k = 0; k < H.dim; ++k) {
        Elem lhs = H.mul_basis(ij, k);
        Elem rhs = H.basis_mul(i, H.basis_mul(j, H.basis_elem(k)));
        if (!elems_equal(lhs, rhs)) {
          r.pass = false;
          r.witness = witness3(H, i, j, k);
          break;
        }
      }
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_unit_laws(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"unit laws", true, ""};
  for (unsigned i = 0; i < H.dim; ++i) {
    Elem e = H.basis_elem(i);
    if (!elems_equal(H.mul_elems(H.unit, e), e) || !elems_equal(H.mul_elems(e, H.unit), e)) {
      r.pass = false;
      r.witness = witness1(H, i);
      break;
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_coassociativity(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"coassociativity", true, ""};
  for (unsigned i = 0; i < H.dim; ++i) {
    TensorElement lhs(3), rhs(3);
    for (const auto& [a, b, c] : H.comul[i]) {
      for (const auto& [x, y, c2] : H.comul[a]) lhs.add({x, y, b}, c * c2);
      for (const auto& [x, y, c2] : H.comul[b]) rhs.add({a, x, y}, c * c2);
    }
    if (lhs != rhs) {
      r.pass = false;
      r.witness = witness1(H, i);
      break;
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_counit_laws(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"counit laws", true, ""};
  for (unsigned i = 0; i < H.dim; ++i) {
    Elem left(H.dim), right(H.dim);
    for (const auto& [a, b, c] : H.comul[i]) {
      if (!H.counit[a].is_zero()) left[b] += c * H.counit[a];
      if (!H.counit[b].is_zero()) right[a] += c * H.counit[b];
    }
    Elem e = H.basis_elem(i);
    if (!elems_equal(left, e) || !elems_equal(right, e)) {
      r.pass = false;
      r.witness = witness1(H, i);
      break;
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_comul_multiplicative(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"comultiplication is an algebra map", true, ""};
  TensorElement unit2 = TensorElement::tensor_product(H.elem_to_tensor(H.unit),
                                                      H.elem_to_tensor(H.unit));
  if (H.comul_of(H.unit) != unit2) {
    r.pass = false;
    r.witness = "unit";
  }
  auto* fast = dynamic_cast<const CertifyHooks*>(H.hooks.get());
  if (r.pass && fast) {
    std::string w;
    r.pass = fast->fast_comul_multiplicative(H, w);
    r.witness = w;
    rep.checks.push_back(std::move(r));
    return;
  }
  for (unsigned i = 0; i < H.dim && r.pass; ++i) {
    TensorElement di = H.comul_of(H.basis_elem(i));
    for (unsigned j = 0; j < H.dim; ++j) {
      TensorElement lhs = H.comul_of(H.basis_mul(i, H.basis_elem(j)));
      TensorElement rhs = H.mul_tensor(di, H.comul_of(H.basis_elem(j)));
      if (lhs != rhs) {
        r.pass = false;
        r.witness = witness2(H, i, j);
        break;
      }
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_counit_multiplicative(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"counit is an algebra map", true, ""};
  if (H.counit_of(H.unit) != Cyclotomic::one()) {
    r.pass = false;
    r.witness = "unit";
  }
  for (unsigned i = 0; i < H.dim && r.pass; ++i) {
    for (unsigned j = 0; j < H.dim; ++j) {
      Cyclotomic lhs = H.counit_of(H.basis_mul(i, H.basis_elem(j)));
      if (lhs != H.counit[i] * H.counit[j]) {
        r.pass = false;
        r.witness = witness2(H, i, j);
        break;
      }
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_antipode(const HopfAlgebra& H, CertificationReport& rep) {
  CheckResult r{"antipode axiom", true, ""};
  for (unsigned i = 0; i < H.dim; ++i) {
    Elem left(H.dim), right(H.dim);
    for (const auto& [a, b, c] : H.comul[i]) {
      // m(S ⊗ id): S(e_a) e_b ; m(id ⊗ S): e_a S(e_b)
      for (unsigned s = 0; s < H.dim; ++s) {
        if (!H.antipode.at(s, a).is_zero()) {
          for (const auto& [k, m] : H.mul[s * H.dim + b]) left[k] += c * H.antipode.at(s, a) * m;
        }
        if (!H.antipode.at(s, b).is_zero()) {
          for (const auto& [k, m] : H.mul[a * H.dim + s]) right[k] += c * H.antipode.at(s, b) * m;
        }
      }
    }
    Elem target = H.scalar_elem(H.counit[i]);
    if (!elems_equal(left, target) || !elems_equal(right, target)) {
      r.pass = false;
      r.witness = witness1(H, i);
      break;
    }
  }
  rep.checks.push_back(std::move(r));
}

void check_quasitriangular(const HopfAlgebra& H, CertificationReport& rep) {
  const TensorElement& R = *H.R;
  {
    CheckResult r{"triangle (Delta ⊗ id)R = R13 R23", true, ""};
    TensorElement lhs(3), rhs(3);
    for (const auto& [idx, c] : R.terms())
      for (const auto& [a, b, c2] : H.comul[idx[0]]) lhs.add({a, b, idx[1]}, c * c2);
    for (const auto& [i1, c1] : R.terms())
      for (const auto& [i2, c2] : R.terms()) {
        // R13 has legs (i1[0], -, i1[1]); R23 has legs (-, i2[0], i2[1]).
        Cyclotomic c = c1 * c2;
        for (const auto& [k, m] : H.mul[i1[1] * H.dim + i2[1]])
          rhs.add({i1[0], i2[0], k}, c * m);
      }
    if (lhs != rhs) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"triangle (id ⊗ Delta)R = R13 R12", true, ""};
    TensorElement lhs(3), rhs(3);
    for (const auto& [idx, c] : R.terms())
      for (const auto& [a, b, c2] : H.comul[idx[1]]) lhs.add({idx[0], a, b}, c * c2);
    for (const auto& [i1, c1] : R.terms())
      for (const auto& [i2, c2] : R.terms()) {
        // R13 legs (i1[0], -, i1[1]); R12 legs (i2[0], i2[1], -).
        Cyclotomic c = c1 * c2;
        for (const auto& [k, m] : H.mul[i1[0] * H.dim + i2[0]])
          rhs.add({k, i2[1], i1[1]}, c * m);
      }
    if (lhs != rhs) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"R intertwines Delta with its opposite", true, ""};
    // Both sides are multiplicative in x, so the generating set suffices.
    for (unsigned x : H.generating_indices()) {
      TensorElement lhs = H.mul_tensor(R, H.comul_of(H.basis_elem(x)));
      TensorElement rhs = H.mul_tensor(H.comul_op_of(H.basis_elem(x)), R);
      if (lhs != rhs) {
        r.pass = false;
        r.witness = witness1(H, x);
        break;
      }
    }
    rep.checks.push_back(std::move(r));
  }
  if (H.Rinv) {
    CheckResult r{"R inverse", true, ""};
    TensorElement prod = H.mul_tensor(R, *H.Rinv);
    TensorElement unit2 =
        TensorElement::tensor_product(H.elem_to_tensor(H.unit), H.elem_to_tensor(H.unit));
    if (prod != unit2) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
}

void check_balancing(const HopfAlgebra& H, CertificationReport& rep) {
  const Elem& G = *H.G;
  {
    CheckResult r{"balancing is group-like", true, ""};
    TensorElement gg = TensorElement::tensor_product(H.elem_to_tensor(G), H.elem_to_tensor(G));
    if (H.comul_of(G) != gg || H.counit_of(G) != Cyclotomic::one()) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  auto Ginv = H.invert_elem(G);
  {
    CheckResult r{"S(G) = G^{-1}", true, ""};
    if (!Ginv) {
      r.pass = false;
      r.witness = "G not invertible";
    } else if (!elems_equal(H.apply_antipode(G), *Ginv)) {
      r.pass = false;
    }
    rep.checks.push_back(std::move(r));
  }
  if (Ginv) {
    CheckResult r{"Ad(G) = S^2", true, ""};
    for (unsigned x = 0; x < H.dim; ++x) {
      Elem conj = H.mul_elems(H.mul_elems(G, H.basis_elem(x)), *Ginv);
      Elem s2 = H.apply_antipode(H.basis_elem(x), 2);
      if (!elems_equal(conj, s2)) {
        r.pass = false;
        r.witness = witness1(H, x);
        break;
      }
    }
    rep.checks.push_back(std::move(r));
  }
}

void check_ribbon(const HopfAlgebra& H, CertificationReport& rep) {
  {
    CheckResult r{"ribbon element is central", true, ""};
    if (!H.is_central(*H.v)) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"S(v) = v", true, ""};
    if (!elems_equal(H.apply_antipode(*H.v), *H.v)) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"eps(v) = 1", true, ""};
    if (H.counit_of(*H.v) != Cyclotomic::one()) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"G^2 = u S(u)^{-1}", true, ""};
    Elem G2 = H.mul_elems(*H.G, *H.G);
    if (!elems_equal(G2, *H.gElem)) r.pass = false;
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"monodromy = (v ⊗ v) Delta(v^{-1})", true, ""};
    std::string w;
    r.pass = monodromy_factorization_check(H, w);
    if (!r.pass) r.witness = w;
    rep.checks.push_back(std::move(r));
  }
}

}  // namespace

CertificationReport certify_hopf(const HopfAlgebra& H) {
  CertificationReport rep;
  check_shapes(H, rep);
  check_associativity(H, rep);
  check_unit_laws(H, rep);
  check_coassociativity(H, rep);
  check_counit_laws(H, rep);
  check_comul_multiplicative(H, rep);
  check_counit_multiplicative(H, rep);
  check_antipode(H, rep);
  if (H.R) check_quasitriangular(H, rep);
  if (H.G) check_balancing(H, rep);
  if (H.v && H.vInv && H.gElem && H.monodromy && H.G) check_ribbon(H, rep);
  return rep;
}

}  // namespace q3inv
