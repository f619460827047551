#include <q3inv/hopf.hpp>

#include <stdexcept>

namespace q3inv {

namespace {

Elem antipode_column(const HopfAlgebra& H, unsigned j) {
  Elem s(H.dim);
  for (unsigned i = 0; i < H.dim; ++i) s[i] = H.antipode.at(i, j);
  return s;
}

bool elems_equal(const Elem& a, const Elem& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

[[noreturn]] void ribbon_fail(const std::string& identity) {
  throw std::runtime_error("ribbon identity failed: " + identity);
}

}  // namespace

void derive_ribbon_data(HopfAlgebra& H) {
  if (!H.R || !H.G) throw std::invalid_argument("derive_ribbon_data needs R and G");

  // u = sum S(f_t) e_t over the terms e_t ⊗ f_t of R.
  Elem u(H.dim);
  for (const auto& [idx, c] : H.R->terms()) {
    Elem sf = antipode_column(H, idx[1]);
    Elem prod = H.mul_basis(sf, idx[0]);
    for (unsigned k = 0; k < H.dim; ++k)
      if (!prod[k].is_zero()) u[k] += c * prod[k];
  }
  // Candidate u^{-1} = sum f_t S^2(e_t), verified two-sided; fall back to a
  // linear solve if the closed form does not apply.
  std::optional<Elem> uInv;
  {
    Elem cand(H.dim);
    for (const auto& [idx, c] : H.R->terms()) {
      Elem s2 = H.apply_antipode(H.basis_elem(idx[0]), 2);
      Elem prod = H.basis_mul(idx[1], s2);
      for (unsigned k = 0; k < H.dim; ++k)
        if (!prod[k].is_zero()) cand[k] += c * prod[k];
    }
    if (elems_equal(H.mul_elems(u, cand), H.unit) &&
        elems_equal(H.mul_elems(cand, u), H.unit))
      uInv = std::move(cand);
  }
  if (!uInv) uInv = H.invert_elem(u);
  if (!uInv) ribbon_fail("u invertible");

  // S anti-multiplicative: S(u)^{-1} = S(u^{-1}).
  Elem uHatElem = H.apply_antipode(*uInv);
  if (!elems_equal(H.mul_elems(H.apply_antipode(u), uHatElem), H.unit))
    ribbon_fail("S(u) invertible");
  std::optional<Elem> uHat = std::move(uHatElem);

  Elem g = H.mul_elems(u, *uHat);

  // For group-like balancing S(G) = G^{-1}; verify cheaply before falling
  // back to a linear solve.
  std::optional<Elem> Ginv = H.apply_antipode(*H.G);
  if (!elems_equal(H.mul_elems(*H.G, *Ginv), H.unit)) Ginv = H.invert_elem(*H.G);
  if (!Ginv) ribbon_fail("G invertible");
  if (!elems_equal(H.mul_elems(*Ginv, *H.G), H.unit)) ribbon_fail("G invertible");

  Elem v = H.mul_elems(u, *Ginv);
  Elem vInv = H.mul_elems(*H.G, *uInv);
  if (!elems_equal(H.mul_elems(v, vInv), H.unit)) ribbon_fail("v v^{-1} = 1");

  TensorElement M = H.mul_tensor(H.R->flipped(), *H.R);

  // Pairing form: antipode applied on the second leg of the monodromy.
  TensorElement omega(2);
  for (const auto& [idx, c] : M.terms()) {
    for (unsigned i = 0; i < H.dim; ++i)
      if (!H.antipode.at(i, idx[1]).is_zero())
        omega.add({idx[0], i}, c * H.antipode.at(i, idx[1]));
  }

  // R^{-1} = (S ⊗ id)R, verified below by multiplying back.
  TensorElement rinv(2);
  for (const auto& [idx, c] : H.R->terms()) {
    for (unsigned i = 0; i < H.dim; ++i)
      if (!H.antipode.at(i, idx[0]).is_zero())
        rinv.add({i, idx[1]}, c * H.antipode.at(i, idx[0]));
  }

  H.u = std::move(u);
  H.uInv = std::move(*uInv);
  H.uHat = std::move(*uHat);
  H.gElem = std::move(g);
  H.Ginv = std::move(*Ginv);
  H.v = std::move(v);
  H.vInv = std::move(vInv);
  H.monodromy = std::move(M);
  H.omega = std::move(omega);
  H.Rinv = std::move(rinv);

  // --- exact verification ---
  TensorElement unit2 =
      TensorElement::tensor_product(H.elem_to_tensor(H.unit), H.elem_to_tensor(H.unit));
  if (H.mul_tensor(*H.R, *H.Rinv) != unit2) ribbon_fail("R (S⊗id)R = 1⊗1");

  Elem G2 = H.mul_elems(*H.G, *H.G);
  if (!elems_equal(G2, *H.gElem)) ribbon_fail("G^2 = u S(u)^{-1}");
  if (!H.is_central(*H.v)) ribbon_fail("v central");
  if (!elems_equal(H.apply_antipode(*H.v), *H.v)) ribbon_fail("S(v) = v");
  if (H.counit_of(*H.v) != Cyclotomic::one()) ribbon_fail("eps(v) = 1");

  std::string w;
  if (!monodromy_factorization_check(H, w))
    ribbon_fail("monodromy = (v⊗v)Delta(v^{-1}) " + w);
}

bool monodromy_factorization_check(const HopfAlgebra& H, std::string& witness) {
  if (!H.monodromy || !H.vInv) {
    witness = "missing ribbon data";
    return false;
  }
  const unsigned n = H.dim;
  Matrix L = H.left_mult_matrix(*H.vInv);
  Matrix M(n, n);
  for (const auto& [idx, c] : H.monodromy->terms()) M.at(idx[0], idx[1]) = c;
  Matrix lhs = L * M * L.transpose();
  Matrix rhs(n, n);
  TensorElement dv = H.comul_of(*H.vInv);
  for (const auto& [idx, c] : dv.terms()) rhs.at(idx[0], idx[1]) = c;
  if (lhs != rhs) {
    witness = "matrix form mismatch";
    return false;
  }
  return true;
}

ModularityResult check_modularity(const HopfAlgebra& H, const IntegralSet* integrals) {
  if (!H.omega) throw std::invalid_argument("check_modularity needs omega (derive_ribbon_data)");
  ModularityResult res;
  Matrix W(H.dim, H.dim);
  for (const auto& [idx, c] : H.omega->terms()) W.at(idx[0], idx[1]) = c;
  res.rank = rank(W);
  res.modular = (res.rank == H.dim);
  if (integrals) {
    res.integralCriterionChecked = true;
    Elem t(H.dim);
    for (const auto& [idx, c] : H.omega->terms())
      if (!integrals->muR[idx[1]].is_zero()) t[idx[0]] += c * integrals->muR[idx[1]];
    // t must be a nonzero multiple of lambda.
    unsigned pivot = H.dim;
    for (unsigned i = 0; i < H.dim; ++i)
      if (!integrals->lambda[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == H.dim || t[pivot].is_zero()) {
      res.integralCriterion = false;
    } else {
      Cyclotomic ratio = t[pivot] / integrals->lambda[pivot];
      res.integralCriterion = true;
      for (unsigned i = 0; i < H.dim; ++i)
        if (t[i] != ratio * integrals->lambda[i]) {
          res.integralCriterion = false;
          break;
        }
    }
  }
  return res;
}

}  // namespace q3inv
