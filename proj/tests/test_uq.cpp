#include <doctest.h>

#include <q3inv/uq_sl2.hpp>
#include <q3inv/zoo.hpp>

using namespace q3inv;

namespace {

Cyclotomic Q(long n) { return Cyclotomic::integer(n); }

unsigned pbw(long p, long a, long b, long c) {
  return unsigned((a * p + b) * p + ((c % p + p) % p));
}

bool elem_eq(const Elem& x, const Elem& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("pbw relations at order three") {
  const long p = 3;
  HopfAlgebra H = uq_sl2(p);
  CHECK(H.dim == 27);
  CHECK(H.labels[0] == "1");
  Cyclotomic q = Cyclotomic::root_of_unity(p);

  Elem E = H.basis_elem(pbw(p, 1, 0, 0));
  Elem F = H.basis_elem(pbw(p, 0, 1, 0));
  Elem K = H.basis_elem(pbw(p, 0, 0, 1));
  Elem Kinv = H.basis_elem(pbw(p, 0, 0, p - 1));

  // K E = q^2 E K
  Elem ke = H.mul_elems(K, E);
  Elem ek = H.mul_elems(E, K);
  Elem ek_scaled(ek);
  for (auto& c : ek_scaled) c *= q * q;
  CHECK(elem_eq(ke, ek_scaled));

  // [E, F] = K - K^{-1}
  Elem comm = H.mul_elems(E, F);
  Elem fe = H.mul_elems(F, E);
  for (unsigned i = 0; i < H.dim; ++i) comm[i] -= fe[i];
  Elem rhs = H.zero_elem();
  rhs[pbw(p, 0, 0, 1)] = Q(1);
  rhs[pbw(p, 0, 0, p - 1)] = Q(-1);
  CHECK(elem_eq(comm, rhs));

  // Nilpotency and K-order.
  CHECK(H.elem_is_zero(H.pow_elem(E, p)));
  CHECK(H.elem_is_zero(H.pow_elem(F, p)));
  CHECK(elem_eq(H.pow_elem(K, p), H.unit));
  CHECK(elem_eq(H.mul_elems(K, Kinv), H.unit));

  // Antipode on generators: S(E) = -E K^{-1}, S(F) = -K F, S(K) = K^{-1}.
  Elem sE = H.apply_antipode(E);
  Elem expect_sE = H.zero_elem();
  expect_sE[pbw(p, 1, 0, p - 1)] = Q(-1);
  CHECK(elem_eq(sE, expect_sE));
  CHECK(elem_eq(H.apply_antipode(K), Kinv));
  Elem sF = H.apply_antipode(F);
  Elem expect_sF = H.zero_elem();
  expect_sF[pbw(p, 0, 1, 1)] = -(q.inverse() * q.inverse());
  CHECK(elem_eq(sF, expect_sF));

  // Counit kills E and F, fixes K.
  CHECK(H.counit_of(E).is_zero());
  CHECK(H.counit_of(F).is_zero());
  CHECK(H.counit_of(K) == Q(1));

  // S^2 = Ad(K) on a sample monomial.
  Elem m = H.basis_elem(pbw(p, 2, 1, 2));
  Elem s2 = H.apply_antipode(m, 2);
  Elem ad = H.mul_elems(K, H.mul_elems(m, Kinv));
  CHECK(elem_eq(s2, ad));
}

TEST_CASE("order-three member certifies with ribbon data") {
  HopfAlgebra H = uq_sl2(3);
  derive_ribbon_data(H);
  auto rep = certify_hopf(H);
  INFO(rep.summary());
  CHECK(rep.all_pass());

  // Balancing is K and the grouplike square is K^2.
  Elem K = H.basis_elem(pbw(3, 0, 0, 1));
  CHECK(elem_eq(*H.G, K));
  CHECK(elem_eq(*H.gElem, H.basis_elem(pbw(3, 0, 0, 2))));
}

TEST_CASE("order-three integrals have the expected support") {
  HopfAlgebra H = make_algebra("uq_sl2:3");
  const long p = 3;
  IntegralSet I = solve_integrals(H);

  // The integral form is supported on the unique top monomial line.
  unsigned nonzero = 0;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        if (!I.muR[pbw(p, a, b, c)].is_zero()) {
          ++nonzero;
          CHECK(a == p - 1);
          CHECK(b == p - 1);
        }
  CHECK(nonzero == 1);

  // The cointegral spreads the top monomial uniformly over the torus part.
  Cyclotomic top = I.lambda[pbw(p, p - 1, p - 1, 0)];
  CHECK_FALSE(top.is_zero());
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c) {
        if (a == p - 1 && b == p - 1)
          CHECK(I.lambda[pbw(p, a, b, c)] == top);
        else
          CHECK(I.lambda[pbw(p, a, b, c)].is_zero());
      }

  // Independent re-check of the defining equations over the whole basis.
  for (unsigned y = 0; y < H.dim; ++y) {
    Elem lhsR(H.dim), lhsL(H.dim);
    for (const auto& [j, k, c] : H.comul[y]) {
      if (!I.muR[j].is_zero()) lhsR[k] += c * I.muR[j];
      if (!I.muL[k].is_zero()) lhsL[j] += c * I.muL[k];
    }
    CHECK(elem_eq(lhsR, H.scalar_elem(I.muR[y])));
    CHECK(elem_eq(lhsL, H.scalar_elem(I.muL[y])));
    Elem yl = H.basis_mul(y, I.lambda);
    Elem el(I.lambda);
    for (auto& c : el) c *= H.counit[y];
    CHECK(elem_eq(yl, el));
  }
  CHECK(H.form_on(I.muR, I.lambda) == Q(1));
}

TEST_CASE("order-three member is modular") {
  HopfAlgebra H = make_algebra("uq_sl2:3");
  IntegralSet I = solve_integrals(H);
  auto mod = check_modularity(H, &I);
  CHECK(mod.modular);
  CHECK(mod.rank == H.dim);
  CHECK(mod.integralCriterionChecked);
  CHECK(mod.integralCriterion);
}

TEST_CASE("order-three center has dimension four") {
  HopfAlgebra H = make_algebra("uq_sl2:3");
  auto zb = center_basis(H);
  CHECK(zb.size() == 4);  // (3p - 1) / 2
  for (const auto& z : zb) CHECK(H.is_central(z));
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS((void)uq_sl2(4), std::invalid_argument);
  CHECK_THROWS_AS((void)uq_sl2(2), std::invalid_argument);
  CHECK_THROWS_AS((void)uq_sl2(9), std::invalid_argument);
  CHECK_THROWS_AS((void)uq_sl2(1), std::invalid_argument);
}
