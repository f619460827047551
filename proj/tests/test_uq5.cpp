#include <doctest.h>

#include <q3inv/uq_sl2.hpp>
#include <q3inv/zoo.hpp>

using namespace q3inv;

TEST_CASE("order-five member certifies with ribbon data") {
  HopfAlgebra H = make_algebra("uq_sl2:5");
  CHECK(H.dim == 125);
  auto rep = certify_hopf(H);
  INFO(rep.summary());
  CHECK(rep.all_pass());
}

TEST_CASE("order-five member is modular with matching integrals") {
  HopfAlgebra H = make_algebra("uq_sl2:5");
  IntegralSet I = solve_integrals(H);
  const long p = 5;
  unsigned nonzero = 0;
  for (unsigned i = 0; i < H.dim; ++i)
    if (!I.muR[i].is_zero()) {
      ++nonzero;
      CHECK(long(i) / (p * p) == p - 1);
      CHECK((long(i) / p) % p == p - 1);
    }
  CHECK(nonzero == 1);

  auto mod = check_modularity(H, &I);
  CHECK(mod.modular);
  CHECK(mod.rank == H.dim);
  CHECK(mod.integralCriterion);
}

TEST_CASE("order-five center has dimension seven") {
  HopfAlgebra H = make_algebra("uq_sl2:5");
  CHECK(center_basis(H).size() == 7);  // (3p - 1) / 2
}
