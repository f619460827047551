#pragma once

#include <q3inv/hopf.hpp>

#include <string>
#include <vector>

namespace q3inv {

struct FiniteGroupTable {
  unsigned order = 0;
  std::vector<unsigned> mulTable;  // product of g and h at [g*order + h]
  std::vector<unsigned> invTable;
  unsigned identity = 0;
  std::vector<std::string> names;
  std::vector<unsigned> generators;

  unsigned mul(unsigned a, unsigned b) const { return mulTable[a * order + b]; }
  unsigned inv(unsigned a) const { return invTable[a]; }
  bool valid() const;

  static FiniteGroupTable cyclic(unsigned n);
  static FiniteGroupTable symmetric3();
};

// k[G]: group-likes, S(g) = g^{-1}, R = 1⊗1, balancing 1.
HopfAlgebra group_algebra(const FiniteGroupTable& G);

// C(G): functions on G with pointwise product; no quasitriangular data.
HopfAlgebra function_algebra(const FiniteGroupTable& G);

// D(G): the double on basis (delta_g ⊗ x) with the smash-product structure
// and the canonical R built from the two dual bases; balancing 1.
HopfAlgebra drinfeld_double(const FiniteGroupTable& G);

HopfAlgebra trivial_algebra();

// Named registry used by the CLI: "group:Z<n>", "group:S3", "double:Z<n>",
// "double:S3", "uq_sl2:<p>", "trivial". Ribbon data is derived and verified.
HopfAlgebra make_algebra(const std::string& name);
std::vector<std::string> algebra_registry();

}  // namespace q3inv
