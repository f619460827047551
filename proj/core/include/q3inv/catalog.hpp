#pragma once

#include <q3inv/hopf.hpp>

#include <string>
#include <vector>

namespace q3inv {

// One irreducible representation: the matrix of every basis element on V.
struct IrrepEntry {
  std::string label;
  unsigned dim = 0;
  std::vector<Matrix> action;  // action[i] = matrix of basis element e_i
};

// Catalog of the irreducible representations with nonzero quantum dimension
// (the colors available to the trace-quotient invariant). Entry 0 is always
// the trivial representation.
struct IrrepCatalog {
  std::vector<IrrepEntry> entries;
  std::vector<Cyclotomic> quantumDims;  // d(j) = trace of the balancing on V_j
  std::vector<unsigned> dualIndex;      // j -> catalog index of V_j^*
  Cyclotomic globalDimSq;               // sum_j d(j)^2
  Cyclotomic globalDim;                 // a fixed square root of globalDimSq

  // Matrix of an arbitrary element on entry j.
  Matrix act(unsigned j, const Elem& x) const;
  // Character chi_j(e_i).
  Cyclotomic character(unsigned j, unsigned i) const;
};

// Builds the catalog for a registry algebra. Supported: "trivial", group
// algebras of Z/n and S3, doubles of cyclic groups, and uq_sl2 (where the
// entries are the highest-weight modules of dimensions 1..p-1; the
// dimension-p module has quantum dimension zero and is excluded). Every
// entry is verified to be an algebra homomorphism against the structure
// constants, the trivial entry is verified to act by the counit, the chosen
// globalDim is verified to square to sum d(j)^2, and duals are resolved by
// matching characters against chi composed with the antipode. Throws
// std::invalid_argument for algebras without a shipped catalog (doubles of
// nonabelian groups) and std::runtime_error on any verification failure.
IrrepCatalog irrep_catalog(const HopfAlgebra& H);

// True exactly when the algebra is semisimple, witnessed by the right
// integral not vanishing on the unit (equivalent in characteristic zero).
bool is_semisimple(const HopfAlgebra& H, const IntegralSet& I);

// The canonical central element Q, defined by
//   mu^R(Q y) = D^{-1} sum_j d(j) tr(G^{-1} y on V_j)   for every basis y
// (the balancing twist direction matching this library's right-integral
// convention; for the members with G = 1 the twist is invisible).
// The bilinear form (a,b) -> mu^R(ab) is checked to be nondegenerate by
// exact rank before solving; the solution is verified central and
// antipode-invariant, and for non-semisimple algebras Q^2 = 0 is verified.
// Inserting Q on every surgery component converts the integral pipeline
// into the trace-quotient pipeline.
CentralElement compute_Q(const HopfAlgebra& H, const IrrepCatalog& cat,
                         const IntegralSet& I);

// Shortcut for semisimple algebras without a shipped catalog: verifies
// semisimplicity and returns the unit. For the modular semisimple members
// this agrees exactly with compute_Q (covered by the test suite). Throws
// std::invalid_argument when the algebra is not semisimple.
CentralElement compute_Q_semisimple(const HopfAlgebra& H, const IntegralSet& I);

}  // namespace q3inv
