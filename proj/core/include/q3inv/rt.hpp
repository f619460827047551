#pragma once

#include <q3inv/catalog.hpp>
#include <q3inv/diagram.hpp>
#include <q3inv/hennings.hpp>

#include <vector>

namespace q3inv {

// Value of a closed colored diagram, computed as a slice-by-slice matrix
// contraction: crossings act by the braiding (R for positive, R^{-1} for
// negative, composed with the strand transposition), extrema by the
// canonical pairings with a balancing correction on the clockwise-turning
// pair, twist slices by ribbon powers, and each component absorbs the gap
// between its declared framing and its blackboard writhe as a ribbon power.
// Downward strands carry the dual action x -> transpose(S(x) on V).
// coloring[c] names the catalog entry carried by component c.
Cyclotomic colored_invariant(const FramedLinkDiagram& L,
                             const std::vector<unsigned>& coloring,
                             const IrrepCatalog& cat, const HopfAlgebra& H);

// Same contraction with explicit entries (not necessarily irreducible; used
// for direct-sum additivity checks). Coupons are not supported.
Cyclotomic colored_invariant_entries(const FramedLinkDiagram& L,
                                     const std::vector<const IrrepEntry*>& colors,
                                     const HopfAlgebra& H);

// The trace-quotient invariant: sum over all colorings of
// D^{-N} * prod d(j_c) * I(L; j), with the same signature normalization as
// evaluate_tau, using this pipeline's own one-strand twist evaluations.
TauResult tau_rt(const FramedLinkDiagram& L, const IrrepCatalog& cat,
                 const HopfAlgebra& H, TauMode mode);

struct SMatrixResult {
  Matrix S;               // S[i][j] = quantum traces of the double braiding on (V_i, V_j*)
  size_t rank = 0;
  bool invertible = false;
  bool rowIdentityHolds = false;  // sum_j S[i][j*] d(j) = D^2 * [i == trivial]
};

// Builds the S-matrix from the monodromy element and verifies the row
// identity and invertibility.
SMatrixResult s_matrix(const IrrepCatalog& cat, const HopfAlgebra& H);

// Compares tau_rt against the integral pipeline with the canonical central
// element inserted on every component, in both raw and normalized form.
bool rt_equals_hennings_with_Q(const FramedLinkDiagram& L, const HopfAlgebra& H,
                               const IrrepCatalog& cat, const CentralElement& Q,
                               const IntegralSet& I);

// Checks I(L; sum of summands on `component`) == sum over the summands of
// the individually colored values, with the other components colored by
// `base`. The direct sum is realized block-diagonally.
bool jordan_holder_additivity(const FramedLinkDiagram& L, unsigned component,
                              const std::vector<unsigned>& summands,
                              const std::vector<unsigned>& base,
                              const IrrepCatalog& cat, const HopfAlgebra& H);

// Evaluates the split diagram as an open matrix contraction (the basepoint
// maximum of every component is left uncontracted) in the given faithful
// representation — nullptr selects the left regular representation — and
// compares the resulting per-component matrices against the representation
// applied to the contracted bead word. Equality validates that the bead
// calculus and the matrix calculus compute the same universal element.
bool fiber_crosscheck(const SplitDiagram& S, const HopfAlgebra& H,
                      const IrrepEntry* entry = nullptr);

}  // namespace q3inv
