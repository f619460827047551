#pragma once

#include <q3inv/diagram.hpp>
#include <q3inv/hopf.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace q3inv {

// Sign tying a component's declared framing integer to ribbon powers: a
// framing of f contributes v^(kFramingSign * f) once the blackboard writhe
// is discounted. Pinned behaviorally (explicit-kink, twist-slice, and
// framing-integer presentations of the same unknot must agree) and shared
// by the integral and trace-quotient pipelines.
inline constexpr int kFramingSign = -1;

// One bead on a split component, in collection order along the orientation.
struct BeadSlot {
  enum class Source { RLeg, CouponLeg, Fixed };
  Source source = Source::Fixed;
  unsigned feature = 0;   // crossing id or coupon id
  unsigned leg = 0;       // R legs: 1 or 2; coupon legs: 0-based position
  int sign = +1;          // crossing sign for R legs
  Elem value;             // Fixed beads (balance powers, twists, insertions)
  int antipodePower = 0;  // antipode applications when the bead is collected
};

struct BeadPlan {
  unsigned componentCount = 0;
  std::vector<std::vector<BeadSlot>> components;
  Cyclotomic scalar = Cyclotomic::one();  // factors from width-0 coupons
  std::vector<unsigned> couponWidths;     // by coupon id
  // Term table per coupon id: the legs of the iterated comultiplication of
  // the cointegral, materialized at decoration time.
  std::vector<std::vector<std::pair<TensorElement::Index, Cyclotomic>>> couponTerms;
  unsigned crossingCount = 0;
  int sigPlus = 0, sigMinus = 0;
};

// Reads beads off a split diagram.  Crossing legs reference the braiding
// element (the over strand takes the first leg, antipode-twisted at negative
// crossings); twist slices deposit ribbon powers; coupons deposit the legs
// of the iterated comultiplication of the two-sided cointegral; every bead
// is slid to the basepoint, gaining one antipode power per half-turn of
// strand crossed.  Per component, the gap between its declared framing and
// its blackboard writhe is closed by a ribbon-power bead, and the bare
// curve's winding is unwound by a single grouplike power G^(-r), where r is
// the curve's rotation number measured against the plainly embedded circle.
// Requires derived ribbon data; the integral set is needed only when coupons
// are present.
BeadPlan decorate(const SplitDiagram& S, const HopfAlgebra& H,
                  const IntegralSet* I = nullptr);

// Adds one bead at the basepoint of the chosen component. Rejects elements
// that are not verified central and antipode-invariant.
void insert_central(BeadPlan& plan, const HopfAlgebra& H, const CentralElement& c,
                    unsigned component = 0);

// Sums over all braiding/coupon term assignments, multiplying each
// component's beads along its orientation into one algebra element, and
// returns the tensor over components. Coadjoint-invariant for closed links.
TensorElement contract(const BeadPlan& plan, const HopfAlgebra& H);

enum class TauMode { Raw, Normalized };

struct TauResult {
  Cyclotomic raw;
  std::optional<Cyclotomic> normalized;
  int sigPlus = 0, sigMinus = 0;
  unsigned componentCount = 0;
};

// Applies the right integral to every leg; in Normalized mode divides by
// the one-strand twist evaluations raised to the signature counts, refusing
// (with a diagnosis) when either twist evaluation vanishes.
TauResult evaluate_tau(const HopfAlgebra& H, const IntegralSet& I,
                       const TensorElement& intI, std::pair<int, int> sig,
                       TauMode mode);

// Full pipeline: split, decorate, optionally insert a central bead on
// component 0, contract, evaluate.
TauResult hennings_invariant(const HopfAlgebra& H, const IntegralSet& I,
                             const FramedLinkDiagram& L, TauMode mode,
                             const CentralElement* inserted = nullptr);

// Coupon presentations are admitted only when the cointegral is two-sided
// (equivalently, the comodulus is trivial); verifies that, then evaluates.
TauResult evaluate_coupon_presentation(const HopfAlgebra& H, const IntegralSet& I,
                                       const FramedLinkDiagram& L, TauMode mode);

}  // namespace q3inv
