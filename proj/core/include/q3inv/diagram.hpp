#pragma once

#include <q3inv/linalg.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace q3inv {

// One elementary slice of a planar diagram: identity strands everywhere
// except a single feature at a stated position. Slices compose bottom to top.
struct Slice {
  enum class Kind { Cup, Cap, CrossPos, CrossNeg, Twist, Coupon };
  Kind kind = Kind::Cup;
  unsigned pos = 0;  // leftmost strand position occupied by the feature
  int param = 0;     // Twist: signed number of full twists; Coupon: width >= 0

  static Slice cup(unsigned p) { return {Kind::Cup, p, 0}; }
  static Slice cap(unsigned p) { return {Kind::Cap, p, 0}; }
  static Slice cross(unsigned p, int sign) {
    return {sign > 0 ? Kind::CrossPos : Kind::CrossNeg, p, 0};
  }
  static Slice twist(unsigned p, int t) { return {Kind::Twist, p, t}; }
  static Slice coupon(unsigned p, int width) { return {Kind::Coupon, p, width}; }
};

struct BraidData {
  unsigned strands = 0;
  std::vector<int> word;  // letter +-i acts on strand slots (i-1, i), i >= 1
};

// A closed framed-link diagram. Framings are carried as integers per
// component (components ordered by their first maximum in slice order, which
// for braid closures is the order of smallest braid slot); explicit curls or
// twist slices in the word contribute to the blackboard writhe and are
// reconciled against the framing integers by the evaluation engine.
struct FramedLinkDiagram {
  std::vector<Slice> slices;
  std::vector<long> framings;
  std::vector<bool> reversedComponents;  // empty = all canonical orientations
  std::optional<BraidData> braid;        // present for braid-closure input
};

// One event met while walking a component along its orientation.
struct TraceSite {
  enum class Kind { Max, Min, CrossLeg, TwistSite, CouponLeg };
  Kind kind = Kind::Max;
  unsigned feature = 0;      // extremum: slice index; otherwise crossing/twist/coupon id
  int sign = 0;              // crossing sign or twist amount
  bool over = false;         // crossing legs: true when this strand passes over
  bool leftToRight = false;  // extrema: direction the turn is traversed
  bool downward = true;      // travel direction at crossing/twist/coupon sites
  unsigned leg = 0;          // coupon leg index, counted from the left
};

struct ComponentTrace {
  std::vector<TraceSite> sites;     // cyclic, first entry is the seed maximum
  std::vector<unsigned> capSlices;  // slice indices of maxima, traversal order
  long selfWrithe = 0;              // oriented self-crossing signs plus twists
};

struct TraceResult {
  unsigned componentCount = 0;
  std::vector<ComponentTrace> components;
  std::vector<std::vector<long>> linkingMatrix;  // framings on the diagonal
  int sigPlus = 0, sigMinus = 0;                 // signature of the linking matrix
  std::vector<unsigned> strandCounts;            // strands per level
  unsigned crossingCount = 0;
  std::vector<int> crossingSigns;                // by crossing id (slice order)
  std::vector<unsigned> couponWidths;            // by coupon id (slice order)
  // Strand direction and owning component at [level][position].
  std::vector<std::vector<bool>> upwardAt;
  std::vector<std::vector<unsigned>> componentAt;
};

// Type-checks the slice word (throws std::invalid_argument with a diagnosis
// for ill-formed words), traces the components, and derives linking data.
TraceResult trace_diagram(const FramedLinkDiagram& L);

std::vector<std::vector<long>> linking_matrix(const FramedLinkDiagram& L);
// (count of positive eigenvalues, count of negative eigenvalues), exactly.
std::pair<int, int> signature(const FramedLinkDiagram& L);

// Braid closure: the braid block descends on the right, the returns ascend
// on the left, joined by nested cups below and nested caps above. Framings
// are listed per component, components ordered by smallest braid slot.
FramedLinkDiagram from_braid_closure(const std::vector<int>& word, unsigned strands,
                                     const std::vector<long>& framings);

// A closed diagram with one chosen cut site (a maximum) per component.
struct SplitDiagram {
  FramedLinkDiagram base;
  std::vector<unsigned> basepoints;  // per component: slice index of the cut maximum
};

// Canonical split: cut every component at its seed maximum. Deterministic.
SplitDiagram split(const FramedLinkDiagram& L);
// Split at chosen maxima (one slice index per component, each a maximum of
// that component); used by the basepoint-rotation property tests.
SplitDiagram split_at(const FramedLinkDiagram& L, const std::vector<unsigned>& capChoices);

struct MoveSet {
  std::vector<FramedLinkDiagram> conjugates;      // braid conjugations
  std::vector<FramedLinkDiagram> stabilizations;  // one extra strand, +- kink
  // (original, slid partner) pairs for the curated band-sum shapes.
  std::vector<std::pair<FramedLinkDiagram, FramedLinkDiagram>> slidePairs;
  std::vector<FramedLinkDiagram> etaPartners;     // disjoint two-component partners
};

// Emits equivalent presentations of the same framed surgery data. Requires
// braid input for the conjugation/stabilization families.
MoveSet move_generators(const FramedLinkDiagram& L);

FramedLinkDiagram disjoint_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b);

// Fixture library.
FramedLinkDiagram fixture_empty();
FramedLinkDiagram fixture_unknot(long f);
FramedLinkDiagram fixture_hopf(long f1, long f2);
FramedLinkDiagram fixture_trefoil(long f);
FramedLinkDiagram fixture_lens(long k);  // k-framed unknot
// Unknot whose +-1 framing is presented as an explicit kink (cup, crossing,
// cap) rather than as a framing integer.
FramedLinkDiagram fixture_unknot_curl(int sign);
// Unknot whose framing is presented as a twist slice.
FramedLinkDiagram fixture_unknot_twist(int t);
// A lone width-0 coupon: the bridge presentation with no surgery circles.
FramedLinkDiagram fixture_s1xs2_coupon();
// A width-1 coupon threaded on a 0-framed unknot.
FramedLinkDiagram fixture_coupon_on_unknot();

}  // namespace q3inv
