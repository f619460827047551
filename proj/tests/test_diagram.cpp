#include <doctest.h>

#include <q3inv/diagram.hpp>

#include <stdexcept>
#include <vector>

using namespace q3inv;

namespace {

std::vector<std::vector<long>> lk2(long a, long b, long c, long d) {
  return {{a, b}, {c, d}};
}

}  // namespace

TEST_CASE("braid closures of one strand present framed unknots") {
  for (long f : {-2L, -1L, 0L, 1L, 3L}) {
    FramedLinkDiagram L = fixture_unknot(f);
    TraceResult t = trace_diagram(L);
    CHECK(t.componentCount == 1);
    CHECK(t.crossingCount == 0);
    CHECK(t.linkingMatrix == std::vector<std::vector<long>>{{f}});
    CHECK(t.components[0].selfWrithe == 0);
    REQUIRE(t.components[0].sites.size() == 2);
    CHECK(t.components[0].sites[0].kind == TraceSite::Kind::Max);
    CHECK(t.components[0].sites[0].leftToRight);
    CHECK(t.components[0].sites[1].kind == TraceSite::Kind::Min);
    CHECK_FALSE(t.components[0].sites[1].leftToRight);
    CHECK(t.strandCounts == std::vector<unsigned>{0, 2, 0});
    CHECK(signature(L) == std::pair<int, int>(f > 0 ? 1 : 0, f < 0 ? 1 : 0));
  }
  CHECK(trace_diagram(fixture_empty()).componentCount == 0);
  CHECK(signature(fixture_empty()) == std::pair<int, int>(0, 0));
}

TEST_CASE("the two-crossing closure is the Hopf link") {
  FramedLinkDiagram L = fixture_hopf(0, 0);
  TraceResult t = trace_diagram(L);
  REQUIRE(t.componentCount == 2);
  CHECK(t.crossingCount == 2);
  CHECK(t.linkingMatrix == lk2(0, 1, 1, 0));
  CHECK(signature(L) == std::pair<int, int>(1, 1));

  // Both components descend through both crossings; the inner component
  // passes under the later crossing and over the earlier one.
  const auto& a = t.components[0].sites;
  REQUIRE(a.size() == 4);
  CHECK(a[0].kind == TraceSite::Kind::Max);
  CHECK(a[1].kind == TraceSite::Kind::CrossLeg);
  CHECK(a[1].feature == 1);
  CHECK_FALSE(a[1].over);
  CHECK(a[1].downward);
  CHECK(a[2].feature == 0);
  CHECK(a[2].over);
  CHECK(a[3].kind == TraceSite::Kind::Min);
  const auto& b = t.components[1].sites;
  REQUIRE(b.size() == 4);
  CHECK(b[1].feature == 1);
  CHECK(b[1].over);
  CHECK(b[2].feature == 0);
  CHECK_FALSE(b[2].over);

  CHECK(trace_diagram(fixture_hopf(0, 1)).linkingMatrix == lk2(0, 1, 1, 1));
  CHECK(signature(fixture_hopf(0, 1)) == std::pair<int, int>(1, 1));
  // Degenerate case: [[-1,1],[1,-1]] has eigenvalues 0 and -2.
  CHECK(signature(fixture_hopf(-1, -1)) == std::pair<int, int>(0, 1));
  CHECK(signature(fixture_hopf(-2, -2)) == std::pair<int, int>(0, 2));
}

TEST_CASE("the three-crossing closure is a trefoil with writhe three") {
  FramedLinkDiagram L = fixture_trefoil(0);
  TraceResult t = trace_diagram(L);
  REQUIRE(t.componentCount == 1);
  CHECK(t.crossingCount == 3);
  CHECK(t.components[0].selfWrithe == 3);
  CHECK(t.linkingMatrix == std::vector<std::vector<long>>{{0}});
  CHECK(t.components[0].capSlices == std::vector<unsigned>{5, 6});
  // Ten sites: two maxima, two minima, and two legs for each crossing.
  CHECK(t.components[0].sites.size() == 10);
  unsigned crossLegs = 0;
  for (const auto& s : t.components[0].sites)
    if (s.kind == TraceSite::Kind::CrossLeg) ++crossLegs;
  CHECK(crossLegs == 6);
}

TEST_CASE("braid strands descend and closure returns ascend") {
  TraceResult t = trace_diagram(fixture_hopf(0, 0));
  // Level 2 sits inside the braid block: positions 0,1 are returns, 2,3 braid.
  REQUIRE(t.strandCounts[2] == 4);
  CHECK(t.upwardAt[2][0]);
  CHECK(t.upwardAt[2][1]);
  CHECK_FALSE(t.upwardAt[2][2]);
  CHECK_FALSE(t.upwardAt[2][3]);
  CHECK(t.componentAt[2][2] == 0);
  CHECK(t.componentAt[2][3] == 1);
}

TEST_CASE("orientation reversal flips inter-component linking only") {
  FramedLinkDiagram L = fixture_hopf(0, 0);
  L.reversedComponents = {false, true};
  TraceResult t = trace_diagram(L);
  CHECK(t.linkingMatrix == lk2(0, -1, -1, 0));
  CHECK(t.sigPlus == 1);
  CHECK(t.sigMinus == 1);
  // Reversal keeps the over/under geometry but flips travel directions.
  const auto& b = t.components[1].sites;
  REQUIRE(b.size() == 4);
  CHECK(b[0].kind == TraceSite::Kind::Max);
  CHECK_FALSE(b[0].leftToRight);
  CHECK_FALSE(b[1].downward);

  FramedLinkDiagram both = fixture_hopf(0, 0);
  both.reversedComponents = {true, true};
  CHECK(trace_diagram(both).linkingMatrix == lk2(0, 1, 1, 0));

  FramedLinkDiagram knot = fixture_trefoil(0);
  knot.reversedComponents = {true};
  CHECK(trace_diagram(knot).components[0].selfWrithe == 3);
}

TEST_CASE("explicit curls and twist slices carry their writhe") {
  FramedLinkDiagram pos = fixture_unknot_curl(+1);
  TraceResult t = trace_diagram(pos);
  CHECK(t.componentCount == 1);
  CHECK(t.crossingCount == 1);
  CHECK(t.components[0].selfWrithe == 1);
  CHECK(t.linkingMatrix == std::vector<std::vector<long>>{{1}});
  CHECK(signature(pos) == std::pair<int, int>(1, 0));

  FramedLinkDiagram neg = fixture_unknot_curl(-1);
  CHECK(trace_diagram(neg).components[0].selfWrithe == -1);
  CHECK(signature(neg) == std::pair<int, int>(0, 1));

  // A curl's writhe does not depend on the traversal orientation.
  pos.reversedComponents = {true};
  CHECK(trace_diagram(pos).components[0].selfWrithe == 1);

  FramedLinkDiagram tw = fixture_unknot_twist(3);
  CHECK(trace_diagram(tw).components[0].selfWrithe == 3);
  CHECK(trace_diagram(fixture_unknot_twist(-2)).components[0].selfWrithe == -2);
}

TEST_CASE("coupon fixtures type-check and trace") {
  FramedLinkDiagram lone = fixture_s1xs2_coupon();
  TraceResult t = trace_diagram(lone);
  CHECK(t.componentCount == 0);
  CHECK(t.couponWidths == std::vector<unsigned>{0});

  FramedLinkDiagram threaded = fixture_coupon_on_unknot();
  TraceResult u = trace_diagram(threaded);
  REQUIRE(u.componentCount == 1);
  CHECK(u.couponWidths == std::vector<unsigned>{1});
  REQUIRE(u.components[0].sites.size() == 3);
  CHECK(u.components[0].sites[1].kind == TraceSite::Kind::CouponLeg);
  CHECK(u.components[0].sites[1].leg == 0);
  CHECK(u.components[0].sites[1].downward);
}

TEST_CASE("ill-formed slice words are rejected with a diagnosis") {
  FramedLinkDiagram L;
  L.slices = {Slice::cup(0)};
  CHECK_THROWS_AS(trace_diagram(L), std::invalid_argument);  // not closed

  L.slices = {Slice::cap(0)};
  CHECK_THROWS_AS(trace_diagram(L), std::invalid_argument);  // nothing to cap

  L.slices = {Slice::cup(1)};
  CHECK_THROWS_AS(trace_diagram(L), std::invalid_argument);  // cup beyond width

  L.slices = {Slice::cup(0), Slice::cross(1, +1), Slice::cap(0)};
  L.framings = {0};
  CHECK_THROWS_AS(trace_diagram(L), std::invalid_argument);  // crossing at the edge

  CHECK_THROWS_AS(from_braid_closure({2}, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(from_braid_closure({0}, 1, {0}), std::invalid_argument);
  // Framing count must match the closure's component count.
  CHECK_THROWS_AS(from_braid_closure({1, 1}, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(from_braid_closure({1, 1, 1}, 2, {0, 0}), std::invalid_argument);
  // Orientation flags must match the component count.
  FramedLinkDiagram H = fixture_hopf(0, 0);
  H.reversedComponents = {true};
  CHECK_THROWS_AS(trace_diagram(H), std::invalid_argument);
}

TEST_CASE("splitting is deterministic and validates basepoints") {
  FramedLinkDiagram L = fixture_hopf(0, 0);
  SplitDiagram s1 = split(L);
  SplitDiagram s2 = split(L);
  CHECK(s1.basepoints == s2.basepoints);
  CHECK(s1.basepoints == std::vector<unsigned>{4, 5});

  FramedLinkDiagram K = fixture_trefoil(0);
  CHECK(split(K).basepoints == std::vector<unsigned>{5});
  CHECK(split_at(K, {6}).basepoints == std::vector<unsigned>{6});
  CHECK_THROWS_AS(split_at(K, {3}), std::invalid_argument);
  CHECK_THROWS_AS(split_at(K, {5, 6}), std::invalid_argument);
}

TEST_CASE("braid conjugation permutes framings with the components") {
  FramedLinkDiagram L = fixture_hopf(0, 3);
  MoveSet moves = move_generators(L);
  REQUIRE(moves.conjugates.size() == 1);
  const FramedLinkDiagram& C = moves.conjugates[0];
  CHECK(C.braid->word == std::vector<int>{-1, 1, 1, 1});
  // Conjugating by the swapped pair relabels the two circles.
  CHECK(C.framings == std::vector<long>{3, 0});
  CHECK(trace_diagram(C).linkingMatrix == lk2(3, 1, 1, 0));
  CHECK(signature(C) == signature(L));

  // A three-strand word with a free circle: conjugation by the far generator
  // moves the free circle's framing with it.
  FramedLinkDiagram M = from_braid_closure({1, 1}, 3, {0, 3, 7});
  MoveSet mm = move_generators(M);
  REQUIRE(mm.conjugates.size() == 2);
  CHECK(mm.conjugates[1].framings == std::vector<long>{0, 7, 3});
}

TEST_CASE("stabilization adds a kinked strand to the last component") {
  FramedLinkDiagram L = fixture_hopf(0, 3);
  MoveSet moves = move_generators(L);
  REQUIRE(moves.stabilizations.size() == 2);
  for (int k = 0; k < 2; ++k) {
    const FramedLinkDiagram& S = moves.stabilizations[k];
    TraceResult t = trace_diagram(S);
    REQUIRE(t.componentCount == 2);
    CHECK(S.framings == std::vector<long>{0, 3});
    CHECK(t.linkingMatrix == lk2(0, 1, 1, 3));
    CHECK(t.components[1].selfWrithe == (k == 0 ? 1 : -1));
    CHECK(t.components[0].selfWrithe == 0);
  }
}

TEST_CASE("the curated band-sum pair has the slid linking matrix") {
  for (long k : {0L, 1L, 2L, -1L}) {
    FramedLinkDiagram L = from_braid_closure({}, 2, {0, k});
    MoveSet moves = move_generators(L);
    REQUIRE(moves.slidePairs.size() == 1);
    const FramedLinkDiagram& slid = moves.slidePairs[0].second;
    CHECK(trace_diagram(slid).linkingMatrix == lk2(k, k, k, k));
    CHECK(trace_diagram(moves.slidePairs[0].first).linkingMatrix == lk2(0, 0, 0, k));
  }
}

TEST_CASE("disjoint unions shift the second word past the first") {
  FramedLinkDiagram D = disjoint_union(fixture_hopf(0, 3), fixture_hopf(0, 1));
  CHECK(D.braid->strands == 4);
  CHECK(D.braid->word == std::vector<int>{1, 1, 3, 3});
  CHECK(D.framings == std::vector<long>{0, 3, 0, 1});
  TraceResult t = trace_diagram(D);
  REQUIRE(t.componentCount == 4);
  CHECK(t.linkingMatrix[0][1] == 1);
  CHECK(t.linkingMatrix[2][3] == 1);
  CHECK(t.linkingMatrix[0][2] == 0);
  CHECK(t.linkingMatrix[1][3] == 0);

  MoveSet moves = move_generators(fixture_unknot(0));
  REQUIRE(moves.etaPartners.size() == 2);
  CHECK(trace_diagram(moves.etaPartners[0]).componentCount == 3);
  CHECK(moves.etaPartners[1].framings == std::vector<long>{0, 0, 1});
}
