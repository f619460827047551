#include <q3inv/diagram.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace q3inv {

namespace {

[[noreturn]] void bad_diagram(unsigned sliceIndex, const std::string& what) {
  throw std::invalid_argument("slice " + std::to_string(sliceIndex) + ": " + what);
}

// Strands per level; throws on positional or closure violations.
std::vector<unsigned> check_slices(const std::vector<Slice>& slices) {
  std::vector<unsigned> counts;
  counts.reserve(slices.size() + 1);
  unsigned n = 0;
  counts.push_back(n);
  for (unsigned t = 0; t < slices.size(); ++t) {
    const Slice& s = slices[t];
    switch (s.kind) {
      case Slice::Kind::Cup:
        if (s.pos > n) bad_diagram(t, "cup position exceeds strand count");
        n += 2;
        break;
      case Slice::Kind::Cap:
        if (s.pos + 1 >= n) bad_diagram(t, "cap needs two adjacent strands");
        n -= 2;
        break;
      case Slice::Kind::CrossPos:
      case Slice::Kind::CrossNeg:
        if (s.pos + 1 >= n) bad_diagram(t, "crossing needs two adjacent strands");
        break;
      case Slice::Kind::Twist:
        if (s.pos >= n) bad_diagram(t, "twist position exceeds strand count");
        break;
      case Slice::Kind::Coupon:
        if (s.param < 0) bad_diagram(t, "coupon width is negative");
        if (s.pos + static_cast<unsigned>(s.param) > n)
          bad_diagram(t, "coupon width exceeds strand count");
        break;
    }
    counts.push_back(n);
  }
  if (n != 0)
    throw std::invalid_argument("diagram is not closed: " + std::to_string(n) +
                                " strands remain at the top");
  return counts;
}

struct CrossingLeg {
  unsigned component = 0;
  bool downward = true;
};

struct Walker {
  const std::vector<Slice>& slices;
  const std::vector<unsigned>& counts;
  const std::vector<unsigned>& crossId;  // slice index -> crossing id (if crossing)
  const std::vector<unsigned>& twistId;
  const std::vector<unsigned>& couponId;
  std::vector<std::vector<bool>>& visited;
  std::vector<std::vector<bool>>& upwardAt;
  std::vector<std::vector<unsigned>>& componentAt;
  std::vector<std::vector<CrossingLeg>>& legs;  // by crossing id

  unsigned component = 0;
  unsigned seedSlice = 0;
  unsigned level = 0;
  unsigned pos = 0;
  bool up = false;
  std::vector<TraceSite> sites;

  void enter_edge() {
    if (visited[level][pos])
      throw std::invalid_argument("diagram traversal revisited a strand segment");
    visited[level][pos] = true;
    upwardAt[level][pos] = up;
    componentAt[level][pos] = component;
  }

  void cross_event(unsigned sliceIndex, bool northEastLeg) {
    const Slice& s = slices[sliceIndex];
    const int sign = s.kind == Slice::Kind::CrossPos ? +1 : -1;
    TraceSite site;
    site.kind = TraceSite::Kind::CrossLeg;
    site.feature = crossId[sliceIndex];
    site.sign = sign;
    // At a positive crossing the strand running lower-left to upper-right
    // passes over; the mirror holds at a negative crossing.
    site.over = northEastLeg == (sign > 0);
    site.downward = !up;
    sites.push_back(site);
    legs[site.feature].push_back({component, site.downward});
  }

  // One step: crosses the adjacent slice, records any event, updates state.
  // Returns true when the walk arrives back at its seed maximum.
  bool step() {
    if (up) {
      const unsigned t = level;
      const Slice& s = slices[t];
      const unsigned c = s.pos;
      switch (s.kind) {
        case Slice::Kind::Cap:
          if (pos == c || pos == c + 1) {
            if (t == seedSlice) return true;
            TraceSite site;
            site.kind = TraceSite::Kind::Max;
            site.feature = t;
            site.leftToRight = pos == c;
            sites.push_back(site);
            pos = pos == c ? c + 1 : c;
            up = false;
            enter_edge();
            return false;
          }
          pos = pos < c ? pos : pos - 2;
          break;
        case Slice::Kind::Cup:
          pos = pos < c ? pos : pos + 2;
          break;
        case Slice::Kind::CrossPos:
        case Slice::Kind::CrossNeg:
          if (pos == c) {
            cross_event(t, true);
            pos = c + 1;
          } else if (pos == c + 1) {
            cross_event(t, false);
            pos = c;
          }
          break;
        case Slice::Kind::Twist:
          if (pos == c) {
            TraceSite site;
            site.kind = TraceSite::Kind::TwistSite;
            site.feature = twistId[t];
            site.sign = s.param;
            site.downward = false;
            sites.push_back(site);
          }
          break;
        case Slice::Kind::Coupon:
          if (pos >= c && pos < c + static_cast<unsigned>(s.param)) {
            TraceSite site;
            site.kind = TraceSite::Kind::CouponLeg;
            site.feature = couponId[t];
            site.leg = pos - c;
            site.downward = false;
            sites.push_back(site);
          }
          break;
      }
      ++level;
      enter_edge();
      return false;
    }
    // Travelling down across slice level-1.
    const unsigned t = level - 1;
    const Slice& s = slices[t];
    const unsigned c = s.pos;
    switch (s.kind) {
      case Slice::Kind::Cup:
        if (pos == c || pos == c + 1) {
          TraceSite site;
          site.kind = TraceSite::Kind::Min;
          site.feature = t;
          site.leftToRight = pos == c;
          sites.push_back(site);
          pos = pos == c ? c + 1 : c;
          up = true;
          enter_edge();
          return false;
        }
        pos = pos < c ? pos : pos - 2;
        break;
      case Slice::Kind::Cap:
        pos = pos < c ? pos : pos + 2;
        break;
      case Slice::Kind::CrossPos:
      case Slice::Kind::CrossNeg:
        if (pos == c + 1) {
          cross_event(t, true);  // upper end of the lower-left/upper-right leg
          pos = c;
        } else if (pos == c) {
          cross_event(t, false);
          pos = c + 1;
        }
        break;
      case Slice::Kind::Twist:
        if (pos == c) {
          TraceSite site;
          site.kind = TraceSite::Kind::TwistSite;
          site.feature = twistId[t];
          site.sign = s.param;
          site.downward = true;
          sites.push_back(site);
        }
        break;
      case Slice::Kind::Coupon:
        if (pos >= c && pos < c + static_cast<unsigned>(s.param)) {
          TraceSite site;
          site.kind = TraceSite::Kind::CouponLeg;
          site.feature = couponId[t];
          site.leg = pos - c;
          site.downward = true;
          sites.push_back(site);
        }
        break;
    }
    --level;
    enter_edge();
    return false;
  }
};

TraceSite flipped(const TraceSite& s) {
  TraceSite r = s;
  r.leftToRight = !s.leftToRight;
  r.downward = !s.downward;
  return r;
}

}  // namespace

TraceResult trace_diagram(const FramedLinkDiagram& L) {
  TraceResult out;
  out.strandCounts = check_slices(L.slices);

  const unsigned S = static_cast<unsigned>(L.slices.size());
  std::vector<unsigned> crossId(S, 0), twistId(S, 0), couponId(S, 0);
  unsigned nextTwist = 0;
  for (unsigned t = 0; t < S; ++t) {
    const Slice& s = L.slices[t];
    if (s.kind == Slice::Kind::CrossPos || s.kind == Slice::Kind::CrossNeg) {
      crossId[t] = out.crossingCount++;
      out.crossingSigns.push_back(s.kind == Slice::Kind::CrossPos ? +1 : -1);
    } else if (s.kind == Slice::Kind::Twist) {
      twistId[t] = nextTwist++;
    } else if (s.kind == Slice::Kind::Coupon) {
      couponId[t] = static_cast<unsigned>(out.couponWidths.size());
      out.couponWidths.push_back(static_cast<unsigned>(s.param));
    }
  }

  std::vector<std::vector<bool>> visited, upwardAt;
  std::vector<std::vector<unsigned>> componentAt;
  visited.reserve(S + 1);
  for (unsigned n : out.strandCounts) {
    visited.emplace_back(n, false);
    upwardAt.emplace_back(n, false);
    componentAt.emplace_back(n, 0u);
  }
  std::vector<std::vector<CrossingLeg>> legs(out.crossingCount);

  // Seed one walk per unvisited maximum, in slice order.
  for (unsigned t = 0; t < S; ++t) {
    if (L.slices[t].kind != Slice::Kind::Cap) continue;
    const unsigned c = L.slices[t].pos;
    if (visited[t][c + 1]) continue;

    Walker w{L.slices, out.strandCounts, crossId,     twistId, couponId,
             visited,  upwardAt,         componentAt, legs,    0, 0, 0, 0,
             false,    {}};
    w.component = out.componentCount;
    w.seedSlice = t;
    TraceSite seed;
    seed.kind = TraceSite::Kind::Max;
    seed.feature = t;
    seed.leftToRight = true;  // entered up the left leg, leaves down the right
    w.sites.push_back(seed);
    w.level = t;
    w.pos = c + 1;
    w.up = false;
    w.enter_edge();
    while (!w.step()) {
    }

    ComponentTrace comp;
    comp.sites = std::move(w.sites);
    out.components.push_back(std::move(comp));
    ++out.componentCount;
  }

  for (unsigned t = 0; t <= S; ++t)
    for (unsigned p = 0; p < out.strandCounts[t]; ++p)
      if (!visited[t][p])
        throw std::invalid_argument("diagram has a strand segment no walk reached");

  // Apply orientation reversals: reverse the cyclic site order (anchored at
  // the seed maximum) and flip every directional attribute.
  if (!L.reversedComponents.empty() &&
      L.reversedComponents.size() != out.componentCount)
    throw std::invalid_argument("orientation flags do not match component count");
  std::vector<bool> reversed(out.componentCount, false);
  for (unsigned c = 0; c < L.reversedComponents.size(); ++c)
    reversed[c] = L.reversedComponents[c];
  for (unsigned c = 0; c < out.componentCount; ++c) {
    if (!reversed[c]) continue;
    auto& sites = out.components[c].sites;
    std::vector<TraceSite> rev;
    rev.reserve(sites.size());
    rev.push_back(flipped(sites[0]));
    for (unsigned k = static_cast<unsigned>(sites.size()); k-- > 1;)
      rev.push_back(flipped(sites[k]));
    sites = std::move(rev);
    for (auto& leg : legs)
      for (auto& l : leg)
        if (l.component == c) l.downward = !l.downward;
    for (unsigned t = 0; t <= S; ++t)
      for (unsigned p = 0; p < out.strandCounts[t]; ++p)
        if (componentAt[t][p] == c) upwardAt[t][p] = !upwardAt[t][p];
  }

  for (auto& comp : out.components)
    for (const TraceSite& s : comp.sites)
      if (s.kind == TraceSite::Kind::Max) comp.capSlices.push_back(s.feature);

  // Linking numbers: each crossing contributes its orientation-corrected sign
  // to the pair of components its two legs belong to; distinct-component
  // totals halve to the linking number.
  const unsigned N = out.componentCount;
  if (L.framings.size() != N)
    throw std::invalid_argument("framing list has " + std::to_string(L.framings.size()) +
                                " entries for " + std::to_string(N) + " components");
  std::vector<std::vector<long>> lk(N, std::vector<long>(N, 0));
  for (unsigned x = 0; x < out.crossingCount; ++x) {
    if (legs[x].size() != 2)
      throw std::invalid_argument("crossing traversed " + std::to_string(legs[x].size()) +
                                  " times instead of twice");
    const int oriented = out.crossingSigns[x] * (legs[x][0].downward ? 1 : -1) *
                         (legs[x][1].downward ? 1 : -1);
    const unsigned a = legs[x][0].component, b = legs[x][1].component;
    if (a == b)
      out.components[a].selfWrithe += oriented;
    else {
      lk[a][b] += oriented;
      lk[b][a] += oriented;
    }
  }
  for (unsigned a = 0; a < N; ++a)
    for (unsigned b = 0; b < N; ++b) {
      if (a == b) continue;
      if (lk[a][b] % 2 != 0)
        throw std::invalid_argument("odd crossing total between two components");
      lk[a][b] /= 2;
    }
  for (unsigned c = 0; c < N; ++c)
    for (const TraceSite& s : out.components[c].sites)
      if (s.kind == TraceSite::Kind::TwistSite) out.components[c].selfWrithe += s.sign;
  for (unsigned c = 0; c < N; ++c) lk[c][c] = L.framings[c];
  out.linkingMatrix = std::move(lk);

  std::vector<std::vector<Rational>> sym(N, std::vector<Rational>(N));
  for (unsigned a = 0; a < N; ++a)
    for (unsigned b = 0; b < N; ++b) sym[a][b] = Rational(out.linkingMatrix[a][b]);
  auto sig = rational_signature(sym);
  out.sigPlus = sig.first;
  out.sigMinus = sig.second;

  out.upwardAt = std::move(upwardAt);
  out.componentAt = std::move(componentAt);
  return out;
}

std::vector<std::vector<long>> linking_matrix(const FramedLinkDiagram& L) {
  return trace_diagram(L).linkingMatrix;
}

std::pair<int, int> signature(const FramedLinkDiagram& L) {
  TraceResult t = trace_diagram(L);
  return {t.sigPlus, t.sigMinus};
}

FramedLinkDiagram from_braid_closure(const std::vector<int>& word, unsigned strands,
                                     const std::vector<long>& framings) {
  for (int letter : word) {
    const unsigned i = static_cast<unsigned>(letter < 0 ? -letter : letter);
    if (i == 0 || i >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(letter) +
                                  " is out of range for " + std::to_string(strands) +
                                  " strands");
  }

  FramedLinkDiagram L;
  L.framings = framings;
  L.braid = BraidData{strands, word};
  const unsigned s = strands;
  for (unsigned k = 0; k < s; ++k) L.slices.push_back(Slice::cup(k));
  for (int letter : word) {
    const unsigned i = static_cast<unsigned>(letter < 0 ? -letter : letter);
    L.slices.push_back(Slice::cross(s + i - 1, letter > 0 ? +1 : -1));
  }
  for (unsigned k = 0; k < s; ++k) L.slices.push_back(Slice::cap(s - 1 - k));

  trace_diagram(L);  // validates closure and the framing count
  return L;
}

SplitDiagram split(const FramedLinkDiagram& L) {
  TraceResult t = trace_diagram(L);
  SplitDiagram out{L, {}};
  out.basepoints.reserve(t.componentCount);
  for (const auto& comp : t.components) out.basepoints.push_back(comp.capSlices.front());
  return out;
}

SplitDiagram split_at(const FramedLinkDiagram& L, const std::vector<unsigned>& capChoices) {
  TraceResult t = trace_diagram(L);
  if (capChoices.size() != t.componentCount)
    throw std::invalid_argument("one basepoint is required per component");
  for (unsigned c = 0; c < t.componentCount; ++c) {
    const auto& caps = t.components[c].capSlices;
    if (std::find(caps.begin(), caps.end(), capChoices[c]) == caps.end())
      throw std::invalid_argument("chosen basepoint is not a maximum of its component");
  }
  return SplitDiagram{L, capChoices};
}

namespace {

// Components keyed by their smallest braid slot, via the closure permutation.
std::vector<unsigned> slot_component(const std::vector<int>& word, unsigned strands) {
  std::vector<unsigned> perm(strands);
  std::iota(perm.begin(), perm.end(), 0u);
  // perm[slot] = slot where the strand entering at `slot` exits on top.
  for (int letter : word) {
    const unsigned i = static_cast<unsigned>(letter < 0 ? -letter : letter);
    for (auto& p : perm)
      if (p == i - 1)
        p = i;
      else if (p == i)
        p = i - 1;
  }
  std::vector<unsigned> comp(strands, strands);
  unsigned next = 0;
  for (unsigned j = 0; j < strands; ++j) {
    if (comp[j] != strands) continue;
    unsigned k = j;
    while (comp[k] == strands) {
      comp[k] = next;
      k = perm[k];
    }
    ++next;
  }
  return comp;
}

std::vector<long> remap_framings(const std::vector<long>& framings,
                                 const std::vector<unsigned>& oldComp,
                                 const std::vector<unsigned>& newComp,
                                 const std::vector<unsigned>& slotToOldSlot) {
  unsigned count = 0;
  for (unsigned c : newComp) count = std::max(count, c + 1);
  std::vector<long> out(count, 0);
  std::vector<bool> seen(count, false);
  for (unsigned slot = 0; slot < slotToOldSlot.size(); ++slot) {
    const unsigned nc = newComp[slot];
    const unsigned oc = oldComp[slotToOldSlot[slot]];
    if (seen[nc] && out[nc] != framings[oc])
      throw std::logic_error("inconsistent framing remap");
    out[nc] = framings[oc];
    seen[nc] = true;
  }
  return out;
}

}  // namespace

MoveSet move_generators(const FramedLinkDiagram& L) {
  if (!L.braid)
    throw std::invalid_argument("move generators need a braid-closure presentation");
  const BraidData& B = *L.braid;
  const unsigned s = B.strands;
  MoveSet out;

  const std::vector<unsigned> oldComp = slot_component(B.word, s);

  for (unsigned g = 1; g < s; ++g) {
    std::vector<int> word;
    word.reserve(B.word.size() + 2);
    word.push_back(-static_cast<int>(g));
    word.insert(word.end(), B.word.begin(), B.word.end());
    word.push_back(static_cast<int>(g));
    // Strand entering slot j of the conjugated braid plays the role the
    // strand at slot tau(j) played before, tau the swapped pair.
    std::vector<unsigned> slotMap(s);
    std::iota(slotMap.begin(), slotMap.end(), 0u);
    std::swap(slotMap[g - 1], slotMap[g]);
    const std::vector<unsigned> newComp = slot_component(word, s);
    out.conjugates.push_back(
        from_braid_closure(word, s, remap_framings(L.framings, oldComp, newComp, slotMap)));
  }

  for (int sign : {+1, -1}) {
    std::vector<int> word = B.word;
    word.push_back(sign * static_cast<int>(s));
    // The new strand shrinks onto slot s-1; old slots keep their circles.
    std::vector<unsigned> slotMap(s + 1);
    std::iota(slotMap.begin(), slotMap.end(), 0u);
    slotMap[s] = s - 1;
    const std::vector<unsigned> newComp = slot_component(word, s + 1);
    out.stabilizations.push_back(from_braid_closure(
        word, s + 1, remap_framings(L.framings, oldComp, newComp, slotMap)));
  }

  // Curated band-sum shape: a split pair of unknots, the first 0-framed,
  // slid over the second. The slid circle becomes a parallel push-off, so
  // the pair closes the 2k-crossing two-strand torus braid with both
  // framings k and all linking entries k.
  if (B.word.empty() && s == 2 && L.framings.size() == 2 && L.framings[0] == 0) {
    const long k = L.framings[1];
    std::vector<int> word(static_cast<size_t>(2 * (k < 0 ? -k : k)), k < 0 ? -1 : 1);
    out.slidePairs.emplace_back(L, from_braid_closure(word, 2, {k, k}));
  }

  out.etaPartners.push_back(disjoint_union(L, fixture_hopf(0, 0)));
  out.etaPartners.push_back(disjoint_union(L, fixture_hopf(0, 1)));
  return out;
}

FramedLinkDiagram disjoint_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b) {
  if (!a.braid || !b.braid)
    throw std::invalid_argument("disjoint union needs braid-closure presentations");
  std::vector<int> word = a.braid->word;
  for (int letter : b.braid->word) {
    const int shift = static_cast<int>(a.braid->strands);
    word.push_back(letter > 0 ? letter + shift : letter - shift);
  }
  std::vector<long> framings = a.framings;
  framings.insert(framings.end(), b.framings.begin(), b.framings.end());
  return from_braid_closure(word, a.braid->strands + b.braid->strands, framings);
}

FramedLinkDiagram fixture_empty() { return from_braid_closure({}, 0, {}); }

FramedLinkDiagram fixture_unknot(long f) { return from_braid_closure({}, 1, {f}); }

FramedLinkDiagram fixture_hopf(long f1, long f2) {
  return from_braid_closure({1, 1}, 2, {f1, f2});
}

FramedLinkDiagram fixture_trefoil(long f) { return from_braid_closure({1, 1, 1}, 2, {f}); }

FramedLinkDiagram fixture_lens(long k) { return fixture_unknot(k); }

FramedLinkDiagram fixture_unknot_curl(int sign) {
  FramedLinkDiagram L;
  L.slices = {Slice::cup(0), Slice::cup(2), Slice::cross(1, sign), Slice::cap(2),
              Slice::cap(0)};
  L.framings = {sign > 0 ? 1 : -1};
  trace_diagram(L);
  return L;
}

FramedLinkDiagram fixture_unknot_twist(int t) {
  FramedLinkDiagram L;
  L.slices = {Slice::cup(0), Slice::twist(1, t), Slice::cap(0)};
  L.framings = {t};
  trace_diagram(L);
  return L;
}

FramedLinkDiagram fixture_s1xs2_coupon() {
  FramedLinkDiagram L;
  L.slices = {Slice::coupon(0, 0)};
  trace_diagram(L);
  return L;
}

FramedLinkDiagram fixture_coupon_on_unknot() {
  FramedLinkDiagram L;
  L.slices = {Slice::cup(0), Slice::coupon(1, 1), Slice::cap(0)};
  L.framings = {0};
  trace_diagram(L);
  return L;
}

}  // namespace q3inv
