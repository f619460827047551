#include <q3inv/hennings.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace q3inv {

namespace {

Elem ribbon_power(const HopfAlgebra& H, long n) {
  if (n >= 0) return H.pow_elem(*H.v, n);
  return H.pow_elem(*H.vInv, -n);
}

BeadSlot fixed_bead(const Elem& value) {
  BeadSlot b;
  b.source = BeadSlot::Source::Fixed;
  b.value = value;
  return b;
}

using TermList = std::vector<std::pair<TensorElement::Index, Cyclotomic>>;

Cyclotomic all_legs_muR(const IntegralSet& I, const TensorElement& t) {
  Cyclotomic sum = Cyclotomic::zero();
  for (const auto& [idx, coeff] : t.terms()) {
    Cyclotomic prod = coeff;
    for (uint32_t k : idx) {
      if (I.muR[k].is_zero()) {
        prod = Cyclotomic::zero();
        break;
      }
      prod *= I.muR[k];
    }
    sum += prod;
  }
  return sum;
}

// Raw value of the one-strand closure with framing `sign`: the twist
// evaluation used as the normalization constant.
Cyclotomic twist_evaluation(const HopfAlgebra& H, const IntegralSet& I, int sign) {
  BeadPlan plan = decorate(split(fixture_unknot(sign)), H);
  return all_legs_muR(I, contract(plan, H));
}

}  // namespace

BeadPlan decorate(const SplitDiagram& S, const HopfAlgebra& H, const IntegralSet* I) {
  if (!H.R) throw std::invalid_argument("decoration needs braiding data");
  if (!H.G || !H.Ginv || !H.v || !H.vInv)
    throw std::invalid_argument("decoration needs derived ribbon data");

  TraceResult t = trace_diagram(S.base);
  if (S.basepoints.size() != t.componentCount)
    throw std::invalid_argument("one basepoint is required per component");

  BeadPlan plan;
  plan.componentCount = t.componentCount;
  plan.crossingCount = t.crossingCount;
  plan.couponWidths = t.couponWidths;
  plan.sigPlus = t.sigPlus;
  plan.sigMinus = t.sigMinus;

  if (!t.couponWidths.empty()) {
    if (!I) throw std::invalid_argument("coupon decoration needs the integral set");
    plan.couponTerms.resize(t.couponWidths.size());
    for (unsigned k = 0; k < t.couponWidths.size(); ++k) {
      const unsigned w = t.couponWidths[k];
      if (w == 0) {
        // A strandless coupon evaluates to the counit of the cointegral.
        plan.scalar *= H.counit_of(I->lambda);
        plan.couponTerms[k] = {{TensorElement::Index{}, Cyclotomic::one()}};
      } else {
        TensorElement legs = H.iterated_comul(I->lambda, w);
        plan.couponTerms[k].assign(legs.terms().begin(), legs.terms().end());
      }
    }
  }

  plan.components.resize(t.componentCount);
  for (unsigned c = 0; c < t.componentCount; ++c) {
    const auto& sites = t.components[c].sites;
    size_t cut = sites.size();
    for (size_t k = 0; k < sites.size(); ++k)
      if (sites[k].kind == TraceSite::Kind::Max && sites[k].feature == S.basepoints[c]) {
        cut = k;
        break;
      }
    if (cut == sites.size())
      throw std::invalid_argument("basepoint is not a maximum of its component");

    // Walk the component from the cut maximum.  Beads are deposited on the
    // strand and collected at the basepoint: carrying a bead through an
    // extremum twists it by the antipode, one power per half-turn, so each
    // collected bead carries S^T where T is the net turning between the
    // basepoint and the bead.  Braiding legs keep the over strand on the
    // first tensor factor; a negative crossing additionally routes its over
    // leg through one more antipode.
    auto& slots = plan.components[c];
    long turns = 0;
    for (size_t step = 1; step < sites.size(); ++step) {
      const TraceSite& s = sites[(cut + step) % sites.size()];
      switch (s.kind) {
        case TraceSite::Kind::Max:
        case TraceSite::Kind::Min: {
          const bool clockwise = (s.kind == TraceSite::Kind::Max) == s.leftToRight;
          turns += clockwise ? -1 : +1;
          break;
        }
        case TraceSite::Kind::CrossLeg: {
          BeadSlot b;
          b.source = BeadSlot::Source::RLeg;
          b.feature = s.feature;
          b.leg = s.over ? 1 : 2;
          b.sign = s.sign;
          b.antipodePower =
              static_cast<int>(turns) + (s.sign < 0 && s.over ? 1 : 0);
          slots.push_back(b);
          break;
        }
        case TraceSite::Kind::TwistSite:
          slots.push_back(fixed_bead(ribbon_power(H, kFramingSign * s.sign)));
          break;
        case TraceSite::Kind::CouponLeg: {
          BeadSlot b;
          b.source = BeadSlot::Source::CouponLeg;
          b.feature = s.feature;
          b.leg = s.leg;
          b.antipodePower = static_cast<int>(turns);
          slots.push_back(b);
          break;
        }
      }
    }

    const long gap = S.base.framings[c] - t.components[c].selfWrithe;
    if (gap != 0) slots.push_back(fixed_bead(ribbon_power(H, kFramingSign * gap)));

    if (turns % 2 == 0)
      throw std::logic_error("component closed with even net turning");
    const bool cutLeftToRight = sites[cut].leftToRight;
    // Rotation number of the closed curve in the traversal direction.
    const long rho = (turns + (cutLeftToRight ? -1 : +1)) / 2;
    // Closing the strand dresses the word with one grouplike power per
    // half-turn of the curve in excess of the plainly embedded circle
    // (rotation number -1).  The dressed functional x -> <state, G^(rho+1) x>
    // is invariant under cyclic rotation of the word and under the antipode,
    // which makes the value independent of the basepoint choice.
    const long dressing = rho + 1;
    if (dressing != 0)
      slots.insert(slots.begin(), fixed_bead(H.pow_elem(*H.G, dressing)));
  }
  return plan;
}

void insert_central(BeadPlan& plan, const HopfAlgebra& H, const CentralElement& c,
                    unsigned component) {
  if (component >= plan.componentCount)
    throw std::invalid_argument("no such component for a central insertion");
  if (!c.isCentral || !H.is_central(c.value))
    throw std::invalid_argument("inserted bead is not central");
  if (!c.isAntipodeInvariant || !(H.apply_antipode(c.value) == c.value))
    throw std::invalid_argument("inserted bead is not antipode-invariant");
  auto& slots = plan.components[component];
  slots.insert(slots.begin(), fixed_bead(c.value));
}

TensorElement contract(const BeadPlan& plan, const HopfAlgebra& H) {
  TermList rlist;
  if (plan.crossingCount > 0) {
    if (!H.R) throw std::invalid_argument("contraction needs braiding data");
    rlist.assign(H.R->terms().begin(), H.R->terms().end());
  }

  // Feature f < crossingCount indexes the braiding term table; the rest are
  // coupons in id order.
  const unsigned features = plan.crossingCount +
                            static_cast<unsigned>(plan.couponTerms.size());
  auto table = [&](unsigned f) -> const TermList& {
    return f < plan.crossingCount ? rlist : plan.couponTerms[f - plan.crossingCount];
  };
  for (unsigned f = 0; f < features; ++f)
    if (table(f).empty())
      throw std::invalid_argument("a referenced feature has an empty term table");

  // Antipode powers applied to basis elements, cached per power.
  std::map<int, std::vector<Elem>> powered;
  auto collected = [&](unsigned basisIndex, int power) -> const Elem& {
    auto& tab = powered[power];
    if (tab.empty()) {
      tab.reserve(H.dim);
      for (unsigned i = 0; i < H.dim; ++i)
        tab.push_back(H.apply_antipode(H.basis_elem(i), power));
    }
    return tab[basisIndex];
  };

  TensorElement out(plan.componentCount);
  std::vector<size_t> digit(features, 0);
  while (true) {
    Cyclotomic coeff = Cyclotomic::one();
    for (unsigned f = 0; f < features; ++f) coeff *= table(f)[digit[f]].second;

    if (!coeff.is_zero()) {
      std::vector<Elem> parts;
      parts.reserve(plan.componentCount);
      bool vanished = false;
      for (unsigned c = 0; c < plan.componentCount && !vanished; ++c) {
        Elem acc = H.unit;
        for (const BeadSlot& b : plan.components[c]) {
          Elem bead;
          switch (b.source) {
            case BeadSlot::Source::RLeg: {
              const auto& idx = rlist[digit[b.feature]].first;
              bead = collected(idx[b.leg - 1], b.antipodePower);
              break;
            }
            case BeadSlot::Source::CouponLeg: {
              const unsigned f = plan.crossingCount + b.feature;
              const auto& idx = table(f)[digit[f]].first;
              bead = collected(idx[b.leg], b.antipodePower);
              break;
            }
            case BeadSlot::Source::Fixed:
              bead = b.antipodePower == 0 ? b.value
                                          : H.apply_antipode(b.value, b.antipodePower);
              break;
          }
          acc = H.mul_elems(acc, bead);
          if (H.elem_is_zero(acc)) break;
        }
        if (H.elem_is_zero(acc)) vanished = true;
        parts.push_back(std::move(acc));
      }

      if (!vanished) {
        // Sparse outer product over the component values.
        TensorElement::Index idx(plan.componentCount, 0);
        std::vector<std::vector<unsigned>> support(plan.componentCount);
        for (unsigned c = 0; c < plan.componentCount; ++c)
          for (unsigned i = 0; i < H.dim; ++i)
            if (!parts[c][i].is_zero()) support[c].push_back(i);
        std::vector<size_t> pick(plan.componentCount, 0);
        while (true) {
          Cyclotomic term = coeff;
          for (unsigned c = 0; c < plan.componentCount; ++c) {
            idx[c] = support[c][pick[c]];
            term *= parts[c][idx[c]];
          }
          out.add(idx, term);
          unsigned c = 0;
          for (; c < plan.componentCount; ++c) {
            if (++pick[c] < support[c].size()) break;
            pick[c] = 0;
          }
          if (c == plan.componentCount) break;
        }
      }
    }

    unsigned f = 0;
    for (; f < features; ++f) {
      if (++digit[f] < table(f).size()) break;
      digit[f] = 0;
    }
    if (f == features) break;
  }

  if (!(plan.scalar == Cyclotomic::one())) return out.scaled(plan.scalar);
  return out;
}

TauResult evaluate_tau(const HopfAlgebra& H, const IntegralSet& I,
                       const TensorElement& intI, std::pair<int, int> sig,
                       TauMode mode) {
  TauResult r;
  r.raw = all_legs_muR(I, intI);
  r.sigPlus = sig.first;
  r.sigMinus = sig.second;
  r.componentCount = intI.arity();
  if (mode == TauMode::Normalized) {
    const Cyclotomic aPlus = twist_evaluation(H, I, +1);
    const Cyclotomic aMinus = twist_evaluation(H, I, -1);
    if (aPlus.is_zero() || aMinus.is_zero())
      throw std::runtime_error(
          "cannot normalize: a one-strand twist evaluation vanishes, so this "
          "algebra's integral does not see the ribbon element invertibly");
    Cyclotomic norm = r.raw;
    for (int k = 0; k < sig.first; ++k) norm *= aPlus.inverse();
    for (int k = 0; k < sig.second; ++k) norm *= aMinus.inverse();
    r.normalized = norm;
  }
  return r;
}

TauResult hennings_invariant(const HopfAlgebra& H, const IntegralSet& I,
                             const FramedLinkDiagram& L, TauMode mode,
                             const CentralElement* inserted) {
  BeadPlan plan = decorate(split(L), H, &I);
  if (inserted) insert_central(plan, H, *inserted, 0);
  TensorElement intI = contract(plan, H);
  return evaluate_tau(H, I, intI, {plan.sigPlus, plan.sigMinus}, mode);
}

TauResult evaluate_coupon_presentation(const HopfAlgebra& H, const IntegralSet& I,
                                       const FramedLinkDiagram& L, TauMode mode) {
  // The cointegral decorates coupons only when it is two-sided; verify
  // x.lambda = counit(x).lambda = lambda.x on the basis.
  for (unsigned i = 0; i < H.dim; ++i) {
    const Elem x = H.basis_elem(i);
    Elem expected = I.lambda;
    const Cyclotomic e = H.counit[i];
    for (auto& coeffv : expected) coeffv *= e;
    if (!(H.mul_elems(x, I.lambda) == expected) ||
        !(H.mul_elems(I.lambda, x) == expected))
      throw std::runtime_error(
          "coupon presentations need a two-sided cointegral; this algebra's "
          "comodulus is nontrivial");
  }
  return hennings_invariant(H, I, L, mode, nullptr);
}

}  // namespace q3inv
