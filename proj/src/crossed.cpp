#include "braided/crossed.hpp"

#include <utility>

#include "braided/error.hpp"

namespace braided {

namespace {

Side actionSideOf(CrossedVariant v) {
  return (v == CrossedVariant::RightRight || v == CrossedVariant::RightLeft) ? Side::Right
                                                                             : Side::Left;
}

Side coactionSideOf(CrossedVariant v) {
  if (v == CrossedVariant::Pairing) throw Error("pairing variant carries no coaction");
  return (v == CrossedVariant::RightRight || v == CrossedVariant::LeftRight) ? Side::Right
                                                                             : Side::Left;
}

// Both sides of the compatibility identity, on the composite input carrying
// one base leg next to the carrier (carrier first for a right action).
struct CompatSides {
  Morphism lhs, rhs;
};

CompatSides rightRightSides(const CrossedModuleData& x) {
  const GradedObject& X = x.carrier;
  const GradedObject& A = x.over.obj;
  const Morphism idX = Morphism::identity(X);
  const Morphism idA = Morphism::identity(A);
  const Morphism& mu = x.over.requireMu();
  const Morphism& Delta = x.over.requireDelta();
  const Morphism& act = x.action;
  const Morphism& coact = x.requireCoaction();
  CompatSides s;
  s.lhs = tensorHom(idX, Delta)
              .then(tensorHom(braiding(X, A), idA))
              .then(tensorHom(idA, act))
              .then(tensorHom(idA, coact))
              .then(tensorHom(braiding(A, X), idA))
              .then(tensorHom(idX, mu));
  s.rhs = tensorHom(coact, Delta)
              .then(tensorHom(idX, tensorHom(braiding(A, A), idA)))
              .then(tensorHom(act, mu));
  return s;
}

CompatSides leftRightSides(const CrossedModuleData& x) {
  const GradedObject& X = x.carrier;
  const GradedObject& A = x.over.obj;
  const Morphism idX = Morphism::identity(X);
  const Morphism idA = Morphism::identity(A);
  const Morphism& mu = x.over.requireMu();
  const Morphism& Delta = x.over.requireDelta();
  const Morphism& act = x.action;
  const Morphism& coact = x.requireCoaction();
  CompatSides s;
  s.lhs = tensorHom(Delta, idX)
              .then(tensorHom(idA, act))
              .then(braiding(A, X, true))
              .then(tensorHom(coact, idA))
              .then(tensorHom(idX, mu));
  s.rhs = tensorHom(Delta, coact)
              .then(tensorHom(idA, tensorHom(braiding(A, X), idA)))
              .then(tensorHom(act, mu));
  return s;
}

// A left coaction is the transport of a right one along the inverse braiding,
// with the base coalgebra reversed accordingly. The compatibility identity for
// the left-coaction variants is the drawn right-coaction identity of the
// untransported structure; spelling it out by hand-mirroring the picture gives
// a genuinely different identity that already fails for the adjoint structure
// over the cubic anyonic line.
CrossedModuleData undoCoactionFlip(const CrossedModuleData& x) {
  CrossedModuleData r = x;
  r.coaction = x.requireCoaction().then(braiding(x.over.obj, x.carrier, true));
  r.variant = x.variant == CrossedVariant::RightLeft ? CrossedVariant::RightRight
                                                     : CrossedVariant::LeftRight;
  const HopfData over = opposite(x.over, OppositeKind::Coalgebra);
  const CategoryRef& cat = over.category();
  r.carrier = r.carrier.withCategory(cat);
  r.action = r.action.withCategory(cat);
  r.coaction = r.coaction->withCategory(cat);
  r.over = over;
  return r;
}

CompatSides rightLeftSides(const CrossedModuleData& x) {
  return rightRightSides(undoCoactionFlip(x));
}

CompatSides leftLeftSides(const CrossedModuleData& x) {
  return leftRightSides(undoCoactionFlip(x));
}

// Input A (x) X (x) H; the A-action is a left action.
CompatSides pairingLeftSides(const CrossedModuleData& x) {
  const GradedObject& X = x.carrier;
  const GradedObject& A = x.over.obj;
  const GradedObject& H = x.pairedWith->obj;
  const Morphism idX = Morphism::identity(X);
  const Morphism idA = Morphism::identity(A);
  const Morphism idH = Morphism::identity(H);
  const Morphism& DeltaA = x.over.requireDelta();
  const Morphism& DeltaH = x.pairedWith->requireDelta();
  const Morphism& actA = x.action;
  const Morphism& actH = x.requireSecondAction();
  const Morphism& rho = *x.pairing;
  CompatSides s;
  s.lhs = tensorHom(DeltaA, tensorHom(idX, idH))
              .then(tensorHom(idA, tensorHom(actA, DeltaH)))
              .then(tensorHom(idA, tensorHom(braiding(X, H), idH)))
              .then(tensorHom(rho, actH));
  s.rhs = tensorHom(idA, tensorHom(idX, DeltaH))
              .then(tensorHom(DeltaA, tensorHom(actH, idH)))
              .then(tensorHom(idA, tensorHom(braiding(A, X), idH)))
              .then(tensorHom(actA, rho));
  return s;
}

// Input X (x) A (x) H; the A-action is a right action.
CompatSides pairingRightSides(const CrossedModuleData& x) {
  const GradedObject& X = x.carrier;
  const GradedObject& A = x.over.obj;
  const GradedObject& H = x.pairedWith->obj;
  const Morphism idX = Morphism::identity(X);
  const Morphism idA = Morphism::identity(A);
  const Morphism idH = Morphism::identity(H);
  const Morphism& DeltaA = x.over.requireDelta();
  const Morphism& DeltaH = x.pairedWith->requireDelta();
  const Morphism& actA = x.action;
  const Morphism& actH = x.requireSecondAction();
  const Morphism& rho = *x.pairing;
  CompatSides s;
  s.lhs = tensorHom(idX, tensorHom(DeltaA, DeltaH))
              .then(tensorHom(idX, tensorHom(idA, tensorHom(rho, idH))))
              .then(tensorHom(idX, braiding(A, H, true)))
              .then(tensorHom(actH, idA))
              .then(actA);
  s.rhs = tensorHom(idX, tensorHom(DeltaA, DeltaH))
              .then(tensorHom(idX, tensorHom(braiding(A, A, true), braiding(H, H, true))))
              .then(tensorHom(actA, tensorHom(idA, tensorHom(idH, idH))))
              .then(tensorHom(braiding(X, A).then(braiding(A, X)), tensorHom(idH, idH)))
              .then(tensorHom(idX, tensorHom(rho, idH)))
              .then(actH);
  return s;
}

CompatSides compatibilitySides(const CrossedModuleData& x) {
  switch (x.variant) {
    case CrossedVariant::RightRight: return rightRightSides(x);
    case CrossedVariant::LeftRight: return leftRightSides(x);
    case CrossedVariant::RightLeft: return rightLeftSides(x);
    case CrossedVariant::LeftLeft: return leftLeftSides(x);
    case CrossedVariant::Pairing:
      return x.pairingSide == Side::Left ? pairingLeftSides(x) : pairingRightSides(x);
  }
  throw Error("unknown crossed variant");
}

CrossedModuleData rebased(CrossedModuleData x, const HopfData& over) {
  const CategoryRef& cat = over.category();
  x.carrier = x.carrier.withCategory(cat);
  x.action = x.action.withCategory(cat);
  if (x.coaction) x.coaction = x.coaction->withCategory(cat);
  x.over = over;
  return x;
}

}  // namespace

std::string crossedVariantTag(CrossedVariant v) {
  switch (v) {
    case CrossedVariant::RightRight: return "rr";
    case CrossedVariant::LeftRight: return "lr";
    case CrossedVariant::RightLeft: return "rl";
    case CrossedVariant::LeftLeft: return "ll";
    case CrossedVariant::Pairing: return "pairing";
  }
  return "rr";
}

Side CrossedModuleData::actionSide() const {
  return variant == CrossedVariant::Pairing ? pairingSide : actionSideOf(variant);
}

Side CrossedModuleData::coactionSide() const { return coactionSideOf(variant); }

const Morphism& CrossedModuleData::requireCoaction() const {
  if (!coaction) throw Error("missing coaction on crossed module");
  return *coaction;
}

const Morphism& CrossedModuleData::requireSecondAction() const {
  if (!secondAction) throw Error("missing second action on crossed module");
  return *secondAction;
}

ModuleData CrossedModuleData::module() const { return {carrier, action, actionSide(), over}; }

ComoduleData CrossedModuleData::comodule() const {
  return {carrier, requireCoaction(), coactionSide(), over};
}

ModuleData CrossedModuleData::secondModule() const {
  if (!pairedWith) throw Error("missing paired bialgebra on crossed module");
  return {carrier, requireSecondAction(), Side::Right, *pairedWith};
}

CheckReport checkCrossed(const CrossedModuleData& x, const ColumnFilter& filter) {
  CheckReport report{"crossed module (" + crossedVariantTag(x.variant) + ")"};
  report.merge(checkModule(x.module(), filter));
  if (x.variant == CrossedVariant::Pairing) {
    report.merge(checkModule(x.secondModule(), filter));
  } else {
    report.merge(checkComodule(x.comodule(), filter));
  }
  const CompatSides s = compatibilitySides(x);
  checkEqual(report, "compatibility", s.lhs, s.rhs, filter);
  return report;
}

CrossedModuleData trivialCrossed(const GradedObject& x, const HopfData& a,
                                 CrossedVariant variant) {
  if (variant == CrossedVariant::Pairing)
    throw DomainError("trivial crossed module needs a module-comodule variant");
  CrossedModuleData r;
  r.carrier = x;
  r.action = trivialModule(x, a, actionSideOf(variant)).action;
  r.coaction = trivialComodule(x, a, coactionSideOf(variant)).coaction;
  r.variant = variant;
  r.over = a;
  return r;
}

CrossedModuleData adjointCrossed(const HopfData& a) {
  CrossedModuleData r;
  r.carrier = a.obj;
  r.action = adjointAction(a, a.requireMu(), a.requireMu(), a.obj);
  r.coaction = a.requireDelta();
  r.variant = CrossedVariant::RightRight;
  r.over = a;
  return r;
}

CrossedModuleData coadjointCrossed(const HopfData& a) {
  CrossedModuleData r;
  r.carrier = a.obj;
  r.action = a.requireMu();
  r.coaction = adjointCoaction(a, a.requireDelta(), a.requireDelta(), a.obj);
  r.variant = CrossedVariant::RightRight;
  r.over = a;
  return r;
}

CrossedModuleData crossedTensor(const CrossedModuleData& x, const CrossedModuleData& y) {
  if (x.variant != y.variant)
    throw DomainError("tensor product needs matching crossed variants");
  if (!(x.over.obj == y.over.obj) || !(*x.over.category() == *y.over.category()))
    throw DomainError("tensor product needs a common base");
  CrossedModuleData r;
  r.carrier = tensor(x.carrier, y.carrier);
  r.variant = x.variant;
  r.over = x.over;
  switch (x.variant) {
    case CrossedVariant::RightRight:
    case CrossedVariant::LeftLeft: {
      r.action = tensorModule(x.module(), y.module()).action;
      r.coaction = tensorComodule(x.comodule(), y.comodule()).coaction;
      return r;
    }
    case CrossedVariant::LeftRight:
    case CrossedVariant::RightLeft: {
      // the module halves tensor over the opposite base in the
      // inverse-braiding category, the comodule halves over the base itself
      const HopfData aop = opposite(x.over, OppositeKind::Algebra);
      const CategoryRef& cbar = aop.category();
      const Side side = actionSideOf(x.variant);
      const ModuleData mx{x.carrier.withCategory(cbar), x.action.withCategory(cbar), side, aop};
      const ModuleData my{y.carrier.withCategory(cbar), y.action.withCategory(cbar), side, aop};
      r.action = tensorModule(mx, my).action.withCategory(x.over.category());
      r.coaction = tensorComodule(x.comodule(), y.comodule()).coaction;
      return r;
    }
    case CrossedVariant::Pairing: {
      if (!x.pairedWith || !y.pairedWith || !(x.pairedWith->obj == y.pairedWith->obj))
        throw DomainError("tensor product needs a common paired bialgebra");
      if (x.pairingSide != y.pairingSide)
        throw DomainError("tensor product needs matching pairing sides");
      r.action = tensorModule(x.module(), y.module()).action;
      r.secondAction = tensorModule(x.secondModule(), y.secondModule()).action;
      r.pairedWith = x.pairedWith;
      r.pairing = x.pairing;
      r.pairingSide = x.pairingSide;
      return r;
    }
  }
  throw Error("unknown crossed variant");
}

Morphism dyBraiding(const CrossedModuleData& x, const CrossedModuleData& y, bool inverse) {
  if (x.variant != y.variant) throw DomainError("braiding needs matching crossed variants");
  const GradedObject& X = x.carrier;
  const GradedObject& Y = y.carrier;
  const GradedObject& A = x.over.obj;
  const Morphism idX = Morphism::identity(X);
  const Morphism idY = Morphism::identity(Y);
  const Morphism idA = Morphism::identity(A);
  if (x.variant == CrossedVariant::RightRight) {
    if (!inverse) {
      return tensorHom(idX, y.requireCoaction())
          .then(tensorHom(braiding(X, Y), idA))
          .then(tensorHom(idY, x.action));
    }
    const Morphism& Sinv = x.over.requireSinv();
    return tensorHom(y.requireCoaction(), idX)
        .then(tensorHom(braiding(Y, A, true), idX))
        .then(tensorHom(idA, braiding(Y, X, true)))
        .then(tensorHom(Sinv, tensorHom(idX, idY)))
        .then(tensorHom(braiding(A, X, true), idY))
        .then(tensorHom(x.action, idY));
  }
  if (x.variant == CrossedVariant::LeftRight) {
    if (!inverse) {
      return tensorHom(x.requireCoaction(), idY)
          .then(tensorHom(idX, y.action))
          .then(braiding(X, Y, true));
    }
    const Morphism& S = x.over.requireS();
    return braiding(Y, X)
        .then(tensorHom(x.requireCoaction(), idY))
        .then(tensorHom(idX, tensorHom(S, idY)))
        .then(tensorHom(idX, y.action));
  }
  throw DomainError("braiding is defined for the right-right and left-right variants");
}

Morphism psiGeneralized(const ModuleData& m, const ComoduleData& c) {
  if (m.side != Side::Right || c.side != Side::Right)
    throw DomainError("generalized braiding expects right structures");
  if (!(m.over.obj == c.over.obj) || !(*m.over.category() == *c.over.category()))
    throw DomainError("generalized braiding needs a common base");
  return tensorHom(Morphism::identity(m.carrier), c.coaction)
      .then(tensorHom(braiding(m.carrier, c.carrier), Morphism::identity(m.over.obj)))
      .then(tensorHom(Morphism::identity(c.carrier), m.action));
}

CrossedModuleData crossedConvert(const CrossedModuleData& x, CrossedConvertRule rule) {
  switch (rule) {
    case CrossedConvertRule::ToLeftRight: {
      if (x.variant == CrossedVariant::RightRight) {
        CrossedModuleData r = x;
        r.action = braiding(x.over.obj, x.carrier, true).then(x.action);
        r.variant = CrossedVariant::LeftRight;
        return rebased(std::move(r), opposite(x.over, OppositeKind::Algebra));
      }
      if (x.variant == CrossedVariant::LeftRight) {
        CrossedModuleData r = x;
        r.action = braiding(x.carrier, x.over.obj, true).then(x.action);
        r.variant = CrossedVariant::RightRight;
        return rebased(std::move(r), opposite(x.over, OppositeKind::Algebra));
      }
      throw DomainError("to-leftright converts between the right-right and left-right variants");
    }
    case CrossedConvertRule::InvertAction: {
      if (x.variant != CrossedVariant::LeftRight && x.variant != CrossedVariant::RightLeft)
        throw DomainError("invert-action expects the left-right or right-left variant");
      const Morphism idX = Morphism::identity(x.carrier);
      const Morphism& S = x.over.requireS();
      CrossedModuleData r = x;
      r.action = (x.variant == CrossedVariant::LeftRight ? tensorHom(S, idX)
                                                         : tensorHom(idX, S))
                     .then(x.action);
      return rebased(std::move(r), opposite(x.over, OppositeKind::Algebra));
    }
    case CrossedConvertRule::Dualize: {
      if (x.variant == CrossedVariant::RightRight) return dualCrossed(x);
      if (x.variant != CrossedVariant::RightLeft)
        throw DomainError("dualize expects the right-right or right-left variant");
      // planar transposes on the dual carrier, over the same base
      const GradedObject Xd = dualObject(x.carrier);
      const Morphism idXd = Morphism::identity(Xd);
      const Morphism idA = Morphism::identity(x.over.obj);
      const Morphism ev = evaluation(x.carrier);
      const Morphism coev = coevaluation(x.carrier);
      CrossedModuleData r;
      r.carrier = Xd;
      r.action = tensorHom(coev, tensorHom(idA, idXd))
                     .then(tensorHom(idXd, tensorHom(x.action, idXd)))
                     .then(tensorHom(idXd, ev));
      r.coaction = tensorHom(coev, idXd)
                       .then(tensorHom(idXd, tensorHom(x.requireCoaction(), idXd)))
                       .then(tensorHom(idXd, tensorHom(idA, ev)));
      r.variant = CrossedVariant::LeftRight;
      r.over = x.over;
      return r;
    }
  }
  throw Error("unknown conversion rule");
}

CrossedModuleData crossedConvertViaPairing(const CrossedModuleData& x, const HopfData& h,
                                           const Morphism& rho, Side actionSide) {
  if (x.variant != CrossedVariant::RightRight)
    throw DomainError("pairing conversion expects a right-right crossed module");
  if (rho.dom() != tensor(x.over.obj, h.obj))
    throw ShapeError("pairing domain does not match the bases");
  const Morphism idX = Morphism::identity(x.carrier);
  CrossedModuleData r;
  r.carrier = x.carrier;
  r.variant = CrossedVariant::Pairing;
  r.over = x.over;
  // the left form keeps the base and composes the two one-sided conversions,
  // landing on the skew-antipode left action
  r.action = actionSide == Side::Right ? x.action
                                       : tensorHom(x.over.requireSinv(), idX)
                                             .then(braiding(x.over.obj, x.carrier, true))
                                             .then(x.action);
  r.secondAction = tensorHom(x.requireCoaction(), Morphism::identity(h.obj))
                       .then(tensorHom(idX, rho));
  r.pairedWith = h;
  r.pairing = rho;
  r.pairingSide = actionSide;
  return r;
}

CheckReport checkHopfBimodule(const HopfBimoduleData& h, const ColumnFilter& filter) {
  CheckReport report{"hopf bimodule"};
  const HopfData& a = h.over;
  const GradedObject& A = a.obj;
  const GradedObject& X = h.carrier;
  const Morphism idA = Morphism::identity(A);
  const Morphism idX = Morphism::identity(X);
  report.merge(checkModule({X, h.actLeft, Side::Left, a}, filter));
  report.merge(checkModule({X, h.actRight, Side::Right, a}, filter));
  report.merge(checkComodule({X, h.coactLeft, Side::Left, a}, filter));
  report.merge(checkComodule({X, h.coactRight, Side::Right, a}, filter));
  checkEqual(report, "actions commute",
             tensorHom(idA, h.actRight).then(h.actLeft),
             tensorHom(h.actLeft, idA).then(h.actRight), filter);
  checkEqual(report, "coactions commute",
             h.coactLeft.then(tensorHom(idA, h.coactRight)),
             h.coactRight.then(tensorHom(h.coactLeft, idA)), filter);
  const Morphism& mu = a.requireMu();
  const Morphism& Delta = a.requireDelta();
  checkEqual(report, "left coaction of left action",
             h.actLeft.then(h.coactLeft),
             tensorHom(Delta, h.coactLeft)
                 .then(tensorHom(idA, tensorHom(braiding(A, A), idX)))
                 .then(tensorHom(mu, h.actLeft)),
             filter);
  checkEqual(report, "left coaction of right action",
             h.actRight.then(h.coactLeft),
             tensorHom(h.coactLeft, Delta)
                 .then(tensorHom(idA, tensorHom(braiding(X, A), idA)))
                 .then(tensorHom(mu, h.actRight)),
             filter);
  checkEqual(report, "right coaction of right action",
             h.actRight.then(h.coactRight),
             tensorHom(h.coactRight, Delta)
                 .then(tensorHom(idX, tensorHom(braiding(A, A), idA)))
                 .then(tensorHom(h.actRight, mu)),
             filter);
  checkEqual(report, "right coaction of left action",
             h.actLeft.then(h.coactRight),
             tensorHom(Delta, h.coactRight)
                 .then(tensorHom(idA, tensorHom(braiding(A, X), idA)))
                 .then(tensorHom(h.actLeft, mu)),
             filter);
  return report;
}

CrossedModuleData bimoduleAdjointAction(const HopfBimoduleData& h) {
  CrossedModuleData r;
  r.carrier = h.carrier;
  r.action = adjointAction(h.over, h.actLeft, h.actRight, h.carrier);
  r.coaction = h.coactRight;
  r.variant = CrossedVariant::RightRight;
  r.over = h.over;
  return r;
}

CrossedModuleData bimoduleAdjointCoaction(const HopfBimoduleData& h) {
  CrossedModuleData r;
  r.carrier = h.carrier;
  r.action = h.actRight;
  r.coaction = adjointCoaction(h.over, h.coactLeft, h.coactRight, h.carrier);
  r.variant = CrossedVariant::RightRight;
  r.over = h.over;
  return r;
}

Morphism leftInvariantsIdempotent(const HopfBimoduleData& h) {
  return h.coactLeft
      .then(tensorHom(h.over.requireS(), Morphism::identity(h.carrier)))
      .then(h.actLeft);
}

Morphism rightInvariantsIdempotent(const HopfBimoduleData& h) {
  return h.coactRight
      .then(tensorHom(Morphism::identity(h.carrier), h.over.requireS()))
      .then(h.actRight);
}

InvariantsData piAndInvariants(const HopfBimoduleData& h) {
  const Morphism pi = leftInvariantsIdempotent(h);
  if (!(pi.then(pi) == pi))
    throw DomainError("left invariants map is not idempotent; not a Hopf bimodule");
  SplitIdempotent split = splitIdempotent(pi);
  const Morphism idA = Morphism::identity(h.over.obj);
  const Morphism adj = adjointAction(h.over, h.actLeft, h.actRight, h.carrier);
  CrossedModuleData inv;
  inv.carrier = split.image;
  inv.action = tensorHom(split.inject, idA).then(adj).then(split.project);
  inv.coaction = split.inject.then(h.coactRight).then(tensorHom(split.project, idA));
  inv.variant = CrossedVariant::RightRight;
  inv.over = h.over;
  return {pi, std::move(split), std::move(inv)};
}

HopfBimoduleData smash(const HopfData& a, const CrossedModuleData& y) {
  if (y.variant != CrossedVariant::RightRight)
    throw DomainError("smash product expects a right-right crossed module");
  if (!(a.obj == y.over.obj) || !(*a.category() == *y.over.category()))
    throw DomainError("smash product needs a common base");
  const Morphism idY = Morphism::identity(y.carrier);
  HopfBimoduleData r;
  r.carrier = tensor(a.obj, y.carrier);
  r.actLeft = tensorHom(a.requireMu(), idY);
  r.actRight = tensorModule(regularModule(a, Side::Right), y.module()).action;
  r.coactLeft = tensorHom(a.requireDelta(), idY);
  r.coactRight = tensorComodule(regularComodule(a, Side::Right), y.comodule()).coaction;
  r.over = a;
  return r;
}

Morphism relativeAntipode(const HopfBimoduleData& h) {
  const Morphism idA = Morphism::identity(h.over.obj);
  const Morphism idX = Morphism::identity(h.carrier);
  const Morphism& S = h.over.requireS();
  return h.coactRight
      .then(tensorHom(h.coactLeft, idA))
      .then(tensorHom(S, tensorHom(idX, S)))
      .then(tensorHom(idA, h.actRight))
      .then(h.actLeft);
}

Morphism relativeAntipodeInverse(const HopfBimoduleData& h) {
  const GradedObject& A = h.over.obj;
  const GradedObject& X = h.carrier;
  const Morphism idA = Morphism::identity(A);
  const Morphism idX = Morphism::identity(X);
  const Morphism& Sinv = h.over.requireSinv();
  return h.coactRight
      .then(tensorHom(h.coactLeft, idA))
      .then(tensorHom(Sinv, tensorHom(idX, Sinv)))
      .then(tensorHom(idA, braiding(X, A, true)))
      .then(tensorHom(braiding(A, A, true), idX))
      .then(tensorHom(idA, braiding(A, X, true)))
      .then(tensorHom(idA, h.actRight))
      .then(h.actLeft);
}

CheckReport checkRelativeAntipode(const HopfBimoduleData& h) {
  CheckReport report{"relative antipode"};
  const GradedObject& A = h.over.obj;
  const GradedObject& X = h.carrier;
  const Morphism Srel = relativeAntipode(h);
  const Morphism& S = h.over.requireS();
  checkEqual(report, "against the right action",
             h.actRight.then(Srel),
             tensorHom(Srel, S).then(braiding(X, A)).then(h.actLeft));
  checkEqual(report, "against the left action",
             h.actLeft.then(Srel),
             tensorHom(S, Srel).then(braiding(A, X)).then(h.actRight));
  checkEqual(report, "against the right coaction",
             Srel.then(h.coactRight),
             h.coactLeft.then(braiding(A, X)).then(tensorHom(Srel, S)));
  checkEqual(report, "against the left coaction",
             Srel.then(h.coactLeft),
             h.coactRight.then(braiding(X, A)).then(tensorHom(S, Srel)));
  const Morphism piL = leftInvariantsIdempotent(h);
  const Morphism piR = rightInvariantsIdempotent(h);
  checkEqual(report, "right projector exchange", piR.then(Srel), piR.then(piL));
  checkEqual(report, "right projector absorption", piR.then(piL), Srel.then(piL));
  checkEqual(report, "left projector exchange", piL.then(Srel), piL.then(piR));
  checkEqual(report, "left projector absorption", piL.then(piR), Srel.then(piR));
  if (h.over.Sinv) {
    const Morphism Sinvrel = relativeAntipodeInverse(h);
    const Morphism idX = Morphism::identity(X);
    checkEqual(report, "inverse round trip", Srel.then(Sinvrel), idX);
    checkEqual(report, "inverse round trip reversed", Sinvrel.then(Srel), idX);
  }
  return report;
}

Morphism squareAntipode(const CrossedModuleData& x) {
  if (x.variant != CrossedVariant::RightRight)
    throw DomainError("square antipode expects a right-right crossed module");
  return x.requireCoaction()
      .then(tensorHom(Morphism::identity(x.carrier), x.over.requireS()))
      .then(x.action);
}

Morphism squareAntipodeInverse(const CrossedModuleData& x) {
  if (x.variant != CrossedVariant::RightRight)
    throw DomainError("square antipode expects a right-right crossed module");
  const Morphism& Sinv = x.over.requireSinv();
  return x.requireCoaction()
      .then(braiding(x.carrier, x.over.obj, true))
      .then(tensorHom(Sinv.then(Sinv), Morphism::identity(x.carrier)))
      .then(braiding(x.over.obj, x.carrier, true))
      .then(x.action);
}

CrossedModuleData dualCrossed(const CrossedModuleData& x) {
  if (x.variant != CrossedVariant::RightRight)
    throw DomainError("dual crossed module expects the right-right variant");
  const ModuleData dm = dualAction(x.module());
  const ComoduleData dc = dualCoaction(x.comodule());
  CrossedModuleData r;
  r.carrier = dm.carrier;
  r.action = dm.action;
  r.coaction = dc.coaction;
  r.variant = CrossedVariant::RightRight;
  r.over = x.over;
  return r;
}

Scalar rankOf(const GradedObject& x) {
  const Morphism r = coevaluation(x).then(braiding(dualObject(x), x)).then(evaluation(x));
  return r.at(0, 0);
}

Scalar rankCrossed(const CrossedModuleData& x) {
  const CrossedModuleData xd = dualCrossed(x);
  const Morphism coev = coevaluation(x.carrier);
  const Morphism ev = evaluation(x.carrier);
  const Morphism psi = braiding(xd.carrier, x.carrier);
  // the underlying-category closure with the square antipode inserted on
  // either leg, cross-checked against the plain closure of the
  // crossed-module braiding
  const Morphism viaDualLeg =
      coev.then(tensorHom(squareAntipode(xd), Morphism::identity(x.carrier)))
          .then(psi)
          .then(ev);
  const Morphism viaPlainLeg =
      coev.then(tensorHom(Morphism::identity(xd.carrier), squareAntipode(x)))
          .then(psi)
          .then(ev);
  const Morphism viaBraiding = coev.then(dyBraiding(xd, x)).then(ev);
  if (!(viaDualLeg == viaPlainLeg) || !(viaDualLeg == viaBraiding))
    throw DomainError("rank insertions of the square antipode disagree");
  return viaDualLeg.at(0, 0);
}

}  // namespace braided
