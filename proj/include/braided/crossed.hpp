#pragma once
#include <optional>
#include <string>

#include "braided/hopf.hpp"

namespace braided {

// Variant of the compatibility identity between the action and the
// coaction (or the second action, for the pairing variant). The sides
// name the action side first and the coaction side second.
enum class CrossedVariant { RightRight, LeftRight, RightLeft, LeftLeft, Pairing };
std::string crossedVariantTag(CrossedVariant v);

// A module-and-comodule carrier satisfying one of the five compatibility
// identities. For the pairing variant the carrier is an A-module and an
// H-module tied together by a bialgebra pairing instead of a comodule;
// the side of the A-action selects which of the two pairing identities
// applies (left action for the first, right action for the second),
// while the H-action is always a right action.
struct CrossedModuleData {
  GradedObject carrier;
  Morphism action;  // A-action, side given by the variant
  std::optional<Morphism> coaction;
  CrossedVariant variant = CrossedVariant::RightRight;
  HopfData over;  // A
  std::optional<Morphism> secondAction;  // pairing variant: right H-action
  std::optional<HopfData> pairedWith;    // pairing variant: H
  std::optional<Morphism> pairing;       // pairing variant: rho, A (x) H -> 1
  Side pairingSide = Side::Left;         // pairing variant: side of the A-action

  Side actionSide() const;
  Side coactionSide() const;
  const Morphism& requireCoaction() const;
  const Morphism& requireSecondAction() const;
  ModuleData module() const;
  ComoduleData comodule() const;
  ModuleData secondModule() const;
};

// Module and comodule axioms plus the variant's compatibility identity.
CheckReport checkCrossed(const CrossedModuleData& x, const ColumnFilter& filter = nullptr);

CrossedModuleData trivialCrossed(const GradedObject& x, const HopfData& a,
                                 CrossedVariant variant = CrossedVariant::RightRight);
// Adjoint action with regular coaction, and regular action with adjoint
// coaction, on the carrier of a braided group.
CrossedModuleData adjointCrossed(const HopfData& a);
CrossedModuleData coadjointCrossed(const HopfData& a);

// Tensor product crossed module of two crossed modules of the same
// variant over the same base.
CrossedModuleData crossedTensor(const CrossedModuleData& x, const CrossedModuleData& y);

// The braiding of the category of crossed modules, defined for the
// right-right and left-right variants. The inverse form needs the skew
// antipode of the base.
Morphism dyBraiding(const CrossedModuleData& x, const CrossedModuleData& y,
                    bool inverse = false);

// Generalized braiding x (x) y -> y (x) x of a right module past a right
// comodule over one bialgebra; coincides with dyBraiding when both
// structures come from a single crossed module.
Morphism psiGeneralized(const ModuleData& m, const ComoduleData& c);

enum class CrossedConvertRule { ToLeftRight, InvertAction, Dualize };

// Object-level conversions between variants:
//  - ToLeftRight turns a right-right module into a left-right one over the
//    opposite base (and back), precomposing the action with the inverse
//    braiding.
//  - InvertAction precomposes a one-sided action with the antipode, moving
//    the module over the opposite base; applying it twice is the identity.
//  - Dualize sends a right-left module to the left-right transposes on the
//    dual carrier over the same base, and a right-right module to the
//    right-right dual action and coaction.
CrossedModuleData crossedConvert(const CrossedModuleData& x, CrossedConvertRule rule);

// Pairing-variant structure on a right-right crossed module: the coaction
// leg is paired against H through rho to give the right H-action. The side
// selects the A-action kept alongside it, either the original right action
// or its skew-antipode left conversion over the same base.
CrossedModuleData crossedConvertViaPairing(const CrossedModuleData& x, const HopfData& h,
                                           const Morphism& rho,
                                           Side actionSide = Side::Right);

// Carrier with commuting left and right actions and coactions, every
// action-coaction pair a Hopf module.
struct HopfBimoduleData {
  GradedObject carrier;
  Morphism actLeft;    // A (x) X -> X
  Morphism actRight;   // X (x) A -> X
  Morphism coactLeft;  // X -> A (x) X
  Morphism coactRight; // X -> X (x) A
  HopfData over;
};

CheckReport checkHopfBimodule(const HopfBimoduleData& h, const ColumnFilter& filter = nullptr);

// Adjoint action with the right coaction, and right action with the
// adjoint coaction; both are right-right crossed modules.
CrossedModuleData bimoduleAdjointAction(const HopfBimoduleData& h);
CrossedModuleData bimoduleAdjointCoaction(const HopfBimoduleData& h);

// Idempotents projecting onto left (resp. right) invariants.
Morphism leftInvariantsIdempotent(const HopfBimoduleData& h);
Morphism rightInvariantsIdempotent(const HopfBimoduleData& h);

struct InvariantsData {
  Morphism pi;
  SplitIdempotent split;           // inject: Y -> X, project: X -> Y
  CrossedModuleData invariants;    // right-right structure on the image
};

// Splits the left-invariants idempotent and equips the image with the
// adjoint action and the right coaction. Throws DomainError when the
// idempotent property fails.
InvariantsData piAndInvariants(const HopfBimoduleData& h);

// A (x) Y with left regular structures and right tensor-product
// structures of the regular bimodule with y.
HopfBimoduleData smash(const HopfData& a, const CrossedModuleData& y);

// Antipode of a Hopf bimodule relative to its base, with the inverse that
// exists when the base antipode is invertible.
Morphism relativeAntipode(const HopfBimoduleData& h);
Morphism relativeAntipodeInverse(const HopfBimoduleData& h);
// The exchange identities with both invariants idempotents and the four
// polarized antipode identities.
CheckReport checkRelativeAntipode(const HopfBimoduleData& h);

// Antipode square of a right-right crossed module and its inverse.
Morphism squareAntipode(const CrossedModuleData& x);
Morphism squareAntipodeInverse(const CrossedModuleData& x);

// Right dual in the category of right-right crossed modules.
CrossedModuleData dualCrossed(const CrossedModuleData& x);

// Categorical rank ev o Psi o coev of a plain object.
Scalar rankOf(const GradedObject& x);
// Rank of a right-right crossed module, with the square antipode inserted
// on either leg; throws DomainError when the two insertions disagree.
Scalar rankCrossed(const CrossedModuleData& x);

}  // namespace braided
