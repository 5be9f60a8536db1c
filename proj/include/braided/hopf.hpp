#pragma once
#include <optional>
#include <string>

#include "braided/morphism.hpp"

namespace braided {

enum class StructureVariant { Algebra, Coalgebra, Bialgebra, Hopf };
std::string variantName(StructureVariant v);

// Bundle of structure maps on one carrier. The variant states which
// components are meaningful; absent components throw on access.
struct HopfData {
  std::string name;
  GradedObject obj;
  std::optional<Morphism> mu;     // A (x) A -> A
  std::optional<Morphism> eta;    // 1 -> A
  std::optional<Morphism> Delta;  // A -> A (x) A
  std::optional<Morphism> eps;    // A -> 1
  std::optional<Morphism> S;      // antipode A -> A
  std::optional<Morphism> Sinv;   // skew antipode A -> A
  StructureVariant variant = StructureVariant::Hopf;

  const CategoryRef& category() const { return obj.category(); }
  const Morphism& requireMu() const;
  const Morphism& requireEta() const;
  const Morphism& requireDelta() const;
  const Morphism& requireEps() const;
  const Morphism& requireS() const;
  const Morphism& requireSinv() const;
  HopfData withCategory(const CategoryRef& cat) const;
};

// Runs the axiom checks for the requested variant. The braiding on the
// carrier's tensor square may be overridden, so the same checker serves
// both the base category and categories of crossed modules.
CheckReport checkStructure(const HopfData& h, StructureVariant variant,
                           const std::optional<Morphism>& braidingOverride = std::nullopt,
                           const ColumnFilter& filter = nullptr);

// Braided tensor product algebra (mu_A (x) mu_B) o (A (x) Psi_{B,A} (x) B)
// and its input-output reversed coalgebra counterpart.
HopfData tensorAlgebra(const HopfData& a, const HopfData& b);
HopfData tensorCoalgebra(const HopfData& a, const HopfData& b);

enum class OppositeKind { Algebra, Coalgebra };

// Opposite algebra mu o Psi^{-1} (resp. opposite coalgebra Psi^{-1} o Delta),
// rebased onto the inverse-braiding category, with antipode and skew
// antipode exchanged.
HopfData opposite(const HopfData& h, OppositeKind kind);

// Matrix inverse of the antipode, cross-checked as the convolution inverse
// of the identity for the opposite multiplication. Throws DomainError when
// the antipode is singular.
Morphism skewAntipode(const HopfData& h);

// mu_A o (f (x) g) o Delta_C for f, g: C -> A.
Morphism convolution(const Morphism& f, const Morphism& g, const HopfData& coalgebra,
                     const HopfData& algebra);

// rho: A (x) H -> 1.
struct PairingData {
  HopfData a;
  HopfData h;
  Morphism rho;
};

// R: 1 -> P (x) Q. The first-leg bundle carries the coproduct actually
// paired on that leg (for quasitriangular data this is Psi o Delta_bar).
struct CopairingData {
  HopfData p;
  HopfData q;
  Morphism R;
};

CheckReport checkPairing(const PairingData& p, const ColumnFilter& filter = nullptr);
CheckReport checkCopairing(const CopairingData& c, const ColumnFilter& filter = nullptr);

enum class PairingProductKind { Dot, Tilde };
enum class PairingInverseKind { Minus, Tilde, Bar };

Morphism pairingProduct(const HopfData& a, const HopfData& h, const Morphism& rho,
                        const Morphism& rhoPrime, PairingProductKind kind);
Morphism pairingInverse(const PairingData& p, PairingInverseKind kind);
Morphism copairingProduct(const HopfData& p, const HopfData& q, const Morphism& R,
                          const Morphism& RPrime, PairingProductKind kind);
Morphism copairingInverse(const CopairingData& c, PairingInverseKind kind);

// Dual bundle on the dual object: multiplication is the transpose of the
// comultiplication with reversed tensor legs, and conversely.
HopfData dualHopf(const HopfData& a);

enum class Side { Left, Right };

struct ModuleData {
  GradedObject carrier;
  Morphism action;  // right: X (x) A -> X, left: A (x) X -> X
  Side side = Side::Right;
  HopfData over;
};

struct ComoduleData {
  GradedObject carrier;
  Morphism coaction;  // right: X -> X (x) A, left: X -> A (x) X
  Side side = Side::Right;
  HopfData over;
};

CheckReport checkModule(const ModuleData& m, const ColumnFilter& filter = nullptr);
CheckReport checkComodule(const ComoduleData& m, const ColumnFilter& filter = nullptr);

ModuleData tensorModule(const ModuleData& m1, const ModuleData& m2);
ComoduleData tensorComodule(const ComoduleData& m1, const ComoduleData& m2);

ModuleData trivialModule(const GradedObject& x, const HopfData& a, Side side);
ComoduleData trivialComodule(const GradedObject& x, const HopfData& a, Side side);
ModuleData regularModule(const HopfData& a, Side side);
ComoduleData regularComodule(const HopfData& a, Side side);

// The action mu o Psi^{-1} on the other side, over the opposite algebra in
// the inverse-braiding category; applying it twice returns the original.
ModuleData oppositeAction(const ModuleData& m);
// The action through the antipode, over the opposite algebra.
ModuleData inverseAction(const ModuleData& m);
// Coaction (mu_r (x) P) o (X (x) R) induced by a copairing.
ComoduleData coactionFromCopairing(const ModuleData& m, const CopairingData& c);
// Right action and right coaction on the dual object.
ModuleData dualAction(const ModuleData& m);
ComoduleData dualCoaction(const ComoduleData& m);

// Right adjoint action of A on a bimodule carrier, and the defining
// property that recovers the right action from it.
Morphism adjointAction(const HopfData& a, const Morphism& actLeft, const Morphism& actRight,
                       const GradedObject& carrier);
CheckReport checkAdjointProperty(const HopfData& a, const Morphism& actLeft,
                                 const Morphism& adjoint, const Morphism& actRight,
                                 const GradedObject& carrier);
// Right adjoint coaction on a bicomodule carrier.
Morphism adjointCoaction(const HopfData& a, const Morphism& coactLeft,
                         const Morphism& coactRight, const GradedObject& carrier);

}  // namespace braided
