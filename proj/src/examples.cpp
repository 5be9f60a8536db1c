#include "braided/examples.hpp"

#include <string>
#include <vector>

#include "braided/error.hpp"

namespace braided {

namespace {

Scalar signedHalfSquarePower(FieldTag f, long n, bool inverseExponent) {
  // (-1)^n q^(n(n-1)/2), the antipode coefficient on the n-th power
  const long e = n * (n - 1) / 2;
  Scalar s = inverseExponent ? Scalar::q(f).pow(e).inverse() : Scalar::q(f).pow(e);
  return n % 2 != 0 ? -s : s;
}

HopfData lineBundle(long modulus, int top, bool nilpotent, const std::string& letter,
                    long gradeSign, const std::string& name) {
  const CategoryRef cat = lineCategory(modulus);
  const FieldTag f = cat->field();
  const int d = top + 1;
  std::vector<BasisElement> basis;
  basis.reserve(d);
  for (int k = 0; k < d; ++k)
    basis.push_back({letter + "^" + std::to_string(k),
                     reduceGrade(cat->group(), {gradeSign * k})});
  HopfData h;
  h.name = name;
  h.obj = GradedObject::make(cat, basis);
  const GradedObject aa = tensor(h.obj, h.obj);
  const GradedObject unit = GradedObject::unit(cat);

  Morphism mu = Morphism::zero(aa, h.obj);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (a + b >= d) continue;  // nilpotent: relation, otherwise: truncation window
      mu.set(a + b, a * d + b, Scalar::one(f));
    }
  h.mu = mu;

  Morphism eta = Morphism::zero(unit, h.obj);
  eta.set(0, 0, Scalar::one(f));
  h.eta = eta;

  Morphism Delta = Morphism::zero(h.obj, aa);
  for (int n = 0; n < d; ++n)
    for (int k = 0; k <= n; ++k) Delta.set(k * d + (n - k), n, qBinomial(f, n, k));
  h.Delta = Delta;

  Morphism eps = Morphism::zero(h.obj, unit);
  eps.set(0, 0, Scalar::one(f));
  h.eps = eps;

  Morphism S = Morphism::zero(h.obj, h.obj);
  Morphism Sinv = Morphism::zero(h.obj, h.obj);
  for (int n = 0; n < d; ++n) {
    S.set(n, n, signedHalfSquarePower(f, n, false));
    Sinv.set(n, n, signedHalfSquarePower(f, n, true));
  }
  h.S = S;
  h.Sinv = Sinv;
  h.variant = StructureVariant::Hopf;
  (void)nilpotent;
  return h;
}

PairingData pairLines(HopfData a, HopfData h) {
  const FieldTag f = a.category()->field();
  const int d = a.obj.dim();
  Morphism rho = Morphism::zero(tensor(a.obj, h.obj), GradedObject::unit(a.category()));
  for (int m = 0; m < d; ++m) rho.set(0, m * d + m, qFactorial(f, m));
  return PairingData{std::move(a), std::move(h), rho};
}

}  // namespace

CategoryRef lineCategory(long modulus) {
  if (modulus < 0) throw DomainError("grading modulus must be nonnegative");
  const FieldTag field{modulus};
  return makeCategory(GradingGroup{{modulus}}, field, {{Scalar::q(field)}});
}

CategoryRef trivialCategory(FieldTag field) {
  return makeCategory(GradingGroup{{}}, field, {});
}

HopfData braidedLine(int truncation) {
  if (truncation < 1) throw DomainError("truncation bound must be at least 1");
  return lineBundle(0, truncation, false, "x", 1,
                    "braided line [0.." + std::to_string(truncation) + "]");
}

HopfData braidedLineDual(int truncation) {
  if (truncation < 1) throw DomainError("truncation bound must be at least 1");
  return lineBundle(0, truncation, false, "y", -1,
                    "braided line partner [0.." + std::to_string(truncation) + "]");
}

PairingData linePairing(int truncation) {
  return pairLines(braidedLine(truncation), braidedLineDual(truncation));
}

HopfData anyonicLine(long modulus) {
  if (modulus < 2) throw DomainError("anyonic line needs modulus at least 2");
  return lineBundle(modulus, static_cast<int>(modulus) - 1, true, "x", 1,
                    "anyonic line mod " + std::to_string(modulus));
}

HopfData anyonicLineDual(long modulus) {
  if (modulus < 2) throw DomainError("anyonic line needs modulus at least 2");
  return lineBundle(modulus, static_cast<int>(modulus) - 1, true, "y", -1,
                    "anyonic line partner mod " + std::to_string(modulus));
}

PairingData anyonicLinePairing(long modulus) {
  return pairLines(anyonicLine(modulus), anyonicLineDual(modulus));
}

HopfData cyclicGroupAlgebra(long order) {
  if (order < 1) throw DomainError("group order must be positive");
  const int n = static_cast<int>(order);
  const CategoryRef cat = trivialCategory(FieldTag{order});
  const FieldTag f = cat->field();
  std::vector<BasisElement> basis;
  for (int a = 0; a < n; ++a) basis.push_back({"g^" + std::to_string(a), {}});
  HopfData h;
  h.name = "group algebra of Z_" + std::to_string(order);
  h.obj = GradedObject::make(cat, basis);
  const GradedObject aa = tensor(h.obj, h.obj);
  const GradedObject unit = GradedObject::unit(cat);
  Morphism mu = Morphism::zero(aa, h.obj);
  Morphism Delta = Morphism::zero(h.obj, aa);
  Morphism eps = Morphism::zero(h.obj, unit);
  Morphism S = Morphism::zero(h.obj, h.obj);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mu.set((a + b) % n, a * n + b, Scalar::one(f));
    Delta.set(a * n + a, a, Scalar::one(f));
    eps.set(0, a, Scalar::one(f));
    S.set((n - a) % n, a, Scalar::one(f));
  }
  Morphism eta = Morphism::zero(unit, h.obj);
  eta.set(0, 0, Scalar::one(f));
  h.mu = mu;
  h.eta = eta;
  h.Delta = Delta;
  h.eps = eps;
  h.S = S;
  h.Sinv = S;
  h.variant = StructureVariant::Hopf;
  return h;
}

DyHopfData fermionicDyHopf() {
  const HopfData a = cyclicGroupAlgebra(2);
  const CategoryRef cat = a.category();
  const FieldTag f = cat->field();
  const Scalar one = Scalar::one(f);
  const GradedObject carrier = GradedObject::make(cat, {{"1", {}}, {"x", {}}});
  const GradedObject unit = GradedObject::unit(cat);
  const GradedObject bb = tensor(carrier, carrier);

  Morphism mu = Morphism::zero(bb, carrier);
  mu.set(0, 0, one);
  mu.set(1, 1, one);
  mu.set(1, 2, one);
  Morphism eta = Morphism::zero(unit, carrier);
  eta.set(0, 0, one);
  Morphism Delta = Morphism::zero(carrier, bb);
  Delta.set(0, 0, one);
  Delta.set(2, 1, one);
  Delta.set(1, 1, one);
  Morphism eps = Morphism::zero(carrier, unit);
  eps.set(0, 0, one);
  Morphism S = Morphism::zero(carrier, carrier);
  S.set(0, 0, one);
  S.set(1, 1, -one);

  HopfData h;
  h.name = "fermionic line";
  h.obj = carrier;
  h.mu = mu;
  h.eta = eta;
  h.Delta = Delta;
  h.eps = eps;
  h.S = S;
  h.Sinv = S;
  h.variant = StructureVariant::Hopf;

  Morphism action = Morphism::zero(tensor(carrier, a.obj), carrier);
  action.set(0, 0, one);
  action.set(0, 1, one);
  action.set(1, 2, one);
  action.set(1, 3, -one);
  Morphism coaction = Morphism::zero(carrier, tensor(carrier, a.obj));
  coaction.set(0, 0, one);
  coaction.set(3, 1, one);

  CrossedModuleData mod;
  mod.carrier = carrier;
  mod.action = action;
  mod.coaction = coaction;
  mod.variant = CrossedVariant::RightRight;
  mod.over = a;
  return DyHopfData{h, mod};
}

QuasitriangularData kznQuantumGroup(long order) {
  const HopfData h = cyclicGroupAlgebra(order);
  const int n = static_cast<int>(order);
  const FieldTag f = h.category()->field();
  const Scalar q = Scalar::q(f);
  const Scalar invN = Scalar::rational(f, 1, order);
  Morphism R = Morphism::zero(GradedObject::unit(h.category()), tensor(h.obj, h.obj));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      R.set(a * n + b, 0, q.pow(static_cast<long>(a) * b) * invN);
  return makeQuasitriangular(h, h.requireDelta(), h.requireS(), R);
}

ColumnFilter degreeWindow(long bound) {
  return [bound](const GradedObject& dom, int col) {
    long pos = 0;
    long neg = 0;
    for (long c : dom.at(col).grade) {
      if (c > 0)
        pos += c;
      else
        neg += c;
    }
    return pos <= bound && neg >= -bound;
  };
}

}  // namespace braided
