#include <doctest.h>

#include <vector>

#include "braided/crossed.hpp"
#include "braided/examples.hpp"

using namespace braided;

namespace {

const CrossedVariant kModuleComoduleVariants[] = {
    CrossedVariant::RightRight, CrossedVariant::LeftRight, CrossedVariant::RightLeft,
    CrossedVariant::LeftLeft};

bool onlyCompatibilityFails(const CheckReport& r) {
  if (r.ok()) return false;
  for (const auto& f : r.failures)
    if (f.identity != "compatibility") return false;
  return true;
}

Morphism crossedMapActionGap(const CrossedModuleData& from, const CrossedModuleData& to,
                             const Morphism& f) {
  const Morphism idA = Morphism::identity(from.over.obj);
  return tensorHom(f, idA).then(to.action) - from.action.then(f);
}

Morphism crossedMapCoactionGap(const CrossedModuleData& from, const CrossedModuleData& to,
                               const Morphism& f) {
  const Morphism idA = Morphism::identity(from.over.obj);
  return f.then(to.requireCoaction()) - from.requireCoaction().then(tensorHom(f, idA));
}

}  // namespace

TEST_CASE("trivial structures are crossed modules in every variant") {
  HopfData sl = anyonicLine(2);
  HopfData g = cyclicGroupAlgebra(3);
  for (CrossedVariant v : kModuleComoduleVariants) {
    CAPTURE(crossedVariantTag(v));
    CheckReport a = checkCrossed(trivialCrossed(sl.obj, sl, v));
    CAPTURE(a.str());
    CHECK(a.ok());
    CheckReport b = checkCrossed(trivialCrossed(g.obj, g, v));
    CAPTURE(b.str());
    CHECK(b.ok());
  }
}

TEST_CASE("adjoint and coadjoint structures are crossed modules") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    CheckReport rad = checkCrossed(adjointCrossed(a));
    CAPTURE(rad.str());
    CHECK(rad.ok());
    CheckReport rco = checkCrossed(coadjointCrossed(a));
    CAPTURE(rco.str());
    CHECK(rco.ok());
  }
}

TEST_CASE("regular action with regular coaction fails only the compatibility") {
  HopfData a = anyonicLine(2);
  CrossedModuleData x;
  x.carrier = a.obj;
  x.action = a.requireMu();
  x.coaction = a.requireDelta();
  x.variant = CrossedVariant::RightRight;
  x.over = a;
  CheckReport r = checkCrossed(x);
  CAPTURE(r.str());
  CHECK(onlyCompatibilityFails(r));
}

TEST_CASE("tensoring with the trivial module on the unit changes nothing") {
  HopfData a = anyonicLine(3);
  CrossedModuleData ad = adjointCrossed(a);
  CrossedModuleData one = trivialCrossed(GradedObject::unit(a.category()), a);
  CrossedModuleData t = crossedTensor(ad, one);
  CHECK(t.carrier == ad.carrier);
  CHECK(t.action == ad.action);
  CHECK(t.requireCoaction() == ad.requireCoaction());
}

TEST_CASE("tensor products of crossed modules are crossed modules") {
  HopfData a = anyonicLine(2);
  CrossedModuleData ad = adjointCrossed(a);
  CheckReport r = checkCrossed(crossedTensor(ad, ad));
  CAPTURE(r.str());
  CHECK(r.ok());
  // also in the left-right variant, through the conversion
  CrossedModuleData lr = crossedConvert(ad, CrossedConvertRule::ToLeftRight);
  CheckReport rl = checkCrossed(crossedTensor(lr, lr));
  CAPTURE(rl.str());
  CHECK(rl.ok());
}

TEST_CASE("the crossed tensor product is strictly associative") {
  HopfData a = anyonicLine(2);
  CrossedModuleData ad = adjointCrossed(a);
  CrossedModuleData co = coadjointCrossed(a);
  CrossedModuleData tr = trivialCrossed(a.obj, a);
  CrossedModuleData left = crossedTensor(crossedTensor(ad, co), tr);
  CrossedModuleData right = crossedTensor(ad, crossedTensor(co, tr));
  CHECK(left.carrier == right.carrier);
  CHECK(left.action == right.action);
  CHECK(left.requireCoaction() == right.requireCoaction());
}

TEST_CASE("tensor products reject mismatched variants or bases") {
  HopfData a = anyonicLine(2);
  CrossedModuleData ad = adjointCrossed(a);
  CrossedModuleData lr = crossedConvert(ad, CrossedConvertRule::ToLeftRight);
  CHECK_THROWS_AS(crossedTensor(ad, lr), DomainError);
  HopfData b = anyonicLine(3);
  CHECK_THROWS_AS(crossedTensor(ad, adjointCrossed(b)), DomainError);
}

TEST_CASE("crossed braiding of trivial modules is the category braiding") {
  HopfData a = anyonicLine(3);
  CrossedModuleData x = trivialCrossed(a.obj, a);
  CHECK(dyBraiding(x, x) == braiding(a.obj, a.obj));
  CHECK(dyBraiding(x, x, true) == braiding(a.obj, a.obj, true));
}

TEST_CASE("crossed braiding of the adjoint module over the superline is the superswap") {
  // hand computation: the adjoint action kills x both on 1 and on x, so
  // psi(u (x) v) = sum of sign(u, v1) v1 (x) (u <| v2) collapses to the
  // signed flip
  HopfData a = anyonicLine(2);
  CrossedModuleData ad = adjointCrossed(a);
  Morphism psi = dyBraiding(ad, ad);
  const FieldTag f = a.category()->field();
  Morphism expect = Morphism::zero(tensor(a.obj, a.obj), tensor(a.obj, a.obj));
  expect.set(0, 0, Scalar::one(f));
  expect.set(2, 1, Scalar::one(f));   // 1 (x) x -> x (x) 1
  expect.set(1, 2, Scalar::one(f));   // x (x) 1 -> 1 (x) x
  expect.set(3, 3, -Scalar::one(f));  // x (x) x -> -x (x) x
  CHECK(psi == expect);
}

namespace {

bool braidRelationHolds(const CrossedModuleData& x, const CrossedModuleData& y,
                        const CrossedModuleData& z) {
  const Morphism idX = Morphism::identity(x.carrier);
  const Morphism idY = Morphism::identity(y.carrier);
  const Morphism idZ = Morphism::identity(z.carrier);
  Morphism lhs = tensorHom(dyBraiding(x, y), idZ)
                     .then(tensorHom(idY, dyBraiding(x, z)))
                     .then(tensorHom(dyBraiding(y, z), idX));
  Morphism rhs = tensorHom(idX, dyBraiding(y, z))
                     .then(tensorHom(dyBraiding(x, z), idY))
                     .then(tensorHom(idZ, dyBraiding(x, y)));
  return lhs == rhs;
}

}  // namespace

TEST_CASE("crossed braidings are invertible and satisfy the braid relation") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    // the trivial structure is only a crossed module when the double
    // braiding on its support is trivial, which holds on the superline but
    // not on the cubic line, so it only joins the pool there
    std::vector<CrossedModuleData> mods = {adjointCrossed(a), coadjointCrossed(a)};
    if (n == 2) mods.push_back(trivialCrossed(a.obj, a));
    for (size_t i = 0; i < mods.size(); ++i) {
      for (size_t j = 0; j < mods.size(); ++j) {
        CAPTURE(i);
        CAPTURE(j);
        const CrossedModuleData& x = mods[i];
        const CrossedModuleData& y = mods[j];
        CHECK(dyBraiding(x, y).then(dyBraiding(x, y, true)) ==
              Morphism::identity(tensor(x.carrier, y.carrier)));
        CHECK(dyBraiding(x, y, true).then(dyBraiding(x, y)) ==
              Morphism::identity(tensor(y.carrier, x.carrier)));
        for (size_t k = 0; k < mods.size(); ++k) {
          CAPTURE(k);
          CHECK(braidRelationHolds(x, y, mods[k]));
        }
      }
    }
  }
}

TEST_CASE("a non-crossed middle strand breaks the braid relation") {
  // over the cubic line the trivial structure fails the compatibility, and
  // the same obstruction breaks the braid relation when it sits between two
  // modules whose braiding redistributes grades
  HopfData a = anyonicLine(3);
  CrossedModuleData triv = trivialCrossed(a.obj, a);
  CrossedModuleData ad = adjointCrossed(a);
  CHECK(onlyCompatibilityFails(checkCrossed(triv)));
  CHECK_FALSE(braidRelationHolds(ad, triv, ad));
  // with the trivial strand on the outside the relation still holds
  CHECK(braidRelationHolds(triv, ad, ad));
  CHECK(braidRelationHolds(ad, ad, triv));
}

TEST_CASE("the crossed braiding is a morphism of crossed modules") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    CrossedModuleData x = adjointCrossed(a);
    CrossedModuleData y = coadjointCrossed(a);
    CrossedModuleData xy = crossedTensor(x, y);
    CrossedModuleData yx = crossedTensor(y, x);
    Morphism psi = dyBraiding(x, y);
    CHECK(crossedMapActionGap(xy, yx, psi).isZero());
    CHECK(crossedMapCoactionGap(xy, yx, psi).isZero());
  }
}

TEST_CASE("the crossed braiding is natural against crossed-module maps") {
  HopfData a = anyonicLine(3);
  CrossedModuleData ad = adjointCrossed(a);
  CrossedModuleData co = coadjointCrossed(a);
  InvariantsData inv = piAndInvariants(smash(a, ad));
  CrossedModuleData big = bimoduleAdjointAction(smash(a, ad));
  const Morphism& i = inv.split.inject;
  // i : invariants -> big is a map of crossed modules
  CHECK(crossedMapActionGap(inv.invariants, big, i).isZero());
  CHECK(crossedMapCoactionGap(inv.invariants, big, i).isZero());
  Morphism lhs = tensorHom(i, Morphism::identity(co.carrier)).then(dyBraiding(big, co));
  Morphism rhs = dyBraiding(inv.invariants, co)
                     .then(tensorHom(Morphism::identity(co.carrier), i));
  CHECK(lhs == rhs);
  Morphism lhs2 = tensorHom(Morphism::identity(co.carrier), i).then(dyBraiding(co, big));
  Morphism rhs2 = dyBraiding(co, inv.invariants)
                      .then(tensorHom(i, Morphism::identity(co.carrier)));
  CHECK(lhs2 == rhs2);
}

TEST_CASE("generalized braiding of a module past a comodule") {
  HopfData a = anyonicLine(2);
  ModuleData rm = regularModule(a, Side::Right);
  ComoduleData rc = regularComodule(a, Side::Right);
  const Morphism idA = Morphism::identity(a.obj);

  SUBCASE("trivial structures give the category braiding") {
    ModuleData tm = trivialModule(a.obj, a, Side::Right);
    ComoduleData tc = trivialComodule(a.obj, a, Side::Right);
    CHECK(psiGeneralized(tm, tc) == braiding(a.obj, a.obj));
  }

  SUBCASE("hexagon over the module leg") {
    Morphism one = psiGeneralized(rm, rc);
    CHECK(psiGeneralized(tensorModule(rm, rm), rc) ==
          tensorHom(idA, one).then(tensorHom(one, idA)));
  }

  SUBCASE("hexagon over the comodule leg") {
    Morphism one = psiGeneralized(rm, rc);
    CHECK(psiGeneralized(rm, tensorComodule(rc, rc)) ==
          tensorHom(one, idA).then(tensorHom(idA, one)));
  }

  SUBCASE("both structures from one crossed module reproduce its braiding") {
    CrossedModuleData ad = adjointCrossed(a);
    CHECK(psiGeneralized(ad.module(), ad.comodule()) == dyBraiding(ad, ad));
  }
}

TEST_CASE("conversion to the left action and back is the identity") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    CrossedModuleData ad = adjointCrossed(anyonicLine(n));
    CrossedModuleData lr = crossedConvert(ad, CrossedConvertRule::ToLeftRight);
    CheckReport r = checkCrossed(lr);
    CAPTURE(r.str());
    CHECK(r.ok());
    CrossedModuleData back = crossedConvert(lr, CrossedConvertRule::ToLeftRight);
    CHECK(back.action == ad.action);
    CHECK(back.requireCoaction() == ad.requireCoaction());
    CHECK(back.variant == CrossedVariant::RightRight);
    CHECK(back.over.requireMu() == ad.over.requireMu());
  }
}

TEST_CASE("inverting the action twice is the identity") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    CrossedModuleData ad = adjointCrossed(anyonicLine(n));
    CrossedModuleData lr = crossedConvert(ad, CrossedConvertRule::ToLeftRight);
    CrossedModuleData inv = crossedConvert(lr, CrossedConvertRule::InvertAction);
    CheckReport r = checkCrossed(inv);
    CAPTURE(r.str());
    CHECK(r.ok());
    CrossedModuleData back = crossedConvert(inv, CrossedConvertRule::InvertAction);
    CHECK(back.action == lr.action);
    CHECK(back.over.requireS() == lr.over.requireS());
  }
}

TEST_CASE("coaction-side transports satisfy the mirrored compatibility") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    CrossedModuleData ad = adjointCrossed(a);
    // flip the coaction with the inverse braiding, onto the right-left variant
    CrossedModuleData rl;
    rl.carrier = ad.carrier;
    rl.action = ad.action;
    rl.coaction = ad.requireCoaction().then(braiding(ad.carrier, a.obj, true));
    rl.variant = CrossedVariant::RightLeft;
    rl.over = opposite(a, OppositeKind::Coalgebra);
    rl.carrier = rl.carrier.withCategory(rl.over.category());
    rl.action = rl.action.withCategory(rl.over.category());
    rl.coaction = rl.coaction->withCategory(rl.over.category());
    CheckReport r = checkCrossed(rl);
    CAPTURE(r.str());
    CHECK(r.ok());

    // flipping both sides lands on the left-left variant over the same base;
    // the antipode decorations keep all structure maps over A itself
    const Morphism idY = Morphism::identity(ad.carrier);
    CrossedModuleData ll;
    ll.carrier = ad.carrier;
    ll.action = tensorHom(a.requireSinv(), idY)
                    .then(braiding(a.obj, ad.carrier, true))
                    .then(ad.action);
    ll.coaction = ad.requireCoaction()
                      .then(braiding(ad.carrier, a.obj))
                      .then(tensorHom(a.requireS(), idY));
    ll.variant = CrossedVariant::LeftLeft;
    ll.over = a;
    CheckReport r2 = checkCrossed(ll);
    CAPTURE(r2.str());
    CHECK(r2.ok());
  }
}

TEST_CASE("the square antipode intertwines the two left-left transports") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    CrossedModuleData ad = adjointCrossed(a);
    const Morphism idY = Morphism::identity(ad.carrier);
    const Morphism idA = Morphism::identity(a.obj);
    CrossedModuleData f1;
    f1.carrier = ad.carrier;
    f1.action = tensorHom(a.requireSinv(), idY)
                    .then(braiding(a.obj, ad.carrier, true))
                    .then(ad.action);
    f1.coaction = ad.requireCoaction()
                      .then(braiding(ad.carrier, a.obj))
                      .then(tensorHom(a.requireS(), idY));
    f1.variant = CrossedVariant::LeftLeft;
    f1.over = a;
    CrossedModuleData f2;
    f2.carrier = ad.carrier;
    f2.action = tensorHom(a.requireS(), idY)
                    .then(braiding(a.obj, ad.carrier))
                    .then(ad.action);
    f2.coaction = ad.requireCoaction()
                      .then(braiding(ad.carrier, a.obj, true))
                      .then(tensorHom(a.requireSinv(), idY));
    f2.variant = CrossedVariant::LeftLeft;
    f2.over = a;
    CHECK(checkCrossed(f1).ok());
    CHECK(checkCrossed(f2).ok());
    Morphism sigma = squareAntipode(ad);
    CHECK(tensorHom(idA, sigma).then(f2.action) == f1.action.then(sigma));
    CHECK(f1.coaction->then(tensorHom(idA, sigma)) == sigma.then(*f2.coaction));
  }
}

TEST_CASE("dualizing crossed modules") {
  SUBCASE("the dual of the adjoint module is a crossed module of the same variant") {
    for (long n : {2L, 3L}) {
      CAPTURE(n);
      CrossedModuleData ad = adjointCrossed(anyonicLine(n));
      CrossedModuleData d = crossedConvert(ad, CrossedConvertRule::Dualize);
      CHECK(d.variant == CrossedVariant::RightRight);
      CHECK(d.carrier == dualObject(ad.carrier));
      CheckReport r = checkCrossed(d);
      CAPTURE(r.str());
      CHECK(r.ok());
    }
  }

  SUBCASE("transposing a right-left module lands in the left-right variant") {
    HopfData a = anyonicLine(2);
    CrossedModuleData ad = adjointCrossed(a);
    CrossedModuleData rl;
    rl.carrier = ad.carrier;
    rl.action = ad.action;
    rl.coaction = ad.requireCoaction().then(braiding(ad.carrier, a.obj, true));
    rl.variant = CrossedVariant::RightLeft;
    rl.over = opposite(a, OppositeKind::Coalgebra);
    rl.carrier = rl.carrier.withCategory(rl.over.category());
    rl.action = rl.action.withCategory(rl.over.category());
    rl.coaction = rl.coaction->withCategory(rl.over.category());
    CrossedModuleData d = crossedConvert(rl, CrossedConvertRule::Dualize);
    CHECK(d.variant == CrossedVariant::LeftRight);
    CheckReport r = checkCrossed(d);
    CAPTURE(r.str());
    CHECK(r.ok());
  }
}

TEST_CASE("pairing the coaction against a dual bialgebra") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    PairingData p = anyonicLinePairing(n);
    CrossedModuleData ad = adjointCrossed(a);
    CrossedModuleData right = crossedConvertViaPairing(ad, p.h, p.rho, Side::Right);
    CheckReport rr = checkCrossed(right);
    CAPTURE(rr.str());
    CHECK(rr.ok());
    CrossedModuleData left = crossedConvertViaPairing(ad, p.h, p.rho, Side::Left);
    CheckReport rl = checkCrossed(left);
    CAPTURE(rl.str());
    CHECK(rl.ok());
    CHECK_THROWS_AS(
        crossedConvertViaPairing(crossedConvert(ad, CrossedConvertRule::ToLeftRight), p.h,
                                 p.rho.withCategory(
                                     crossedConvert(ad, CrossedConvertRule::ToLeftRight)
                                         .over.category())),
        DomainError);
  }
}

TEST_CASE("hopf bimodule checks and the smash product") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    CrossedModuleData ad = adjointCrossed(a);
    HopfBimoduleData sm = smash(a, ad);
    CheckReport r = checkHopfBimodule(sm);
    CAPTURE(r.str());
    CHECK(r.ok());
    CheckReport rad = checkCrossed(bimoduleAdjointAction(sm));
    CAPTURE(rad.str());
    CHECK(rad.ok());
    CheckReport rco = checkCrossed(bimoduleAdjointCoaction(sm));
    CAPTURE(rco.str());
    CHECK(rco.ok());
  }
}

TEST_CASE("a broken bimodule is rejected by the idempotent guard") {
  HopfData a = anyonicLine(2);
  HopfBimoduleData sm = smash(a, adjointCrossed(a));
  sm.actLeft = sm.actLeft.scaled(Scalar::integer(a.category()->field(), 2));
  CHECK_THROWS_AS(piAndInvariants(sm), DomainError);
}

TEST_CASE("invariants of the regular bimodule reduce to the unit object") {
  HopfData a = anyonicLine(2);
  // the regular bimodule is the smash with the trivial module on the unit
  HopfBimoduleData reg = smash(a, trivialCrossed(GradedObject::unit(a.category()), a));
  CHECK(reg.actLeft == a.requireMu());
  CHECK(reg.coactRight == a.requireDelta());
  InvariantsData inv = piAndInvariants(reg);
  // the projector is eta o eps in disguise: rank one
  CHECK(inv.invariants.carrier.dim() == 1);
  CHECK(inv.pi == a.requireEps().then(a.requireEta()));
  CheckReport r = checkCrossed(inv.invariants);
  CAPTURE(r.str());
  CHECK(r.ok());
}

TEST_CASE("invariants of a smash product recover the crossed module exactly") {
  HopfData a = anyonicLine(2);
  HopfData b = anyonicLine(3);
  const CrossedModuleData samples[] = {adjointCrossed(a), coadjointCrossed(a),
                                       adjointCrossed(b), trivialCrossed(a.obj, a)};
  for (const CrossedModuleData& y : samples) {
    HopfBimoduleData sm = smash(y.over, y);
    InvariantsData inv = piAndInvariants(sm);
    REQUIRE(inv.invariants.carrier.dim() == y.carrier.dim());
    const FieldTag f = y.over.category()->field();
    // the canonical identification sends v to 1 (x) v, the unit leg of the
    // smash carrier; the split must give exactly that injection
    Morphism embed = Morphism::zero(inv.invariants.carrier, sm.carrier);
    for (int v = 0; v < y.carrier.dim(); ++v) embed.set(v, v, Scalar::one(f));
    CHECK(inv.split.inject == embed);
    // transporting the invariants structure through the index-preserving
    // identification gives back the original structure maps
    Morphism toInv = Morphism::zero(y.carrier, inv.invariants.carrier);
    Morphism fromInv = Morphism::zero(inv.invariants.carrier, y.carrier);
    for (int v = 0; v < y.carrier.dim(); ++v) {
      toInv.set(v, v, Scalar::one(f));
      fromInv.set(v, v, Scalar::one(f));
    }
    const Morphism idA = Morphism::identity(y.over.obj);
    CHECK(tensorHom(toInv, idA).then(inv.invariants.action).then(fromInv) == y.action);
    CHECK(toInv.then(inv.invariants.requireCoaction()).then(tensorHom(fromInv, idA)) ==
          y.requireCoaction());
  }
}

TEST_CASE("projector onto invariants is a crossed-module map between the two structures") {
  HopfData a = anyonicLine(3);
  HopfBimoduleData sm = smash(a, adjointCrossed(a));
  CrossedModuleData xad = bimoduleAdjointAction(sm);
  CrossedModuleData xco = bimoduleAdjointCoaction(sm);
  Morphism pi = leftInvariantsIdempotent(sm);
  CHECK(pi.then(pi) == pi);
  CHECK(crossedMapActionGap(xco, xad, pi).isZero());
  CHECK(crossedMapCoactionGap(xco, xad, pi).isZero());
}

TEST_CASE("relative antipode of the regular bimodule is the antipode") {
  HopfData a = anyonicLine(3);
  HopfBimoduleData reg = smash(a, trivialCrossed(GradedObject::unit(a.category()), a));
  CHECK(relativeAntipode(reg) == a.requireS());
  CHECK(relativeAntipodeInverse(reg) == a.requireSinv());
}

TEST_CASE("relative antipode identities on a smash product") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    HopfBimoduleData sm = smash(a, adjointCrossed(a));
    CheckReport r = checkRelativeAntipode(sm);
    CAPTURE(r.str());
    CHECK(r.ok());
  }
}

TEST_CASE("square antipode properties") {
  SUBCASE("on the adjoint module it is the antipode squared") {
    for (long n : {2L, 3L}) {
      CAPTURE(n);
      HopfData a = anyonicLine(n);
      CHECK(squareAntipode(adjointCrossed(a)) == a.requireS().then(a.requireS()));
    }
  }

  SUBCASE("on a trivial module it is the identity") {
    HopfData a = anyonicLine(3);
    CHECK(squareAntipode(trivialCrossed(a.obj, a)) == Morphism::identity(a.obj));
  }

  SUBCASE("it is invertible") {
    for (long n : {2L, 3L}) {
      CAPTURE(n);
      CrossedModuleData ad = adjointCrossed(anyonicLine(n));
      CHECK(squareAntipode(ad).then(squareAntipodeInverse(ad)) ==
            Morphism::identity(ad.carrier));
      CHECK(squareAntipodeInverse(ad).then(squareAntipode(ad)) ==
            Morphism::identity(ad.carrier));
    }
  }

  SUBCASE("tensor rule mixes the crossed and category braidings") {
    for (long n : {2L, 3L}) {
      CAPTURE(n);
      CrossedModuleData ad = adjointCrossed(anyonicLine(n));
      CrossedModuleData tt = crossedTensor(ad, ad);
      Morphism viaCrossed =
          dyBraiding(ad, ad).then(squareAntipode(tt)).then(dyBraiding(ad, ad));
      Morphism viaPlain =
          braiding(ad.carrier, ad.carrier)
              .then(tensorHom(squareAntipode(ad), squareAntipode(ad)))
              .then(braiding(ad.carrier, ad.carrier));
      CHECK(viaCrossed == viaPlain);
    }
  }

  SUBCASE("the squared relative antipode restricts to it on invariants") {
    for (long n : {2L, 3L}) {
      CAPTURE(n);
      HopfData a = anyonicLine(n);
      HopfBimoduleData sm = smash(a, adjointCrossed(a));
      InvariantsData inv = piAndInvariants(sm);
      Morphism s2 = relativeAntipode(sm).then(relativeAntipode(sm));
      Morphism sigma = squareAntipode(inv.invariants);
      CHECK(inv.split.inject.then(s2) == sigma.then(inv.split.inject));
      CHECK(s2.then(inv.split.project) == inv.split.project.then(sigma));
    }
  }
}

TEST_CASE("categorical rank of plain objects") {
  HopfData a = anyonicLine(2);
  const FieldTag f = a.category()->field();
  CHECK(rankOf(GradedObject::unit(a.category())) == Scalar::one(f));
  GradedObject odd = GradedObject::make(a.category(), {{"v", Grade{1}}});
  CHECK(rankOf(odd) == -Scalar::one(f));
  CHECK(rankOf(a.obj) == Scalar::zero(f));
}

TEST_CASE("crossed rank agrees between both square-antipode insertions") {
  for (long n : {2L, 3L}) {
    CAPTURE(n);
    HopfData a = anyonicLine(n);
    CrossedModuleData ad = adjointCrossed(a);
    const FieldTag f = a.category()->field();
    // two routes spelled out: sigma inserted on the dual leg and on the
    // plain leg of the closed braiding diagram
    CrossedModuleData dual = dualCrossed(ad);
    Morphism coev = coevaluation(ad.carrier);
    Morphism ev = evaluation(ad.carrier);
    Morphism psi = braiding(dual.carrier, ad.carrier);
    Morphism viaDualLeg =
        coev.then(tensorHom(squareAntipode(dual), Morphism::identity(ad.carrier)))
            .then(psi)
            .then(ev);
    Morphism viaPlainLeg =
        coev.then(tensorHom(Morphism::identity(dual.carrier), squareAntipode(ad)))
            .then(psi)
            .then(ev);
    CHECK(viaDualLeg == viaPlainLeg);
    CHECK(viaDualLeg == coev.then(dyBraiding(dual, ad)).then(ev));
    CHECK(rankCrossed(ad) == Scalar::zero(f));
    CHECK(viaDualLeg.at(0, 0) == Scalar::zero(f));
  }
}
