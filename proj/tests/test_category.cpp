#include <doctest.h>

#include <random>
#include <vector>

#include "braided/morphism.hpp"

using namespace braided;

namespace {

const FieldTag QQ{};

// Z-graded line category with chi(1,1) = q
CategoryRef qlineCat() {
  return makeCategory(GradingGroup{{0}}, QQ, {{Scalar::q(QQ)}});
}

// Z-graded with chi(1,1) = -1
CategoryRef superCat() {
  return makeCategory(GradingGroup{{0}}, QQ, {{-Scalar::one(QQ)}});
}

GradedObject lineObj(const CategoryRef& c, const std::string& base, long grade, int dim) {
  std::vector<BasisElement> basis;
  for (int i = 0; i < dim; ++i)
    basis.push_back({base + std::to_string(i), Grade{grade + i}});
  return GradedObject::make(c, basis);
}

Morphism randomMorphism(std::minstd_rand& rng, const GradedObject& dom, const GradedObject& cod) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Morphism f = Morphism::zero(dom, cod);
  for (int r = 0; r < cod.dim(); ++r)
    for (int c = 0; c < dom.dim(); ++c)
      if (cod.at(r).grade == dom.at(c).grade)
        f.set(r, c, Scalar::integer(QQ, coeff(rng)));
  return f;
}

}  // namespace

TEST_CASE("composition against the dense matrix oracle") {
  auto cat = qlineCat();
  GradedObject x = lineObj(cat, "x", 0, 3), y = lineObj(cat, "y", 0, 3), z = lineObj(cat, "z", 0, 3);
  std::minstd_rand rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    Morphism f = randomMorphism(rng, x, y), g = randomMorphism(rng, y, z);
    Morphism gf = f.then(g);
    for (int r = 0; r < z.dim(); ++r)
      for (int c = 0; c < x.dim(); ++c) {
        Scalar acc = Scalar::zero(QQ);
        for (int k = 0; k < y.dim(); ++k) acc = acc + g.at(r, k) * f.at(k, c);
        CHECK(gf.at(r, c) == acc);
      }
  }
}

TEST_CASE("strict tensor with unit elision") {
  auto cat = qlineCat();
  GradedObject one = GradedObject::unit(cat);
  GradedObject x = lineObj(cat, "x", 1, 2), y = lineObj(cat, "y", -1, 2), z = lineObj(cat, "z", 0, 2);
  CHECK(tensor(one, x) == x);
  CHECK(tensor(x, one) == x);
  CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
  CHECK(tensor(x, y).at(1).label == "x0⊗y1");
  CHECK(tensor(x, y).at(1).grade == Grade{1});

  std::minstd_rand rng(7);
  Morphism f = randomMorphism(rng, x, x), g = randomMorphism(rng, y, y);
  Morphism f2 = randomMorphism(rng, x, x), g2 = randomMorphism(rng, y, y);
  // interchange law
  CHECK(tensorHom(f, g).then(tensorHom(f2, g2)) == tensorHom(f.then(f2), g.then(g2)));
  // tensoring with the unit identity is the identity operation
  CHECK(tensorHom(Morphism::identity(one), f) == f);
  CHECK(tensorHom(f, Morphism::identity(one)) == f);
}

TEST_CASE("braiding is the bicharacter and satisfies hexagons, naturality, YBE") {
  auto cat = qlineCat();
  GradedObject x = lineObj(cat, "x", 1, 2), y = lineObj(cat, "y", -1, 2), z = lineObj(cat, "z", 2, 2);
  Scalar q = Scalar::q(QQ);

  // value on graded lines
  Morphism psi = braiding(x, y);
  CHECK(psi.at(0 * x.dim() + 1, 1 * y.dim() + 0) == q.pow(2 * -1));  // x1 (grade 2), y0 (grade -1)

  // inverse composes to the identity both ways
  CHECK(braiding(x, y).then(braiding(y, x, true)) == Morphism::identity(tensor(x, y)));
  CHECK(braiding(y, x, true).then(braiding(x, y)) == Morphism::identity(tensor(y, x)));

  // hexagons
  CHECK(braiding(tensor(x, y), z) ==
        tensorHom(Morphism::identity(x), braiding(y, z)).then(tensorHom(braiding(x, z), Morphism::identity(y))));
  CHECK(braiding(x, tensor(y, z)) ==
        tensorHom(braiding(x, y), Morphism::identity(z)).then(tensorHom(Morphism::identity(y), braiding(x, z))));

  // naturality on random grade-preserving maps
  std::minstd_rand rng(11);
  Morphism f = randomMorphism(rng, x, x), g = randomMorphism(rng, y, y);
  CHECK(tensorHom(f, g).then(braiding(x, y)) == braiding(x, y).then(tensorHom(g, f)));

  // Yang-Baxter on three strands
  auto idm = [](const GradedObject& o) { return Morphism::identity(o); };
  Morphism lhs = tensorHom(braiding(x, y), idm(z))
                     .then(tensorHom(idm(y), braiding(x, z)))
                     .then(tensorHom(braiding(y, z), idm(x)));
  Morphism rhs = tensorHom(idm(x), braiding(y, z))
                     .then(tensorHom(braiding(x, z), idm(y)))
                     .then(tensorHom(idm(z), braiding(x, y)));
  CHECK(lhs == rhs);

  // odd line braids with the sign -1
  auto sc = superCat();
  GradedObject odd = GradedObject::make(sc, {{"v", Grade{1}}});
  CHECK(braiding(odd, odd).at(0, 0) == -Scalar::one(QQ));
}

TEST_CASE("bicharacter consistency on finite gradings is enforced") {
  CHECK_THROWS_AS(makeCategory(GradingGroup{{2}}, QQ, {{Scalar::q(QQ)}}), DomainError);
  // -1 squares to 1, so it is fine on Z_2
  auto c = makeCategory(GradingGroup{{2}}, QQ, {{-Scalar::one(QQ)}});
  CHECK(c->chi.value(Grade{1}, Grade{3}) == -Scalar::one(QQ));
  CHECK(c->chi.value(Grade{1}, Grade{2}) == Scalar::one(QQ));
}

TEST_CASE("duals: snakes, transpose, tensor-dual pairing") {
  auto cat = qlineCat();
  GradedObject x = lineObj(cat, "x", 1, 3), y = lineObj(cat, "y", -2, 2);
  GradedObject xd = dualObject(x);
  CHECK(xd.at(0).label == "x0^");
  CHECK(xd.at(0).grade == Grade{-1});

  auto idm = [](const GradedObject& o) { return Morphism::identity(o); };
  // (ev ⊗ X) ∘ (X ⊗ coev) = id
  CHECK(tensorHom(idm(x), coevaluation(x)).then(tensorHom(evaluation(x), idm(x))) == idm(x));
  // (X^ ⊗ ev) ∘ (coev ⊗ X^) = id
  CHECK(tensorHom(coevaluation(x), idm(xd)).then(tensorHom(idm(xd), evaluation(x))) == idm(xd));

  // transpose oracle and contravariance
  std::minstd_rand rng(3);
  Morphism f = randomMorphism(rng, x, x), g = randomMorphism(rng, x, x);
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.dim(); ++c) CHECK(dualMorphism(f).at(c, r) == f.at(r, c));
  CHECK(dualMorphism(f.then(g)) == dualMorphism(g).then(dualMorphism(f)));

  // (X⊗Y)^dual agrees with Y^dual ⊗ X^dual through the canonical relabelling
  GradedObject xy = tensor(x, y);
  GradedObject lhsObj = dualObject(xy), rhsObj = tensor(dualObject(y), dualObject(x));
  Morphism perm = Morphism::zero(lhsObj, rhsObj);
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j)
      perm.set(j * x.dim() + i, i * y.dim() + j, Scalar::one(QQ));
  Morphism viaFactors = tensorHom(idm(xy), perm)
                            .then(tensorHom(tensorHom(idm(x), evaluation(y)), idm(dualObject(x))))
                            .then(evaluation(x));
  CHECK(evaluation(xy) == viaFactors);
}

TEST_CASE("idempotent splitting") {
  auto cat = qlineCat();
  GradedObject x = GradedObject::make(
      cat, {{"a", Grade{0}}, {"b", Grade{0}}, {"c", Grade{1}}});
  Morphism e = Morphism::zero(x, x);
  // projector onto span(a+b, c): e(a) = 0, e(b) = a + b, e(c) = c
  e.set(0, 1, Scalar::one(QQ));
  e.set(1, 1, Scalar::one(QQ));
  e.set(2, 2, Scalar::one(QQ));
  CHECK(e.then(e) == e);
  SplitIdempotent s = splitIdempotent(e);
  CHECK(s.image.dim() == 2);
  // greedy pivoting picks the first independent columns: b then c
  CHECK(s.image.at(0).label == "b");
  CHECK(s.image.at(1).label == "c");
  CHECK(s.inject.then(s.project) == Morphism::identity(s.image));
  CHECK(s.project.then(s.inject) == e);

  Morphism notIdem = Morphism::zero(x, x);
  notIdem.set(0, 1, Scalar::one(QQ));
  CHECK_THROWS_AS(splitIdempotent(notIdem), DomainError);
}

TEST_CASE("inversion and linear solving") {
  auto cat = qlineCat();
  GradedObject x = lineObj(cat, "x", 0, 3);
  std::minstd_rand rng(19);
  Morphism f = randomMorphism(rng, x, x);
  // force invertibility: add 3 on the diagonal
  for (int i = 0; i < 3; ++i) f.add(i, i, Scalar::integer(QQ, 3));
  auto inv = invertMorphism(f);
  REQUIRE(inv.has_value());
  CHECK(f.then(*inv) == Morphism::identity(x));
  CHECK(inv->then(f) == Morphism::identity(x));

  Morphism zero = Morphism::zero(x, x);
  CHECK(!invertMorphism(zero).has_value());

  // solve f ∘ T = g for T
  Morphism g = randomMorphism(rng, x, x);
  auto t = solveLinear([&](const Morphism& m) { return m.then(f); }, x, x, g);
  REQUIRE(t.has_value());
  CHECK(t->then(f) == g);

  // inconsistent system: zero ∘ T = nonzero
  Morphism nonzero = Morphism::identity(x);
  CHECK(!solveLinear([&](const Morphism& m) { return m.then(zero); }, x, x, nonzero).has_value());
}

TEST_CASE("grade preservation is enforced") {
  auto cat = qlineCat();
  GradedObject x = GradedObject::make(cat, {{"a", Grade{0}}, {"b", Grade{1}}});
  Morphism f = Morphism::zero(x, x);
  CHECK_THROWS_AS(f.set(0, 1, Scalar::one(QQ)), ShapeError);
  CHECK_NOTHROW(f.set(1, 1, Scalar::one(QQ)));
}
