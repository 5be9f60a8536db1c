#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braided/scalar.hpp"

namespace braided {

// Finite product of cyclic factors; modulus 0 means Z, m >= 1 means Z_m.
struct GradingGroup {
  std::vector<long> moduli;
  std::size_t rank() const { return moduli.size(); }
  bool operator==(const GradingGroup& o) const = default;
};

using Grade = std::vector<long>;

Grade reduceGrade(const GradingGroup& g, Grade v);
Grade addGrades(const GradingGroup& g, const Grade& a, const Grade& b);
Grade negateGrade(const GradingGroup& g, const Grade& a);
Grade zeroGrade(const GradingGroup& g);
std::string gradeStr(const Grade& a);

// Bicharacter given by its values on generator pairs, extended
// multiplicatively to the whole group.
class Bicharacter {
 public:
  Bicharacter(GradingGroup group, FieldTag field, std::vector<std::vector<Scalar>> generatorValues);
  const GradingGroup& group() const { return group_; }
  const FieldTag& field() const { return field_; }
  const std::vector<std::vector<Scalar>>& generatorValues() const { return gen_; }
  Scalar value(const Grade& a, const Grade& b) const;
  // chi_bar(a,b) := chi(b,a)^{-1}; realizes the inverse-braiding category
  Bicharacter inverted() const;
  bool operator==(const Bicharacter& o) const;

 private:
  GradingGroup group_;
  FieldTag field_;
  std::vector<std::vector<Scalar>> gen_;
};

struct Category {
  Bicharacter chi;
  const GradingGroup& group() const { return chi.group(); }
  const FieldTag& field() const { return chi.field(); }
  bool operator==(const Category& o) const { return chi == o.chi; }
};

using CategoryRef = std::shared_ptr<const Category>;

CategoryRef makeCategory(GradingGroup group, FieldTag field,
                         std::vector<std::vector<Scalar>> chiGeneratorValues);
CategoryRef inverseBraidingCategory(const CategoryRef& c);

struct BasisElement {
  std::string label;
  Grade grade;
  bool operator==(const BasisElement& o) const = default;
};

// Finite-dimensional graded object with an ordered, labelled basis.
class GradedObject {
 public:
  GradedObject() = default;
  static GradedObject unit(CategoryRef cat);
  static GradedObject make(CategoryRef cat, std::vector<BasisElement> basis);

  const CategoryRef& category() const { return cat_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& at(int i) const;
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::optional<int> find(const std::string& label) const;
  bool isUnit() const;
  bool operator==(const GradedObject& o) const;
  bool operator!=(const GradedObject& o) const { return !(*this == o); }
  GradedObject withCategory(CategoryRef cat) const;
  std::string str() const;

 private:
  CategoryRef cat_;
  std::vector<BasisElement> basis_;
};

// Strict tensor product: the unit is elided identically, pair labels
// concatenate, so associativity holds on the nose.
GradedObject tensor(const GradedObject& x, const GradedObject& y);
// Dual object: same basis order, suffixed labels, negated grades.
GradedObject dualObject(const GradedObject& x);

}  // namespace braided
