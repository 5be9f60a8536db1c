#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braided/category.hpp"
#include "braided/report.hpp"

namespace braided {

// Grade-preserving linear map between graded objects, stored sparsely.
class Morphism {
 public:
  Morphism() = default;
  static Morphism zero(GradedObject dom, GradedObject cod);
  static Morphism identity(const GradedObject& x);

  const GradedObject& dom() const { return dom_; }
  const GradedObject& cod() const { return cod_; }
  Scalar at(int row, int col) const;
  void set(int row, int col, const Scalar& v);
  void add(int row, int col, const Scalar& v);
  const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }

  // this first, then g (diagram order, top to bottom)
  Morphism then(const Morphism& g) const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Scalar& c) const;
  bool operator==(const Morphism& o) const;
  bool operator!=(const Morphism& o) const { return !(*this == o); }
  bool isZero() const { return entries_.empty(); }
  Morphism withCategory(const CategoryRef& cat) const;
  std::string str() const;

 private:
  GradedObject dom_, cod_;
  std::map<std::pair<int, int>, Scalar> entries_;
};

// g after f
Morphism compose(const Morphism& g, const Morphism& f);
Morphism tensorHom(const Morphism& f, const Morphism& g);

// Braiding X tensor Y -> Y tensor X. With inverse set, this is the inverse of
// the braiding of Y with X, i.e. the value chi(gy,gx)^{-1} on graded lines.
Morphism braiding(const GradedObject& x, const GradedObject& y, bool inverse = false);

Morphism evaluation(const GradedObject& x);    // X tensor X^dual -> 1
Morphism coevaluation(const GradedObject& x);  // 1 -> X^dual tensor X
Morphism dualMorphism(const Morphism& f);      // transpose, cod^dual -> dom^dual

struct SplitIdempotent {
  GradedObject image;
  Morphism inject;   // image -> X
  Morphism project;  // X -> image
};

// Exact image splitting by greedy column pivoting in the fixed basis order.
SplitIdempotent splitIdempotent(const Morphism& e);

std::optional<Morphism> invertMorphism(const Morphism& f);

// Solves apply(T) == rhs for a grade-preserving T: dom -> cod, where apply is
// linear in T. Returns nullopt when the system is inconsistent.
std::optional<Morphism> solveLinear(const std::function<Morphism(const Morphism&)>& apply,
                                    const GradedObject& dom, const GradedObject& cod,
                                    const Morphism& rhs);

using ColumnFilter = std::function<bool(const GradedObject& dom, int col)>;

// Records a failure into the report when lhs and rhs differ on any column
// accepted by the filter (all columns when the filter is empty).
void checkEqual(CheckReport& report, const std::string& identity, const Morphism& lhs,
                const Morphism& rhs, const ColumnFilter& filter = nullptr);

}  // namespace braided
