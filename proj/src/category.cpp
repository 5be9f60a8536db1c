#include "braided/category.hpp"

#include <set>
#include <sstream>

namespace braided {

Grade reduceGrade(const GradingGroup& g, Grade v) {
  if (v.size() != g.rank()) throw ShapeError("grade rank mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    long m = g.moduli[i];
    if (m > 0) v[i] = ((v[i] % m) + m) % m;
  }
  return v;
}

Grade addGrades(const GradingGroup& g, const Grade& a, const Grade& b) {
  if (a.size() != b.size()) throw ShapeError("grade rank mismatch");
  Grade r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduceGrade(g, r);
}

Grade negateGrade(const GradingGroup& g, const Grade& a) {
  Grade r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduceGrade(g, r);
}

Grade zeroGrade(const GradingGroup& g) { return Grade(g.rank(), 0); }

std::string gradeStr(const Grade& a) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  out << ")";
  return out.str();
}

Bicharacter::Bicharacter(GradingGroup group, FieldTag field,
                         std::vector<std::vector<Scalar>> generatorValues)
    : group_(std::move(group)), field_(field), gen_(std::move(generatorValues)) {
  if (gen_.size() != group_.rank()) throw ShapeError("bicharacter matrix rank mismatch");
  for (std::size_t i = 0; i < gen_.size(); ++i) {
    if (gen_[i].size() != group_.rank()) throw ShapeError("bicharacter matrix rank mismatch");
    for (std::size_t j = 0; j < gen_[i].size(); ++j) {
      const Scalar& v = gen_[i][j];
      if (!(v.field() == field_)) throw FieldMismatchError("bicharacter value in wrong field");
      if (v.isZero()) throw DomainError("bicharacter values must be invertible");
      // consistency on finite cyclic factors: chi(e_i,e_j)^m = 1 for each
      // finite modulus m touching the pair
      for (long m : {group_.moduli[i], group_.moduli[j]})
        if (m > 0 && !(v.pow(m) == Scalar::one(field_)))
          throw DomainError("bicharacter is not well defined on the finite grading");
    }
  }
}

Scalar Bicharacter::value(const Grade& a, const Grade& b) const {
  Grade ra = reduceGrade(group_, a), rb = reduceGrade(group_, b);
  Scalar acc = Scalar::one(field_);
  for (std::size_t i = 0; i < ra.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j) {
      if (ra[i] == 0 || rb[j] == 0) continue;
      acc = acc * gen_[i][j].pow(ra[i] * rb[j]);
    }
  return acc;
}

Bicharacter Bicharacter::inverted() const {
  std::vector<std::vector<Scalar>> g(gen_.size(), std::vector<Scalar>());
  for (std::size_t i = 0; i < gen_.size(); ++i)
    for (std::size_t j = 0; j < gen_.size(); ++j) g[i].push_back(gen_[j][i].inverse());
  return Bicharacter(group_, field_, std::move(g));
}

bool Bicharacter::operator==(const Bicharacter& o) const {
  if (!(group_ == o.group_) || !(field_ == o.field_)) return false;
  return gen_ == o.gen_;
}

CategoryRef makeCategory(GradingGroup group, FieldTag field,
                         std::vector<std::vector<Scalar>> chiGeneratorValues) {
  return std::make_shared<const Category>(
      Category{Bicharacter(std::move(group), field, std::move(chiGeneratorValues))});
}

CategoryRef inverseBraidingCategory(const CategoryRef& c) {
  if (!c) throw ShapeError("null category");
  return std::make_shared<const Category>(Category{c->chi.inverted()});
}

GradedObject GradedObject::unit(CategoryRef cat) {
  if (!cat) throw ShapeError("null category");
  GradedObject x;
  x.basis_ = {BasisElement{"1", zeroGrade(cat->group())}};
  x.cat_ = std::move(cat);
  return x;
}

GradedObject GradedObject::make(CategoryRef cat, std::vector<BasisElement> basis) {
  if (!cat) throw ShapeError("null category");
  std::set<std::string> seen;
  for (auto& b : basis) {
    if (b.label.empty()) throw ShapeError("empty basis label");
    if (!seen.insert(b.label).second) throw ShapeError("duplicate basis label: " + b.label);
    b.grade = reduceGrade(cat->group(), b.grade);
  }
  GradedObject x;
  x.cat_ = std::move(cat);
  x.basis_ = std::move(basis);
  return x;
}

const BasisElement& GradedObject::at(int i) const {
  if (i < 0 || i >= dim()) throw ShapeError("basis index out of range");
  return basis_[static_cast<std::size_t>(i)];
}

std::optional<int> GradedObject::find(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[static_cast<std::size_t>(i)].label == label) return i;
  return std::nullopt;
}

bool GradedObject::isUnit() const {
  return cat_ && basis_.size() == 1 && basis_[0].label == "1" &&
         basis_[0].grade == zeroGrade(cat_->group());
}

bool GradedObject::operator==(const GradedObject& o) const {
  if (!cat_ || !o.cat_) return cat_ == o.cat_;
  return *cat_ == *o.cat_ && basis_ == o.basis_;
}

GradedObject GradedObject::withCategory(CategoryRef cat) const {
  if (!cat) throw ShapeError("null category");
  if (!(cat->group() == cat_->group())) throw ShapeError("category grading group mismatch");
  GradedObject x;
  x.cat_ = std::move(cat);
  x.basis_ = basis_;
  return x;
}

std::string GradedObject::str() const {
  std::ostringstream out;
  out << "{";
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << basis_[static_cast<std::size_t>(i)].label << gradeStr(basis_[static_cast<std::size_t>(i)].grade);
  }
  out << "}";
  return out.str();
}

GradedObject tensor(const GradedObject& x, const GradedObject& y) {
  if (!x.category() || !y.category()) throw ShapeError("tensor of uninitialized objects");
  if (!(*x.category() == *y.category())) throw ShapeError("tensor across different categories");
  if (x.isUnit()) return y;
  if (y.isUnit()) return x;
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(x.dim()) * static_cast<std::size_t>(y.dim()));
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j)
      basis.push_back(BasisElement{x.at(i).label + "⊗" + y.at(j).label,
                                   addGrades(x.category()->group(), x.at(i).grade, y.at(j).grade)});
  return GradedObject::make(x.category(), std::move(basis));
}

GradedObject dualObject(const GradedObject& x) {
  if (!x.category()) throw ShapeError("dual of uninitialized object");
  std::vector<BasisElement> basis;
  for (int i = 0; i < x.dim(); ++i) {
    const std::string& l = x.at(i).label;
    std::string dl = l.find("⊗") != std::string::npos ? "(" + l + ")^" : l + "^";
    basis.push_back(BasisElement{dl, negateGrade(x.category()->group(), x.at(i).grade)});
  }
  return GradedObject::make(x.category(), std::move(basis));
}

}  // namespace braided
