#include "braided/morphism.hpp"

#include <sstream>

namespace braided {

namespace {

const FieldTag& fieldOf(const GradedObject& x) { return x.category()->field(); }

void requireComposable(const GradedObject& a, const GradedObject& b, const char* what) {
  if (a != b) throw ShapeError(std::string(what) + ": object mismatch " + a.str() + " vs " + b.str());
}

}  // namespace

Morphism Morphism::zero(GradedObject dom, GradedObject cod) {
  if (!dom.category() || !cod.category()) throw ShapeError("morphism on uninitialized objects");
  if (!(*dom.category() == *cod.category()))
    throw ShapeError("morphism across different categories");
  Morphism f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  return f;
}

Morphism Morphism::identity(const GradedObject& x) {
  Morphism f = zero(x, x);
  for (int i = 0; i < x.dim(); ++i) f.set(i, i, Scalar::one(fieldOf(x)));
  return f;
}

Scalar Morphism::at(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar::zero(fieldOf(dom_)) : it->second;
}

void Morphism::set(int row, int col, const Scalar& v) {
  if (row < 0 || row >= cod_.dim() || col < 0 || col >= dom_.dim())
    throw ShapeError("morphism entry out of range");
  if (!(v.field() == fieldOf(dom_))) throw FieldMismatchError("entry in wrong field");
  if (v.isZero()) {
    entries_.erase({row, col});
    return;
  }
  if (cod_.at(row).grade != dom_.at(col).grade)
    throw ShapeError("entry " + cod_.at(row).label + " <- " + dom_.at(col).label +
                     " does not preserve the grading");
  entries_[{row, col}] = v;
}

void Morphism::add(int row, int col, const Scalar& v) { set(row, col, at(row, col) + v); }

Morphism Morphism::then(const Morphism& g) const {
  requireComposable(cod_, g.dom_, "composition");
  Morphism r = zero(dom_, g.cod_);
  // group g's entries by column for the sparse product
  std::map<int, std::vector<std::pair<int, Scalar>>> byCol;
  for (const auto& [rc, v] : g.entries_) byCol[rc.second].push_back({rc.first, v});
  for (const auto& [rc, v] : entries_) {
    auto it = byCol.find(rc.first);
    if (it == byCol.end()) continue;
    for (const auto& [row2, v2] : it->second) r.add(row2, rc.second, v2 * v);
  }
  return r;
}

Morphism compose(const Morphism& g, const Morphism& f) { return f.then(g); }

Morphism Morphism::operator+(const Morphism& o) const {
  requireComposable(dom_, o.dom_, "sum domain");
  requireComposable(cod_, o.cod_, "sum codomain");
  Morphism r = *this;
  for (const auto& [rc, v] : o.entries_) r.add(rc.first, rc.second, v);
  return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
  return *this + o.scaled(-Scalar::one(fieldOf(dom_)));
}

Morphism Morphism::scaled(const Scalar& c) const {
  Morphism r = zero(dom_, cod_);
  if (c.isZero()) return r;
  for (const auto& [rc, v] : entries_) r.set(rc.first, rc.second, v * c);
  return r;
}

bool Morphism::operator==(const Morphism& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && entries_ == o.entries_;
}

Morphism Morphism::withCategory(const CategoryRef& cat) const {
  Morphism r = zero(dom_.withCategory(cat), cod_.withCategory(cat));
  for (const auto& [rc, v] : entries_) r.set(rc.first, rc.second, v);
  return r;
}

std::string Morphism::str() const {
  std::ostringstream out;
  out << dom_.str() << " -> " << cod_.str();
  for (const auto& [rc, v] : entries_)
    out << "\n  " << cod_.at(rc.first).label << " <- " << dom_.at(rc.second).label << ": "
        << v.str();
  return out.str();
}

Morphism tensorHom(const Morphism& f, const Morphism& g) {
  Morphism r = Morphism::zero(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()));
  const int gDomDim = g.dom().dim(), gCodDim = g.cod().dim();
  for (const auto& [rcf, vf] : f.entries())
    for (const auto& [rcg, vg] : g.entries())
      r.set(rcf.first * gCodDim + rcg.first, rcf.second * gDomDim + rcg.second, vf * vg);
  return r;
}

Morphism braiding(const GradedObject& x, const GradedObject& y, bool inverse) {
  if (!(*x.category() == *y.category())) throw ShapeError("braiding across different categories");
  const Bicharacter& chi = x.category()->chi;
  Morphism r = Morphism::zero(tensor(x, y), tensor(y, x));
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j) {
      Scalar c = inverse ? chi.value(y.at(j).grade, x.at(i).grade).inverse()
                         : chi.value(x.at(i).grade, y.at(j).grade);
      r.set(j * x.dim() + i, i * y.dim() + j, c);
    }
  return r;
}

Morphism evaluation(const GradedObject& x) {
  GradedObject xd = dualObject(x);
  Morphism r = Morphism::zero(tensor(x, xd), GradedObject::unit(x.category()));
  for (int i = 0; i < x.dim(); ++i) r.set(0, i * x.dim() + i, Scalar::one(fieldOf(x)));
  return r;
}

Morphism coevaluation(const GradedObject& x) {
  GradedObject xd = dualObject(x);
  Morphism r = Morphism::zero(GradedObject::unit(x.category()), tensor(xd, x));
  for (int i = 0; i < x.dim(); ++i) r.set(i * x.dim() + i, 0, Scalar::one(fieldOf(x)));
  return r;
}

Morphism dualMorphism(const Morphism& f) {
  Morphism r = Morphism::zero(dualObject(f.cod()), dualObject(f.dom()));
  for (const auto& [rc, v] : f.entries()) r.set(rc.second, rc.first, v);
  return r;
}

SplitIdempotent splitIdempotent(const Morphism& e) {
  requireComposable(e.dom(), e.cod(), "idempotent");
  if (e.then(e) != e) throw DomainError("splitIdempotent: morphism is not idempotent");
  const GradedObject& x = e.dom();
  const FieldTag& f = fieldOf(x);
  const int n = x.dim();
  const Scalar zero = Scalar::zero(f);

  // incremental echelon over the visited columns; each echelon vector carries
  // its expression in terms of the chosen pivot columns
  std::vector<std::vector<Scalar>> echelon;         // reduced vectors, pivot scaled to 1
  std::vector<int> pivotRow;                        // pivot row of each echelon vector
  std::vector<std::vector<Scalar>> expr;            // coords in chosen columns
  std::vector<int> chosen;
  std::vector<std::vector<Scalar>> projCols(static_cast<std::size_t>(n));

  for (int c = 0; c < n; ++c) {
    std::vector<Scalar> v(static_cast<std::size_t>(n), zero);
    for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = e.at(r, c);
    std::vector<Scalar> coords(chosen.size(), zero);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      Scalar alpha = v[static_cast<std::size_t>(pivotRow[k])];
      if (alpha.isZero()) continue;
      for (int r = 0; r < n; ++r)
        v[static_cast<std::size_t>(r)] =
            v[static_cast<std::size_t>(r)] - alpha * echelon[k][static_cast<std::size_t>(r)];
      for (std::size_t s = 0; s < coords.size(); ++s)
        coords[s] = coords[s] + alpha * expr[k][s];
    }
    int pivot = -1;
    for (int r = 0; r < n; ++r)
      if (!v[static_cast<std::size_t>(r)].isZero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      projCols[static_cast<std::size_t>(c)] = coords;
      continue;
    }
    Scalar inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (int r = 0; r < n; ++r)
      v[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(r)] * inv;
    // expression of the new echelon vector: (column c - reductions) * inv
    std::vector<Scalar> ex(chosen.size() + 1, zero);
    for (std::size_t s = 0; s < coords.size(); ++s) ex[s] = -(coords[s] * inv);
    ex[chosen.size()] = inv;
    // previously stored expressions gain a zero coordinate for the new column;
    // projection columns keep their shorter prefix form, which indexes the
    // same chosen-column order
    for (auto& old : expr) old.push_back(zero);
    chosen.push_back(c);
    echelon.push_back(std::move(v));
    pivotRow.push_back(pivot);
    expr.push_back(std::move(ex));
    std::vector<Scalar> self(chosen.size(), zero);
    self[chosen.size() - 1] = Scalar::one(f);
    projCols[static_cast<std::size_t>(c)] = std::move(self);
  }

  std::vector<BasisElement> imageBasis;
  for (int c : chosen) imageBasis.push_back(x.at(c));
  GradedObject image = GradedObject::make(x.category(), std::move(imageBasis));

  Morphism inject = Morphism::zero(image, x);
  for (std::size_t s = 0; s < chosen.size(); ++s)
    for (int r = 0; r < n; ++r) inject.set(r, static_cast<int>(s), e.at(r, chosen[s]));

  Morphism project = Morphism::zero(x, image);
  for (int c = 0; c < n; ++c) {
    auto& pc = projCols[static_cast<std::size_t>(c)];
    for (std::size_t s = 0; s < pc.size(); ++s) project.set(static_cast<int>(s), c, pc[s]);
  }

  if (inject.then(project) != Morphism::identity(image))
    throw Error("splitIdempotent: internal retraction invariant failed");
  if (project.then(inject) != e) throw Error("splitIdempotent: internal factorization failed");
  return SplitIdempotent{std::move(image), std::move(inject), std::move(project)};
}

std::optional<Morphism> invertMorphism(const Morphism& f) {
  if (f.dom().dim() != f.cod().dim()) return std::nullopt;
  const int n = f.dom().dim();
  const FieldTag& tag = fieldOf(f.dom());
  const Scalar zero = Scalar::zero(tag), one = Scalar::one(tag);
  // dense Gauss-Jordan on [M | I]
  std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(n),
                                     std::vector<Scalar>(static_cast<std::size_t>(2 * n), zero));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = f.at(r, c);
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + r)] = one;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].isZero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
    Scalar inv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].inverse();
    for (int c = 0; c < 2 * n; ++c)
      m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] =
          m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Scalar factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor.isZero()) continue;
      for (int c = 0; c < 2 * n; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
            factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  Morphism g = Morphism::zero(f.cod(), f.dom());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Scalar& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)];
      if (!v.isZero()) g.set(r, c, v);
    }
  return g;
}

std::optional<Morphism> solveLinear(const std::function<Morphism(const Morphism&)>& apply,
                                    const GradedObject& dom, const GradedObject& cod,
                                    const Morphism& rhs) {
  const FieldTag& tag = fieldOf(dom);
  const Scalar zero = Scalar::zero(tag), one = Scalar::one(tag);
  std::vector<std::pair<int, int>> unknowns;
  for (int r = 0; r < cod.dim(); ++r)
    for (int c = 0; c < dom.dim(); ++c)
      if (cod.at(r).grade == dom.at(c).grade) unknowns.push_back({r, c});

  // columns of the system: image of each elementary unknown
  std::vector<Morphism> images;
  images.reserve(unknowns.size());
  for (auto [r, c] : unknowns) {
    Morphism unit = Morphism::zero(dom, cod);
    unit.set(r, c, one);
    images.push_back(apply(unit));
  }

  const int outRows = rhs.cod().dim(), outCols = rhs.dom().dim();
  std::vector<std::pair<int, int>> positions;
  for (int r = 0; r < outRows; ++r)
    for (int c = 0; c < outCols; ++c)
      if (rhs.cod().at(r).grade == rhs.dom().at(c).grade) positions.push_back({r, c});

  std::size_t nRows = positions.size(), nCols = unknowns.size();
  std::vector<std::vector<Scalar>> a(nRows, std::vector<Scalar>(nCols + 1, zero));
  for (std::size_t i = 0; i < nRows; ++i) {
    for (std::size_t j = 0; j < nCols; ++j)
      a[i][j] = images[j].at(positions[i].first, positions[i].second);
    a[i][nCols] = rhs.at(positions[i].first, positions[i].second);
  }

  // row reduction with partial pivoting by column order
  std::vector<long> pivotCol(nRows, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < nCols && row < nRows; ++col) {
    std::size_t pr = row;
    while (pr < nRows && a[pr][col].isZero()) ++pr;
    if (pr == nRows) continue;
    std::swap(a[row], a[pr]);
    Scalar inv = a[row][col].inverse();
    for (std::size_t c = col; c <= nCols; ++c) a[row][c] = a[row][c] * inv;
    for (std::size_t r = 0; r < nRows; ++r) {
      if (r == row || a[r][col].isZero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t c = col; c <= nCols; ++c) a[r][c] = a[r][c] - factor * a[row][c];
    }
    pivotCol[row] = static_cast<long>(col);
    ++row;
  }
  for (std::size_t r = row; r < nRows; ++r)
    if (!a[r][nCols].isZero()) return std::nullopt;  // inconsistent

  Morphism t = Morphism::zero(dom, cod);
  for (std::size_t r = 0; r < row; ++r) {
    long col = pivotCol[r];
    if (col < 0) continue;
    const Scalar& v = a[r][nCols];
    if (!v.isZero())
      t.set(unknowns[static_cast<std::size_t>(col)].first,
            unknowns[static_cast<std::size_t>(col)].second, v);
  }
  if (!(apply(t) == rhs)) return std::nullopt;
  return t;
}

void checkEqual(CheckReport& report, const std::string& identity, const Morphism& lhs,
                const Morphism& rhs, const ColumnFilter& filter) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    report.fail(identity, "shape mismatch: " + lhs.dom().str() + "->" + lhs.cod().str() + " vs " +
                              rhs.dom().str() + "->" + rhs.cod().str());
    return;
  }
  const GradedObject& dom = lhs.dom();
  std::string detail;
  int shown = 0;
  for (int c = 0; c < dom.dim(); ++c) {
    if (filter && !filter(dom, c)) continue;
    for (int r = 0; r < lhs.cod().dim(); ++r) {
      Scalar a = lhs.at(r, c), b = rhs.at(r, c);
      if (a == b) continue;
      if (shown < 3) {
        if (!detail.empty()) detail += "; ";
        detail += lhs.cod().at(r).label + " <- " + dom.at(c).label + ": " + a.str() + " vs " +
                  b.str();
      }
      ++shown;
    }
  }
  if (shown > 3) detail += "; (+" + std::to_string(shown - 3) + " more)";
  if (shown > 0) report.fail(identity, detail);
}

}  // namespace braided
