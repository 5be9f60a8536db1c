#include "braided/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace braided {

IntPoly IntPoly::constant(const mpz_class& c) { return monomial(0, c); }

IntPoly IntPoly::monomial(long exp, const mpz_class& c) {
  IntPoly p;
  p.setCoeff(exp, c);
  return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

long IntPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

mpz_class IntPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class IntPoly::leading() const { return terms_.empty() ? mpz_class(0) : terms_.rbegin()->second; }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void IntPoly::setCoeff(long exp, const mpz_class& c) {
  if (exp < 0) throw DomainError("negative exponent in integer polynomial");
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

IntPoly IntPoly::operator-() const {
  IntPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.setCoeff(e, r.coeff(e) + c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.setCoeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  IntPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

IntPoly IntPoly::shifted(long k) const {
  IntPoly r;
  for (const auto& [e, c] : terms_) r.setCoeff(e + k, c);
  return r;
}

IntPoly IntPoly::divExact(const IntPoly& d) const {
  if (d.isZero()) throw DomainError("polynomial division by zero");
  IntPoly rem = *this;
  IntPoly quo;
  const long dd = d.degree();
  const mpz_class dl = d.leading();
  while (!rem.isZero() && rem.degree() >= dd) {
    mpz_class lead = rem.leading();
    if (!mpz_divisible_p(lead.get_mpz_t(), dl.get_mpz_t()))
      throw DomainError("inexact polynomial division");
    mpz_class c = lead / dl;
    long shift = rem.degree() - dd;
    quo.setCoeff(shift, c);
    rem = rem - d.shifted(shift).scaled(c);
  }
  if (!rem.isZero()) throw DomainError("inexact polynomial division");
  return quo;
}

IntPoly IntPoly::remMonic(const IntPoly& d) const {
  if (d.leading() != 1) throw DomainError("remMonic needs a monic divisor");
  IntPoly rem = *this;
  const long dd = d.degree();
  while (!rem.isZero() && rem.degree() >= dd) {
    mpz_class c = rem.leading();
    rem = rem - d.shifted(rem.degree() - dd).scaled(c);
  }
  return rem;
}

namespace {

IntPoly primitivePart(const IntPoly& p) {
  if (p.isZero()) return p;
  IntPoly r = p.divExact(IntPoly::constant(p.content()));
  return r;
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
IntPoly pseudoRem(IntPoly a, const IntPoly& b) {
  const long db = b.degree();
  const mpz_class bl = b.leading();
  while (!a.isZero() && a.degree() >= db) {
    mpz_class al = a.leading();
    long shift = a.degree() - db;
    a = a.scaled(bl) - b.shifted(shift).scaled(al);
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.isZero() && b.isZero()) return IntPoly();
  auto normalize = [](IntPoly p) {
    if (p.leading() < 0) p = -p;
    return p;
  };
  if (a.isZero()) return normalize(b);
  if (b.isZero()) return normalize(a);
  mpz_class cg;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = primitivePart(a), y = primitivePart(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.isZero()) {
    IntPoly r = pseudoRem(x, y);
    x = y;
    y = r.isZero() ? IntPoly() : primitivePart(r);
  }
  return normalize(x).scaled(cg);
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  long prev = degree();
  // Horner over the sparse support, highest exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (long i = it->first; i < prev; ++i) acc *= x;
    acc += mpq_class(it->second);
    prev = it->first;
  }
  for (long i = 0; i < prev; ++i) acc *= x;
  return acc;
}

std::string IntPoly::str() const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    long e = it->first;
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

long eulerPhi(long n) {
  if (n <= 0) throw DomainError("eulerPhi needs n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomicPoly(long n) {
  if (n <= 0) throw DomainError("cyclotomicPoly needs n >= 1");
  static std::map<long, IntPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly qn1 = IntPoly::monomial(n, 1) - IntPoly::constant(1);
  IntPoly divisor = IntPoly::constant(1);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) divisor = divisor * cyclotomicPoly(d);
  IntPoly phi = qn1.divExact(divisor);
  cache[n] = phi;
  return phi;
}

std::string FieldTag::str() const {
  return rational() ? "Q(q)" : "Q[q]/Phi_" + std::to_string(cyclotomicOrder);
}

Scalar Scalar::zero(FieldTag f) { return Scalar(f, IntPoly(), IntPoly::constant(1)); }
Scalar Scalar::one(FieldTag f) { return Scalar(f, IntPoly::constant(1), IntPoly::constant(1)); }

Scalar Scalar::q(FieldTag f) {
  Scalar s(f, IntPoly::variable(), IntPoly::constant(1));
  s.canonicalize();
  return s;
}

Scalar Scalar::integer(FieldTag f, const mpz_class& n) {
  Scalar s(f, IntPoly::constant(n), IntPoly::constant(1));
  s.canonicalize();
  return s;
}

Scalar Scalar::rational(FieldTag f, const mpz_class& num, const mpz_class& den) {
  Scalar s(f, IntPoly::constant(num), IntPoly::constant(den));
  s.canonicalize();
  return s;
}

Scalar Scalar::fraction(FieldTag f, IntPoly num, IntPoly den) {
  Scalar s(f, std::move(num), std::move(den));
  s.canonicalize();
  return s;
}

bool Scalar::isOne() const {
  return num_ == IntPoly::constant(1) && den_ == IntPoly::constant(1);
}

namespace {

// Dense rational polynomials, used only for the extended Euclid step that
// inverts elements modulo a cyclotomic polynomial.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qFromInt(const IntPoly& p) {
  QPoly r(static_cast<std::size_t>(p.degree() + 1));
  for (const auto& [e, c] : p.terms()) r[static_cast<std::size_t>(e)] = mpq_class(c);
  return r;
}

QPoly qSub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

QPoly qMul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qQuot(QPoly a, const QPoly& b) {
  QPoly quo(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    quo[shift] = c;
    QPoly sub(shift + b.size());
    for (std::size_t i = 0; i < b.size(); ++i) sub[shift + i] = b[i] * c;
    a = qSub(std::move(a), sub);
  }
  qtrim(quo);
  return quo;
}

// Inverse of a modulo m over Q, returned as an integer polynomial over a
// positive integer denominator. Throws if gcd(a, m) is not constant.
std::pair<IntPoly, mpz_class> invertMod(const IntPoly& a, const IntPoly& m) {
  QPoly r0 = qFromInt(a), r1 = qFromInt(m);
  QPoly s0 = {mpq_class(1)}, s1 = {};
  while (!r1.empty()) {
    QPoly quo = qQuot(r0, r1);
    QPoly r2 = qSub(r0, qMul(quo, r1));
    QPoly s2 = qSub(s0, qMul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw DomainError("element is not invertible modulo the cyclotomic polynomial");
  mpz_class denLcm = 1;
  for (auto& c : s0) {
    c /= r0[0];
    c.canonicalize();
    mpz_class d = c.get_den();
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), d.get_mpz_t());
  }
  IntPoly u;
  for (std::size_t i = 0; i < s0.size(); ++i) {
    mpq_class scaledUp = s0[i] * mpq_class(denLcm);
    u.setCoeff(static_cast<long>(i), scaledUp.get_num());
  }
  if (denLcm < 0) {
    denLcm = -denLcm;
    u = -u;
  }
  return {u, denLcm};
}

}  // namespace

void Scalar::canonicalize() {
  if (den_.isZero()) throw DomainError("zero denominator");
  if (field_.rational()) {
    if (num_.isZero()) {
      den_ = IntPoly::constant(1);
      return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    return;
  }
  const IntPoly phi = cyclotomicPoly(field_.cyclotomicOrder);
  num_ = num_.remMonic(phi);
  if (den_.degree() > 0) {
    IntPoly dmod = den_.remMonic(phi);
    if (dmod.isZero()) throw DomainError("denominator vanishes in the cyclotomic quotient");
    auto [u, delta] = invertMod(dmod, phi);
    num_ = (num_ * u).remMonic(phi);
    den_ = IntPoly::constant(delta);
  }
  if (num_.isZero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  mpz_class d = den_.coeff(0);
  if (d < 0) {
    d = -d;
    num_ = -num_;
  }
  mpz_class g, c = num_.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (g > 1) {
    num_ = num_.divExact(IntPoly::constant(g));
    d /= g;
  }
  den_ = IntPoly::constant(d);
}

void Scalar::requireSameField(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_))
    throw FieldMismatchError("scalar fields differ: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  requireSameField(*this, o);
  Scalar r(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  requireSameField(*this, o);
  Scalar r(field_, num_ * o.num_, den_ * o.den_);
  r.canonicalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, -num_, den_); }

Scalar Scalar::inverse() const {
  if (isZero()) throw DomainError("inverse of zero");
  Scalar r(field_, den_, num_);
  r.canonicalize();
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  requireSameField(*this, o);
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const {
  if (den_ == IntPoly::constant(1)) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar reduceModCyclotomic(const Scalar& s, long n) {
  if (!s.field().rational())
    throw DomainError("reduceModCyclotomic expects an input over Q(q)");
  return Scalar::fraction(FieldTag{n}, s.num(), s.den());
}

Scalar qInt(FieldTag f, long n) {
  if (n < 0) throw DomainError("qInt needs n >= 0");
  IntPoly p;
  for (long i = 0; i < n; ++i) p.setCoeff(i, 1);
  return Scalar::fraction(f, p, IntPoly::constant(1));
}

Scalar qFactorial(FieldTag f, long n) {
  if (n < 0) throw DomainError("qFactorial needs n >= 0");
  IntPoly acc = IntPoly::constant(1);
  for (long k = 1; k <= n; ++k) {
    IntPoly bracket;
    for (long i = 0; i < k; ++i) bracket.setCoeff(i, 1);
    acc = acc * bracket;
  }
  return Scalar::fraction(f, acc, IntPoly::constant(1));
}

Scalar qBinomial(FieldTag f, long n, long k) {
  if (n < 0) throw DomainError("qBinomial needs n >= 0");
  if (k < 0 || k > n) return Scalar::zero(f);
  // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]; stays in Z[q] throughout.
  std::vector<IntPoly> row = {IntPoly::constant(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<IntPoly> next(static_cast<std::size_t>(i) + 1);
    next[0] = IntPoly::constant(1);
    next[static_cast<std::size_t>(i)] = IntPoly::constant(1);
    for (long j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] +
          row[static_cast<std::size_t>(j)].shifted(j);
    row = std::move(next);
  }
  return Scalar::fraction(f, row[static_cast<std::size_t>(k)], IntPoly::constant(1));
}

}  // namespace braided
