#pragma once
#include <gmpxx.h>

#include <map>
#include <string>

#include "braided/error.hpp"

namespace braided {

// Sparse polynomial over Z in one variable q. Exponents are >= 0.
class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(long exp, const mpz_class& c);
  static IntPoly variable();

  bool isZero() const { return terms_.empty(); }
  long degree() const;  // -1 for the zero polynomial
  mpz_class coeff(long exp) const;
  const std::map<long, mpz_class>& terms() const { return terms_; }
  mpz_class leading() const;
  mpz_class content() const;  // nonnegative gcd of coefficients, 0 for zero

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const mpz_class& c) const;
  IntPoly shifted(long k) const;  // multiply by q^k
  bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }

  // Exact quotient; throws DomainError if the division leaves a remainder.
  IntPoly divExact(const IntPoly& d) const;
  // Euclidean remainder by a monic divisor (stays in Z[q]).
  IntPoly remMonic(const IntPoly& monicDivisor) const;
  // Full gcd including integer content, normalized to positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  mpq_class eval(const mpq_class& x) const;
  std::string str() const;
  void setCoeff(long exp, const mpz_class& c);

 private:
  std::map<long, mpz_class> terms_;  // exponent -> nonzero coefficient
};

// n-th cyclotomic polynomial, computed by exact division of q^n - 1.
IntPoly cyclotomicPoly(long n);
long eulerPhi(long n);

// Coefficient field: cyclotomicOrder == 0 means the rational function field Q(q),
// n >= 1 means Q[q] modulo the n-th cyclotomic polynomial.
struct FieldTag {
  long cyclotomicOrder = 0;
  bool operator==(const FieldTag& o) const = default;
  bool rational() const { return cyclotomicOrder == 0; }
  std::string str() const;
};

// Exact scalar in canonical form.
// Q(q): num/den in Z[q], fully reduced (gcd 1 including content), den has
// positive leading coefficient.
// Cyclotomic: num in Z[q] with deg(num) < phi(n), den a positive integer
// coprime to the content of num.
class Scalar {
 public:
  Scalar() : Scalar(zero(FieldTag{})) {}
  static Scalar zero(FieldTag f);
  static Scalar one(FieldTag f);
  static Scalar q(FieldTag f);
  static Scalar integer(FieldTag f, const mpz_class& n);
  static Scalar rational(FieldTag f, const mpz_class& num, const mpz_class& den);
  static Scalar fraction(FieldTag f, IntPoly num, IntPoly den);

  const FieldTag& field() const { return field_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const;
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(FieldTag f, IntPoly num, IntPoly den)
      : field_(f), num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  static void requireSameField(const Scalar& a, const Scalar& b);

  FieldTag field_;
  IntPoly num_;
  IntPoly den_;
};

// Maps a scalar of Q(q) into Q[q]/Phi_n; throws DomainError if the denominator
// is not invertible modulo Phi_n.
Scalar reduceModCyclotomic(const Scalar& s, long n);

// q-integer [n] = 1 + q + ... + q^{n-1}, q-factorial, and the Gauss binomial
// (computed by the q-Pascal recurrence, hence polynomial before reduction).
Scalar qInt(FieldTag f, long n);
Scalar qFactorial(FieldTag f, long n);
Scalar qBinomial(FieldTag f, long n, long k);

}  // namespace braided
