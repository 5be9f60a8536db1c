#pragma once
#include "braided/hopf.hpp"
#include "braided/products.hpp"

namespace braided {

// Category of Z-graded (modulus 0, over Q(q)) or Z_n-graded (modulus n,
// over Q[q] mod the n-th cyclotomic polynomial) spaces where the braiding
// on degrees (m, k) is q^{mk}.
CategoryRef lineCategory(long modulus);

// Category with no grading at all over the given field; every braiding is
// the plain flip.
CategoryRef trivialCategory(FieldTag field);

// Hopf algebra on powers x^0 .. x^N of a degree-one generator x, with the
// Gaussian binomial comultiplication. Products above the truncation bound
// are cut off, so identities are checked through a degree window.
HopfData braidedLine(int truncation);
// Partner on powers of a degree -1 generator y, same structure formulas.
HopfData braidedLineDual(int truncation);
// rho(x^m (x) y^k) = delta_{mk} [k]_q!.
PairingData linePairing(int truncation);

// Anyonic line: dimension n over Q[q] mod Phi_n, Z_n-graded, x^n = 0.
// A genuine Hopf algebra, no truncation involved.
HopfData anyonicLine(long modulus);
HopfData anyonicLineDual(long modulus);
PairingData anyonicLinePairing(long modulus);

// Group algebra of Z_n in the trivially graded category over Q[q] mod
// Phi_n, so the root of unity needed by its quasitriangular structure is
// available in the scalars.
HopfData cyclicGroupAlgebra(long order);

// Two-dimensional Hopf algebra in crossed modules over the order-2 group
// algebra: a generator x with x^2 = 0 and primitive coproduct, the group
// generator acting by sign and coacting as the group part of x.
DyHopfData fermionicDyHopf();

// The group algebra of Z_n with its standard copairing
// n^{-1} sum_{a,b} q^{ab} g^a (x) g^b for q a primitive n-th root of unity.
QuasitriangularData kznQuantumGroup(long order);

// Column filter keeping basis columns whose grade has all positive
// components summing to at most bound and negative ones to at least
// -bound. Infinite-dimensional algebras are checked through this window.
ColumnFilter degreeWindow(long bound);

}  // namespace braided
