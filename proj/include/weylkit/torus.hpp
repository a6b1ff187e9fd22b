#pragma once

// Finite tori of twisted Frobenius maps as cokernels of (q*M - I) on the
// cocharacter lattice, symbolic cyclotomic orders, generic group orders
// from reflection degrees, the q -> -q index rewrite, and 2-adic identity
// sweeps. q is arbitrary precision throughout; orders stay symbolic until
// evaluated.

#include <map>
#include <string>
#include <vector>

#include "weylkit/exact.hpp"
#include "weylkit/rootsys.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// Multiset of cyclotomic factors with an optional power of q in front.
struct CyclotomicOrder {
  int qExponent = 0;
  std::map<int, int> mult;  // d -> multiplicity of Phi_d

  BigInt evaluate(const BigInt& q) const;
  std::string str() const;  // e.g. "Phi1^3.Phi2^3"
  bool operator==(const CyclotomicOrder& o) const = default;
};

struct FrobeniusTwist {
  const RootSystem* rs = nullptr;
  IntMat M;  // finite-order lattice automorphism on the cocharacter lattice
  BigInt q;
  int epsilon = 1;

  int e() const;  // order of q mod 4
  static FrobeniusTwist split(const RootSystem& rs, const BigInt& q);
  static FrobeniusTwist withMatrix(const RootSystem& rs, IntMat m, const BigInt& q, int epsilon = 1);
};

/// Cokernel of (q*M - I): invariant factors plus the unimodular transform
/// pair needed to push lattice endomorphisms into cyclic coordinates.
struct FiniteTorus {
  FrobeniusTwist twist;
  std::vector<BigInt> invariantFactors;  // d1 | d2 | ... , all positive
  BigMat U, Uinv;

  BigInt order() const;
};

FiniteTorus finiteTorus(const FrobeniusTwist& twist);

/// Cyclotomic factorization of det(q*M - I) read off the characteristic
/// polynomial of the finite-order matrix M (multiplicity of Phi_d from the
/// kernel rank of Phi_d(M)).
CyclotomicOrder polynomialOrder(const IntMat& M);

/// Same, for M restricted to a saturated sublattice given by a basis.
CyclotomicOrder polynomialOrderOnSublattice(const IntMat& M,
                                            const std::vector<std::vector<BigInt>>& basis);

struct GroupOrderInfo {
  std::vector<int> degrees;  // reflection degrees, ascending
  CyclotomicOrder order;     // q^{#positive roots} * prod (q^{d_i}-1)
};

/// Untwisted generic order via the Poincare polynomial of W. E8 degrees
/// are pinned (its enumeration is out of budget).
GroupOrderInfo groupOrder(const RootSystem& rs, uint64_t enumCap = 10'000'000);

/// q -> -q on cyclotomic indices: odd d -> 2d, d = 2 mod 4 -> d/2,
/// 4 | d -> d. Evaluation satisfies |result(q)| = |input(-q)|.
CyclotomicOrder ennola(const CyclotomicOrder& c);

struct TwoAdicReport {
  uint64_t checksRun = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For all odd q in [qmin, qmax] and 2 <= i <= iMax: v2(Phi_i(q)) >=
/// v2(Phi_i(1)); and the 2-part of |A2| is unchanged under q -> q^3.
TwoAdicReport twoAdicChecks(int64_t qmin, int64_t qmax, int iMax = 60);

/// Endomorphism induced on the invariant-factor coordinates by a lattice
/// map commuting with the twist. Throws std::invalid_argument when g does
/// not commute with M.
BigMat inducedAction(const FiniteTorus& t, const IntMat& g);

/// Entry-level annihilation test: does `action` (a matrix acting on the
/// cyclic coordinates) kill the 2-part of the torus?
bool annihilatesTwoPart(const FiniteTorus& t, const BigMat& action);

}  // namespace weylkit
