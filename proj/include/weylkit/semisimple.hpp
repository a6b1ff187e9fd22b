#pragma once

// Finite-order points of the dual torus and their combinatorics: root
// subsystems Phi(s), Weyl stabilizers W(s) with component group A(s),
// isolated / quasi-isolated tests, torsion classification up to W-orbit,
// minimal d-split Levi certificates, rational-form labeling of twisted
// subsystems, and the relative Weyl groups of block data.
//
// A point is identified with its pairing functional on the root lattice:
// two coroot-coordinate vectors describe the same dual-torus element
// exactly when their difference pairs integrally with every root. All
// stabilizers below use that equality.

#include <optional>
#include <string>
#include <vector>

#include "weylkit/rootsys.hpp"
#include "weylkit/torus.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

class DualTorusElement {
 public:
  /// From exponents on simple-root one-parameter subgroups: sum of
  /// (exponent/order) * alpha_i^vee.
  static DualTorusElement fromHExpression(const RootSystem& rs,
                                          const std::vector<std::pair<int, int>>& exps, int order);
  /// From the pairing values <alpha_i, s> * order (mod order).
  static DualTorusElement fromPairings(const RootSystem& rs, std::vector<int> pairings, int order);

  const RootSystem& system() const { return *rs_; }
  int order() const { return n_; }
  const std::vector<int>& pairings() const { return p_; }

  /// <alpha, s> * order mod order, for any root.
  int pairingWithRoot(int rootIdx) const;
  bool isIdentity() const;

  DualTorusElement applied(const WeylElement& w) const;  // w . s
  /// Action of any root-permuting lattice matrix (diagram symmetries
  /// included).
  DualTorusElement appliedMatrix(const IntMat& m) const;
  DualTorusElement scaled(const BigInt& k) const;        // s^k

  bool operator==(const DualTorusElement& o) const { return n_ == o.n_ && p_ == o.p_; }
  std::string str() const;

 private:
  const RootSystem* rs_ = nullptr;
  int n_ = 1;
  std::vector<int> p_;  // canonical: <alpha_i, s> * n mod n
};

struct CentralizerData {
  DualTorusElement element;
  SubSystem phiS;                 // roots pairing to zero
  uint64_t connectedWeylOrder;    // |W(Phi(s))|
  std::vector<int> stabilizer;    // W(s) as enumeration indices
  uint64_t stabilizerOrder;
  uint64_t componentGroupOrder;   // A(s) = W(s)/W(Phi(s))
  bool isolated;
  bool quasiIsolated;
};

CentralizerData centralizer(const DualTorusElement& s, const WeylGroup& W);

bool isIsolated(const DualTorusElement& s, const WeylGroup& W);
bool isQuasiIsolated(const DualTorusElement& s, const WeylGroup& W);

struct TorsionClass {
  DualTorusElement representative;  // lexicographically least pairing vector
  uint64_t orbitSize;
  std::string centralizerType;
  uint64_t componentGroupOrder;
  bool isolated;
  bool quasiIsolated;
};

/// All order-dividing-n points of the dual torus up to W-orbit: one class
/// per orbit of pairing vectors in (Z/n)^rank.
std::vector<TorsionClass> classifyTorsion(const RootSystem& rs, int n, const WeylGroup& W);

/// Minimal d-split Levi certificate: K = ker Phi_d(M), Phi_L = roots
/// vanishing on K, compared against a candidate, with the torus
/// certificate Phi_L cap Phi(s) = empty.
struct MinimalSplitReport {
  std::vector<int> leviRoots;       // computed Phi_L
  bool matchesCandidate = false;
  bool centralizerTorusInLevi = false;  // Phi_L cap Phi(s) empty
  bool ok() const { return matchesCandidate && centralizerTorusInLevi; }
};
MinimalSplitReport verifyMinimalDSplit(const DualTorusElement& s, const IntMat& twist, int d,
                                       const std::vector<int>& candidateLeviRoots);

/// Roots orthogonal to the Phi_d-kernel of the twist (the canonical
/// d-split Levi of the twist).
std::vector<int> dSplitLeviRoots(const RootSystem& rs, const IntMat& twist, int d);

/// Rational form of a twisted subsystem: orbits of components with field
/// degrees and a twisted/untwisted marker, plus the central-torus
/// cyclotomic part.
struct RationalType {
  struct ComponentOrbit {
    TypeLabel type;
    int fieldDegree = 1;   // components cyclically permuted by the twist
    int twistOrder = 1;    // order of the residual diagram symmetry
  };
  std::vector<ComponentOrbit> orbits;
  CyclotomicOrder centralPart;
  std::string str() const;
  /// Canonical comparable form, e.g. "A2:3:1" for one orbit of three A2
  /// components with inner return map.
  std::string orbitSignature() const;
};
RationalType rationalType(const RootSystem& rs, const SubSystem& sub, const IntMat& twist);

/// |A(s)^F|: cosets of W(Phi(s)) in W(s) fixed by twist-conjugation.
uint64_t componentGroupFixedOrder(const CentralizerData& cd, const WeylGroup& W, const IntMat& twist);

/// Stabilizer cosets of s inside the reflection group of a given
/// subsystem, modulo W(Phi(s) cap sub): the component group of the
/// centralizer inside the Levi, with its twist-fixed count.
uint64_t leviComponentGroupFixedOrder(const DualTorusElement& s, const SubSystem& leviSub,
                                      const IntMat& twist);

/// N(L, s)-relative Weyl group: C_{W(s)}(twist) modulo the twist-fixed
/// reflection subgroup of Phi(s) cap Phi_L.
struct BlockRelativeWeyl {
  uint64_t numeratorOrder = 0;    // |C_{W(s)}(twist)|
  uint64_t denominatorOrder = 0;  // twist-fixed reflection subgroup of the intersection
  uint64_t order = 0;
  std::vector<int> numeratorIdx;  // enumeration indices
};
BlockRelativeWeyl relativeWeylBlock(const DualTorusElement& s, const std::vector<int>& leviRoots,
                                    const IntMat& twist, const WeylGroup& W);

}  // namespace weylkit
