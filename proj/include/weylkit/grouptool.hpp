#pragma once

// Small finite group engine: BFS closure of generators in any element
// domain, dense multiplication tables, fingerprints, the unique-maximal-
// abelian-normal-subgroup test with its quadratic-action counterpart, the
// wreath recognizer, and the Sylow-2 sweep driven by torus twists.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/intmat.hpp"
#include "weylkit/rootsys.hpp"
#include "weylkit/torus.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// BFS closure of generators; Key must map an element to a hashable
/// canonical string. Throws std::invalid_argument beyond the cap.
template <class E, class Mul, class Key>
std::vector<E> closeUnderProducts(std::vector<E> gens, Mul mul, Key key, uint64_t cap) {
  std::unordered_map<std::string, int> seen;
  std::vector<E> out;
  for (const E& g : gens)
    if (seen.emplace(key(g), static_cast<int>(out.size())).second) out.push_back(g);
  wk_check(!out.empty(), "closure needs at least one generator");
  for (size_t head = 0; head < out.size(); ++head)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      E p = mul(out[head], gens[gi]);
      if (seen.emplace(key(p), static_cast<int>(out.size())).second) {
        out.push_back(std::move(p));
        if (out.size() > cap) throw std::invalid_argument("group closure above cap");
      }
    }
  return out;
}

inline std::string matKeyString(const IntMat& m) {
  return std::string(reinterpret_cast<const char*>(m.data().data()),
                     m.data().size() * sizeof(int64_t));
}

/// Group of integer matrices, closed, with index-level products.
struct MatGroup {
  std::vector<IntMat> elements;
  std::unordered_map<std::string, int> index;
  std::vector<int> generatorIdx;

  static MatGroup generate(const std::vector<IntMat>& gens, uint64_t cap = 100'000);
  size_t size() const { return elements.size(); }
  int indexOf(const IntMat& m) const;
  int mult(int a, int b) const;
  int identityIdx() const;
  bool contains(const IntMat& m) const { return indexOf(m) >= 0; }
};

/// Order-n cyclic and dihedral permutation groups and the quaternion
/// group, as matrix groups (test and fingerprint stock).
MatGroup makeCyclic(int n);
MatGroup makeDihedral(int n);  // order 2n
MatGroup makeQuaternion8();
/// C_a wr C_r as permutation matrices on r*a points.
MatGroup makeCyclicWreath(int a, int r);
/// W(A2)^r : C_r (r cyclically permuting factors) on 3r points; r = 1
/// gives S3.
MatGroup makeSymmetric3Wreath(int r);
MatGroup makeDirectProduct(const MatGroup& a, const MatGroup& b);

// ---- abstract finite groups ----------------------------------------------

/// Index-level group: order, multiplication oracle, identity, and a
/// generating set (empty means "treat every element as a generator").
struct GroupView {
  uint64_t n = 0;
  std::function<int(int, int)> mult;
  int id = 0;
  std::vector<int> gens;
};

GroupView viewOf(const MatGroup& g);
GroupView viewOf(const RelativeWeylGroup& g);

struct GroupFingerprint {
  uint64_t order = 0;
  std::map<uint64_t, uint64_t> orderHistogram;
  std::vector<uint64_t> abelianInvariants;  // of G/[G,G], ascending divisibility
  uint64_t centerOrder = 0;

  bool operator==(const GroupFingerprint&) const = default;
  std::string str() const;
};

/// Order histogram, center, and abelianization invariants; quadratic in
/// the order for the commutator closure, intended for |G| <= ~1e5.
GroupFingerprint fingerprint(const GroupView& g);

// ---- Cabanes machinery -----------------------------------------------------

struct CabanesResult {
  bool cabanes = false;
  // each maximal abelian normal subgroup as a sorted element-index list
  std::vector<std::vector<int>> maximalAbelianNormals;
};

/// Unique-maximal-abelian-normal-subgroup test by exact subgroup scan
/// (abelian normal subgroups are joins of commuting class-generated
/// subgroups). Intended for |G| <= 1e4.
CabanesResult isCabanes(const GroupView& g);

/// Nontrivial cosets hA acting quadratically on an abelian normal A
/// ([h,[h,t]] = 1 for all t), plus the involution-only variant; the two
/// agree when G/A is a 2-group.
struct QuadraticScan {
  std::vector<int> quadraticCosetReps;       // general scan
  std::vector<int> quadraticInvolutionReps;  // h^2 = 1 only
};
QuadraticScan quadraticElements(const GroupView& g, const std::vector<int>& subgroupA);

/// Recognize G as A wr C_r from a direct-product decomposition of a
/// normal subgroup and a transitively permuting element; on success the
/// witness y with y^r = 1 is produced.
struct WreathRecognition {
  bool recognized = false;
  int witnessY = -1;
};
WreathRecognition wreathRecognize(const GroupView& g, const std::vector<std::vector<int>>& components,
                                  int x);

/// The C_a x C_a : (inversion, swap) 2-group; a must be divisible by 4.
/// Verifies [H,H] has index 2 in A and C_H([H,H]) = A.
struct CharacteristicCheck {
  bool commutatorIndexTwo = false;
  bool centralizerIsA = false;
  bool ok() const { return commutatorIndexTwo && centralizerIsA; }
};
CharacteristicCheck characteristicCheck(int a);

// ---- torus quadratic action and Sylow sweeps -------------------------------

/// Quadratic action of a lattice element on the 2-part of a finite torus:
/// involution case 2(A - 1), general case (A - 1)^2, in invariant-factor
/// coordinates.
bool quadraticOnTorus(const FiniteTorus& t, const IntMat& g, bool involutionCase);

struct SweepClassOutcome {
  std::string label;          // subsystem type of the subset, "w0" for the full set
  std::vector<int> subset;
  bool quadratic = false;
  std::string witness;        // order->=4 commutator direction for the non-quadratic proof
};

struct CabanesSweepReport {
  std::string type;
  int epsilon = 1;
  BigInt q;
  int e = 1;
  std::string torusOrder;  // cyclotomic string of the relevant torus
  bool pass = false;       // no class acts quadratically
  bool hypothesisHolds = true;  // w0 != -1 or 8 | Phi_e(q)
  bool excluded = false;        // types outside the sweep's scope
  std::vector<SweepClassOutcome> classes;
  std::optional<bool> ennolaConsistent;  // e = 2 only

  std::string verdict() const {
    if (excluded) return "EXCLUDED";
    if (pass) return "PASS";
    return hypothesisHolds ? "FAIL" : "EXPECTED-FAIL";
  }
};

/// Sylow-2 Cabanes sweep for a (possibly twisted) type at odd q: builds
/// the e-relevant torus, tests every involution representative of the
/// acting reflection group for quadratic action on the 2-part.
CabanesSweepReport cabanesSweep(const RootSystem& rs, int epsilon, const BigInt& q);

}  // namespace weylkit
