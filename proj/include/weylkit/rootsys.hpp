#pragma once

// Root systems from Cartan data: generation by reflection closure, exact
// integer pairing, subsystem recognition, and lattice invariants.
//
// Roots are integer coordinate vectors over the simple-root basis. The
// labeling of the E series follows the affine-diagram convention used by
// the rest of this project (chain a1-a3-a4-a5-a6, a2 attached to a4; the
// lowest root attaches to a2), which coincides with Bourbaki. Construction
// of E6 revalidates the highest-root expansion against that convention.
//
// Instances are immutable after construction and safe to share.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/intmat.hpp"

namespace weylkit {

using RootVec = std::vector<int>;  // coordinates over the simple roots

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
  Series series;
  int rank;
  bool operator==(const TypeLabel&) const = default;
  bool operator<(const TypeLabel& o) const {
    return series != o.series ? series < o.series : rank < o.rank;
  }
  std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
};

TypeLabel parseTypeLabel(const std::string& s);

/// |W| for an irreducible type, as a check value for enumerations.
uint64_t weylOrderOf(const TypeLabel& t);

class RootSystem {
 public:
  /// Irreducible system of the given type. Rank bounds are enforced
  /// (E series: 6..8, F: 4, G: 2).
  static RootSystem build(const TypeLabel& t);
  static RootSystem build(const std::string& label) { return build(parseTypeLabel(label)); }

  /// Possibly reducible system with block-diagonal Cartan data.
  static RootSystem buildReducible(const std::vector<TypeLabel>& components);

  int rank() const { return rank_; }
  const std::vector<TypeLabel>& components() const { return components_; }
  bool irreducible() const { return components_.size() == 1; }
  std::string label() const;

  const IntMat& cartan() const { return cartan_; }
  bool simplyLaced() const { return simplyLaced_; }

  int rootCount() const { return static_cast<int>(roots_.size()); }
  int positiveCount() const { return rootCount() / 2; }
  const RootVec& root(int idx) const { return roots_[idx]; }
  const std::vector<RootVec>& roots() const { return roots_; }

  /// Positive roots occupy indices [0, positiveCount()); negation flips
  /// between index i and i + positiveCount() (mod rootCount()).
  bool isPositive(int idx) const { return idx < positiveCount(); }
  int negate(int idx) const { return (idx + positiveCount()) % rootCount(); }
  int simpleRootIndex(int i) const { return simpleIndex_[i]; }

  int indexOf(const RootVec& r) const;  // -1 if not a root
  bool isRoot(const RootVec& r) const { return indexOf(r) >= 0; }

  int height(int idx) const;

  /// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha), exact.
  int64_t pairing(const RootVec& beta, const RootVec& alpha) const;

  /// s_alpha(beta) = beta - <beta, alpha^vee> alpha, as a root index map.
  int reflectIndex(int alphaIdx, int betaIdx) const { return reflTable_[alphaIdx][betaIdx]; }
  RootVec reflect(const RootVec& alpha, const RootVec& beta) const;

  /// Matrix of s_{alpha_i} on the root lattice (simple-root coordinates).
  IntMat simpleReflectionMatrix(int i) const;
  /// Matrix of the reflection in an arbitrary root.
  IntMat reflectionMatrix(int rootIdx) const;

  /// Coroot-lattice (cocharacter) matrix of a root-lattice action.
  IntMat corootMatrix(const IntMat& rootMat) const;

  /// alpha^vee in simple-coroot coordinates.
  std::vector<int64_t> corootOf(int rootIdx) const;

  int highestRootIndex() const { return highestRoot_; }

  /// Order-2 diagram symmetry as a permutation of simple roots, if one
  /// exists (A_n n>=2, D_n, E6).
  std::optional<std::vector<int>> diagramFlip() const;

  /// Lattice matrix (root coordinates) of a simple-root permutation.
  IntMat diagramSymmetryMatrix(const std::vector<int>& perm) const;

  /// Invariant factors of coweight/coroot, by Smith form of the Cartan
  /// matrix; trivial factors omitted.
  std::vector<int64_t> fundamentalGroup() const;

  // half the squared length of root i, in the normalization where short
  // roots have d = 1
  int rootLengthHalf(int idx) const { return dlen_[idx]; }

 private:
  RootSystem() = default;
  void generate();
  void finalize();

  int rank_ = 0;
  std::vector<TypeLabel> components_;
  IntMat cartan_;
  std::vector<int> dsimple_;  // (alpha_i, alpha_i)/2 normalized
  bool simplyLaced_ = true;

  std::vector<RootVec> roots_;
  std::vector<int> dlen_;
  std::vector<int> simpleIndex_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> reflTable_;  // [simple or any root][root] built lazily for simples
  int highestRoot_ = -1;

  friend RootSystem buildFromCartan(const IntMat& cartan, const std::vector<int>& dsimple,
                                    std::vector<TypeLabel> components);
};

/// Result of the simple-coordinate coefficient scan: every positive
/// non-simple root must have at least two coordinates equal to 1 (holds in
/// types A, D, E6; fails in E7, E8). On failure `witness` is a violating
/// root index.
struct CoefficientScan {
  bool holds = true;
  std::vector<int> witnesses;  // all violating positive roots
};
CoefficientScan checkCoefficientLemma(const RootSystem& rs);

/// Closed symmetric subset of roots with its irreducible type decomposition.
struct SubSystem {
  const RootSystem* parent = nullptr;
  std::vector<int> rootIndices;          // sorted, closed under negation
  std::vector<int> baseIndices;          // a simple system of the subset
  std::vector<TypeLabel> typeMultiset;   // sorted component labels
  std::vector<std::vector<int>> componentBases;  // base indices per component

  std::string typeString() const;
  uint64_t weylOrder() const;
};

/// Classify a symmetric reflection-closed subset; throws
/// std::invalid_argument when the subset is not closed.
SubSystem classifySubsystem(const RootSystem& rs, const std::vector<int>& subset);

/// Reflection closure of a seed set of roots (smallest closed symmetric
/// subset containing it).
std::vector<int> reflectionClosure(const RootSystem& rs, const std::vector<int>& seeds);

}  // namespace weylkit
