#pragma once

// Weyl group machinery: element representation (root permutation + lattice
// matrix, kept consistent), full enumeration with lengths, longest elements
// of parabolics, involution classes via subsets acting by -1, and relative
// Weyl groups N_W(W_J)/W_J.
//
// Enumerations are immutable once built; all queries are read-only.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "weylkit/rootsys.hpp"

namespace weylkit {

/// w as a permutation of root indices. The lattice matrix is derived on
/// demand; construction from a matrix checks the two views agree.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const RootSystem& rs, std::vector<uint8_t> perm);
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simpleReflection(const RootSystem& rs, int i);
  static WeylElement reflection(const RootSystem& rs, int rootIdx);
  static WeylElement fromMatrix(const RootSystem& rs, const IntMat& m);

  const RootSystem& system() const { return *rs_; }
  int apply(int rootIdx) const { return perm_[rootIdx]; }
  const std::vector<uint8_t>& perm() const { return perm_; }

  WeylElement operator*(const WeylElement& o) const;  // (this*o)(r) = this(o(r))
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  bool isIdentity() const;
  int length() const;  // number of positive roots sent negative
  int order(int cap = 10000) const;

  IntMat matrix() const;        // on the root lattice
  IntMat corootMatrix() const;  // on the cocharacter lattice

  /// Greedy reduced word (left-to-right product of simple reflections).
  std::vector<int> reducedWord() const;
  /// A second reduced word with the opposite tie-breaking, for
  /// word-independence checks.
  std::vector<int> reducedWordAlt() const;

  uint64_t key() const;  // packed images of the simple roots

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<uint8_t> perm_;
};

/// Longest element of the standard parabolic W_I, I a set of simple-root
/// positions.
WeylElement longestElement(const RootSystem& rs, const std::vector<int>& I);
inline WeylElement longestElement(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return longestElement(rs, all);
}

/// Longest element of the reflection subgroup of a closed subsystem,
/// relative to the subsystem's own base.
WeylElement subsystemLongestElement(const RootSystem& rs, const SubSystem& sub);

/// Some simple root beta with w_I(beta) positive and != beta; exists for
/// every proper nonempty I on a connected diagram. Throws CheckError
/// otherwise (that would falsify the underlying lemma).
int checkLongestElementLemma(const RootSystem& rs, const std::vector<int>& I);

/// Complete enumeration of W by BFS over simple reflections.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& rs, uint64_t cap = 10'000'000);

  const RootSystem& system() const { return *rs_; }
  size_t size() const { return perms_.size(); }
  WeylElement element(size_t i) const { return WeylElement(*rs_, perms_[i]); }
  const std::vector<uint8_t>& permOf(size_t i) const { return perms_[i]; }
  int lengthOf(size_t i) const { return lengths_[i]; }

  int indexOf(const WeylElement& w) const;
  int multiply(int a, int b) const;  // index-level product

  /// Poincare polynomial coefficients: count of elements per length.
  std::vector<uint64_t> lengthDistribution() const;

  /// Conjugacy classes among the involutions (identity excluded); each
  /// class is a sorted list of element indices.
  std::vector<std::vector<int>> involutionClasses() const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<std::vector<uint8_t>> perms_;
  std::vector<int16_t> lengths_;
  std::unordered_map<uint64_t, int> index_;
};

struct InvolutionClass {
  std::vector<int> subset;    // I with w_I acting by -1 on span(I)
  WeylElement representative;
  bool actsByMinusOne = true;
  uint64_t classSize = 0;     // 0 when unknown (no enumeration)
  bool verifiedByEnumeration = false;
};

/// Involution classes with subset representatives. `twist`, when present,
/// is a diagram symmetry (permutation of simple roots); classes are then
/// taken in the centralizer of the twist, with subsets running over unions
/// of twist-orbits. With |W| <= enumCap the list is cross-checked against
/// the brute-force involution partition; above the cap the candidate
/// subsets are returned undeduplicated.
std::vector<InvolutionClass> richardsonClasses(const RootSystem& rs,
                                               const std::optional<std::vector<int>>& twist = std::nullopt,
                                               uint64_t enumCap = 10'000'000,
                                               const std::string& cacheDir = "");

/// N_W(W_J)/W_J as explicit canonical coset representatives with an
/// index-level multiplication. Built from a full enumeration.
struct RelativeWeylGroup {
  std::vector<WeylElement> reps;
  uint64_t normalizerOrder = 0;
  uint64_t subgroupOrder = 0;
  int multiply(int a, int b) const;
  size_t size() const { return reps.size(); }

  // canonicalization data
  const RootSystem* rs = nullptr;
  std::vector<int> subBase;
  std::map<uint64_t, int> repIndex;
  WeylElement canonicalize(const WeylElement& w) const;
};

RelativeWeylGroup relativeWeyl(const RootSystem& rs, const SubSystem& sub, const WeylGroup& W);

/// BFS closure of Weyl elements under products (reflection subgroups and
/// other small subgroups). Throws std::invalid_argument beyond the cap.
std::vector<WeylElement> closeUnderProductsWeyl(const std::vector<WeylElement>& gens, uint64_t cap);

// ---- packed enumeration (large groups, e.g. E7) --------------------------

/// Memory-lean enumeration: each element is the packed tuple of images of
/// the simple roots. Layered BFS, so lengths come out as layer indices.
struct PackedWeylEnumeration {
  const RootSystem* rs = nullptr;
  std::vector<uint64_t> keys;            // all elements
  std::vector<uint64_t> layerSizes;      // count per length
};

PackedWeylEnumeration enumeratePacked(const RootSystem& rs, uint64_t cap = 10'000'000);

/// Cache round-trip for packed enumerations. Loading re-validates: the
/// count must equal the predicted order and sampled elements must close
/// under a generator; a corrupt file is rejected (returns nullopt).
void savePackedEnumeration(const PackedWeylEnumeration& en, const std::string& path);
std::optional<PackedWeylEnumeration> loadPackedEnumeration(const RootSystem& rs,
                                                           const std::string& path);
/// Cache-aware wrapper: empty cacheDir just enumerates.
PackedWeylEnumeration packedWithCache(const RootSystem& rs, const std::string& cacheDir,
                                      uint64_t cap = 10'000'000);

IntMat keyToMatrix(const RootSystem& rs, uint64_t key);

/// Conjugacy classes of involutions computed from a packed enumeration;
/// returns one representative matrix and the class size for each class.
std::vector<std::pair<IntMat, uint64_t>> packedInvolutionClasses(const PackedWeylEnumeration& en);

}  // namespace weylkit
