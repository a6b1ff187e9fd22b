#include "weylkit/weyl.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace weylkit {

WeylElement::WeylElement(const RootSystem& rs, std::vector<uint8_t> perm)
    : rs_(&rs), perm_(std::move(perm)) {
  wk_check(static_cast<int>(perm_.size()) == rs.rootCount(), "WeylElement: bad permutation size");
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<uint8_t> p(rs.rootCount());
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(rs, std::move(p));
}

WeylElement WeylElement::simpleReflection(const RootSystem& rs, int i) {
  return reflection(rs, rs.simpleRootIndex(i));
}

WeylElement WeylElement::reflection(const RootSystem& rs, int rootIdx) {
  std::vector<uint8_t> p(rs.rootCount());
  for (int r = 0; r < rs.rootCount(); ++r) p[r] = static_cast<uint8_t>(rs.reflectIndex(rootIdx, r));
  return WeylElement(rs, std::move(p));
}

WeylElement WeylElement::fromMatrix(const RootSystem& rs, const IntMat& m) {
  wk_check(m.size() == rs.rank(), "fromMatrix: rank mismatch");
  std::vector<uint8_t> p(rs.rootCount());
  for (int r = 0; r < rs.rootCount(); ++r) {
    std::vector<int64_t> coords(rs.root(r).begin(), rs.root(r).end());
    std::vector<int64_t> img = m.apply(coords);
    RootVec v(img.begin(), img.end());
    int idx = rs.indexOf(v);
    if (idx < 0) throw std::invalid_argument("matrix does not permute the roots");
    p[r] = static_cast<uint8_t>(idx);
  }
  return WeylElement(rs, std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  std::vector<uint8_t> p(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) p[r] = perm_[o.perm_[r]];
  return WeylElement(*rs_, std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<uint8_t> p(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) p[perm_[r]] = static_cast<uint8_t>(r);
  return WeylElement(*rs_, std::move(p));
}

bool WeylElement::isIdentity() const {
  for (size_t r = 0; r < perm_.size(); ++r)
    if (perm_[r] != r) return false;
  return true;
}

int WeylElement::length() const {
  int l = 0;
  for (int r = 0; r < rs_->positiveCount(); ++r)
    if (!rs_->isPositive(perm_[r])) ++l;
  return l;
}

int WeylElement::order(int cap) const {
  WeylElement p = *this;
  for (int k = 1; k <= cap; ++k) {
    if (p.isIdentity()) return k;
    p = p * (*this);
  }
  return 0;
}

IntMat WeylElement::matrix() const {
  IntMat m(rs_->rank());
  for (int j = 0; j < rs_->rank(); ++j) {
    const RootVec& img = rs_->root(perm_[rs_->simpleRootIndex(j)]);
    for (int i = 0; i < rs_->rank(); ++i) m(i, j) = img[i];
  }
  // consistency: matrix action must reproduce the permutation
  for (int r = 0; r < rs_->rootCount(); r += std::max(1, rs_->rootCount() / 8)) {
    std::vector<int64_t> coords(rs_->root(r).begin(), rs_->root(r).end());
    std::vector<int64_t> im = m.apply(coords);
    RootVec v(im.begin(), im.end());
    wk_check(rs_->indexOf(v) == perm_[r], "matrix/permutation mismatch");
  }
  return m;
}

IntMat WeylElement::corootMatrix() const { return rs_->corootMatrix(matrix()); }

std::vector<int> WeylElement::reducedWord() const {
  WeylElement w = *this;
  std::vector<int> rev;
  while (!w.isIdentity()) {
    int pick = -1;
    for (int i = 0; i < rs_->rank(); ++i)
      if (!rs_->isPositive(w.apply(rs_->simpleRootIndex(i)))) {
        pick = i;
        break;
      }
    wk_check(pick >= 0, "reducedWord: no descent found");
    w = w * WeylElement::simpleReflection(*rs_, pick);
    rev.push_back(pick);
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<int> WeylElement::reducedWordAlt() const {
  WeylElement w = *this;
  std::vector<int> rev;
  while (!w.isIdentity()) {
    int pick = -1;
    for (int i = rs_->rank() - 1; i >= 0; --i)
      if (!rs_->isPositive(w.apply(rs_->simpleRootIndex(i)))) {
        pick = i;
        break;
      }
    wk_check(pick >= 0, "reducedWordAlt: no descent found");
    w = w * WeylElement::simpleReflection(*rs_, pick);
    rev.push_back(pick);
  }
  return {rev.rbegin(), rev.rend()};
}

uint64_t WeylElement::key() const {
  uint64_t k = 0;
  for (int i = 0; i < rs_->rank(); ++i)
    k |= static_cast<uint64_t>(perm_[rs_->simpleRootIndex(i)]) << (8 * i);
  return k;
}

WeylElement longestElement(const RootSystem& rs, const std::vector<int>& I) {
  WeylElement w = WeylElement::identity(rs);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : I) {
      if (rs.isPositive(w.apply(rs.simpleRootIndex(i)))) {
        w = w * WeylElement::simpleReflection(rs, i);
        moved = true;
      }
    }
  }
  return w;
}

WeylElement subsystemLongestElement(const RootSystem& rs, const SubSystem& sub) {
  WeylElement w = WeylElement::identity(rs);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int b : sub.baseIndices) {
      if (rs.isPositive(w.apply(b))) {
        w = w * WeylElement::reflection(rs, b);
        moved = true;
      }
    }
  }
  return w;
}

int checkLongestElementLemma(const RootSystem& rs, const std::vector<int>& I) {
  if (I.empty() || static_cast<int>(I.size()) >= rs.rank())
    throw std::invalid_argument("I must be a proper nonempty subset");
  WeylElement wI = longestElement(rs, I);
  for (int b = 0; b < rs.rank(); ++b) {
    int idx = rs.simpleRootIndex(b);
    int img = wI.apply(idx);
    if (rs.isPositive(img) && img != idx) return b;
  }
  throw CheckError("longest-element lemma violated");
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, uint64_t cap) {
  uint64_t predicted = 1;
  for (const auto& c : rs.components()) predicted *= weylOrderOf(c);
  if (predicted > cap) throw std::invalid_argument("Weyl group enumeration above cap");

  WeylGroup g;
  g.rs_ = &rs;

  std::vector<std::vector<uint8_t>> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylElement::simpleReflection(rs, i).perm());

  WeylElement id = WeylElement::identity(rs);
  g.perms_.push_back(id.perm());
  g.lengths_.push_back(0);
  g.index_[id.key()] = 0;

  auto keyOfPerm = [&](const std::vector<uint8_t>& p) {
    uint64_t k = 0;
    for (int i = 0; i < rs.rank(); ++i)
      k |= static_cast<uint64_t>(p[rs.simpleRootIndex(i)]) << (8 * i);
    return k;
  };

  size_t head = 0;
  while (head < g.perms_.size()) {
    std::vector<uint8_t> cur = g.perms_[head];
    int16_t len = g.lengths_[head];
    ++head;
    for (const auto& s : gens) {
      std::vector<uint8_t> nxt(cur.size());
      for (size_t r = 0; r < cur.size(); ++r) nxt[r] = s[cur[r]];
      uint64_t k = keyOfPerm(nxt);
      if (g.index_.count(k)) continue;
      g.index_[k] = static_cast<int>(g.perms_.size());
      g.perms_.push_back(std::move(nxt));
      g.lengths_.push_back(static_cast<int16_t>(len + 1));
      wk_check(g.perms_.size() <= predicted, "enumeration exceeded predicted order");
    }
  }
  wk_check(g.perms_.size() == predicted, "enumeration incomplete");
  return g;
}

int WeylGroup::indexOf(const WeylElement& w) const {
  auto it = index_.find(w.key());
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  const auto& pa = perms_[a];
  const auto& pb = perms_[b];
  uint64_t k = 0;
  for (int i = 0; i < rs_->rank(); ++i)
    k |= static_cast<uint64_t>(pa[pb[rs_->simpleRootIndex(i)]]) << (8 * i);
  auto it = index_.find(k);
  wk_check(it != index_.end(), "product fell outside enumeration");
  return it->second;
}

std::vector<uint64_t> WeylGroup::lengthDistribution() const {
  int maxLen = 0;
  for (int16_t l : lengths_) maxLen = std::max(maxLen, static_cast<int>(l));
  std::vector<uint64_t> dist(maxLen + 1, 0);
  for (int16_t l : lengths_) ++dist[l];
  return dist;
}

std::vector<std::vector<int>> WeylGroup::involutionClasses() const {
  const int n = static_cast<int>(perms_.size());
  std::vector<char> isInv(n, 0);
  for (int i = 1; i < n; ++i) {
    const auto& p = perms_[i];
    bool inv = true;
    for (size_t r = 0; r < p.size() && inv; ++r)
      if (p[p[r]] != r) inv = false;
    isInv[i] = inv;
  }
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<uint8_t>> gens;
  for (int i = 0; i < rs_->rank(); ++i) gens.push_back(WeylElement::simpleReflection(*rs_, i).perm());

  for (int i = 1; i < n; ++i) {
    if (!isInv[i] || cls[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> orbit{i};
    cls[i] = id;
    for (size_t h = 0; h < orbit.size(); ++h) {
      const auto& p = perms_[orbit[h]];
      for (const auto& s : gens) {
        // conjugate s w s
        uint64_t k = 0;
        for (int t = 0; t < rs_->rank(); ++t)
          k |= static_cast<uint64_t>(s[p[s[rs_->simpleRootIndex(t)]]]) << (8 * t);
        int j = index_.at(k);
        if (cls[j] < 0) {
          cls[j] = id;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

namespace {

std::vector<std::vector<int>> twistUnits(const RootSystem& rs,
                                         const std::optional<std::vector<int>>& twist) {
  std::vector<std::vector<int>> units;
  if (!twist) {
    for (int i = 0; i < rs.rank(); ++i) units.push_back({i});
    return units;
  }
  std::vector<char> seen(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      orbit.push_back(j);
      j = (*twist)[j];
    }
    units.push_back(orbit);
  }
  return units;
}

// the Richardson condition relative to the twist: w_I negates the sum of
// each orbit of simple roots in I (for the trivial twist this is -1 on
// span(I))
bool actsByMinusOneOnUnits(const RootSystem& rs, const WeylElement& w,
                           const std::vector<std::vector<int>>& unitsInI) {
  IntMat m = w.matrix();
  for (const auto& orbit : unitsInI) {
    std::vector<int64_t> sum(rs.rank(), 0);
    for (int i : orbit)
      for (int c = 0; c < rs.rank(); ++c) sum[c] += rs.root(rs.simpleRootIndex(i))[c];
    std::vector<int64_t> img = m.apply(sum);
    for (int c = 0; c < rs.rank(); ++c)
      if (img[c] != -sum[c]) return false;
  }
  return true;
}

}  // namespace

std::vector<InvolutionClass> richardsonClasses(const RootSystem& rs,
                                               const std::optional<std::vector<int>>& twist,
                                               uint64_t enumCap, const std::string& cacheDir) {
  std::vector<std::pair<std::vector<int>, WeylElement>> candidates;
  std::vector<std::vector<int>> units = twistUnits(rs, twist);
  const size_t m = units.size();
  for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
    std::vector<int> I;
    std::vector<std::vector<int>> inI;
    for (size_t u = 0; u < m; ++u)
      if (mask & (size_t{1} << u)) {
        I.insert(I.end(), units[u].begin(), units[u].end());
        inI.push_back(units[u]);
      }
    std::sort(I.begin(), I.end());
    WeylElement wI = longestElement(rs, I);
    if (wI.isIdentity()) continue;
    if (!actsByMinusOneOnUnits(rs, wI, inI)) continue;
    candidates.emplace_back(I, wI);
  }

  uint64_t predicted = 1;
  for (const auto& c : rs.components()) predicted *= weylOrderOf(c);

  std::vector<InvolutionClass> out;

  if (predicted > enumCap || (predicted > 1'000'000 && !twist)) {
    if (predicted > enumCap) {
      // beyond any enumeration budget: candidates undeduplicated
      for (const auto& [I, wI] : candidates) {
        InvolutionClass c;
        c.subset = I;
        c.representative = wI;
        c.verifiedByEnumeration = false;
        out.push_back(std::move(c));
      }
      return out;
    }
    // packed verification: partition involutions by conjugation orbits and
    // match each class to a candidate key
    PackedWeylEnumeration en = packedWithCache(rs, cacheDir, enumCap);
    std::unordered_map<uint64_t, int> classOf;
    for (uint64_t k : en.keys) {
      IntMat m = keyToMatrix(rs, k);
      if ((m * m).isIdentity() && !m.isIdentity()) classOf[k] = -1;
    }
    std::vector<IntMat> gens;
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.simpleReflectionMatrix(i));
    auto matKey = [&](const IntMat& m) {
      uint64_t k = 0;
      for (int j = 0; j < rs.rank(); ++j) {
        RootVec v(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) v[i] = static_cast<int>(m(i, j));
        k |= static_cast<uint64_t>(rs.indexOf(v)) << (8 * j);
      }
      return k;
    };
    std::vector<uint64_t> classSizes;
    for (auto& [seed, cid] : classOf) {
      if (cid >= 0) continue;
      int id = static_cast<int>(classSizes.size());
      std::vector<uint64_t> orbit{seed};
      cid = id;
      for (size_t h = 0; h < orbit.size(); ++h) {
        IntMat m = keyToMatrix(rs, orbit[h]);
        for (const IntMat& s : gens) {
          uint64_t ck = matKey(s * m * s);
          auto it = classOf.find(ck);
          wk_check(it != classOf.end(), "conjugate of an involution not among involutions");
          if (it->second < 0) {
            it->second = id;
            orbit.push_back(ck);
          }
        }
      }
      classSizes.push_back(orbit.size());
    }
    std::vector<int> pick(classSizes.size(), -1);
    for (size_t k = 0; k < candidates.size(); ++k) {
      auto it = classOf.find(candidates[k].second.key());
      wk_check(it != classOf.end(), "candidate w_I is not an involution");
      if (pick[it->second] < 0) pick[it->second] = static_cast<int>(k);
    }
    for (size_t c = 0; c < classSizes.size(); ++c) {
      wk_check(pick[c] >= 0, "involution class without subset representative");
      InvolutionClass cl;
      cl.subset = candidates[pick[c]].first;
      cl.representative = candidates[pick[c]].second;
      cl.classSize = classSizes[c];
      cl.verifiedByEnumeration = true;
      out.push_back(std::move(cl));
    }
    return out;
  }

  WeylGroup W = WeylGroup::enumerate(rs, enumCap);

  if (!twist) {
    auto classes = W.involutionClasses();
    std::vector<int> classOf(W.size(), -1);
    for (size_t c = 0; c < classes.size(); ++c)
      for (int i : classes[c]) classOf[i] = static_cast<int>(c);
    std::vector<int> pick(classes.size(), -1);
    for (size_t k = 0; k < candidates.size(); ++k) {
      int idx = W.indexOf(candidates[k].second);
      wk_check(idx >= 0, "candidate not found in enumeration");
      int c = classOf[idx];
      wk_check(c >= 0, "candidate w_I is not an involution");
      if (pick[c] < 0) pick[c] = static_cast<int>(k);
    }
    for (size_t c = 0; c < classes.size(); ++c) {
      wk_check(pick[c] >= 0, "involution class without subset representative");
      InvolutionClass cl;
      cl.subset = candidates[pick[c]].first;
      cl.representative = candidates[pick[c]].second;
      cl.classSize = classes[c].size();
      cl.verifiedByEnumeration = true;
      out.push_back(std::move(cl));
    }
    return out;
  }

  // twisted: classes taken inside the centralizer of the diagram symmetry
  IntMat tau = rs.diagramSymmetryMatrix(*twist);
  std::vector<int> fixed;
  for (size_t i = 0; i < W.size(); ++i) {
    WeylElement w = W.element(i);
    IntMat m = w.matrix();
    if (tau * m == m * tau) fixed.push_back(static_cast<int>(i));
  }
  std::vector<int> fixedPos(W.size(), -1);
  for (size_t k = 0; k < fixed.size(); ++k) fixedPos[fixed[k]] = static_cast<int>(k);

  std::vector<int> cls(fixed.size(), -1);
  std::vector<std::vector<int>> classes;
  for (size_t k = 0; k < fixed.size(); ++k) {
    int i = fixed[k];
    const auto& p = W.permOf(i);
    bool inv = true;
    for (size_t r = 0; r < p.size() && inv; ++r)
      if (p[p[r]] != r) inv = false;
    if (!inv || W.element(i).isIdentity() || cls[k] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> orbit;
    // full orbit under the fixed subgroup
    for (int g : fixed) {
      int gi = W.multiply(g, i);
      // g i g^{-1}: find inverse of g by key trick
      WeylElement ginv = W.element(g).inverse();
      int gig = W.multiply(gi, W.indexOf(ginv));
      int pos = fixedPos[gig];
      wk_check(pos >= 0, "conjugate left the centralizer");
      if (cls[pos] < 0) {
        cls[pos] = id;
        orbit.push_back(gig);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    classes.push_back(std::move(orbit));
  }

  std::vector<int> pick(classes.size(), -1);
  for (size_t k = 0; k < candidates.size(); ++k) {
    int idx = W.indexOf(candidates[k].second);
    wk_check(idx >= 0 && fixedPos[idx] >= 0, "twisted candidate not in centralizer");
    int c = cls[fixedPos[idx]];
    wk_check(c >= 0, "twisted candidate is not an involution");
    if (pick[c] < 0) pick[c] = static_cast<int>(k);
  }
  for (size_t c = 0; c < classes.size(); ++c) {
    wk_check(pick[c] >= 0, "twisted involution class without orbit-subset representative");
    InvolutionClass cl;
    cl.subset = candidates[pick[c]].first;
    cl.representative = candidates[pick[c]].second;
    cl.classSize = classes[c].size();
    cl.verifiedByEnumeration = true;
    out.push_back(std::move(cl));
  }
  return out;
}

WeylElement RelativeWeylGroup::canonicalize(const WeylElement& w) const {
  WeylElement c = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int b : subBase) {
      if (!rs->isPositive(c.apply(b))) {
        c = c * WeylElement::reflection(*rs, b);
        moved = true;
      }
    }
  }
  return c;
}

int RelativeWeylGroup::multiply(int a, int b) const {
  WeylElement p = canonicalize(reps[a] * reps[b]);
  auto it = repIndex.find(p.key());
  wk_check(it != repIndex.end(), "coset product fell outside the group");
  return it->second;
}

RelativeWeylGroup relativeWeyl(const RootSystem& rs, const SubSystem& sub, const WeylGroup& W) {
  RelativeWeylGroup g;
  g.rs = &rs;
  g.subBase = sub.baseIndices;

  std::vector<char> inSub(rs.rootCount(), 0);
  for (int i : sub.rootIndices) inSub[i] = 1;

  uint64_t normOrder = 0;
  for (size_t i = 0; i < W.size(); ++i) {
    const auto& p = W.permOf(i);
    bool stab = true;
    for (int r : sub.rootIndices)
      if (!inSub[p[r]]) {
        stab = false;
        break;
      }
    if (!stab) continue;
    ++normOrder;
    WeylElement rep = g.canonicalize(W.element(i));
    uint64_t k = rep.key();
    if (!g.repIndex.count(k)) {
      g.repIndex[k] = static_cast<int>(g.reps.size());
      g.reps.push_back(rep);
    }
  }
  g.normalizerOrder = normOrder;
  g.subgroupOrder = sub.weylOrder();
  wk_check(g.reps.size() * g.subgroupOrder == normOrder,
           "normalizer order does not factor through the subsystem Weyl group");
  return g;
}

std::vector<WeylElement> closeUnderProductsWeyl(const std::vector<WeylElement>& gens, uint64_t cap) {
  wk_check(!gens.empty(), "closure needs at least one generator");
  std::unordered_map<uint64_t, int> seen;
  std::vector<WeylElement> out{WeylElement::identity(gens[0].system())};
  seen[out[0].key()] = 0;
  for (const auto& g : gens)
    if (seen.emplace(g.key(), static_cast<int>(out.size())).second) out.push_back(g);
  for (size_t head = 0; head < out.size(); ++head)
    for (const auto& g : gens) {
      WeylElement p = out[head] * g;
      if (seen.emplace(p.key(), static_cast<int>(out.size())).second) {
        out.push_back(std::move(p));
        if (out.size() > cap) throw std::invalid_argument("Weyl closure above cap");
      }
    }
  return out;
}

PackedWeylEnumeration enumeratePacked(const RootSystem& rs, uint64_t cap) {
  uint64_t predicted = 1;
  for (const auto& c : rs.components()) predicted *= weylOrderOf(c);
  if (predicted > cap) throw std::invalid_argument("packed enumeration above cap");

  const int rank = rs.rank();
  std::vector<std::vector<int>> refl(rank);
  for (int i = 0; i < rank; ++i) {
    refl[i].resize(rs.rootCount());
    for (int r = 0; r < rs.rootCount(); ++r) refl[i][r] = rs.reflectIndex(rs.simpleRootIndex(i), r);
  }

  auto applyGen = [&](int i, uint64_t key) {
    uint64_t nk = 0;
    for (int t = 0; t < rank; ++t) {
      uint64_t img = (key >> (8 * t)) & 0xff;
      nk |= static_cast<uint64_t>(refl[i][img]) << (8 * t);
    }
    return nk;
  };

  uint64_t idKey = 0;
  for (int t = 0; t < rank; ++t)
    idKey |= static_cast<uint64_t>(rs.simpleRootIndex(t)) << (8 * t);

  PackedWeylEnumeration en;
  en.rs = &rs;
  std::vector<uint64_t> prev, cur{idKey};
  en.keys.push_back(idKey);
  en.layerSizes.push_back(1);

  while (!cur.empty()) {
    std::vector<uint64_t> next;
    next.reserve(cur.size() * rank);
    for (uint64_t k : cur)
      for (int i = 0; i < rank; ++i) next.push_back(applyGen(i, k));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    // neighbors of layer l live in layers l-1 and l+1 only
    std::vector<uint64_t> fresh;
    fresh.reserve(next.size());
    for (uint64_t k : next)
      if (!std::binary_search(prev.begin(), prev.end(), k)) fresh.push_back(k);
    prev = std::move(cur);
    cur = std::move(fresh);
    if (!cur.empty()) {
      en.keys.insert(en.keys.end(), cur.begin(), cur.end());
      en.layerSizes.push_back(cur.size());
      wk_check(en.keys.size() <= predicted, "packed enumeration exceeded predicted order");
    }
  }
  wk_check(en.keys.size() == predicted, "packed enumeration incomplete");
  return en;
}

void savePackedEnumeration(const PackedWeylEnumeration& en, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open cache file for writing: " + path);
  uint64_t magic = 0x57454b4c50414b31ull;  // "WEKLPAK1"
  uint64_t rank = en.rs->rank();
  uint64_t nLayers = en.layerSizes.size();
  uint64_t nKeys = en.keys.size();
  f.write(reinterpret_cast<const char*>(&magic), 8);
  f.write(reinterpret_cast<const char*>(&rank), 8);
  f.write(reinterpret_cast<const char*>(&nLayers), 8);
  f.write(reinterpret_cast<const char*>(&nKeys), 8);
  f.write(reinterpret_cast<const char*>(en.layerSizes.data()), 8 * nLayers);
  f.write(reinterpret_cast<const char*>(en.keys.data()), 8 * nKeys);
}

std::optional<PackedWeylEnumeration> loadPackedEnumeration(const RootSystem& rs,
                                                           const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  uint64_t magic = 0, rank = 0, nLayers = 0, nKeys = 0;
  f.read(reinterpret_cast<char*>(&magic), 8);
  f.read(reinterpret_cast<char*>(&rank), 8);
  f.read(reinterpret_cast<char*>(&nLayers), 8);
  f.read(reinterpret_cast<char*>(&nKeys), 8);
  if (!f || magic != 0x57454b4c50414b31ull || rank != static_cast<uint64_t>(rs.rank()))
    return std::nullopt;
  uint64_t predicted = 1;
  for (const auto& c : rs.components()) predicted *= weylOrderOf(c);
  if (nKeys != predicted || nLayers > nKeys) return std::nullopt;

  PackedWeylEnumeration en;
  en.rs = &rs;
  en.layerSizes.resize(nLayers);
  en.keys.resize(nKeys);
  f.read(reinterpret_cast<char*>(en.layerSizes.data()), 8 * nLayers);
  f.read(reinterpret_cast<char*>(en.keys.data()), 8 * nKeys);
  if (!f) return std::nullopt;
  uint64_t total = 0;
  for (uint64_t l : en.layerSizes) total += l;
  if (total != nKeys) return std::nullopt;

  // never trusted blindly: sampled closure and membership checks
  std::vector<uint64_t> sorted = en.keys;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 128; ++t) {
    uint64_t k = en.keys[rng() % nKeys];
    IntMat m;
    try {
      m = keyToMatrix(rs, k);
    } catch (const CheckError&) {
      return std::nullopt;
    }
    IntMat prod = rs.simpleReflectionMatrix(static_cast<int>(rng() % rs.rank())) * m;
    uint64_t pk = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      RootVec v(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) v[i] = static_cast<int>(prod(i, j));
      int idx = rs.indexOf(v);
      if (idx < 0) return std::nullopt;
      pk |= static_cast<uint64_t>(idx) << (8 * j);
    }
    if (!std::binary_search(sorted.begin(), sorted.end(), pk)) return std::nullopt;
  }
  return en;
}

PackedWeylEnumeration packedWithCache(const RootSystem& rs, const std::string& cacheDir,
                                      uint64_t cap) {
  if (cacheDir.empty()) return enumeratePacked(rs, cap);
  std::string path = cacheDir + "/packed-weyl-" + rs.label() + ".bin";
  if (auto cached = loadPackedEnumeration(rs, path)) return std::move(*cached);
  PackedWeylEnumeration en = enumeratePacked(rs, cap);
  try {
    savePackedEnumeration(en, path);
  } catch (const std::invalid_argument&) {
    // cache directory not writable: proceed without caching
  }
  return en;
}

IntMat keyToMatrix(const RootSystem& rs, uint64_t key) {
  IntMat m(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    int idx = static_cast<int>((key >> (8 * j)) & 0xff);
    const RootVec& img = rs.root(idx);
    for (int i = 0; i < rs.rank(); ++i) m(i, j) = img[i];
  }
  return m;
}

std::vector<std::pair<IntMat, uint64_t>> packedInvolutionClasses(const PackedWeylEnumeration& en) {
  const RootSystem& rs = *en.rs;
  const int rank = rs.rank();

  auto matKey = [&](const IntMat& m) {
    uint64_t k = 0;
    for (int j = 0; j < rank; ++j) {
      RootVec v(rank);
      for (int i = 0; i < rank; ++i) v[i] = static_cast<int>(m(i, j));
      int idx = rs.indexOf(v);
      wk_check(idx >= 0, "matrix does not permute roots");
      k |= static_cast<uint64_t>(idx) << (8 * j);
    }
    return k;
  };

  std::unordered_map<uint64_t, int> classOf;
  std::vector<uint64_t> involutions;
  for (uint64_t k : en.keys) {
    IntMat m = keyToMatrix(rs, k);
    if ((m * m).isIdentity() && !m.isIdentity()) {
      involutions.push_back(k);
      classOf[k] = -1;
    }
  }

  std::vector<IntMat> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(rs.simpleReflectionMatrix(i));

  std::vector<std::pair<IntMat, uint64_t>> classes;
  for (uint64_t seed : involutions) {
    if (classOf[seed] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<uint64_t> orbit{seed};
    classOf[seed] = id;
    for (size_t h = 0; h < orbit.size(); ++h) {
      IntMat m = keyToMatrix(rs, orbit[h]);
      for (const IntMat& s : gens) {
        uint64_t ck = matKey(s * m * s);
        auto it = classOf.find(ck);
        wk_check(it != classOf.end(), "conjugate of an involution not among involutions");
        if (it->second < 0) {
          it->second = id;
          orbit.push_back(ck);
        }
      }
    }
    classes.emplace_back(keyToMatrix(rs, seed), orbit.size());
  }
  return classes;
}

}  // namespace weylkit
