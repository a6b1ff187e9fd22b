#include "weylkit/semisimple.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylkit {

DualTorusElement DualTorusElement::fromHExpression(const RootSystem& rs,
                                                   const std::vector<std::pair<int, int>>& exps,
                                                   int order) {
  wk_check(order >= 1, "order must be positive");
  std::vector<int> coords(rs.rank(), 0);
  for (auto [i, e] : exps) {
    wk_check(i >= 0 && i < rs.rank(), "simple root index out of range");
    coords[i] = ((e % order) + order) % order;
  }
  // pairing vector <alpha_i, s> * order = (Cartan * coords)_i
  std::vector<int> p(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    int64_t v = 0;
    for (int j = 0; j < rs.rank(); ++j) v += rs.cartan()(i, j) * coords[j];
    p[i] = static_cast<int>(((v % order) + order) % order);
  }
  return fromPairings(rs, std::move(p), order);
}

DualTorusElement DualTorusElement::fromPairings(const RootSystem& rs, std::vector<int> pairings,
                                                int order) {
  DualTorusElement s;
  s.rs_ = &rs;
  s.n_ = order;
  for (int& v : pairings) v = ((v % order) + order) % order;
  s.p_ = std::move(pairings);
  wk_check(static_cast<int>(s.p_.size()) == rs.rank(), "pairing vector has wrong rank");
  return s;
}

int DualTorusElement::pairingWithRoot(int rootIdx) const {
  const RootVec& r = rs_->root(rootIdx);
  int64_t v = 0;
  for (int i = 0; i < rs_->rank(); ++i) v += static_cast<int64_t>(r[i]) * p_[i];
  return static_cast<int>(((v % n_) + n_) % n_);
}

bool DualTorusElement::isIdentity() const {
  return std::all_of(p_.begin(), p_.end(), [](int v) { return v == 0; });
}

DualTorusElement DualTorusElement::applied(const WeylElement& w) const {
  // <alpha_i, w.s> = <w^{-1} alpha_i, s>
  WeylElement winv = w.inverse();
  std::vector<int> p(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i)
    p[i] = pairingWithRoot(winv.apply(rs_->simpleRootIndex(i)));
  return fromPairings(*rs_, std::move(p), n_);
}

DualTorusElement DualTorusElement::appliedMatrix(const IntMat& m) const {
  int om = m.order(2000);
  wk_check(om > 0, "matrix of infinite order");
  IntMat minv = m.pow(om - 1);
  std::vector<int> p(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) {
    std::vector<int64_t> v(rs_->root(rs_->simpleRootIndex(i)).begin(),
                           rs_->root(rs_->simpleRootIndex(i)).end());
    std::vector<int64_t> iv = minv.apply(v);
    int idx = rs_->indexOf(RootVec(iv.begin(), iv.end()));
    wk_check(idx >= 0, "matrix does not permute the roots");
    p[i] = pairingWithRoot(idx);
  }
  return fromPairings(*rs_, std::move(p), n_);
}

DualTorusElement DualTorusElement::scaled(const BigInt& k) const {
  BigInt kk = k % n_;
  if (kk < 0) kk += n_;
  int ki = static_cast<int>(kk);
  std::vector<int> p(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) p[i] = static_cast<int>((static_cast<int64_t>(p_[i]) * ki) % n_);
  return fromPairings(*rs_, std::move(p), n_);
}

std::string DualTorusElement::str() const {
  std::string s = "[";
  for (int i = 0; i < rs_->rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(p_[i]);
  }
  return s + "]/" + std::to_string(n_);
}

namespace {

std::vector<int> phiSIndices(const DualTorusElement& s) {
  std::vector<int> out;
  for (int r = 0; r < s.system().rootCount(); ++r)
    if (s.pairingWithRoot(r) == 0) out.push_back(r);
  return out;
}

// stabilizer scan: w fixes s iff the pairing vector is invariant under
// precomposition with w
bool stabilizes(const DualTorusElement& s, const RootSystem& rs, const std::vector<uint8_t>& perm) {
  for (int i = 0; i < rs.rank(); ++i)
    if (s.pairingWithRoot(perm[rs.simpleRootIndex(i)]) != s.pairings()[i]) return false;
  return true;
}

int fixedSpaceDim(const RootSystem& rs, const std::vector<IntMat>& mats) {
  // common kernel of (M - I)
  const int r = rs.rank();
  BigMat stack;
  for (const IntMat& m : mats)
    for (int i = 0; i < r; ++i) {
      std::vector<BigInt> row(r);
      for (int j = 0; j < r; ++j) row[j] = m(i, j) - (i == j ? 1 : 0);
      stack.push_back(std::move(row));
    }
  if (stack.empty()) return r;
  // rank via elimination: pad to square blocks using smith on r x r chunks
  // is wasteful; do simple fraction-free elimination here
  int rank = 0;
  size_t rows = stack.size();
  std::vector<int> used(rows, 0);
  for (int c = 0; c < r; ++c) {
    int p = -1;
    for (size_t i = 0; i < rows; ++i)
      if (!used[i] && stack[i][c] != 0) {
        p = static_cast<int>(i);
        break;
      }
    if (p < 0) continue;
    used[p] = 1;
    ++rank;
    for (size_t i = 0; i < rows; ++i) {
      if (static_cast<int>(i) == p || stack[i][c] == 0) continue;
      BigInt a = stack[i][c], b = stack[p][c];
      for (int j = 0; j < r; ++j) stack[i][j] = stack[i][j] * b - stack[p][j] * a;
    }
  }
  return r - rank;
}

}  // namespace

CentralizerData centralizer(const DualTorusElement& s, const WeylGroup& W) {
  const RootSystem& rs = s.system();
  CentralizerData cd{.element = s, .phiS = {}, .connectedWeylOrder = 0, .stabilizer = {}, .stabilizerOrder = 0, .componentGroupOrder = 0, .isolated = false, .quasiIsolated = false};
  cd.phiS = classifySubsystem(rs, phiSIndices(s));
  cd.connectedWeylOrder = cd.phiS.weylOrder();
  for (size_t i = 0; i < W.size(); ++i)
    if (stabilizes(s, rs, W.permOf(i))) cd.stabilizer.push_back(static_cast<int>(i));
  cd.stabilizerOrder = cd.stabilizer.size();
  wk_check(cd.stabilizerOrder % cd.connectedWeylOrder == 0,
           "W(Phi(s)) does not divide the stabilizer");
  cd.componentGroupOrder = cd.stabilizerOrder / cd.connectedWeylOrder;

  // isolated: the reflection subgroup spans the whole space
  std::vector<int> base = cd.phiS.baseIndices;
  BigMat span;
  for (int b : base) {
    std::vector<BigInt> row(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) row[j] = rs.root(b)[j];
    span.push_back(row);
  }
  int spanRank = 0;
  {
    const int r = rs.rank();
    std::vector<int> used(span.size(), 0);
    for (int c = 0; c < r; ++c) {
      int p = -1;
      for (size_t i = 0; i < span.size(); ++i)
        if (!used[i] && span[i][c] != 0) {
          p = static_cast<int>(i);
          break;
        }
      if (p < 0) continue;
      used[p] = 1;
      ++spanRank;
      for (size_t i = 0; i < span.size(); ++i) {
        if (static_cast<int>(i) == p || span[i][c] == 0) continue;
        BigInt a = span[i][c], b = span[p][c];
        for (int j = 0; j < r; ++j) span[i][j] = span[i][j] * b - span[p][j] * a;
      }
    }
  }
  cd.isolated = (spanRank == rs.rank());

  std::vector<IntMat> stabMats;
  for (int i : cd.stabilizer) stabMats.push_back(W.element(i).matrix());
  cd.quasiIsolated = (fixedSpaceDim(rs, stabMats) == 0);
  return cd;
}

bool isIsolated(const DualTorusElement& s, const WeylGroup& W) { return centralizer(s, W).isolated; }
bool isQuasiIsolated(const DualTorusElement& s, const WeylGroup& W) {
  return centralizer(s, W).quasiIsolated;
}

std::vector<TorsionClass> classifyTorsion(const RootSystem& rs, int n, const WeylGroup& W) {
  wk_check(n >= 1 && n <= 6, "torsion scan intended for small n");
  const int r = rs.rank();
  uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= static_cast<uint64_t>(n);
  wk_check(total <= 100'000'000, "torsion scan too large");

  // transition tables: generator k sends pairing vector p to p' with
  // p'_i = p(s_k(alpha_i))
  std::vector<std::vector<RootVec>> trans(r);
  for (int k = 0; k < r; ++k) {
    trans[k].resize(r);
    for (int i = 0; i < r; ++i)
      trans[k][i] = rs.root(rs.reflectIndex(rs.simpleRootIndex(k), rs.simpleRootIndex(i)));
  }
  auto applyGen = [&](int k, uint64_t code) {
    std::vector<int> p(r);
    uint64_t c = code;
    for (int i = 0; i < r; ++i) {
      p[i] = static_cast<int>(c % n);
      c /= n;
    }
    uint64_t out = 0;
    for (int i = r - 1; i >= 0; --i) {
      int64_t v = 0;
      for (int j = 0; j < r; ++j) v += static_cast<int64_t>(trans[k][i][j]) * p[j];
      out = out * n + static_cast<uint64_t>(((v % n) + n) % n);
    }
    return out;
  };

  std::vector<char> seen(total, 0);
  std::vector<TorsionClass> classes;
  uint64_t covered = 0;
  for (uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<uint64_t> orbit{start};
    seen[start] = 1;
    for (size_t h = 0; h < orbit.size(); ++h)
      for (int k = 0; k < r; ++k) {
        uint64_t img = applyGen(k, orbit[h]);
        if (!seen[img]) {
          seen[img] = 1;
          orbit.push_back(img);
        }
      }
    covered += orbit.size();

    uint64_t repCode = *std::min_element(orbit.begin(), orbit.end());
    std::vector<int> p(r);
    uint64_t c = repCode;
    for (int i = 0; i < r; ++i) {
      p[i] = static_cast<int>(c % n);
      c /= n;
    }
    DualTorusElement rep = DualTorusElement::fromPairings(rs, p, n);
    CentralizerData cd = centralizer(rep, W);
    TorsionClass tc{.representative = rep,
                    .orbitSize = orbit.size(),
                    .centralizerType = cd.phiS.typeString(),
                    .componentGroupOrder = cd.componentGroupOrder,
                    .isolated = cd.isolated,
                    .quasiIsolated = cd.quasiIsolated};
    classes.push_back(std::move(tc));
  }
  wk_check(covered == total, "torsion orbits do not cover the point set");
  return classes;
}

std::vector<int> dSplitLeviRoots(const RootSystem& rs, const IntMat& twist, int d) {
  const int r = rs.rank();
  // K = ker Phi_d(twist) on the cocharacter lattice
  const ZPoly& phi = cyclotomic(d);
  BigMat val(r, std::vector<BigInt>(r, 0));
  IntMat pw = IntMat::identity(r);
  for (size_t k = 0; k < phi.size(); ++k) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) val[i][j] += phi[k] * pw(i, j);
    if (k + 1 < phi.size()) pw = pw * twist;
  }
  auto kernel = integerKernelBasis(val);
  std::vector<int> out;
  for (int rt = 0; rt < rs.rootCount(); ++rt) {
    bool orth = true;
    for (const auto& kv : kernel) {
      // <alpha, y> = alpha^T C y in simple coordinates
      BigInt v = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) v += BigInt(rs.root(rt)[i]) * rs.cartan()(i, j) * kv[j];
      if (v != 0) {
        orth = false;
        break;
      }
    }
    if (orth) out.push_back(rt);
  }
  return out;
}

MinimalSplitReport verifyMinimalDSplit(const DualTorusElement& s, const IntMat& twist, int d,
                                       const std::vector<int>& candidateLeviRoots) {
  const RootSystem& rs = s.system();
  MinimalSplitReport rep;
  rep.leviRoots = dSplitLeviRoots(rs, twist, d);
  std::vector<int> cand = candidateLeviRoots;
  std::sort(cand.begin(), cand.end());
  rep.matchesCandidate = (cand == rep.leviRoots);
  rep.centralizerTorusInLevi = true;
  for (int rt : rep.leviRoots)
    if (s.pairingWithRoot(rt) == 0) rep.centralizerTorusInLevi = false;
  return rep;
}

std::string RationalType::str() const {
  std::string s;
  for (const auto& o : orbits) {
    if (!s.empty()) s += ".";
    if (o.twistOrder > 1) s += std::to_string(o.twistOrder);
    s += o.type.str();
    s += "(q";
    if (o.fieldDegree > 1) s += "^" + std::to_string(o.fieldDegree);
    s += ")";
  }
  std::string c = centralPart.str();
  if (c != "1") s = s.empty() ? c : c + "." + s;
  return s.empty() ? "1" : s;
}

std::string RationalType::orbitSignature() const {
  std::string s;
  for (const auto& o : orbits) {
    if (!s.empty()) s += "+";
    s += o.type.str() + ":" + std::to_string(o.fieldDegree) + ":" + std::to_string(o.twistOrder);
  }
  return s;
}

RationalType rationalType(const RootSystem& rs, const SubSystem& sub, const IntMat& twist) {
  RationalType out;

  // twist must permute the subsystem's roots
  std::vector<int> imgOf(rs.rootCount(), -1);
  std::set<int> inSub(sub.rootIndices.begin(), sub.rootIndices.end());
  for (int rt : sub.rootIndices) {
    std::vector<int64_t> v(rs.root(rt).begin(), rs.root(rt).end());
    std::vector<int64_t> iv = twist.apply(v);
    int idx = rs.indexOf(RootVec(iv.begin(), iv.end()));
    if (idx < 0 || !inSub.count(idx))
      throw std::invalid_argument("twist does not stabilize the subsystem");
    imgOf[rt] = idx;
  }

  // orbits of components
  const int nc = static_cast<int>(sub.componentBases.size());
  std::vector<std::set<int>> compRoots(nc);
  for (int c = 0; c < nc; ++c) {
    auto closure = reflectionClosure(rs, sub.componentBases[c]);
    compRoots[c] = std::set<int>(closure.begin(), closure.end());
  }
  auto compOf = [&](int rt) {
    for (int c = 0; c < nc; ++c)
      if (compRoots[c].count(rt)) return c;
    return -1;
  };
  std::vector<int> compImg(nc, -1);
  for (int c = 0; c < nc; ++c) {
    compImg[c] = compOf(imgOf[*compRoots[c].begin()]);
    wk_check(compImg[c] >= 0, "twist image of a component escaped the subsystem");
  }

  std::vector<char> done(nc, 0);
  for (int c = 0; c < nc; ++c) {
    if (done[c]) continue;
    std::vector<int> cyc;
    int cur = c;
    while (!done[cur]) {
      done[cur] = 1;
      cyc.push_back(cur);
      cur = compImg[cur];
    }
    int deg = static_cast<int>(cyc.size());

    // return map: twist^deg restricted to the starting component
    RationalType::ComponentOrbit orbit;
    orbit.type = classifySubsystem(rs, {compRoots[c].begin(), compRoots[c].end()}).typeMultiset[0];
    orbit.fieldDegree = deg;

    // return map on the starting component: the twist composed deg times
    std::vector<int> base = sub.componentBases[c];
    std::vector<int> imgBase;
    for (int b : base) {
      int x = b;
      for (int k = 0; k < deg; ++k) x = imgOf[x];
      imgBase.push_back(x);
    }
    // the component Weyl group is simply transitive on bases: the unique
    // w with w(imgBase) = base leaves the residual diagram symmetry
    std::vector<WeylElement> refl;
    for (int b : base) refl.push_back(WeylElement::reflection(rs, b));
    std::vector<WeylElement> compW = closeUnderProductsWeyl(refl, weylOrderOf(orbit.type) + 1);
    std::set<int> baseSet(base.begin(), base.end());
    std::vector<int> residual;
    bool found = false;
    for (const auto& w : compW) {
      std::vector<int> trial(imgBase.size());
      bool ok = true;
      std::set<int> seen2;
      for (size_t t = 0; t < imgBase.size(); ++t) {
        trial[t] = w.apply(imgBase[t]);
        if (!baseSet.count(trial[t]) || !seen2.insert(trial[t]).second) {
          ok = false;
          break;
        }
      }
      if (ok) {
        residual = trial;
        found = true;
        break;
      }
    }
    wk_check(found, "return map is not an automorphism of the component");
    int ord = 0;
    {
      std::map<int, int> pm;
      for (size_t t = 0; t < base.size(); ++t) pm[base[t]] = residual[t];
      std::vector<int> now = base;
      for (int k = 1; k <= 6 && ord == 0; ++k) {
        bool ident = true;
        for (size_t t = 0; t < base.size(); ++t) {
          now[t] = pm[now[t]];
          if (now[t] != base[t]) ident = false;
        }
        if (ident) ord = k;
      }
      wk_check(ord >= 1, "residual diagram symmetry of unexpected order");
    }
    orbit.twistOrder = ord;
    out.orbits.push_back(orbit);
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& a, const auto& b) {
    if (a.type < b.type) return true;
    if (b.type < a.type) return false;
    return std::tie(a.fieldDegree, a.twistOrder) < std::tie(b.fieldDegree, b.twistOrder);
  });

  // central torus: sublattice orthogonal to the subsystem
  const int r = rs.rank();
  BigMat rows;
  for (int b : sub.baseIndices) {
    std::vector<BigInt> row(r);
    for (int j = 0; j < r; ++j) {
      BigInt v = 0;
      for (int i = 0; i < r; ++i) v += BigInt(rs.root(b)[i]) * rs.cartan()(i, j);
      row[j] = v;
    }
    rows.push_back(row);
  }
  if (rows.empty()) {
    out.centralPart = polynomialOrder(twist);
  } else {
    // pad to square for the kernel routine
    while (rows.size() < static_cast<size_t>(r)) rows.push_back(std::vector<BigInt>(r, 0));
    auto kernel = integerKernelBasis(rows);
    if (kernel.empty())
      out.centralPart = CyclotomicOrder{};
    else
      out.centralPart = polynomialOrderOnSublattice(twist, kernel);
  }
  return out;
}

uint64_t componentGroupFixedOrder(const CentralizerData& cd, const WeylGroup& W, const IntMat& twist) {
  const RootSystem& rs = W.system();
  // W(Phi(s)) inside the stabilizer
  std::set<uint64_t> reflSub;
  {
    std::vector<WeylElement> gens;
    for (int b : cd.phiS.baseIndices) gens.push_back(WeylElement::reflection(rs, b));
    std::vector<WeylElement> cl = closeUnderProductsWeyl(gens, cd.connectedWeylOrder + 1);
    for (const auto& w : cl) reflSub.insert(w.key());
  }
  // count elements whose coset mod W(Phi(s)) is fixed by twist
  // conjugation, then divide by the subgroup order
  int ot = twist.order(2000);
  IntMat tinv = twist.pow(ot - 1);
  uint64_t fixedCount = 0;
  for (int idx : cd.stabilizer) {
    WeylElement a = W.element(idx);
    WeylElement cw = WeylElement::fromMatrix(rs, twist * a.matrix() * tinv);
    if (reflSub.count((cw * a.inverse()).key())) ++fixedCount;
  }
  wk_check(fixedCount % cd.connectedWeylOrder == 0, "fixed coset count not divisible");
  return fixedCount / cd.connectedWeylOrder;
}

uint64_t leviComponentGroupFixedOrder(const DualTorusElement& s, const SubSystem& leviSub,
                                      const IntMat& twist) {
  const RootSystem& rs = s.system();
  // stabilizer of s inside W(Phi_L)
  std::vector<WeylElement> gens;
  for (int b : leviSub.baseIndices) gens.push_back(WeylElement::reflection(rs, b));
  std::vector<WeylElement> sub = closeUnderProductsWeyl(gens, leviSub.weylOrder() + 1);

  // reflection subgroup of Phi_L cap Phi(s)
  std::vector<int> inter;
  for (int rt : leviSub.rootIndices)
    if (s.pairingWithRoot(rt) == 0) inter.push_back(rt);
  std::set<uint64_t> reflInter;
  if (inter.empty()) {
    reflInter.insert(WeylElement::identity(rs).key());
  } else {
    SubSystem is = classifySubsystem(rs, inter);
    std::vector<WeylElement> igens;
    for (int b : is.baseIndices) igens.push_back(WeylElement::reflection(rs, b));
    for (const auto& w : closeUnderProductsWeyl(igens, is.weylOrder() + 1)) reflInter.insert(w.key());
  }

  int ot = twist.order(2000);
  IntMat tinv = twist.pow(ot - 1);
  uint64_t fixedCount = 0;
  for (const auto& a : sub) {
    if (!(s.applied(a) == s)) continue;
    IntMat conj = twist * a.matrix() * tinv;
    WeylElement cw = WeylElement::fromMatrix(rs, conj);
    WeylElement diff = cw * a.inverse();
    if (reflInter.count(diff.key())) ++fixedCount;
  }
  wk_check(fixedCount % reflInter.size() == 0, "Levi fixed-coset count not divisible");
  return fixedCount / reflInter.size();
}

BlockRelativeWeyl relativeWeylBlock(const DualTorusElement& s, const std::vector<int>& leviRoots,
                                    const IntMat& twist, const WeylGroup& W) {
  const RootSystem& rs = s.system();
  BlockRelativeWeyl out;
  int ot = twist.order(2000);
  wk_check(ot > 0, "twist of infinite order");

  for (size_t i = 0; i < W.size(); ++i) {
    WeylElement w = W.element(i);
    if (!(s.applied(w) == s)) continue;
    IntMat m = w.matrix();
    if (!(m * twist == twist * m)) continue;
    out.numeratorIdx.push_back(static_cast<int>(i));
  }
  out.numeratorOrder = out.numeratorIdx.size();

  // denominator: the Weyl group of C_{L*}(s) relative to the torus, taken
  // twist-fixed. That is the full stabilizer of s inside W(Phi_L) (its
  // reflection part is W(Phi(s) cap Phi_L); the component part shows up as
  // the Levi centralizer's component group), intersected with the twist
  // centralizer.
  if (leviRoots.empty()) {
    out.denominatorOrder = 1;
  } else {
    SubSystem ls = classifySubsystem(rs, leviRoots);
    std::vector<WeylElement> lgens;
    for (int b : ls.baseIndices) lgens.push_back(WeylElement::reflection(rs, b));
    uint64_t cnt = 0;
    for (const auto& w : closeUnderProductsWeyl(lgens, ls.weylOrder() + 1)) {
      if (!(s.applied(w) == s)) continue;
      IntMat m = w.matrix();
      if (m * twist == twist * m) ++cnt;
    }
    out.denominatorOrder = cnt;
  }
  wk_check(out.denominatorOrder >= 1 && out.numeratorOrder % out.denominatorOrder == 0,
           "relative Weyl order not integral");
  out.order = out.numeratorOrder / out.denominatorOrder;
  return out;
}

}  // namespace weylkit
