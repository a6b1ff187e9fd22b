#include "weylkit/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylkit/grouptool.hpp"

namespace weylkit {

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
  if (!rs.simplyLaced())
    throw std::invalid_argument("Chevalley arithmetic implemented for simply-laced types only");
  const int r = rs.rank();
  epsParity_.assign(r, std::vector<char>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j)
        epsParity_[i][j] = 1;
      else if (i < j)
        epsParity_[i][j] = static_cast<char>((-rs.cartan()(i, j)) & 1);
      else
        epsParity_[i][j] = 0;
    }
  verifySignTable();
}

int ChevalleyBasis::sign(int rootA, int rootB) const {
  const RootVec& a = rs_->root(rootA);
  const RootVec& b = rs_->root(rootB);
  int parity = 0;
  for (int i = 0; i < rs_->rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rs_->rank(); ++j)
      if (epsParity_[i][j]) parity += a[i] * b[j];
  }
  int eps = (parity & 1) ? -1 : 1;
  // negative-root rescale keeps the classical relations N(-a,-b) = -N(a,b)
  // and the three-cycle identity
  auto eta = [&](int idx) { return rs_->isPositive(idx) ? 1 : -1; };
  RootVec sum = a;
  for (int i = 0; i < rs_->rank(); ++i) sum[i] += b[i];
  int sumIdx = rs_->indexOf(sum);
  wk_check(sumIdx >= 0, "sign() called on a non-addable pair");
  return eta(rootA) * eta(rootB) * eta(sumIdx) * eps;
}

std::vector<std::pair<int, int64_t>> ChevalleyBasis::bracket(int basisA, int basisB) const {
  const int nr = rs_->rootCount();
  const int r = rs_->rank();
  auto pairWithSimpleCoroot = [&](const RootVec& a, int j) {
    int64_t p = 0;
    for (int i = 0; i < r; ++i) p += static_cast<int64_t>(a[i]) * rs_->cartan()(i, j);
    return p;
  };

  if (basisA >= nr && basisB >= nr) return {};
  if (basisA >= nr) {  // [h_i, e_b]
    int i = basisA - nr;
    const RootVec& b = rs_->root(basisB);
    int64_t c = pairWithSimpleCoroot(b, i);
    if (c == 0) return {};
    return {{basisB, c}};
  }
  if (basisB >= nr) {  // [e_a, h_j] = -[h_j, e_a]
    int j = basisB - nr;
    const RootVec& a = rs_->root(basisA);
    int64_t c = pairWithSimpleCoroot(a, j);
    if (c == 0) return {};
    return {{basisA, -c}};
  }
  // two root vectors
  if (rs_->negate(basisA) == basisB) {
    std::vector<int64_t> co = rs_->corootOf(basisA);
    std::vector<std::pair<int, int64_t>> out;
    for (int i = 0; i < r; ++i)
      if (co[i] != 0) out.emplace_back(nr + i, co[i]);
    return out;
  }
  RootVec sum = rs_->root(basisA);
  for (int i = 0; i < r; ++i) sum[i] += rs_->root(basisB)[i];
  int sumIdx = rs_->indexOf(sum);
  if (sumIdx < 0) return {};
  return {{sumIdx, sign(basisA, basisB)}};
}

void ChevalleyBasis::verifySignTable() const {
  const int nr = rs_->rootCount();
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      if (b == rs_->negate(a)) continue;
      RootVec sum = rs_->root(a);
      for (int i = 0; i < rs_->rank(); ++i) sum[i] += rs_->root(b)[i];
      int c = rs_->indexOf(sum);
      if (c < 0) continue;
      wk_check(sign(a, b) == -sign(b, a), "antisymmetry N(a,b) = -N(b,a) failed");
      wk_check(sign(rs_->negate(a), rs_->negate(b)) == -sign(a, b),
               "N(-a,-b) = -N(a,b) failed");
      // a + b + (-c) = 0: N(a,b) = N(b,-c) = N(-c,a)
      int negC = rs_->negate(c);
      wk_check(sign(a, b) == sign(b, negC) && sign(a, b) == sign(negC, a),
               "three-cycle sign identity failed");
    }
}

void ChevalleyBasis::verifyJacobi() const {
  const int d = dim();
  std::vector<int64_t> acc(d);
  auto addBracketOf = [&](const std::vector<std::pair<int, int64_t>>& lhs, int other,
                          int64_t scale, std::vector<int64_t>& out) {
    for (auto [idx, c] : lhs)
      for (auto [idx2, c2] : bracket(idx, other)) out[idx2] += scale * c * c2;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto bij = bracket(i, j);
      for (int k = j + 1; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        addBracketOf(bij, k, 1, acc);
        addBracketOf(bracket(j, k), i, 1, acc);
        addBracketOf(bracket(k, i), j, 1, acc);
        for (int64_t v : acc) wk_check(v == 0, "Jacobi identity failed");
      }
    }
}

IntMat ChevalleyBasis::adMatrix(int rootIdx) const {
  IntMat m(dim());
  for (int k = 0; k < dim(); ++k)
    for (auto [idx, c] : bracket(rootIdx, k)) m(idx, k) += c;
  return m;
}

IntMat adjointX(const ChevalleyBasis& cb, int rootIdx, int64_t t) {
  IntMat a = cb.adMatrix(rootIdx);
  IntMat a2 = a * a;
  IntMat a3 = a2 * a;
  for (int i = 0; i < a3.size(); ++i)
    for (int j = 0; j < a3.size(); ++j) wk_check(a3(i, j) == 0, "ad(e)^3 != 0 in simply-laced adjoint");
  IntMat half(a2.size());
  for (int i = 0; i < a2.size(); ++i)
    for (int j = 0; j < a2.size(); ++j) {
      wk_check(a2(i, j) % 2 == 0, "ad(e)^2 has odd entry; exp not exact");
      half(i, j) = a2(i, j) / 2;
    }
  return IntMat::identity(cb.dim()) + a.scaled(t) + half.scaled(t * t);
}

IntMat adjointN(const ChevalleyBasis& cb, int rootIdx, int t) {
  wk_check(t == 1 || t == -1, "n_alpha(t) requires t = +-1");
  int neg = cb.system().negate(rootIdx);
  return adjointX(cb, rootIdx, t) * adjointX(cb, neg, -t) * adjointX(cb, rootIdx, t);
}

IntMat adjointH(const ChevalleyBasis& cb, int rootIdx, int t) {
  wk_check(t == 1 || t == -1, "h_alpha(t) requires t = +-1");
  return adjointN(cb, rootIdx, t) * adjointN(cb, rootIdx, -1);
}

namespace {

// root-line image: column of e_r must be +-1 at a single root slot with a
// clear Cartan part; returns (rootIdx, sign) or (-1, 0)
std::pair<int, int> rootLineImage(const ChevalleyBasis& cb, const IntMat& g, int r) {
  const int nr = cb.system().rootCount();
  int hit = -1, sgn = 0;
  for (int i = 0; i < nr; ++i) {
    int64_t v = g(i, r);
    if (v == 0) continue;
    if (hit >= 0 || (v != 1 && v != -1)) return {-1, 0};
    hit = i;
    sgn = static_cast<int>(v);
  }
  for (int i = nr; i < cb.dim(); ++i)
    if (g(i, r) != 0) return {-1, 0};
  if (hit < 0) return {-1, 0};
  return {hit, sgn};
}

}  // namespace

bool normalizesTorus(const ChevalleyBasis& cb, const IntMat& g) {
  const int nr = cb.system().rootCount();
  for (int r = 0; r < nr; ++r)
    if (rootLineImage(cb, g, r).first < 0) return false;
  for (int c = nr; c < cb.dim(); ++c)
    for (int i = 0; i < nr; ++i)
      if (g(i, c) != 0) return false;
  return true;
}

bool isDiagonalTorusElement(const ChevalleyBasis& cb, const IntMat& g) {
  const int nr = cb.system().rootCount();
  for (int r = 0; r < nr; ++r) {
    auto [img, sgn] = rootLineImage(cb, g, r);
    if (img != r || (sgn != 1 && sgn != -1)) return false;
  }
  for (int c = nr; c < cb.dim(); ++c)
    for (int i = 0; i < cb.dim(); ++i)
      if (g(i, c) != (i == c ? 1 : 0)) return false;
  return true;
}

WeylElement weylImage(const ChevalleyBasis& cb, const IntMat& g) {
  const int nr = cb.system().rootCount();
  std::vector<uint8_t> perm(nr);
  for (int r = 0; r < nr; ++r) {
    auto [img, sgn] = rootLineImage(cb, g, r);
    if (img < 0) throw std::invalid_argument("element does not normalize the torus");
    perm[r] = static_cast<uint8_t>(img);
  }
  return WeylElement(cb.system(), std::move(perm));
}

IntMat sectionAlongWord(const ChevalleyBasis& cb, const std::vector<int>& word) {
  IntMat p = IntMat::identity(cb.dim());
  for (int i : word) p = p * adjointN(cb, cb.system().simpleRootIndex(i), 1);
  return p;
}

IntMat section(const ChevalleyBasis& cb, const WeylElement& w) {
  IntMat a = sectionAlongWord(cb, w.reducedWord());
  IntMat b = sectionAlongWord(cb, w.reducedWordAlt());
  wk_check(a == b, "section depends on the reduced word");
  return a;
}

AdamsHeCheck verifyAdamsHe(const ChevalleyBasis& cb, const std::vector<int>& I) {
  const RootSystem& rs = cb.system();
  AdamsHeCheck out;
  out.subset = I;

  WeylElement wI = longestElement(rs, I);
  IntMat lhs = section(cb, wI);
  lhs = lhs * lhs;

  // principal involution: sum of positive coroots of the parabolic
  std::vector<int64_t> rho2(rs.rank(), 0);
  if (!I.empty()) {
    std::vector<int> seed;
    for (int i : I) seed.push_back(rs.simpleRootIndex(i));
    for (int idx : reflectionClosure(rs, seed)) {
      if (!rs.isPositive(idx)) continue;
      std::vector<int64_t> co = rs.corootOf(idx);
      for (int i = 0; i < rs.rank(); ++i) rho2[i] += co[i];
    }
  }
  IntMat z = IntMat::identity(cb.dim());
  for (int r = 0; r < rs.rootCount(); ++r) {
    int64_t p = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      int64_t pj = 0;
      for (int i = 0; i < rs.rank(); ++i) pj += static_cast<int64_t>(rs.root(r)[i]) * rs.cartan()(i, j);
      p += pj * rho2[j];
    }
    z(r, r) = (p % 2 == 0) ? 1 : -1;
  }
  out.holds = (lhs == z);
  return out;
}

int conjugationSign(const ChevalleyBasis& cb, const IntMat& n, int betaRootIdx) {
  if (!normalizesTorus(cb, n)) throw std::invalid_argument("element does not normalize the torus");
  auto [img, sgn] = rootLineImage(cb, n, betaRootIdx);
  wk_check(img >= 0 && (sgn == 1 || sgn == -1), "no clean root-line image");
  if (img == betaRootIdx) {
    int ord = n.order(4000);
    if (ord > 0 && ord % 2 == 1)
      wk_check(sgn == 1, "odd-order normalizer with fixed root must centralize its line");
  }
  return sgn;
}

IntMat liftDiagramSymmetry(const ChevalleyBasis& cb, const std::vector<int>& perm) {
  const RootSystem& rs = cb.system();
  const int nr = rs.rootCount();
  IntMat latt = rs.diagramSymmetryMatrix(perm);

  std::vector<int> imgIdx(nr, -1);
  for (int r = 0; r < nr; ++r) {
    std::vector<int64_t> v(rs.root(r).begin(), rs.root(r).end());
    std::vector<int64_t> iv = latt.apply(v);
    imgIdx[r] = rs.indexOf(RootVec(iv.begin(), iv.end()));
    wk_check(imgIdx[r] >= 0, "diagram symmetry does not permute roots");
  }

  std::vector<int> sgn(nr, 0);
  for (int i = 0; i < rs.rank(); ++i) {
    sgn[rs.simpleRootIndex(i)] = 1;
    sgn[rs.negate(rs.simpleRootIndex(i))] = 1;
  }
  // ascend by height: sgn[c] = sgn[a] sgn[b] N(tau a, tau b) / N(a, b)
  // for c = a + b with a simple
  std::vector<int> byHeight;
  for (int r = 0; r < rs.positiveCount(); ++r) byHeight.push_back(r);
  std::sort(byHeight.begin(), byHeight.end(),
            [&](int a, int b) { return rs.height(a) < rs.height(b); });
  for (int c : byHeight) {
    if (sgn[c] != 0) continue;
    int found = -1, rest = -1;
    for (int i = 0; i < rs.rank() && found < 0; ++i) {
      RootVec diff = rs.root(c);
      diff[i] -= 1;
      int idx = rs.indexOf(diff);
      if (idx >= 0 && rs.isPositive(idx)) {
        found = rs.simpleRootIndex(i);
        rest = idx;
      }
    }
    wk_check(found >= 0 && sgn[rest] != 0, "height recursion failed");
    int num = cb.sign(imgIdx[found], imgIdx[rest]);
    int den = cb.sign(found, rest);
    sgn[c] = sgn[found] * sgn[rest] * num * den;  // den in {+-1}, so * == /
    sgn[rs.negate(c)] = sgn[c];
  }

  IntMat g(cb.dim());
  for (int r = 0; r < nr; ++r) g(imgIdx[r], r) = sgn[r];
  for (int i = 0; i < rs.rank(); ++i) g(nr + perm[i], nr + i) = 1;

  // must be a Lie algebra automorphism
  for (int a = 0; a < cb.dim(); ++a) {
    std::vector<int64_t> ga(cb.dim(), 0);
    for (int i = 0; i < cb.dim(); ++i) ga[i] = g(i, a);
    for (int b = a + 1; b < cb.dim(); ++b) {
      std::vector<int64_t> lhs(cb.dim(), 0), rhs(cb.dim(), 0);
      for (auto [idx, c] : cb.bracket(a, b))
        for (int i = 0; i < cb.dim(); ++i) lhs[i] += c * g(i, idx);
      // [g a, g b]: both columns are single entries
      int ia = -1, ib = -1;
      int64_t ca = 0, cbv = 0;
      for (int i = 0; i < cb.dim(); ++i) {
        if (g(i, a) != 0) { ia = i; ca = g(i, a); }
        if (g(i, b) != 0) { ib = i; cbv = g(i, b); }
      }
      for (auto [idx, c] : cb.bracket(ia, ib)) rhs[idx] += c * ca * cbv;
      wk_check(lhs == rhs, "diagram symmetry lift is not an automorphism");
    }
  }
  return g;
}

E6Elements buildE6Elements(const ChevalleyBasis& cb) {
  const RootSystem& rs = cb.system();
  wk_check(rs.irreducible() && rs.components()[0].series == Series::E && rs.rank() == 6,
           "E6 construction requested on a non-E6 system");

  E6Elements el;
  el.basis = &cb;
  el.lowestRootIdx = rs.negate(rs.highestRootIndex());

  el.v1 = adjointN(cb, rs.simpleRootIndex(0), 1);
  el.v2 = adjointN(cb, el.lowestRootIdx, 1);
  el.v3 = adjointN(cb, rs.simpleRootIndex(5), 1);
  el.v = el.v1 * el.v2 * el.v3;

  el.w0Tilde = section(cb, longestElement(rs));
  el.w0PrimeTilde = section(cb, longestElement(rs, {1, 2, 3, 4, 5}));
  el.x = el.w0Tilde * el.w0PrimeTilde;
  int ox = el.x.order(16);
  wk_check(ox == 3 || ox == 6, "x = r(w0) r(w0') must have order 3 or 6");
  el.vprime = ox == 6 ? el.x.pow(4) : el.x;
  wk_check(el.vprime.order(8) == 3, "vprime must have order 3");

  auto flip = rs.diagramFlip();
  wk_check(flip.has_value(), "E6 must carry a diagram flip");
  el.gamma = liftDiagramSymmetry(cb, *flip);
  el.gamma0 = el.gamma * el.w0Tilde;

  IntMat vp2 = el.vprime * el.vprime;
  IntMat n0 = el.v2;  // n_{-theta}(1)
  IntMat n2 = adjointN(cb, rs.simpleRootIndex(1), 1);
  el.m = n0 * (el.vprime * n0 * vp2) * (vp2 * n0 * el.vprime);
  el.n = n2 * (el.vprime * n2 * vp2) * (vp2 * n2 * el.vprime);

  el.vWeyl = weylImage(cb, el.v);
  el.vprimeWeyl = weylImage(cb, el.vprime);
  el.mWeyl = weylImage(cb, el.m);
  el.nWeyl = weylImage(cb, el.n);
  return el;
}

SectionShapeReport verifySectionShape(const E6Elements& el) {
  const ChevalleyBasis& cb = *el.basis;
  const RootSystem& rs = cb.system();
  SectionShapeReport rep;

  MatGroup g = MatGroup::generate({el.v1, el.v2, el.v3, el.vprime}, 4000);
  rep.groupOrder = g.size();

  int og = el.gamma.order(64);
  wk_check(og > 0, "gamma has unexpected infinite order");
  IntMat gammaInv = el.gamma.pow(og - 1);
  rep.gammaStable = true;
  for (const IntMat& gen : {el.v1, el.v2, el.v3, el.vprime})
    if (!g.contains(el.gamma * gen * gammaInv)) rep.gammaStable = false;

  // wreath shape: components <v1>, <v2>, <v3>, permuted by vprime
  auto cyc = [&](const IntMat& m) {
    std::vector<int> idxs;
    IntMat p = m;
    while (true) {
      int i = g.indexOf(p);
      wk_check(i >= 0, "component element missing from closure");
      idxs.push_back(i);
      if (p.isIdentity()) break;
      p = p * m;
    }
    std::sort(idxs.begin(), idxs.end());
    return idxs;
  };
  std::vector<std::vector<int>> comps{cyc(el.v1), cyc(el.v2), cyc(el.v3)};
  int xIdx = g.indexOf(el.vprime);
  wk_check(xIdx >= 0, "vprime missing from closure");
  rep.wreathRecognized = wreathRecognize(viewOf(g), comps, xIdx).recognized;

  // torus kernel intersection
  std::vector<int> hElems;
  for (size_t i = 0; i < g.size(); ++i)
    if (isDiagonalTorusElement(cb, g.elements[i])) hElems.push_back(static_cast<int>(i));
  rep.torusIntersectionOrder = hElems.size();
  rep.torusIntersectionElementaryAbelian = true;
  for (int i : hElems) {
    const IntMat& m = g.elements[i];
    if (!(m * m).isIdentity()) rep.torusIntersectionElementaryAbelian = false;
  }

  auto hClosureKeys = [&](const std::vector<IntMat>& gens) {
    std::vector<IntMat> cl =
        closeUnderProducts(gens, [](const IntMat& a, const IntMat& b) { return a * b; },
                           matKeyString, 64);
    std::vector<std::string> keys;
    for (const auto& m : cl) keys.push_back(matKeyString(m));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  std::vector<std::string> found;
  for (int i : hElems) found.push_back(matKeyString(g.elements[i]));
  std::sort(found.begin(), found.end());

  IntMat h1 = adjointH(cb, rs.simpleRootIndex(0), -1);
  IntMat h4 = adjointH(cb, rs.simpleRootIndex(3), -1);
  IntMat h6 = adjointH(cb, rs.simpleRootIndex(5), -1);
  IntMat h0 = adjointH(cb, el.lowestRootIdx, -1);
  rep.intersectionMatchesGeneratorsA = (hClosureKeys({h1, h0, h6}) == found);
  rep.intersectionMatchesGeneratorsB = (hClosureKeys({h1, h4, h6}) == found);
  rep.generatorRelationHolds = (h0 == h6 * h4 * h1);

  // every element must fix the +-a4 root vectors exactly
  rep.centralizesA4Lines = true;
  int a4 = rs.simpleRootIndex(3), na4 = rs.negate(a4);
  for (const IntMat& m : g.elements)
    for (int col : {a4, na4})
      for (int i = 0; i < cb.dim(); ++i)
        if (m(i, col) != (i == col ? 1 : 0)) rep.centralizesA4Lines = false;

  return rep;
}

MnSectionReport verifyMnSection(const E6Elements& el, int d, uint64_t expectedWeylImageOrder) {
  wk_check(d == 1 || d == 2, "d must be 1 or 2");
  const ChevalleyBasis& cb = *el.basis;
  const RootSystem& rs = cb.system();
  MnSectionReport rep;
  rep.d = d;
  rep.expectedWeylImageOrder = expectedWeylImageOrder;

  IntMat second = el.n.pow(static_cast<int64_t>(d) * d);
  rep.literalExponentCollapses = isDiagonalTorusElement(cb, second);
  MatGroup g = MatGroup::generate({el.m, second}, 4000);
  rep.sectionOrder = g.size();

  std::vector<uint64_t> wkeys;
  for (const IntMat& m : g.elements) wkeys.push_back(weylImage(cb, m).key());
  std::sort(wkeys.begin(), wkeys.end());
  wkeys.erase(std::unique(wkeys.begin(), wkeys.end()), wkeys.end());
  rep.weylImageOrder = wkeys.size();
  rep.weylImageMatches = (rep.weylImageOrder == expectedWeylImageOrder);

  std::vector<std::string> found;
  for (const IntMat& m : g.elements)
    if (isDiagonalTorusElement(cb, m)) found.push_back(matKeyString(m));
  std::sort(found.begin(), found.end());
  rep.torusIntersectionOrder = found.size();

  IntMat z1 = adjointH(cb, el.lowestRootIdx, -1) * adjointH(cb, rs.simpleRootIndex(0), -1) *
              adjointH(cb, rs.simpleRootIndex(5), -1);
  IntMat z2base = adjointH(cb, rs.simpleRootIndex(1), -1) * adjointH(cb, rs.simpleRootIndex(2), -1) *
                  adjointH(cb, rs.simpleRootIndex(4), -1);
  IntMat z2 = z2base.pow(d);
  std::vector<IntMat> zcl = closeUnderProducts(
      std::vector<IntMat>{z1, z2}, [](const IntMat& a, const IntMat& b) { return a * b; },
      matKeyString, 64);
  std::vector<std::string> want;
  for (const auto& m : zcl) want.push_back(matKeyString(m));
  std::sort(want.begin(), want.end());
  rep.torusIntersectionMatches = (want == found);
  return rep;
}

}  // namespace weylkit
