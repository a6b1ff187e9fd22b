#include "weylkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "weylkit/exact.hpp"

namespace weylkit {

namespace {

std::string keyOf(const RootVec& r) {
  std::string k;
  k.reserve(r.size() * 3);
  for (int c : r) {
    k += std::to_string(c);
    k += ',';
  }
  return k;
}

// Cartan matrix and normalized half-lengths (short root = 1) in Bourbaki
// labeling.
void cartanData(const TypeLabel& t, IntMat& cartan, std::vector<int>& d) {
  const int n = t.rank;
  cartan = IntMat(n);
  for (int i = 0; i < n; ++i) cartan(i, i) = 2;
  d.assign(n, 1);
  auto link = [&](int i, int j) { cartan(i, j) = cartan(j, i) = -1; };

  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      if (n < 2) throw std::invalid_argument("B rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan(n - 2, n - 1) = -2;  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Series::C:
      if (n < 2) throw std::invalid_argument("C rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan(n - 1, n - 2) = -2;  // alpha_n long
      d[n - 1] = 2;
      break;
    case Series::D:
      if (n < 3) throw std::invalid_argument("D rank >= 3");
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("E rank in 6..8");
      // chain a1-a3-a4-a5-a6(-a7)(-a8), a2 attached to a4
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      if (n >= 7) link(5, 6);
      if (n == 8) link(6, 7);
      break;
    }
    case Series::F:
      if (n != 4) throw std::invalid_argument("F rank = 4");
      link(0, 1);
      link(1, 2);
      link(2, 3);
      cartan(1, 2) = -2;  // alpha3, alpha4 short
      d[0] = d[1] = 2;
      break;
    case Series::G:
      if (n != 2) throw std::invalid_argument("G rank = 2");
      cartan(0, 1) = -1;  // alpha1 short
      cartan(1, 0) = -3;
      d[1] = 3;
      break;
  }
}

}  // namespace

TypeLabel parseTypeLabel(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type label: " + s);
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(c) == std::string::npos)
    throw std::invalid_argument("bad type label: " + s);
  int rank = std::stoi(s.substr(1));
  if (rank < 1 || rank > 30) throw std::invalid_argument("bad rank in label: " + s);
  return TypeLabel{static_cast<Series>(c), rank};
}

uint64_t weylOrderOf(const TypeLabel& t) {
  auto fact = [](int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (t.series) {
    case Series::A:
      return fact(t.rank + 1);
    case Series::B:
    case Series::C:
      return (uint64_t{1} << t.rank) * fact(t.rank);
    case Series::D:
      return (uint64_t{1} << (t.rank - 1)) * fact(t.rank);
    case Series::E:
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return 696729600;
    case Series::F:
      return 1152;
    case Series::G:
      return 12;
  }
  return 0;
}

RootSystem buildFromCartan(const IntMat& cartan, const std::vector<int>& dsimple,
                           std::vector<TypeLabel> components) {
  RootSystem rs;
  rs.rank_ = cartan.size();
  rs.cartan_ = cartan;
  rs.dsimple_ = dsimple;
  rs.components_ = std::move(components);
  rs.simplyLaced_ = std::all_of(dsimple.begin(), dsimple.end(), [&](int v) { return v == dsimple[0]; });
  rs.generate();
  rs.finalize();
  return rs;
}

RootSystem RootSystem::build(const TypeLabel& t) {
  IntMat cartan;
  std::vector<int> d;
  cartanData(t, cartan, d);
  RootSystem rs = buildFromCartan(cartan, d, {t});

  if (t.series == Series::E && t.rank == 6) {
    // labeling guard: the highest root must expand as
    // a1 + 2 a2 + 2 a3 + 3 a4 + 2 a5 + a6
    const RootVec expect{1, 2, 2, 3, 2, 1};
    wk_check(rs.root(rs.highestRootIndex()) == expect, "E6 labeling check failed");
  }
  return rs;
}

RootSystem RootSystem::buildReducible(const std::vector<TypeLabel>& comps) {
  wk_check(!comps.empty(), "buildReducible: empty component list");
  int total = 0;
  for (const auto& c : comps) total += c.rank;
  IntMat cartan(total);
  std::vector<int> d(total, 1);
  int off = 0;
  for (const auto& c : comps) {
    IntMat blk;
    std::vector<int> bd;
    cartanData(c, blk, bd);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) cartan(off + i, off + j) = blk(i, j);
    for (int i = 0; i < c.rank; ++i) d[off + i] = bd[i];
    off += c.rank;
  }
  std::vector<TypeLabel> sorted = comps;
  std::sort(sorted.begin(), sorted.end());
  return buildFromCartan(cartan, d, sorted);
}

void RootSystem::generate() {
  std::vector<RootVec> pool;
  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < rank_; ++i) {
    RootVec e(rank_, 0);
    e[i] = 1;
    seen[keyOf(e)] = static_cast<int>(pool.size());
    pool.push_back(e);
  }
  // close under simple reflections
  for (size_t head = 0; head < pool.size(); ++head) {
    RootVec r = pool[head];
    for (int i = 0; i < rank_; ++i) {
      // <r, alpha_i^vee> is linear in the root coordinates
      int64_t p = 0;
      for (int j = 0; j < rank_; ++j) p += static_cast<int64_t>(cartan_(j, i)) * r[j];
      RootVec img = r;
      img[i] -= static_cast<int>(p);
      auto k = keyOf(img);
      if (!seen.count(k)) {
        seen[k] = static_cast<int>(pool.size());
        pool.push_back(img);
      }
    }
  }
  roots_ = std::move(pool);
}

void RootSystem::finalize() {
  auto heightOf = [](const RootVec& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::vector<RootVec> pos, neg;
  for (const auto& r : roots_) {
    if (heightOf(r) > 0)
      pos.push_back(r);
    else
      neg.push_back(r);
  }
  wk_check(pos.size() == neg.size(), "root negation symmetry broken");
  std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
    int ha = heightOf(a), hb = heightOf(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  roots_ = pos;
  for (const auto& r : pos) {
    RootVec m(r.size());
    for (size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
    roots_.push_back(m);
  }
  index_.clear();
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) index_[keyOf(roots_[i])] = i;

  simpleIndex_.assign(rank_, -1);
  for (int i = 0; i < rank_; ++i) {
    RootVec e(rank_, 0);
    e[i] = 1;
    simpleIndex_[i] = indexOf(e);
    wk_check(simpleIndex_[i] >= 0, "simple root missing after generation");
  }

  dlen_.resize(roots_.size());
  for (size_t i = 0; i < roots_.size(); ++i) {
    // (r, r)/2 in the normalization fixed by dsimple_
    const RootVec& r = roots_[i];
    int64_t rr = 0;
    for (int a = 0; a < rank_; ++a)
      for (int b = 0; b < rank_; ++b)
        rr += static_cast<int64_t>(r[a]) * cartan_(a, b) * dsimple_[b] * r[b];
    wk_check(rr % 2 == 0 && rr > 0, "root length not integral");
    dlen_[i] = static_cast<int>(rr / 2);
  }

  reflTable_.assign(roots_.size(), std::vector<int>(roots_.size(), -1));
  for (size_t a = 0; a < roots_.size(); ++a)
    for (size_t b = 0; b < roots_.size(); ++b) {
      RootVec img = reflect(roots_[a], roots_[b]);
      int idx = indexOf(img);
      wk_check(idx >= 0, "reflection left the root set");
      reflTable_[a][b] = idx;
    }

  // unique highest root per irreducible system, dominating coordinatewise
  if (components_.size() == 1) {
    int best = positiveCount() - 1;
    highestRoot_ = best;
    for (int i = 0; i < positiveCount(); ++i)
      for (int j = 0; j < rank_; ++j)
        wk_check(roots_[best][j] >= roots_[i][j], "highest root fails dominance");
  }
}

int RootSystem::indexOf(const RootVec& r) const {
  auto it = index_.find(keyOf(r));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int idx) const {
  return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
}

int64_t RootSystem::pairing(const RootVec& beta, const RootVec& alpha) const {
  int ai = indexOf(alpha);
  wk_check(ai >= 0, "pairing: alpha is not a root");
  int64_t form = 0;  // (beta, alpha)
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b)
      form += static_cast<int64_t>(beta[a]) * cartan_(a, b) * dsimple_[b] * alpha[b];
  wk_check(form % dlen_[ai] == 0, "pairing not integral");
  return form / dlen_[ai];
}

RootVec RootSystem::reflect(const RootVec& alpha, const RootVec& beta) const {
  int64_t p = pairing(beta, alpha);
  RootVec img = beta;
  for (int i = 0; i < rank_; ++i) img[i] -= static_cast<int>(p) * alpha[i];
  return img;
}

IntMat RootSystem::simpleReflectionMatrix(int i) const {
  return reflectionMatrix(simpleIndex_[i]);
}

IntMat RootSystem::reflectionMatrix(int rootIdx) const {
  IntMat m = IntMat::identity(rank_);
  const RootVec& alpha = roots_[rootIdx];
  for (int j = 0; j < rank_; ++j) {
    RootVec e(rank_, 0);
    e[j] = 1;
    int64_t p = pairing(e, alpha);
    for (int i = 0; i < rank_; ++i) m(i, j) -= p * alpha[i];
  }
  return m;
}

IntMat RootSystem::corootMatrix(const IntMat& rootMat) const {
  if (simplyLaced_) return rootMat;
  // column j = coroot coordinates of (w alpha_j)^vee
  IntMat m(rank_);
  for (int j = 0; j < rank_; ++j) {
    RootVec img(rank_);
    for (int i = 0; i < rank_; ++i) img[i] = static_cast<int>(rootMat(i, j));
    int idx = indexOf(img);
    wk_check(idx >= 0, "corootMatrix: image of a simple root is not a root");
    for (int i = 0; i < rank_; ++i) {
      int64_t num = static_cast<int64_t>(img[i]) * dsimple_[i];
      wk_check(num % dlen_[idx] == 0, "coroot coordinates not integral");
      m(i, j) = num / dlen_[idx];
    }
  }
  return m;
}

std::vector<int64_t> RootSystem::corootOf(int rootIdx) const {
  std::vector<int64_t> c(rank_);
  const RootVec& r = roots_[rootIdx];
  for (int i = 0; i < rank_; ++i) {
    int64_t num = static_cast<int64_t>(r[i]) * dsimple_[i];
    wk_check(num % dlen_[rootIdx] == 0, "coroot coordinates not integral");
    c[i] = num / dlen_[rootIdx];
  }
  return c;
}

std::optional<std::vector<int>> RootSystem::diagramFlip() const {
  std::vector<int> perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  // brute-force over permutations is fine at rank <= 8
  std::vector<int> p = perm;
  do {
    bool id = true, ok = true;
    for (int i = 0; i < rank_ && ok; ++i) {
      if (p[i] != i) id = false;
      if (p[p[i]] != i) ok = false;
      if (dsimple_[p[i]] != dsimple_[i]) ok = false;
      for (int j = 0; j < rank_ && ok; ++j)
        if (cartan_(p[i], p[j]) != cartan_(i, j)) ok = false;
    }
    if (ok && !id) {
      best = p;
      break;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (best.empty()) return std::nullopt;
  return best;
}

IntMat RootSystem::diagramSymmetryMatrix(const std::vector<int>& perm) const {
  IntMat m(rank_);
  for (int j = 0; j < rank_; ++j) m(perm[j], j) = 1;
  return m;
}

std::vector<int64_t> RootSystem::fundamentalGroup() const {
  SmithForm s = smithNormalForm(toBig(cartan_));
  std::vector<int64_t> inv;
  for (const BigInt& d : s.diag) {
    wk_check(d != 0, "Cartan matrix is singular");
    if (d != 1) inv.push_back(static_cast<int64_t>(d));
  }
  return inv;
}

CoefficientScan checkCoefficientLemma(const RootSystem& rs) {
  if (!rs.irreducible()) throw std::invalid_argument("coefficient scan needs an irreducible system");
  CoefficientScan out;
  for (int i = 0; i < rs.positiveCount(); ++i) {
    const RootVec& r = rs.root(i);
    if (rs.height(i) == 1) continue;  // simple
    int ones = 0;
    for (int c : r)
      if (c == 1) ++ones;
    if (ones < 2) {
      out.holds = false;
      out.witnesses.push_back(i);
    }
  }
  return out;
}

std::vector<int> reflectionClosure(const RootSystem& rs, const std::vector<int>& seeds) {
  std::vector<char> in(rs.rootCount(), 0);
  std::vector<int> work = seeds;
  for (int s : seeds) {
    in[s] = 1;
    if (!in[rs.negate(s)]) {
      in[rs.negate(s)] = 1;
      work.push_back(rs.negate(s));
    }
  }
  for (size_t h = 0; h < work.size(); ++h)
    for (size_t a = 0; a < work.size(); ++a) {
      int img = rs.reflectIndex(work[a], work[h]);
      if (!in[img]) {
        in[img] = 1;
        work.push_back(img);
      }
      img = rs.reflectIndex(work[h], work[a]);
      if (!in[img]) {
        in[img] = 1;
        work.push_back(img);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

namespace {

TypeLabel recognizeComponent(const RootSystem& rs, const std::vector<int>& base) {
  const int n = static_cast<int>(base.size());
  std::vector<int> closure = reflectionClosure(rs, base);
  const int count = static_cast<int>(closure.size());
  int minLen = rs.rootLengthHalf(base[0]);
  for (int b : base) minLen = std::min(minLen, rs.rootLengthHalf(b));
  int shorts = 0;
  for (int b : base)
    if (rs.rootLengthHalf(b) == minLen) ++shorts;

  const bool sameLength = (shorts == n);
  if (n == 1) return {Series::A, 1};
  if (n == 2 && count == 12) return {Series::G, 2};
  // E6 shares the 2n^2 count of B6/C6 but is simply laced
  if (n == 6 && count == 72 && sameLength) return {Series::E, 6};
  if (n == 7 && count == 126) return {Series::E, 7};
  if (n == 8 && count == 240) return {Series::E, 8};
  if (count == n * (n + 1)) return {Series::A, n};
  if (count == 2 * n * (n - 1) && n >= 4) return {Series::D, n};
  if (count == 2 * n * n && !sameLength) {
    if (n == 2) return {Series::B, 2};
    return shorts == 1 ? TypeLabel{Series::B, n} : TypeLabel{Series::C, n};
  }
  if (n == 4 && count == 48) return {Series::F, 4};
  throw CheckError("unrecognized component type");
}

}  // namespace

SubSystem classifySubsystem(const RootSystem& rs, const std::vector<int>& subsetIn) {
  std::vector<int> subset = subsetIn;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  std::vector<char> in(rs.rootCount(), 0);
  for (int i : subset) in[i] = 1;
  for (int i : subset) {
    if (!in[rs.negate(i)]) throw std::invalid_argument("subset not closed under negation");
    for (int j : subset)
      if (!in[rs.reflectIndex(i, j)])
        throw std::invalid_argument("subset not closed under its reflections");
  }

  SubSystem out;
  out.parent = &rs;
  out.rootIndices = subset;

  // base = positive members that are not sums of two positive members
  std::vector<int> pos;
  for (int i : subset)
    if (rs.isPositive(i)) pos.push_back(i);
  for (int i : pos) {
    bool decomposable = false;
    for (int a : pos) {
      if (decomposable) break;
      for (int b : pos) {
        if (a > b) continue;
        RootVec sum = rs.root(a);
        for (int k = 0; k < rs.rank(); ++k) sum[k] += rs.root(b)[k];
        if (sum == rs.root(i)) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.baseIndices.push_back(i);
  }

  // split the base into orthogonality components
  const int nb = static_cast<int>(out.baseIndices.size());
  std::vector<int> comp(nb, -1);
  int nc = 0;
  for (int i = 0; i < nb; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int j = 0; j < nb; ++j) {
        if (comp[j] >= 0) continue;
        if (rs.pairing(rs.root(out.baseIndices[c]), rs.root(out.baseIndices[j])) != 0) {
          comp[j] = nc;
          stack.push_back(j);
        }
      }
    }
    ++nc;
  }
  out.componentBases.assign(nc, {});
  for (int i = 0; i < nb; ++i) out.componentBases[comp[i]].push_back(out.baseIndices[i]);

  for (const auto& cb : out.componentBases) out.typeMultiset.push_back(recognizeComponent(rs, cb));
  std::sort(out.typeMultiset.begin(), out.typeMultiset.end());

  // the base must regenerate exactly the subset
  std::vector<int> regen = reflectionClosure(rs, out.baseIndices);
  wk_check(regen == subset, "computed base does not regenerate the subset");
  return out;
}

std::string SubSystem::typeString() const {
  if (typeMultiset.empty()) return "empty";
  std::string s;
  for (size_t i = 0; i < typeMultiset.size(); ++i) {
    if (i) s += "+";
    s += typeMultiset[i].str();
  }
  return s;
}

uint64_t SubSystem::weylOrder() const {
  uint64_t o = 1;
  for (const auto& t : typeMultiset) o *= weylOrderOf(t);
  return o;
}

std::string RootSystem::label() const {
  std::string s;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "+";
    s += components_[i].str();
  }
  return s;
}

}  // namespace weylkit
