#include "weylkit/grouptool.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylkit {

MatGroup MatGroup::generate(const std::vector<IntMat>& gens, uint64_t cap) {
  MatGroup g;
  std::vector<IntMat> seed = gens;
  bool hasId = false;
  for (const auto& m : seed)
    if (m.isIdentity()) hasId = true;
  if (!hasId) seed.push_back(IntMat::identity(gens.at(0).size()));
  g.elements = closeUnderProducts(
      seed, [](const IntMat& a, const IntMat& b) { return a * b; }, matKeyString, cap);
  for (size_t i = 0; i < g.elements.size(); ++i) g.index[matKeyString(g.elements[i])] = static_cast<int>(i);
  for (const auto& m : gens) g.generatorIdx.push_back(g.index.at(matKeyString(m)));
  return g;
}

int MatGroup::indexOf(const IntMat& m) const {
  auto it = index.find(matKeyString(m));
  return it == index.end() ? -1 : it->second;
}

int MatGroup::mult(int a, int b) const {
  int r = indexOf(elements[a] * elements[b]);
  wk_check(r >= 0, "MatGroup: product escaped closure");
  return r;
}

int MatGroup::identityIdx() const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].isIdentity()) return static_cast<int>(i);
  throw CheckError("MatGroup without identity");
}

namespace {

IntMat permutationMatrix(const std::vector<int>& img) {
  IntMat m(static_cast<int>(img.size()));
  for (size_t j = 0; j < img.size(); ++j) m(img[j], static_cast<int>(j)) = 1;
  return m;
}

}  // namespace

MatGroup makeCyclic(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return MatGroup::generate({permutationMatrix(cyc)});
}

MatGroup makeDihedral(int n) {
  std::vector<int> cyc(n), rev(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  for (int i = 0; i < n; ++i) rev[i] = (n - i) % n;
  return MatGroup::generate({permutationMatrix(cyc), permutationMatrix(rev)});
}

MatGroup makeQuaternion8() {
  IntMat li(4), lj(4);
  // left multiplication by i and j on the basis (1, i, j, k)
  li(1, 0) = 1; li(0, 1) = -1; li(3, 2) = 1; li(2, 3) = -1;
  lj(2, 0) = 1; lj(3, 1) = -1; lj(0, 2) = -1; lj(1, 3) = 1;
  return MatGroup::generate({li, lj});
}

MatGroup makeCyclicWreath(int a, int r) {
  const int n = a * r;
  std::vector<int> c0(n), rot(n);
  std::iota(c0.begin(), c0.end(), 0);
  for (int p = 0; p < a; ++p) c0[p] = (p + 1) % a;
  for (int b = 0; b < r; ++b)
    for (int p = 0; p < a; ++p) rot[b * a + p] = ((b + 1) % r) * a + p;
  return MatGroup::generate({permutationMatrix(c0), permutationMatrix(rot)});
}

MatGroup makeSymmetric3Wreath(int r) {
  const int n = 3 * r;
  std::vector<int> t1(n), t2(n), rot(n);
  std::iota(t1.begin(), t1.end(), 0);
  std::iota(t2.begin(), t2.end(), 0);
  std::swap(t1[0], t1[1]);
  std::swap(t2[1], t2[2]);
  for (int b = 0; b < r; ++b)
    for (int p = 0; p < 3; ++p) rot[b * 3 + p] = ((b + 1) % r) * 3 + p;
  std::vector<IntMat> gens{permutationMatrix(t1), permutationMatrix(t2)};
  if (r > 1) gens.push_back(permutationMatrix(rot));
  return MatGroup::generate(gens);
}

MatGroup makeDirectProduct(const MatGroup& a, const MatGroup& b) {
  const int na = a.elements[0].size(), nb = b.elements[0].size();
  auto embed = [&](const IntMat& m, bool first) {
    IntMat r = IntMat::identity(na + nb);
    int off = first ? 0 : na;
    int sz = first ? na : nb;
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) r(off + i, off + j) = m(i, j);
    return r;
  };
  std::vector<IntMat> gens;
  for (int gi : a.generatorIdx) gens.push_back(embed(a.elements[gi], true));
  for (int gi : b.generatorIdx) gens.push_back(embed(b.elements[gi], false));
  return MatGroup::generate(gens);
}

GroupView viewOf(const MatGroup& g) {
  GroupView v;
  v.n = g.size();
  const MatGroup* p = &g;
  v.mult = [p](int a, int b) { return p->mult(a, b); };
  v.id = g.identityIdx();
  v.gens = g.generatorIdx;
  return v;
}

GroupView viewOf(const RelativeWeylGroup& g) {
  GroupView v;
  v.n = g.size();
  const RelativeWeylGroup* p = &g;
  v.mult = [p](int a, int b) { return p->multiply(a, b); };
  WeylElement id = g.canonicalize(WeylElement::identity(*g.rs));
  v.id = g.repIndex.at(id.key());
  for (size_t i = 0; i < g.size(); ++i) v.gens.push_back(static_cast<int>(i));
  return v;
}

namespace {

int elementOrder(const GroupView& g, int x) {
  int p = x, k = 1;
  while (p != g.id) {
    p = g.mult(p, x);
    ++k;
    wk_check(k <= static_cast<int>(g.n), "element order exceeds group order");
  }
  return k;
}

int elementInverse(const GroupView& g, int x) {
  int ord = elementOrder(g, x);
  int p = g.id;
  for (int i = 0; i < ord - 1; ++i) p = g.mult(p, x);
  return p;
}

std::vector<int> subgroupClosure(const GroupView& g, std::vector<int> gens) {
  std::set<int> seen(gens.begin(), gens.end());
  seen.insert(g.id);
  std::vector<int> work(seen.begin(), seen.end());
  for (size_t h = 0; h < work.size(); ++h)
    for (int s : gens) {
      int p = g.mult(work[h], s);
      if (seen.insert(p).second) work.push_back(p);
    }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<int> commutatorSubgroup(const GroupView& g) {
  std::vector<int> gens = g.gens;
  if (gens.empty())
    for (uint64_t i = 0; i < g.n; ++i) gens.push_back(static_cast<int>(i));
  std::vector<int> comms;
  for (int a : gens)
    for (int b : gens) {
      int c = g.mult(g.mult(a, b), g.mult(elementInverse(g, a), elementInverse(g, b)));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  // normal closure under the generators
  for (;;) {
    std::vector<int> sub = subgroupClosure(g, comms);
    std::set<int> in(sub.begin(), sub.end());
    bool grew = false;
    for (int x : gens) {
      int xi = elementInverse(g, x);
      for (int h : sub) {
        int c = g.mult(g.mult(x, h), xi);
        if (!in.count(c)) {
          comms.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return sub;
  }
}

std::vector<uint64_t> abelianInvariantsOfQuotient(const GroupView& g, const std::vector<int>& H) {
  // coset partition
  std::vector<int> cosetOf(g.n, -1);
  std::vector<int> reps;
  for (uint64_t x = 0; x < g.n; ++x) {
    if (cosetOf[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int h : H) cosetOf[g.mult(static_cast<int>(x), h)] = id;
  }
  const int q = static_cast<int>(reps.size());
  auto qmult = [&](int a, int b) { return cosetOf[g.mult(reps[a], reps[b])]; };
  int qid = cosetOf[g.id];

  std::vector<int> qord(q);
  for (int i = 0; i < q; ++i) {
    int p = i, k = 1;
    while (p != qid) {
      p = qmult(p, i);
      ++k;
    }
    qord[i] = k;
  }
  // abelian structure per prime: #{x : x^{p^k} = 1} = p^{sum min(k, l_i)}
  // determines the partition l of the p-part
  std::map<int, std::vector<int>> partitions;  // p -> parts, descending
  int rest = q;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> numPartsGe;  // index k: #parts >= k+1
    int prev = 0;
    for (int k = 1; k <= 62; ++k) {
      int64_t pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      int64_t cnt = 0;
      for (int i = 0; i < q; ++i) {
        int oo = qord[i];
        while (oo % p == 0) oo /= p;
        if (oo == 1 && pk % qord[i] == 0) ++cnt;
      }
      int logc = 0;
      while (cnt > 1) {
        wk_check(cnt % p == 0, "quotient is not abelian");
        cnt /= p;
        ++logc;
      }
      if (logc == prev) break;
      numPartsGe.push_back(logc - prev);
      prev = logc;
    }
    std::vector<int> parts(numPartsGe.empty() ? 0 : numPartsGe[0], 0);
    for (size_t k = 0; k < numPartsGe.size(); ++k)
      for (int i = 0; i < numPartsGe[k]; ++i) parts[i] = static_cast<int>(k + 1);
    partitions[p] = parts;
  }
  // assemble invariant factors (ascending divisibility)
  size_t maxLen = 0;
  for (auto& [p, parts] : partitions) maxLen = std::max(maxLen, parts.size());
  std::vector<uint64_t> factors(maxLen, 1);
  for (auto& [p, parts] : partitions)
    for (size_t i = 0; i < parts.size(); ++i) {
      uint64_t pk = 1;
      for (int e = 0; e < parts[i]; ++e) pk *= static_cast<uint64_t>(p);
      factors[i] *= pk;  // parts descending: factors[0] largest
    }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

std::string GroupFingerprint::str() const {
  std::string s = "order=" + std::to_string(order);
  s += " orders{";
  bool first = true;
  for (auto& [o, c] : orderHistogram) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  s += "} ab=[";
  for (size_t i = 0; i < abelianInvariants.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(abelianInvariants[i]);
  }
  s += "] Z=" + std::to_string(centerOrder);
  return s;
}

GroupFingerprint fingerprint(const GroupView& g) {
  GroupFingerprint f;
  f.order = g.n;
  if (g.n > 200'000) return f;
  for (uint64_t i = 0; i < g.n; ++i) ++f.orderHistogram[elementOrder(g, static_cast<int>(i))];
  if (g.n <= 20'000) {
    std::vector<int> H = commutatorSubgroup(g);
    f.abelianInvariants = abelianInvariantsOfQuotient(g, H);
    std::vector<int> gens = g.gens;
    if (gens.empty())
      for (uint64_t i = 0; i < g.n; ++i) gens.push_back(static_cast<int>(i));
    uint64_t z = 0;
    for (uint64_t i = 0; i < g.n; ++i) {
      bool central = true;
      for (int x : gens)
        if (g.mult(static_cast<int>(i), x) != g.mult(x, static_cast<int>(i))) {
          central = false;
          break;
        }
      if (central) ++z;
    }
    f.centerOrder = z;
  }
  return f;
}

CabanesResult isCabanes(const GroupView& g) {
  wk_check(g.n <= 10'000, "Cabanes scan capped at order 1e4");
  const int n = static_cast<int>(g.n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = elementInverse(g, i);

  // conjugacy classes
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> orbit;
    for (int x = 0; x < n; ++x) {
      int c = g.mult(g.mult(x, i), inv[x]);
      if (cls[c] < 0) {
        cls[c] = id;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(orbit);
  }

  // class-generated abelian normal subgroups as seeds
  auto commutes = [&](const std::vector<int>& A, const std::vector<int>& B) {
    for (int a : A)
      for (int b : B)
        if (g.mult(a, b) != g.mult(b, a)) return false;
    return true;
  };
  std::vector<std::vector<int>> seeds;
  for (const auto& c : classes) {
    std::vector<int> sub = subgroupClosure(g, c);
    if (commutes(sub, sub)) seeds.push_back(sub);
  }
  // dedupe
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  const int s = static_cast<int>(seeds.size());
  wk_check(s <= 62, "too many abelian seed classes");
  std::vector<uint64_t> nbr(s, 0);  // self-excluded compatibility
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (i != j && commutes(seeds[i], seeds[j])) nbr[i] |= (uint64_t{1} << j);

  // maximal cliques over the compatibility graph (Bron-Kerbosch, no pivot;
  // the seed count stays tiny)
  std::vector<uint64_t> cliques;
  std::function<void(uint64_t, uint64_t, uint64_t)> bk = [&](uint64_t r, uint64_t p, uint64_t x) {
    if (!p && !x) {
      cliques.push_back(r);
      return;
    }
    while (p) {
      int v = __builtin_ctzll(p);
      uint64_t vb = uint64_t{1} << v;
      bk(r | vb, p & nbr[v], x & nbr[v]);
      p &= ~vb;
      x |= vb;
    }
  };
  bk(0, s ? ((uint64_t{1} << s) - 1) : 0, 0);

  std::vector<std::vector<int>> joins;
  for (uint64_t c : cliques) {
    std::vector<int> gens;
    for (int i = 0; i < s; ++i)
      if (c & (uint64_t{1} << i)) gens.insert(gens.end(), seeds[i].begin(), seeds[i].end());
    if (gens.empty()) gens.push_back(g.id);
    joins.push_back(subgroupClosure(g, gens));
  }
  std::sort(joins.begin(), joins.end());
  joins.erase(std::unique(joins.begin(), joins.end()), joins.end());

  CabanesResult out;
  for (size_t i = 0; i < joins.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < joins.size() && maximal; ++j) {
      if (i == j || joins[j].size() <= joins[i].size()) continue;
      if (std::includes(joins[j].begin(), joins[j].end(), joins[i].begin(), joins[i].end()))
        maximal = false;
    }
    if (maximal) out.maximalAbelianNormals.push_back(joins[i]);
  }
  out.cabanes = (out.maximalAbelianNormals.size() == 1);
  return out;
}

QuadraticScan quadraticElements(const GroupView& g, const std::vector<int>& subgroupA) {
  const int n = static_cast<int>(g.n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = elementInverse(g, i);
  std::set<int> inA(subgroupA.begin(), subgroupA.end());
  wk_check(inA.count(g.id) == 1, "A must contain the identity");
  for (int a : subgroupA)
    for (int b : subgroupA) {
      if (g.mult(a, b) != g.mult(b, a)) throw std::invalid_argument("A is not abelian");
      if (!inA.count(g.mult(a, b))) throw std::invalid_argument("A is not a subgroup");
    }
  for (int x = 0; x < n; ++x)
    for (int a : subgroupA)
      if (!inA.count(g.mult(g.mult(x, a), inv[x]))) throw std::invalid_argument("A is not normal");

  // coset partition
  std::vector<int> cosetOf(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (cosetOf[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int a : subgroupA) cosetOf[g.mult(x, a)] = id;
  }

  auto commutator = [&](int h, int t) { return g.mult(g.mult(h, t), g.mult(inv[h], inv[t])); };

  QuadraticScan out;
  for (size_t c = 0; c < reps.size(); ++c) {
    int h = reps[c];
    if (cosetOf[h] == cosetOf[g.id]) continue;
    bool quad = true;
    for (int t : subgroupA)
      if (commutator(h, commutator(h, t)) != g.id) {
        quad = false;
        break;
      }
    if (quad) out.quadraticCosetReps.push_back(h);

    // involution-only filter: a representative of order <= 2 modulo A
    // whose twisted square (h t h^{-1} t^{-1})^2 dies on all of A;
    // "involution" is read in G/A, which is what the power argument
    // behind the filter actually produces (the quaternion group over its
    // cyclic subgroup has no literal involution outside A)
    for (int a : subgroupA) {
      int hh = g.mult(h, a);
      if (!inA.count(g.mult(hh, hh))) continue;
      bool iq = true;
      for (int t : subgroupA) {
        int c1 = commutator(hh, t);
        if (g.mult(c1, c1) != g.id) {
          iq = false;
          break;
        }
      }
      if (iq) {
        out.quadraticInvolutionReps.push_back(hh);
        break;
      }
    }
  }
  return out;
}

WreathRecognition wreathRecognize(const GroupView& g, const std::vector<std::vector<int>>& components,
                                  int x) {
  WreathRecognition out;
  const int r = static_cast<int>(components.size());
  wk_check(r >= 1, "need at least one component");
  const int n = static_cast<int>(g.n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = elementInverse(g, i);

  // pairwise commuting with trivial intersections
  uint64_t prod = 1;
  for (int i = 0; i < r; ++i) {
    prod *= components[i].size();
    for (int j = i + 1; j < r; ++j) {
      for (int a : components[i])
        for (int b : components[j])
          if (g.mult(a, b) != g.mult(b, a)) throw std::invalid_argument("components do not commute");
      std::vector<int> is;
      std::set_intersection(components[i].begin(), components[i].end(), components[j].begin(),
                            components[j].end(), std::back_inserter(is));
      if (is.size() != 1) throw std::invalid_argument("components intersect nontrivially");
    }
  }
  std::vector<int> gens;
  for (const auto& c : components) gens.insert(gens.end(), c.begin(), c.end());
  std::vector<int> N = subgroupClosure(g, gens);
  if (N.size() != prod) throw std::invalid_argument("components do not form a direct product");
  std::set<int> inN(N.begin(), N.end());
  if (r == 1) {
    // degenerate wreath: the group is its own base
    if (g.n != N.size()) throw std::invalid_argument("base subgroup does not have index 1");
    out.recognized = true;
    out.witnessY = g.id;
    return out;
  }
  if (inN.count(x)) throw std::invalid_argument("x lies in the base subgroup");
  if (g.n != N.size() * r) throw std::invalid_argument("base subgroup does not have index r");

  // x must permute the component set transitively
  std::vector<int> pi(r, -1);
  for (int i = 0; i < r; ++i) {
    std::vector<int> cimg;
    for (int a : components[i]) cimg.push_back(g.mult(g.mult(x, a), inv[x]));
    std::sort(cimg.begin(), cimg.end());
    for (int j = 0; j < r; ++j)
      if (cimg == components[j]) pi[i] = j;
    if (pi[i] < 0) return out;  // not recognized
  }
  std::vector<char> vis(r, 0);
  int c = 0, steps = 0;
  while (!vis[c]) {
    vis[c] = 1;
    c = pi[c];
    ++steps;
  }
  if (steps != r) return out;

  // witness y = f(a)^{-1} x with y^r = 1, a in the first component
  for (int a : components[0]) {
    int y = g.mult(inv[a], x);
    int p = y;
    for (int k = 1; k < r; ++k) p = g.mult(p, y);
    if (p == g.id) {
      out.recognized = true;
      out.witnessY = y;
      return out;
    }
  }
  return out;
}

CharacteristicCheck characteristicCheck(int a) {
  if (a % 4 != 0) throw std::invalid_argument("a must be divisible by 4");

  // affine model on (Z/a)^2: elements x -> Wx + t, W in {+-I, +-swap}
  struct Aff {
    std::array<int, 4> w;
    std::array<int, 2> t;
  };
  const int mod = a;
  auto mul = [mod](const Aff& f, const Aff& g2) {
    Aff r;
    r.w = {(f.w[0] * g2.w[0] + f.w[1] * g2.w[2]) % mod, (f.w[0] * g2.w[1] + f.w[1] * g2.w[3]) % mod,
           (f.w[2] * g2.w[0] + f.w[3] * g2.w[2]) % mod, (f.w[2] * g2.w[1] + f.w[3] * g2.w[3]) % mod};
    r.t = {(f.w[0] * g2.t[0] + f.w[1] * g2.t[1] + f.t[0]) % mod,
           (f.w[2] * g2.t[0] + f.w[3] * g2.t[1] + f.t[1]) % mod};
    for (int& v : r.w) v = (v + mod) % mod;
    for (int& v : r.t) v = (v + mod) % mod;
    return r;
  };
  auto key = [](const Aff& f) {
    std::string s;
    for (int v : f.w) s += std::to_string(v) + ",";
    for (int v : f.t) s += std::to_string(v) + ",";
    return s;
  };
  Aff t1{{1, 0, 0, 1}, {1, 0}};
  Aff t2{{1, 0, 0, 1}, {0, 1}};
  Aff w1{{mod - 1, 0, 0, mod - 1}, {0, 0}};  // inversion
  Aff w2{{0, 1, 1, 0}, {0, 0}};              // swap
  std::vector<Aff> elems = closeUnderProducts(std::vector<Aff>{t1, t2, w1, w2}, mul, key,
                                              static_cast<uint64_t>(4) * a * a + 8);
  wk_check(elems.size() == static_cast<size_t>(4) * a * a, "affine group has unexpected order");

  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < elems.size(); ++i) idx[key(elems[i])] = static_cast<int>(i);
  GroupView v;
  v.n = elems.size();
  v.id = idx.at(key(Aff{{1, 0, 0, 1}, {0, 0}}));
  v.mult = [&elems, &idx, mul, key](int i, int j) { return idx.at(key(mul(elems[i], elems[j]))); };
  for (const Aff& g2 : {t1, t2, w1, w2}) v.gens.push_back(idx.at(key(g2)));

  std::vector<int> A;
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].w == std::array<int, 4>{1, 0, 0, 1}) A.push_back(static_cast<int>(i));
  std::sort(A.begin(), A.end());

  std::vector<int> comm = commutatorSubgroup(v);
  CharacteristicCheck out;
  out.commutatorIndexTwo =
      std::includes(A.begin(), A.end(), comm.begin(), comm.end()) && comm.size() * 2 == A.size();

  std::vector<int> centralizer;
  for (size_t i = 0; i < elems.size(); ++i) {
    bool ok = true;
    for (int h : comm)
      if (v.mult(static_cast<int>(i), h) != v.mult(h, static_cast<int>(i))) {
        ok = false;
        break;
      }
    if (ok) centralizer.push_back(static_cast<int>(i));
  }
  out.centralizerIsA = (centralizer == A);
  return out;
}

bool quadraticOnTorus(const FiniteTorus& t, const IntMat& g, bool involutionCase) {
  BigMat b = inducedAction(t, g);
  const int n = static_cast<int>(t.invariantFactors.size());
  if (involutionCase) {
    // the induced action must square to the identity on the coordinates
    BigMat sq = bigMul(b, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt v = sq[i][j] - (i == j ? 1 : 0);
        wk_check(v % t.invariantFactors[i] == 0, "involution case requires an induced involution");
      }
    BigMat c(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[i][j] = 2 * (b[i][j] - (i == j ? 1 : 0));
    return annihilatesTwoPart(t, c);
  }
  BigMat d(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = b[i][j] - (i == j ? 1 : 0);
  return annihilatesTwoPart(t, bigMul(d, d));
}

CabanesSweepReport cabanesSweep(const RootSystem& rs, int epsilon, const BigInt& q) {
  CabanesSweepReport rep;
  rep.type = (epsilon < 0 ? "2" : "") + rs.label();
  rep.epsilon = epsilon;
  rep.q = q;
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("sweep requires odd q >= 3");
  if (!rs.irreducible()) throw std::invalid_argument("sweep requires an irreducible type");
  Series s = rs.components()[0].series;
  if (s != Series::A && s != Series::D && s != Series::E)
    throw std::invalid_argument("sweep supports the simply-laced series");

  IntMat phi = IntMat::identity(rs.rank());
  if (epsilon < 0) {
    auto flip = rs.diagramFlip();
    if (!flip) throw std::invalid_argument("type has no order-2 diagram symmetry");
    phi = rs.diagramSymmetryMatrix(*flip);
  }
  WeylElement w0 = longestElement(rs);
  IntMat w0m = w0.matrix();

  FrobeniusTwist tw = FrobeniusTwist::withMatrix(rs, phi, q, epsilon);
  rep.e = tw.e();
  IntMat M = rep.e == 2 ? w0m * phi : phi;
  tw.M = M;
  FiniteTorus torus = finiteTorus(tw);
  CyclotomicOrder torusOrder = polynomialOrder(M);
  rep.torusOrder = torusOrder.str();

  // theorem hypothesis: w0 != -1 on the reflection representation, or
  // 8 | Phi_e(q)
  bool w0MinusOne = true;
  for (int i = 0; i < rs.rank() && w0MinusOne; ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (w0m(i, j) != (i == j ? -1 : 0)) {
        w0MinusOne = false;
        break;
      }
  BigInt phiE = zpolyEval(cyclotomic(rep.e), q);
  rep.hypothesisHolds = !w0MinusOne || v2(phiE) >= 3;

  // every parabolic longest element commuting with the twist; these carry
  // representatives of all involution classes of the acting group
  rep.pass = true;
  const int rank = rs.rank();
  for (int mask = 1; mask < (1 << rank); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) I.push_back(i);
    WeylElement wI = longestElement(rs, I);
    if (wI.isIdentity()) continue;
    IntMat wm = wI.matrix();
    if (!(wm * M == M * wm)) continue;

    SweepClassOutcome oc;
    oc.subset = I;
    if (static_cast<int>(I.size()) == rank)
      oc.label = "w0";
    else {
      std::vector<int> seed;
      for (int i : I) seed.push_back(rs.simpleRootIndex(i));
      oc.label = classifySubsystem(rs, reflectionClosure(rs, seed)).typeString();
    }

    BigMat act = inducedAction(torus, wm);
    const int n = static_cast<int>(torus.invariantFactors.size());
    BigMat c2(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c2[i][j] = 2 * (act[i][j] - (i == j ? 1 : 0));
    oc.quadratic = annihilatesTwoPart(torus, c2);
    if (oc.quadratic)
      rep.pass = false;
    else {
      // a cyclic direction whose twisted commutator keeps order >= 4
      for (int j = 0; j < n && oc.witness.empty(); ++j) {
        int e2 = v2(torus.invariantFactors[j]);
        if (e2 == 0) continue;
        BigInt gen = torus.invariantFactors[j] >> e2;
        for (int i = 0; i < n; ++i) {
          BigInt img = c2[i][j] * gen % torus.invariantFactors[i];
          if (img != 0) {
            oc.witness = "2(w-1) image nonzero on factor " + std::to_string(j) +
                         " (d_j=" + torus.invariantFactors[j].str() + ")";
            break;
          }
        }
      }
    }
    rep.classes.push_back(std::move(oc));
  }

  if (rep.e == 2) {
    IntMat minusM = M.scaled(-1);
    rep.ennolaConsistent = (torusOrder == ennola(polynomialOrder(minusM)));
  }
  return rep;
}

}  // namespace weylkit
