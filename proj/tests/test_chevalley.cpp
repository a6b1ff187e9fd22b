#include <random>
#include <set>

#include "doctest.h"
#include "weylkit/chevalley.hpp"
#include "weylkit/exact.hpp"
#include "weylkit/grouptool.hpp"

using namespace weylkit;

namespace {

struct E6Fixture {
  RootSystem rs = RootSystem::build("E6");
  ChevalleyBasis cb{rs};
};

E6Fixture& e6fix() {
  static E6Fixture f;
  return f;
}

}  // namespace

TEST_CASE("sign table invariants and the Jacobi identity") {
  // A2: the single addable simple pair, antisymmetry checked on build
  RootSystem a2 = RootSystem::build("A2");
  ChevalleyBasis cbA2(a2);
  int n12 = cbA2.sign(a2.simpleRootIndex(0), a2.simpleRootIndex(1));
  CHECK((n12 == 1 || n12 == -1));
  CHECK(cbA2.sign(a2.simpleRootIndex(1), a2.simpleRootIndex(0)) == -n12);
  cbA2.verifyJacobi();

  RootSystem a3 = RootSystem::build("A3");
  ChevalleyBasis cbA3(a3);
  cbA3.verifyJacobi();

  RootSystem d4 = RootSystem::build("D4");
  ChevalleyBasis cbD4(d4);
  cbD4.verifyJacobi();
  // N(-a,-b) = -N(a,b) over every addable pair
  for (int a = 0; a < d4.rootCount(); ++a)
    for (int b = 0; b < d4.rootCount(); ++b) {
      if (b == d4.negate(a)) continue;
      RootVec sum = d4.root(a);
      for (int i = 0; i < 4; ++i) sum[i] += d4.root(b)[i];
      if (!d4.isRoot(sum)) continue;
      CHECK(cbD4.sign(d4.negate(a), d4.negate(b)) == -cbD4.sign(a, b));
    }

  e6fix().cb.verifyJacobi();

  RootSystem b2 = RootSystem::build("B2");
  CHECK_THROWS_AS(ChevalleyBasis{b2}, std::invalid_argument);
}

TEST_CASE("one-parameter and torus-normalizer matrices") {
  auto& [rs, cb] = e6fix();
  int a3idx = rs.simpleRootIndex(2);

  SUBCASE("diagonal character formula for h(-1)") {
    IntMat h = adjointH(cb, a3idx, -1);
    for (int r = 0; r < rs.rootCount(); ++r) {
      int64_t pairing = rs.pairing(rs.root(r), rs.root(a3idx));
      int expected = (pairing % 2 == 0) ? 1 : -1;
      CHECK(h(r, r) == expected);
      for (int i = 0; i < cb.dim(); ++i)
        if (i != r) CHECK(h(i, r) == 0);
    }
    for (int i = 0; i < rs.rank(); ++i) {
      int c = rs.rootCount() + i;
      for (int j = 0; j < cb.dim(); ++j) CHECK(h(j, c) == (j == c ? 1 : 0));
    }
  }

  SUBCASE("n(1) swaps the root line with its negative and has order 4") {
    IntMat n = adjointN(cb, a3idx, 1);
    int neg = rs.negate(a3idx);
    CHECK((n(neg, a3idx) == 1 || n(neg, a3idx) == -1));
    for (int i = 0; i < cb.dim(); ++i)
      if (i != neg) CHECK(n(i, a3idx) == 0);
    CHECK(n.order(8) == 4);
    CHECK((n * n) == adjointH(cb, a3idx, -1));
    CHECK(normalizesTorus(cb, n));
    CHECK_FALSE(isDiagonalTorusElement(cb, n));
    CHECK(isDiagonalTorusElement(cb, adjointH(cb, a3idx, -1)));
  }

  SUBCASE("x(t) stays integral and unipotent for integer t") {
    IntMat x = adjointX(cb, a3idx, 3);
    IntMat xm = adjointX(cb, a3idx, -3);
    CHECK((x * xm).isIdentity());
    CHECK(bigDet(toBig(x)) == 1);
  }

  SUBCASE("determinants of normalizer elements are +-1") {
    IntMat n = adjointN(cb, rs.simpleRootIndex(0), 1) * adjointN(cb, rs.simpleRootIndex(1), 1);
    BigInt d = bigDet(toBig(n));
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("canonical section of the Weyl group") {
  auto& [rs, cb] = e6fix();

  SUBCASE("identity and single letters") {
    CHECK(section(cb, WeylElement::identity(rs)).isIdentity());
    CHECK(section(cb, WeylElement::simpleReflection(rs, 4)) ==
          adjointN(cb, rs.simpleRootIndex(4), 1));
  }

  SUBCASE("braid move invariance in A2") {
    RootSystem a2 = RootSystem::build("A2");
    ChevalleyBasis cbA2(a2);
    CHECK(sectionAlongWord(cbA2, {0, 1, 0}) == sectionAlongWord(cbA2, {1, 0, 1}));
  }

  SUBCASE("length-additive pairs multiply") {
    for (const char* label : {"A3", "D4"}) {
      RootSystem sys = RootSystem::build(label);
      ChevalleyBasis basis(sys);
      WeylGroup W = WeylGroup::enumerate(sys);
      std::mt19937 rng(99);
      for (int t = 0; t < 12; ++t) {
        WeylElement w = W.element(rng() % W.size());
        std::vector<int> word = w.reducedWord();
        if (word.size() < 2) continue;
        size_t cut = 1 + rng() % (word.size() - 1);
        std::vector<int> left(word.begin(), word.begin() + cut);
        std::vector<int> right(word.begin() + cut, word.end());
        CHECK(sectionAlongWord(basis, left) * sectionAlongWord(basis, right) == section(basis, w));
      }
    }
    // a pair of random elements in E6 whose lengths add
    WeylGroup W = WeylGroup::enumerate(rs);
    std::mt19937 rng(7);
    int found = 0;
    while (found < 5) {
      WeylElement w1 = W.element(rng() % W.size());
      WeylElement w2 = W.element(rng() % W.size());
      if (w1.length() + w2.length() != (w1 * w2).length()) continue;
      ++found;
      CHECK(section(cb, w1) * section(cb, w2) == section(cb, w1 * w2));
    }
  }

  SUBCASE("the kernel of the section target is elementary abelian of full rank") {
    std::vector<IntMat> gens;
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(adjointH(cb, rs.simpleRootIndex(i), -1));
    MatGroup h = MatGroup::generate(gens, 200);
    CHECK(h.size() == 64);
    for (const IntMat& m : h.elements) {
      CHECK(isDiagonalTorusElement(cb, m));
      CHECK((m * m).isIdentity());
    }
  }

  SUBCASE("the section projects back onto the Weyl group") {
    WeylGroup W = WeylGroup::enumerate(rs);
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
      WeylElement w = W.element(rng() % W.size());
      CHECK(weylImage(cb, section(cb, w)) == w);
    }
  }
}

TEST_CASE("conjugation signs on root lines") {
  auto& [rs, cb] = e6fix();

  CHECK(conjugationSign(cb, IntMat::identity(cb.dim()), rs.simpleRootIndex(2)) == 1);

  // h(-1) twists lines with odd pairing
  IntMat h1 = adjointH(cb, rs.simpleRootIndex(0), -1);
  CHECK(conjugationSign(cb, h1, rs.simpleRootIndex(2)) == -1);  // adjacent node
  CHECK(conjugationSign(cb, h1, rs.simpleRootIndex(1)) == 1);   // orthogonal node

  // the order-3 element fixes the branch-node lines with sign +1
  E6Elements el = buildE6Elements(cb);
  int a4 = rs.simpleRootIndex(3);
  CHECK(weylImage(cb, el.vprime).apply(a4) == a4);
  CHECK(conjugationSign(cb, el.vprime, a4) == 1);
  CHECK(conjugationSign(cb, el.vprime, rs.negate(a4)) == 1);

  IntMat notNormalizing = adjointX(cb, rs.simpleRootIndex(0), 1);
  CHECK_THROWS_AS(conjugationSign(cb, notNormalizing, a4), std::invalid_argument);
}

TEST_CASE("square identity over subsets") {
  auto& [rs, cb] = e6fix();
  // rank-1 instance: n^2 = h(-1)
  AdamsHeCheck one = verifyAdamsHe(cb, {0});
  CHECK(one.holds);
  // all 64 subsets (the full suite re-runs this; spot the empty set too)
  CHECK(verifyAdamsHe(cb, {}).holds);
  CHECK(verifyAdamsHe(cb, {0, 1, 2, 3, 4, 5}).holds);
  RootSystem d4 = RootSystem::build("D4");
  ChevalleyBasis cbD4(d4);
  CHECK(verifyAdamsHe(cbD4, {0, 1, 2, 3}).holds);
}

TEST_CASE("the explicit E6 elements") {
  auto& [rs, cb] = e6fix();
  E6Elements el = buildE6Elements(cb);

  int ox = el.x.order(16);
  CHECK((ox == 3 || ox == 6));
  CHECK(el.vprime.order(8) == 3);

  // gamma inverts x
  int og = el.gamma.order(64);
  IntMat gammaInv = el.gamma.pow(og - 1);
  CHECK(el.gamma * el.x * gammaInv == el.x.pow(ox - 1));

  // the averaged elements centralize the order-3 element
  CHECK(el.m * el.vprime == el.vprime * el.m);
  CHECK(el.n * el.vprime == el.vprime * el.n);

  // commuting triple on orthogonal roots
  CHECK(el.v1 * el.v2 == el.v2 * el.v1);
  CHECK(el.v1 * el.v3 == el.v3 * el.v1);
  CHECK(el.v2 * el.v3 == el.v3 * el.v2);
  CHECK(el.v == el.v1 * el.v2 * el.v3);

  // each generator has order 4 with square in the kernel
  for (const IntMat* g : {&el.v1, &el.v2, &el.v3}) {
    CHECK(g->order(8) == 4);
    CHECK(isDiagonalTorusElement(cb, g->pow(2)));
  }

  // the lifted diagram symmetry is an involution up to a kernel element
  CHECK(normalizesTorus(cb, el.w0Tilde));
  CHECK(weylImage(cb, el.w0Tilde) == longestElement(rs));
}

TEST_CASE("section shape and averaged-generator reports") {
  auto& [rs, cb] = e6fix();
  E6Elements el = buildE6Elements(cb);
  SectionShapeReport rep = verifySectionShape(el);
  CHECK(rep.ok());
  CHECK(rep.groupOrder == 192);

  MnSectionReport r2 = verifyMnSection(el, 2, 2);
  CHECK(r2.weylImageMatches);
  CHECK(r2.literalExponentCollapses);
  CHECK_THROWS_AS(verifyMnSection(el, 3, 1), CheckError);
}

TEST_CASE("full Jacobi scans at ranks 7 and 8" * doctest::timeout(300)) {
  RootSystem e7 = RootSystem::build("E7");
  ChevalleyBasis cb7(e7);
  cb7.verifyJacobi();
  RootSystem e8 = RootSystem::build("E8");
  ChevalleyBasis cb8(e8);
  cb8.verifyJacobi();
}
