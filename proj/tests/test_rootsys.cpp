#include <algorithm>
#include <set>

#include "doctest.h"
#include "weylkit/rootsys.hpp"

using namespace weylkit;

namespace {

// independent oracle: close the simple roots under reflections in EVERY
// known root (not just the simple ones) until stable
int orbitClosureCount(const RootSystem& rs) {
  std::set<RootVec> pool;
  for (int i = 0; i < rs.rank(); ++i) {
    RootVec e(rs.rank(), 0);
    e[i] = 1;
    pool.insert(e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootVec> snapshot(pool.begin(), pool.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (pool.insert(rs.reflect(a, b)).second) grew = true;
  }
  return static_cast<int>(pool.size());
}

}  // namespace

TEST_CASE("root counts match the classical values") {
  CHECK(RootSystem::build("A1").rootCount() == 2);
  CHECK(RootSystem::build("A2").rootCount() == 6);
  CHECK(RootSystem::build("A5").rootCount() == 30);
  CHECK(RootSystem::build("D4").rootCount() == 24);
  CHECK(RootSystem::build("D5").rootCount() == 40);
  CHECK(RootSystem::build("E6").rootCount() == 72);
  CHECK(RootSystem::build("E7").rootCount() == 126);
  CHECK(RootSystem::build("E8").rootCount() == 240);
  CHECK(RootSystem::build("B3").rootCount() == 18);
  CHECK(RootSystem::build("C4").rootCount() == 32);
  CHECK(RootSystem::build("F4").rootCount() == 48);
  CHECK(RootSystem::build("G2").rootCount() == 12);
}

TEST_CASE("generation agrees with the all-reflections closure oracle") {
  for (const char* label : {"A3", "D4", "E6", "B3", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    CHECK(orbitClosureCount(rs) == rs.rootCount());
  }
}

TEST_CASE("roots are closed under negation and simple reflections") {
  RootSystem e6 = RootSystem::build("E6");
  for (int r = 0; r < e6.rootCount(); ++r) {
    RootVec neg = e6.root(r);
    for (int& c : neg) c = -c;
    CHECK(e6.indexOf(neg) == e6.negate(r));
    for (int i = 0; i < e6.rank(); ++i)
      CHECK(e6.isRoot(e6.reflect(e6.root(e6.simpleRootIndex(i)), e6.root(r))));
  }
  CHECK(e6.positiveCount() * 2 == e6.rootCount());
}

TEST_CASE("E6 highest root expansion and dominance") {
  RootSystem e6 = RootSystem::build("E6");
  CHECK(e6.root(e6.highestRootIndex()) == RootVec{1, 2, 2, 3, 2, 1});
  for (int i = 0; i < e6.positiveCount(); ++i)
    for (int j = 0; j < e6.rank(); ++j)
      CHECK(e6.root(e6.highestRootIndex())[j] >= e6.root(i)[j]);
}

TEST_CASE("reflection formula on simple pairs") {
  RootSystem e6 = RootSystem::build("E6");
  const RootVec a2 = e6.root(e6.simpleRootIndex(1));
  const RootVec a4 = e6.root(e6.simpleRootIndex(3));
  // s_alpha(alpha) = -alpha
  RootVec neg = a2;
  for (int& c : neg) c = -c;
  CHECK(e6.reflect(a2, a2) == neg);
  // adjacent nodes: the pairing is -1, so the sum appears
  CHECK(e6.pairing(a4, a2) == -1);
  RootVec sum = a2;
  for (int i = 0; i < 6; ++i) sum[i] += a4[i];
  CHECK(e6.reflect(a2, a4) == sum);
  // orthogonal nodes are fixed
  const RootVec a1 = e6.root(e6.simpleRootIndex(0));
  CHECK(e6.reflect(a1, a2) == a2);
}

TEST_CASE("coordinate-1 scan per type") {
  CHECK(checkCoefficientLemma(RootSystem::build("E6")).holds);
  CHECK(checkCoefficientLemma(RootSystem::build("A3")).holds);
  CHECK(checkCoefficientLemma(RootSystem::build("A7")).holds);
  CHECK(checkCoefficientLemma(RootSystem::build("D5")).holds);

  RootSystem e8 = RootSystem::build("E8");
  CoefficientScan scan = checkCoefficientLemma(e8);
  CHECK_FALSE(scan.holds);
  // the highest root is among the witnesses, with every coordinate >= 2
  CHECK(std::find(scan.witnesses.begin(), scan.witnesses.end(), e8.highestRootIndex()) !=
        scan.witnesses.end());
  for (int c : e8.root(e8.highestRootIndex())) CHECK(c >= 2);
  // oracle recount
  for (int w : scan.witnesses) {
    const RootVec& r = e8.root(w);
    CHECK(std::count(r.begin(), r.end(), 1) < 2);
  }
  CHECK_FALSE(checkCoefficientLemma(RootSystem::build("E7")).holds);
  CHECK_THROWS_AS(
      checkCoefficientLemma(RootSystem::buildReducible({{Series::A, 1}, {Series::A, 1}})),
      std::invalid_argument);
}

TEST_CASE("subsystem classification") {
  RootSystem e6 = RootSystem::build("E6");

  SUBCASE("the displayed order-3 centralizer base gives three A2 components") {
    std::vector<int> seed;
    for (int i : {0, 1, 2, 4, 5}) seed.push_back(e6.simpleRootIndex(i));
    seed.push_back(e6.negate(e6.highestRootIndex()));
    SubSystem sub = classifySubsystem(e6, reflectionClosure(e6, seed));
    CHECK(sub.typeString() == "A2+A2+A2");
    CHECK(sub.rootIndices.size() == 18);
    CHECK(sub.weylOrder() == 216);
  }

  SUBCASE("a single root pair is A1") {
    int a4 = e6.simpleRootIndex(3);
    SubSystem sub = classifySubsystem(e6, {a4, e6.negate(a4)});
    CHECK(sub.typeString() == "A1");
  }

  SUBCASE("the paired A2 bases close to A2+A2") {
    std::vector<int> seeds = {e6.indexOf({0, 1, 0, 1, 1, 1}), e6.indexOf({1, 0, 1, 1, 1, 0}),
                              e6.indexOf({0, 0, 1, 1, 1, 1}), e6.indexOf({1, 1, 1, 1, 0, 0})};
    for (int s : seeds) CHECK(s >= 0);
    SubSystem sub = classifySubsystem(e6, reflectionClosure(e6, seeds));
    CHECK(sub.typeString() == "A2+A2");
    CHECK(sub.rootIndices.size() == 12);
  }

  SUBCASE("an unclosed subset is rejected") {
    int a1 = e6.simpleRootIndex(0), a3 = e6.simpleRootIndex(2);
    CHECK_THROWS_AS(classifySubsystem(e6, {a1, e6.negate(a1), a3, e6.negate(a3)}),
                    std::invalid_argument);
  }

  SUBCASE("D4 inside E6") {
    std::vector<int> seed;
    for (int i : {1, 2, 3, 4}) seed.push_back(e6.simpleRootIndex(i));
    SubSystem sub = classifySubsystem(e6, reflectionClosure(e6, seed));
    CHECK(sub.typeString() == "D4");
  }
}

TEST_CASE("fundamental group invariant factors") {
  CHECK(RootSystem::build("E6").fundamentalGroup() == std::vector<int64_t>{3});
  CHECK(RootSystem::build("E7").fundamentalGroup() == std::vector<int64_t>{2});
  CHECK(RootSystem::build("E8").fundamentalGroup().empty());
  CHECK(RootSystem::build("A1").fundamentalGroup() == std::vector<int64_t>{2});
  CHECK(RootSystem::build("A3").fundamentalGroup() == std::vector<int64_t>{4});
  CHECK(RootSystem::build("D4").fundamentalGroup() == std::vector<int64_t>({2, 2}));

  // the explicit order-3 cocharacter pairs integrally with every root
  RootSystem e6 = RootSystem::build("E6");
  const int z[6] = {1, 0, 2, 0, 1, 2};
  for (int r = 0; r < e6.rootCount(); ++r) {
    int64_t v = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        v += static_cast<int64_t>(e6.root(r)[i]) * e6.cartan()(i, j) * z[j];
    CHECK(v % 3 == 0);
  }
}

TEST_CASE("diagram flips") {
  CHECK(RootSystem::build("E6").diagramFlip().has_value());
  CHECK(RootSystem::build("A4").diagramFlip().has_value());
  CHECK(RootSystem::build("D5").diagramFlip().has_value());
  CHECK_FALSE(RootSystem::build("E7").diagramFlip().has_value());
  CHECK_FALSE(RootSystem::build("E8").diagramFlip().has_value());
  auto flip = RootSystem::build("E6").diagramFlip();
  CHECK((*flip)[0] == 5);
  CHECK((*flip)[2] == 4);
  CHECK((*flip)[1] == 1);
  CHECK((*flip)[3] == 3);
}

TEST_CASE("reducible systems carry block-diagonal data") {
  RootSystem rs = RootSystem::buildReducible({{Series::A, 1}, {Series::A, 2}});
  CHECK(rs.rootCount() == 8);
  CHECK(rs.rank() == 3);
  CHECK_FALSE(rs.irreducible());
  CHECK(rs.label() == "A1+A2");
}

TEST_CASE("bad labels are rejected") {
  CHECK_THROWS_AS(RootSystem::build("H3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("X"), std::invalid_argument);
}
