#include <random>

#include "doctest.h"
#include "weylkit/exact.hpp"
#include "weylkit/torus.hpp"
#include "weylkit/weyl.hpp"

using namespace weylkit;

TEST_CASE("Smith form transforms reconstruct the input") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    BigMat a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = static_cast<int>(rng() % 21) - 10;
    SmithForm s = smithNormalForm(a);

    // U * A * V = diag(d), divisibility chain, U * Uinv = I
    BigMat uav = bigMul(bigMul(s.U, a), s.V);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(uav[i][j] == (i == j ? s.diag[i] : BigInt(0)));
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(s.diag[i] >= 0);
      if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
      else CHECK(s.diag[i + 1] == 0);
    }
    BigMat uu = bigMul(s.U, s.Uinv);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(uu[i][j] == (i == j ? 1 : 0));
    // |det| = product of invariant factors
    BigInt prod = 1;
    for (const BigInt& d : s.diag) prod *= d;
    CHECK(prod == abs(bigDet(a)));
  }
}

TEST_CASE("kernel bases annihilate and span") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    BigMat a(n, std::vector<BigInt>(n, 0));
    // a square matrix with planted rank deficiency: random row combinations
    int rank = 1 + static_cast<int>(rng() % (n - 1));
    BigMat rows(rank, std::vector<BigInt>(n));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = static_cast<int>(rng() % 11) - 5;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < rank; ++k) {
        int c = static_cast<int>(rng() % 5) - 2;
        for (int j = 0; j < n; ++j) a[i][j] += c * rows[k][j];
      }
    }
    auto kernel = integerKernelBasis(a);
    CHECK(static_cast<int>(kernel.size()) == n - integerRank(a));
    for (const auto& v : kernel)
      for (int i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < n; ++j) acc += a[i][j] * v[j];
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("cyclotomic polynomial pins") {
  CHECK(cyclotomic(1) == ZPoly({-1, 1}));
  CHECK(cyclotomic(2) == ZPoly({1, 1}));
  CHECK(cyclotomic(6) == ZPoly({1, -1, 1}));
  CHECK(cyclotomic(12) == ZPoly({1, 0, -1, 0, 1}));
  // the first index with a coefficient of magnitude 2
  const ZPoly& p105 = cyclotomic(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
  CHECK(p105[41] == -2);
  // degree is Euler phi
  CHECK(cyclotomic(60).size() == 17);
  // evaluation identity: product over divisors gives q^d - 1
  for (int d : {6, 10, 12}) {
    BigInt q = 9, prod = 1;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) prod *= zpolyEval(cyclotomic(e), q);
    BigInt direct = 1;
    for (int i = 0; i < d; ++i) direct *= q;
    CHECK(prod == direct - 1);
  }
}

TEST_CASE("restriction to a stable sublattice") {
  RootSystem e6 = RootSystem::build("E6");
  IntMat flip = e6.diagramSymmetryMatrix(*e6.diagramFlip());
  // the flip-fixed sublattice: kernel of (flip - 1)
  const int n = 6;
  BigMat fm(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fm[i][j] = flip(i, j) - (i == j ? 1 : 0);
  auto fixedBasis = integerKernelBasis(fm);
  REQUIRE(fixedBasis.size() == 4);
  // the longest element is minus the flip, so it restricts to -1 there
  IntMat w0 = longestElement(e6).corootMatrix();
  CyclotomicOrder c = polynomialOrderOnSublattice(w0, fixedBasis);
  CHECK(c.str() == "Phi2^4");
}
