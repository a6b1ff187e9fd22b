#pragma once

// Arbitrary-precision integer layer: Smith normal form with retained
// transforms, integer kernels, and polynomial arithmetic over Z including
// the cyclotomic family. Matrices here are small (rank <= 8) so the simple
// textbook algorithms are exact and instant.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

#include "weylkit/intmat.hpp"

namespace weylkit {

using BigInt = boost::multiprecision::cpp_int;

using BigMat = std::vector<std::vector<BigInt>>;

inline BigMat bigIdentity(int n) {
  BigMat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline BigMat toBig(const IntMat& m) {
  BigMat r(m.size(), std::vector<BigInt>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
  return r;
}

inline BigMat bigMul(const BigMat& a, const BigMat& b) {
  int n = static_cast<int>(a.size()), m = static_cast<int>(b[0].size()),
      k = static_cast<int>(b.size());
  BigMat r(n, std::vector<BigInt>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

inline BigInt bigDet(BigMat a) {
  // Fraction-free Gaussian elimination (Bareiss).
  int n = static_cast<int>(a.size());
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Smith normal form U*A*V = D with unimodular U, V. Uinv is maintained
/// alongside U so cokernel coordinates can be pushed both ways.
struct SmithForm {
  std::vector<BigInt> diag;  // d1 | d2 | ... (nonnegative)
  BigMat U, Uinv, V;
};

SmithForm smithNormalForm(BigMat a);

/// Basis of the rational kernel of an integer matrix, returned as integer
/// vectors (columns of V at zero invariant factors).
std::vector<std::vector<BigInt>> integerKernelBasis(const BigMat& a);

inline int integerRank(const BigMat& a) {
  SmithForm s = smithNormalForm(a);
  int r = 0;
  for (const BigInt& d : s.diag)
    if (d != 0) ++r;
  return r;
}

// ---- polynomials over Z ------------------------------------------------

/// Coefficient vector, lowest degree first, no trailing zeros.
using ZPoly = std::vector<BigInt>;

ZPoly zpolyMul(const ZPoly& a, const ZPoly& b);
// Exact division; throws CheckError if the remainder is nonzero.
ZPoly zpolyDivExact(const ZPoly& a, const ZPoly& b);
bool zpolyDivides(const ZPoly& b, const ZPoly& a);
BigInt zpolyEval(const ZPoly& p, const BigInt& x);

/// d-th cyclotomic polynomial, computed by the (x^d - 1) / prod rule and
/// cached per process.
const ZPoly& cyclotomic(int d);

/// 2-adic valuation; v2(0) is not defined and throws.
int v2(const BigInt& x);

}  // namespace weylkit
