#include "weylkit/exact.hpp"

#include <algorithm>
#include <map>

namespace weylkit {

namespace {

void rowOp(BigMat& m, int dst, int src, const BigInt& c) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}

void colOp(BigMat& m, int dst, int src, const BigInt& c) {
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] += c * m[i][src];
}

}  // namespace

SmithForm smithNormalForm(BigMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  wk_check(rows == cols, "smithNormalForm: square input expected");
  const int n = rows;

  SmithForm s;
  s.U = bigIdentity(n);
  s.Uinv = bigIdentity(n);
  s.V = bigIdentity(n);

  auto swapRows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(s.U[i], s.U[j]);
    // inverse of a row swap on U is the column swap on Uinv
    for (int r = 0; r < n; ++r) std::swap(s.Uinv[r][i], s.Uinv[r][j]);
  };
  auto swapCols = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(s.V[r][i], s.V[r][j]);
  };
  auto addRow = [&](int dst, int src, const BigInt& c) {
    rowOp(a, dst, src, c);
    rowOp(s.U, dst, src, c);
    colOp(s.Uinv, src, dst, -c);
  };
  auto addCol = [&](int dst, int src, const BigInt& c) {
    colOp(a, dst, src, c);
    colOp(s.V, dst, src, c);
  };
  auto negRow = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < n; ++j) s.U[i][j] = -s.U[i][j];
    for (int j = 0; j < n; ++j) s.Uinv[j][i] = -s.Uinv[j][i];
  };

  for (int k = 0; k < n; ++k) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block as pivot
      int pi = -1, pj = -1;
      BigInt best = 0;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j) {
          if (a[i][j] == 0) continue;
          BigInt v = abs(a[i][j]);
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block zero
      if (pi != k) swapRows(k, pi);
      if (pj != k) swapCols(k, pj);
      if (a[k][k] < 0) negRow(k);

      bool clean = true;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          addRow(i, k, -(a[i][k] / a[k][k]));
          if (a[i][k] != 0) clean = false;
        }
      for (int j = k + 1; j < n; ++j)
        if (a[k][j] != 0) {
          addCol(j, k, -(a[k][j] / a[k][k]));
          if (a[k][j] != 0) clean = false;
        }
      if (!clean) continue;

      // force divisibility d_k | a[i][j]
      bool divides = true;
      for (int i = k + 1; i < n && divides; ++i)
        for (int j = k + 1; j < n && divides; ++j)
          if (a[i][j] % a[k][k] != 0) {
            addRow(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }

  s.diag.resize(n);
  for (int i = 0; i < n; ++i) s.diag[i] = a[i][i];
  return s;
}

std::vector<std::vector<BigInt>> integerKernelBasis(const BigMat& a) {
  SmithForm s = smithNormalForm(a);
  std::vector<std::vector<BigInt>> basis;
  const int n = static_cast<int>(s.diag.size());
  for (int j = 0; j < n; ++j) {
    if (s.diag[j] != 0) continue;
    std::vector<BigInt> col(n);
    for (int i = 0; i < n; ++i) col[i] = s.V[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

ZPoly zpolyMul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

ZPoly zpolyDivExact(const ZPoly& a, const ZPoly& b) {
  wk_check(!b.empty(), "zpolyDivExact: division by zero polynomial");
  ZPoly rem = a, q;
  if (a.size() < b.size()) {
    wk_check(a.empty(), "zpolyDivExact: nonzero remainder");
    return {};
  }
  q.assign(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    BigInt lead = rem[i + b.size() - 1];
    wk_check(lead % b.back() == 0, "zpolyDivExact: nonexact leading division");
    BigInt c = lead / b.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  for (const BigInt& c : rem) wk_check(c == 0, "zpolyDivExact: nonzero remainder");
  return q;
}

bool zpolyDivides(const ZPoly& b, const ZPoly& a) {
  if (b.empty()) return false;
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  for (int i = static_cast<int>(a.size() - b.size()); i >= 0; --i) {
    BigInt lead = rem[i + b.size() - 1];
    if (lead == 0) continue;
    if (lead % b.back() != 0) return false;
    BigInt c = lead / b.back();
    for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) return false;
  return true;
}

BigInt zpolyEval(const ZPoly& p, const BigInt& x) {
  BigInt r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

const ZPoly& cyclotomic(int d) {
  static std::map<int, ZPoly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  wk_check(d >= 1, "cyclotomic: index must be positive");
  ZPoly num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;  // x^d - 1
  for (int e = 1; e < d; ++e)
    if (d % e == 0) num = zpolyDivExact(num, cyclotomic(e));
  return cache.emplace(d, std::move(num)).first->second;
}

int v2(const BigInt& x) {
  wk_check(x != 0, "v2: zero has no finite valuation");
  BigInt v = abs(x);
  int k = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++k;
  }
  return k;
}

}  // namespace weylkit
