#include "weylkit/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkit {

BigInt CyclotomicOrder::evaluate(const BigInt& q) const {
  BigInt r = 1;
  for (int i = 0; i < qExponent; ++i) r *= q;
  for (const auto& [d, a] : mult) {
    BigInt v = zpolyEval(cyclotomic(d), q);
    for (int i = 0; i < a; ++i) r *= v;
  }
  return r;
}

std::string CyclotomicOrder::str() const {
  std::string s;
  if (qExponent) s = "q^" + std::to_string(qExponent);
  for (const auto& [d, a] : mult) {
    if (!s.empty()) s += ".";
    s += "Phi" + std::to_string(d);
    if (a != 1) s += "^" + std::to_string(a);
  }
  if (s.empty()) s = "1";
  return s;
}

int FrobeniusTwist::e() const {
  if (q % 2 == 0 || q < 3) throw std::invalid_argument("q must be odd and >= 3");
  return q % 4 == 1 ? 1 : 2;
}

FrobeniusTwist FrobeniusTwist::split(const RootSystem& rs, const BigInt& q) {
  return withMatrix(rs, IntMat::identity(rs.rank()), q, 1);
}

FrobeniusTwist FrobeniusTwist::withMatrix(const RootSystem& rs, IntMat m, const BigInt& q, int epsilon) {
  FrobeniusTwist t;
  t.rs = &rs;
  t.M = std::move(m);
  t.q = q;
  t.epsilon = epsilon;
  wk_check(t.M.order(2000) > 0, "twist matrix must have finite order");
  (void)t.e();
  return t;
}

FiniteTorus finiteTorus(const FrobeniusTwist& twist) {
  const int n = twist.M.size();
  BigMat a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = twist.q * twist.M(i, j) - (i == j ? 1 : 0);

  SmithForm s = smithNormalForm(a);
  FiniteTorus t;
  t.twist = twist;
  t.U = s.U;
  t.Uinv = s.Uinv;
  t.invariantFactors = s.diag;
  BigInt prod = 1;
  for (const BigInt& d : t.invariantFactors) {
    wk_check(d > 0, "q*M - I must be nonsingular");
    prod *= d;
  }
  BigInt det = bigDet(a);
  wk_check(prod == abs(det), "invariant factor product != |det(qM - I)|");
  return t;
}

BigInt FiniteTorus::order() const {
  BigInt p = 1;
  for (const BigInt& d : invariantFactors) p *= d;
  return p;
}

CyclotomicOrder polynomialOrder(const IntMat& M) {
  const int n = M.size();
  int ord = M.order(2000);
  wk_check(ord > 0, "polynomialOrder: matrix of infinite order");

  CyclotomicOrder out;
  int dimLeft = n;
  for (int d = 1; d <= ord && dimLeft > 0; ++d) {
    if (ord % d != 0) continue;
    // multiplicity of Phi_d = dim ker Phi_d(M) / phi(d)
    const ZPoly& phi = cyclotomic(d);
    BigMat val(n, std::vector<BigInt>(n, 0));
    IntMat pw = IntMat::identity(n);
    for (size_t k = 0; k < phi.size(); ++k) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) val[i][j] += phi[k] * pw(i, j);
      if (k + 1 < phi.size()) pw = pw * M;
    }
    int kdim = n - integerRank(val);
    if (kdim == 0) continue;
    int phid = static_cast<int>(phi.size()) - 1;
    wk_check(kdim % phid == 0, "kernel dimension not a multiple of phi(d)");
    out.mult[d] = kdim / phid;
    dimLeft -= kdim;
  }
  wk_check(dimLeft == 0, "characteristic polynomial has a non-cyclotomic factor");
  return out;
}

CyclotomicOrder polynomialOrderOnSublattice(const IntMat& M,
                                            const std::vector<std::vector<BigInt>>& basis) {
  const int n = M.size();
  const int k = static_cast<int>(basis.size());
  wk_check(k > 0, "empty sublattice basis");
  // express M*b_j in the basis: solve B x = M b_j by elimination over Q
  // (basis assumed saturated and M-stable); result must be integral
  BigMat B(n, std::vector<BigInt>(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) B[i][j] = basis[j][i];

  IntMat R(k);
  for (int j = 0; j < k; ++j) {
    std::vector<BigInt> rhs(n, 0);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) rhs[i] += M(i, t) * basis[j][t];
    // Gaussian elimination with rational bookkeeping via cross-multiplied
    // integer rows
    BigMat aug(n, std::vector<BigInt>(k + 1));
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < k; ++c) aug[i][c] = B[i][c];
      aug[i][k] = rhs[i];
    }
    int row = 0;
    std::vector<int> pivotCol;
    for (int c = 0; c < k && row < n; ++c) {
      int p = -1;
      for (int i = row; i < n; ++i)
        if (aug[i][c] != 0) { p = i; break; }
      if (p < 0) continue;
      std::swap(aug[row], aug[p]);
      for (int i = 0; i < n; ++i) {
        if (i == row || aug[i][c] == 0) continue;
        BigInt a = aug[i][c], b = aug[row][c];
        for (int t = 0; t <= k; ++t) aug[i][t] = aug[i][t] * b - aug[row][t] * a;
      }
      pivotCol.push_back(c);
      ++row;
    }
    wk_check(static_cast<int>(pivotCol.size()) == k, "sublattice basis not independent");
    for (int i = row; i < n; ++i) wk_check(aug[i][k] == 0, "sublattice not M-stable");
    for (int r2 = 0; r2 < k; ++r2) {
      int c = pivotCol[r2];
      wk_check(aug[r2][k] % aug[r2][c] == 0, "restriction is not integral");
      BigInt v = aug[r2][k] / aug[r2][c];
      R(r2, j) = static_cast<int64_t>(v);
    }
  }
  return polynomialOrder(R);
}

GroupOrderInfo groupOrder(const RootSystem& rs, uint64_t enumCap) {
  GroupOrderInfo out;
  uint64_t predicted = 1;
  for (const auto& c : rs.components()) predicted *= weylOrderOf(c);

  if (rs.irreducible() && rs.components()[0].series == Series::E && rs.components()[0].rank == 8) {
    out.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
  } else if (predicted <= enumCap) {
    std::vector<uint64_t> dist;
    if (predicted <= 1'000'000) {
      WeylGroup W = WeylGroup::enumerate(rs, enumCap);
      dist = W.lengthDistribution();
    } else {
      PackedWeylEnumeration en = enumeratePacked(rs, enumCap);
      dist = en.layerSizes;
    }
    // factor the Poincare polynomial into cyclotomics, then recover the
    // degree multiset from divisor counts
    ZPoly p(dist.size());
    for (size_t i = 0; i < dist.size(); ++i) p[i] = dist[i];
    const int lmax = static_cast<int>(dist.size());  // degree bound
    std::vector<int> e(lmax + 2, 0);
    for (int d = 2; d <= lmax + 1; ++d) {
      while (zpolyDivides(cyclotomic(d), p)) {
        p = zpolyDivExact(p, cyclotomic(d));
        ++e[d];
      }
    }
    wk_check(p.size() == 1 && p[0] == 1, "Poincare polynomial not a product of cyclotomics");
    std::vector<int> count(lmax + 2, 0);
    for (int d = lmax + 1; d >= 2; --d) {
      int c = e[d];
      for (int k = 2; k * d <= lmax + 1; ++k) c -= count[k * d];
      wk_check(c >= 0, "degree recovery failed");
      count[d] = c;
    }
    for (int d = 2; d <= lmax + 1; ++d)
      for (int i = 0; i < count[d]; ++i) out.degrees.push_back(d);
    std::sort(out.degrees.begin(), out.degrees.end());
    wk_check(static_cast<int>(out.degrees.size()) == rs.rank(), "degree count != rank");
    uint64_t prodCheck = 1;
    for (int d : out.degrees) prodCheck *= static_cast<uint64_t>(d);
    wk_check(prodCheck == predicted, "degree product != |W|");
  } else {
    throw std::invalid_argument("group order enumeration above cap");
  }

  // q^{|Phi+|} * prod_i (q^{d_i} - 1), with q^d - 1 = prod_{e | d} Phi_e
  out.order.qExponent = rs.positiveCount();
  for (int d : out.degrees)
    for (int e2 = 1; e2 <= d; ++e2)
      if (d % e2 == 0) ++out.order.mult[e2];
  return out;
}

CyclotomicOrder ennola(const CyclotomicOrder& c) {
  CyclotomicOrder r;
  r.qExponent = c.qExponent;
  for (const auto& [d, a] : c.mult) {
    int nd;
    if (d % 2 == 1)
      nd = 2 * d;
    else if (d % 4 == 2)
      nd = d / 2;
    else
      nd = d;
    r.mult[nd] += a;
  }
  return r;
}

TwoAdicReport twoAdicChecks(int64_t qmin, int64_t qmax, int iMax) {
  TwoAdicReport rep;
  for (int64_t q = qmin | 1; q <= qmax; q += 2) {
    BigInt Q = q;
    for (int i = 2; i <= iMax; ++i) {
      BigInt atQ = zpolyEval(cyclotomic(i), Q);
      BigInt at1 = zpolyEval(cyclotomic(i), 1);
      ++rep.checksRun;
      if (v2(atQ) < v2(at1))
        rep.failures.push_back("Phi_" + std::to_string(i) + "(" + std::to_string(q) +
                               ") has smaller 2-part than Phi_" + std::to_string(i) + "(1)");
    }
    // |A2(q)| = q^3 (q^2-1)(q^3-1); its 2-part must be unchanged at q^3
    auto a2TwoPart = [](const BigInt& x) {
      BigInt n = (x * x - 1) * (x * x * x - 1);
      return v2(n);
    };
    ++rep.checksRun;
    if (a2TwoPart(Q) != a2TwoPart(Q * Q * Q))
      rep.failures.push_back("|A2(q^3)|_2 != |A2(q)|_2 at q=" + std::to_string(q));
  }
  return rep;
}

BigMat inducedAction(const FiniteTorus& t, const IntMat& g) {
  if (!(g * t.twist.M == t.twist.M * g))
    throw std::invalid_argument("action does not commute with the twist");
  const int n = g.size();
  BigMat b = bigMul(bigMul(t.U, toBig(g)), t.Uinv);
  // well-defined on the cyclic coordinates: d_i | b_ij * d_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      wk_check((b[i][j] * t.invariantFactors[j]) % t.invariantFactors[i] == 0,
               "induced action not well-defined");
      b[i][j] %= t.invariantFactors[i];
      if (b[i][j] < 0) b[i][j] += t.invariantFactors[i];
    }
  return b;
}

bool annihilatesTwoPart(const FiniteTorus& t, const BigMat& action) {
  const int n = static_cast<int>(t.invariantFactors.size());
  for (int j = 0; j < n; ++j) {
    int e2 = v2(t.invariantFactors[j]);
    if (e2 == 0) continue;
    BigInt gen = t.invariantFactors[j] >> e2;  // generator of the 2-part of factor j
    for (int i = 0; i < n; ++i) {
      BigInt img = action[i][j] * gen % t.invariantFactors[i];
      if (img != 0) return false;
    }
  }
  return true;
}

}  // namespace weylkit
