#pragma once

// Orchestration of the named verifications with machine-readable
// reporting: the twelve-row block-data table for E6 at odd q, the
// explicit order-3 element construction, the Sylow sweeps, torus and
// 2-adic identity suites, and the small-group sanity batch.
//
// Reports are plain records with a deterministic order; the structured
// rendering is one key=value line per record with a stable field order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/chevalley.hpp"
#include "weylkit/grouptool.hpp"
#include "weylkit/rootsys.hpp"
#include "weylkit/semisimple.hpp"
#include "weylkit/torus.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

enum class Verdict { Pass, Fail, Skipped, ExpectedFail, Excluded };

std::string verdictName(Verdict v);

struct ReportRecord {
  std::string check;     // stable check id
  std::string instance;  // parameters, e.g. "row=1 q=13"
  Verdict verdict = Verdict::Skipped;
  std::string claim;     // the statement verified, self-describing
  std::string detail;    // computed values / witnesses

  std::string textLine() const;
  std::string structuredLine() const;

  bool operator==(const ReportRecord&) const = default;
};

/// Inverse of structuredLine (nullopt on malformed input).
std::optional<ReportRecord> parseStructuredLine(const std::string& line);

/// Shared immutable context so expensive enumerations are built once.
class Workspace {
 public:
  const RootSystem& rootSystem(const std::string& label);
  const WeylGroup& weylGroup(const std::string& label);
  const ChevalleyBasis& chevalley(const std::string& label);
  const E6Elements& e6Elements();

 private:
  std::map<std::string, RootSystem> systems_;
  std::map<std::string, WeylGroup> groups_;
  std::map<std::string, ChevalleyBasis> bases_;
  std::optional<E6Elements> e6_;
};

struct HarnessConfig {
  std::vector<BigInt> qList{5, 7, 13, 17};
  int pMax = 100;          // prime sweep bound for the construction suite
  int twoAdicQMax = 999;   // odd q bound for the 2-adic sweeps
  std::string cacheDir;    // optional packed-enumeration cache
};

// ---- individual verification suites ---------------------------------------

/// The twelve-row table of quasi-isolated 2-block data for split E6 at odd
/// q: for each live row, centralizer rational type and component-group
/// orders, the minimal e-split Levi with its torus part and semisimple
/// rational type, the centralizer-in-Levi order, and the relative Weyl
/// group order (648/6/576/48/12/12/24/2/576/48/12/36).
std::vector<ReportRecord> verifyTable1(Workspace& ws, const BigInt& q);

/// gamma-stability of the order-3 element, the (p-1)s centrality
/// criterion mod 3, its centralizer type and stabilizer orders, and the
/// longest-element stability at q = 2 mod 3.
std::vector<ReportRecord> verifyConstruction(Workspace& ws, int pMax);

/// Acceptance checks 1 and 2: the order-192 section (wreath shape, torus
/// intersection, a4 centralization, gamma stability) and r(w_I)^2 =
/// (2 rho_I^vee)(-1) over all subsets of E6, A3 and D4.
std::vector<ReportRecord> verifySectionSuite(Workspace& ws);
std::vector<ReportRecord> verifySquareIdentitySuite(Workspace& ws);

/// The <m, n^{d^2}> sections for d = 1, 2 and the order-12 normalizer
/// fingerprint of the paired 2A2 Levi subsystem.
std::vector<ReportRecord> verifyNormalizerSuite(Workspace& ws);

/// Sylow-2 sweeps: split E6, twisted E6, A3, D5, E7 at the pinned q
/// values (plus the excluded triality form, reported as EXCLUDED).
std::vector<ReportRecord> verifyCabanesSweeps(Workspace& ws);

/// Torus order identities and the three-way det / invariant-factor /
/// cyclotomic consistency on pseudorandom twists.
std::vector<ReportRecord> verifyTorusIdentities(Workspace& ws);

/// 2-adic sweeps: v2(Phi_i(q)) >= v2(Phi_i(1)) and the A2 2-part identity
/// under q -> q^3.
std::vector<ReportRecord> verifyTwoAdic(int qMax);

/// Small-group stock: the two order-8 groups and their maximal abelian
/// normal subgroups, the C_a x C_a characteristic-subgroup instances, and
/// the unique-maximal <=> no-quadratic-coset equivalence over the zoo.
std::vector<ReportRecord> verifyGrouptoolSanity();

// ---- orchestration ---------------------------------------------------------

std::vector<std::string> allCheckIds();

struct RunResult {
  std::vector<ReportRecord> records;
  int exitCode = 0;  // 0 pass, 1 genuine failure, 2 usage error
};

/// Run the named checks (empty set = nothing, "all" handled by caller);
/// exit code 0 unless some record is a genuine FAIL.
RunResult runChecks(const std::vector<std::string>& checkIds, const HarnessConfig& cfg);

}  // namespace weylkit
