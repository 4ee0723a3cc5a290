#pragma once

#include <string>
#include <vector>

namespace rootcensus {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail; // populated on failure or skip
};

/// Runs the verification suite over every admissible type of rank <=
/// max_rank: census agreement across all counting routes, structural
/// invariants (|Phi+| = nh/2 = sum e_i, exponent duality, e_1 = 1, covers
/// are simple-root differences) and the proof-chain identity. With `deep`,
/// additionally cross-checks the two cited inputs against independently
/// generated objects for every type of rank <= 4 regardless of max_rank:
/// Weyl group orders, normalizer indices by stabilizer scan, restricted
/// characteristic polynomials by Moebius computation, and the
/// ideal-enumeration bijection. Checks whose caps would be exceeded are
/// reported as skipped, not failed.
std::vector<CheckResult> run_verification(int max_rank, bool deep);

} // namespace rootcensus
