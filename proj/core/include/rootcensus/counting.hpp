#pragma once

#include <utility>

#include "rootcensus/cartan.hpp"
#include "rootcensus/invariants.hpp"
#include "rootcensus/numeric.hpp"
#include "rootcensus/polynomial.hpp"

namespace rootcensus {

/// Brute-force counts of positive roots with full support, split by length.
struct FullSupportCounts {
  int total = 0;
  int n_long = 0;
  int n_short = 0;
};

/// Every route to the full-support count side by side: brute force,
/// the product formula and its long/short refinement, and the
/// normalizer-index/characteristic-polynomial expression. `agree` is true
/// iff all columns match pairwise, per class.
struct CensusReport {
  int total = 0;
  int long_count = 0;
  int short_count = 0;
  long long formula_total = 0;
  long long formula_long = 0;
  long long formula_short = 0;
  long long sommers_long = 0;
  long long sommers_short = 0; // 0 when the type has no short roots
  bool agree = false;
};

/// Counts beta in Phi+ with supp(beta) = Delta, split by length class.
FullSupportCounts brute_full_support_census(const RootSystem& rs);

/// n*h/|W| * prod_{i=2..n} (e_i - 1), evaluated as an exact rational. The
/// denominator always divides out; a non-integer result throws
/// ConsistencyError. The empty product at n = 1 is 1.
BigInt chapoton_count(const GroupInvariants& gi, const ExponentVector& ev);

/// The long/short refinement: n_l resp. n_s in place of n. The two values
/// sum to chapoton_count; integrality is enforced the same way.
std::pair<BigInt, BigInt> refined_counts(const GroupInvariants& gi, const ExponentVector& ev);

/// chi restricted to a simple-root hyperplane, by the product formula:
/// prod_{i=1..n-1} (t - e_i), degree n-1.
IntPolynomial restriction_charpoly_formula(const ExponentVector& ev);

/// [N(W_alpha):W_alpha] for alpha a simple root whose length class has
/// n_class members: (-1)^{n-1} chi(-1) / n_class, exact division enforced.
/// n_class = 0 is rejected.
BigInt normalizer_index_formula(const ExponentVector& ev, int n_class);

/// chi(h-1) / [N(W_alpha):W_alpha] for the given length class; counts order
/// ideals containing Delta whose unique maximal element has that class.
/// Rejects classes with no simple roots.
BigInt sommers_count(const ExponentVector& ev, const GroupInvariants& gi, LengthClass cls);

/// Verifies the three-step simplification
///   chi(h-1)/[N:W_alpha]
///     = n_c * prod_{i<n}(h-1-e_i) / prod_{i<n}(1+e_i)
///     = n_c * h * prod_{i>=2}(e_i-1) / |W|
/// as exact rationals. True iff all three expressions coincide.
bool proof_chain_check(const ExponentVector& ev, const GroupInvariants& gi, LengthClass cls);

/// Populates every CensusReport column for one root system.
CensusReport full_census(const RootSystem& rs);

} // namespace rootcensus
