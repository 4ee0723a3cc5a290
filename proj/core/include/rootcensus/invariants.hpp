#pragma once

#include <utility>
#include <vector>

#include "rootcensus/cartan.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

/// The exponents e_1 <= ... <= e_n of the Weyl group, derived from the root
/// system itself (no baked-in tables). Invariants: e_1 = 1, the duality
/// h - e_i = e_{n+1-i} with h = e_n + 1, and sum e_i = |Phi+|.
struct ExponentVector {
  std::vector<int> e;

  int size() const { return static_cast<int>(e.size()); }
};

/// Numerical invariants the counting formulas consume.
struct GroupInvariants {
  int h = 0;          // Coxeter number, e_n + 1
  BigInt weyl_order;  // |W| = prod (1 + e_i)
  int n_long = 0;     // long simple roots
  int n_short = 0;    // short simple roots

  int n_class(LengthClass c) const { return c == LengthClass::Long ? n_long : n_short; }
};

/// Exponents as the conjugate (transpose) of the height partition
/// lambda_k = #{roots of height k}. Every ExponentVector invariant is
/// verified, plus e_n == height(highest root); violations throw
/// ConsistencyError since they can only mean the root generation is broken.
ExponentVector exponents(const RootSystem& rs);

/// e_n + 1.
int coxeter_number(const ExponentVector& ev);

/// prod (1 + e_i), exact.
BigInt weyl_order(const ExponentVector& ev);

/// (number of Long simples, number of Short simples).
std::pair<int, int> simple_length_census(const RootSystem& rs);

GroupInvariants group_invariants(const RootSystem& rs, const ExponentVector& ev);

} // namespace rootcensus
