#pragma once

#include <cstdint>
#include <vector>

#include "rootcensus/cartan.hpp"
#include "rootcensus/numeric.hpp"
#include "rootcensus/polynomial.hpp"

namespace rootcensus {

/// A central hyperplane arrangement given by normal vectors with exact
/// integer coordinates. The normals live in coefficient space with the
/// symmetrized Cartan form as inner product; `dim` is the dimension of the
/// (sub)space the arrangement cuts, which can be smaller than the coordinate
/// length (restrictions to alpha-perp). Normals are canonicalized to
/// lowest-terms integer vectors with positive leading entry and deduplicated,
/// so no zero normals and no parallel pair survive construction.
struct Arrangement {
  int dim = 0;
  std::vector<std::vector<BigInt>> normals;

  int size() const { return static_cast<int>(normals.size()); }
};

/// Divides out the gcd and flips the sign so the first nonzero entry is
/// positive. Returns an empty vector for the zero vector.
std::vector<BigInt> canonical_normal(std::vector<BigInt> v);

/// The full Coxeter arrangement of rs: one hyperplane beta-perp per positive
/// root, in the rank-n coefficient space.
Arrangement coxeter_arrangement(const RootSystem& rs);

/// The restriction of the Coxeter arrangement to alpha-perp for the given
/// simple root: every other hyperplane H_beta is traded for its trace on
/// alpha-perp, realized by projecting beta onto alpha-perp under the Cartan
/// form; coincident traces are deduplicated. Lives in dimension n-1.
Arrangement restricted_arrangement(const RootSystem& rs, int simple_index);

/// The characteristic polynomial chi(t) = sum_X mu(X) t^{dim X} over the
/// intersection poset, Moebius values computed recursively from the ambient
/// space. All linear algebra is exact (fraction-free / rational elimination).
/// Caps: at most `max_hyperplanes` normals (bitmask bookkeeping) and
/// dimension <= max_dim; exceeding either is rejected with CapExceededError.
IntPolynomial characteristic_polynomial(const Arrangement& arr, int max_hyperplanes = 64,
                                        int max_dim = 5);

} // namespace rootcensus
