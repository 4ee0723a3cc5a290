#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rootcensus/cartan.hpp"

namespace rootcensus {

/// A Weyl group element as a signed permutation of the positive-root index
/// space: image[k] = +-(j+1) means the element maps root k to +-root j.
/// Faithful, hashable, and cheap to compose; exactly what normalizer scans
/// need.
struct WeylGroupElement {
  std::vector<std::int32_t> image;

  int degree() const { return static_cast<int>(image.size()); }

  /// (*this) o other: apply `other` first.
  WeylGroupElement compose(const WeylGroupElement& other) const;

  friend bool operator==(const WeylGroupElement&, const WeylGroupElement&) = default;
};

/// The identity and the simple reflections of a root system, in index order.
WeylGroupElement weyl_identity(const RootSystem& rs);
WeylGroupElement simple_reflection_element(const RootSystem& rs, int i);

/// The full Weyl group, closed under composition starting from the simple
/// reflections, in a deterministic (BFS) order. The expected order
/// prod (1 + e_i) is computed first; if it exceeds `cap`, the call is
/// rejected with a CapExceededError carrying the required cap value.
std::vector<WeylGroupElement> generate_weyl_group(const RootSystem& rs,
                                                  std::uint64_t cap = 10'000);

/// |{w : w(alpha_i) = +-alpha_i}| / 2, i.e. the index [N(W_alpha):W_alpha]
/// of the rank-one parabolic inside its normalizer, computed by exhaustive
/// scan over an explicitly generated group.
std::int64_t normalizer_index_direct(std::span<const WeylGroupElement> group,
                                     const RootSystem& rs, int simple_index);

} // namespace rootcensus
