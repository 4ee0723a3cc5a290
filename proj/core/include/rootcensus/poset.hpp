#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rootcensus/cartan.hpp"

namespace rootcensus {

/// Largest positive-root count we ever index (E8 has 120).
inline constexpr int kMaxPositiveRoots = 128;

using RootBits = std::bitset<kMaxPositiveRoots>;

/// Strict weak ordering for RootBits, so ideals can live in ordered sets.
struct RootBitsLess {
  bool operator()(const RootBits& a, const RootBits& b) const {
    for (std::size_t i = kMaxPositiveRoots; i-- > 0;)
      if (a[i] != b[i]) return b[i];
    return false;
  }
};

/// beta <= gamma in the root poset iff gamma - beta has nonnegative
/// coefficients over the simple basis, i.e. componentwise on coeffs.
bool leq(const Root& beta, const Root& gamma);

/// The root poset of a root system: the componentwise order on positive
/// roots, with precomputed strict up/down sets and cover lists.
struct RootPoset {
  const RootSystem* rs = nullptr;
  std::vector<RootBits> strictly_below; // strictly_below[i] = {j : root_j < root_i}
  std::vector<RootBits> strictly_above;
  std::vector<std::vector<int>> covers; // covers[i] = elements immediately above i

  int size() const { return static_cast<int>(strictly_below.size()); }
};

RootPoset build_root_poset(const RootSystem& rs);

/// All cover pairs (lower, upper), lower-index major order. Computed by
/// generic transitive reduction; the classical characterization
/// "gamma - beta is simple" is a theorem we test, not an assumption.
std::vector<std::pair<int, int>> cover_relations(const RootPoset& poset);

/// A downward-closed subset of the positive-root index space.
struct OrderIdeal {
  RootBits members;

  bool contains(int i) const { return members.test(static_cast<std::size_t>(i)); }
  std::size_t count() const { return members.count(); }

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

/// {gamma : gamma <= beta}; always contains beta and is downward closed.
OrderIdeal principal_ideal(const RootPoset& poset, int root_index);

/// The ideal's intersection with the simple roots, as sorted simple indices.
/// For a principal ideal I(beta) this equals support(beta).
std::vector<int> ideal_members_in_delta(const RootPoset& poset, const OrderIdeal& ideal);

/// Visits every order ideal exactly once (the empty ideal and the full poset
/// included) in a deterministic order. Throws CapExceededError after
/// `max_ideals` emissions; the default keeps runaway enumerations on E7/E8
/// from melting the machine.
void enumerate_ideals(const RootPoset& poset,
                      const std::function<void(const OrderIdeal&)>& visit,
                      std::uint64_t max_ideals = 10'000'000);

/// Number of order ideals, via enumerate_ideals.
std::uint64_t count_ideals(const RootPoset& poset, std::uint64_t max_ideals = 10'000'000);

/// Index of the unique maximal element of a nonempty ideal, or nullopt if
/// the ideal is empty or has two or more maximal elements. When it returns
/// beta, the ideal equals principal_ideal(beta).
std::optional<int> unique_maximal_element(const RootPoset& poset, const OrderIdeal& ideal);

} // namespace rootcensus
