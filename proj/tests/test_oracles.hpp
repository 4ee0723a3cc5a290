#pragma once

// Independent oracles used only by tests. Each one recomputes a quantity the
// library produces, along a different route, so the two can disagree.

#include <cstdint>
#include <vector>

#include "rootcensus/arrangement.hpp"
#include "rootcensus/poset.hpp"

namespace oracles {

// Number of antichains of the root poset, by DFS over subsets of pairwise
// incomparable elements. Ideals biject with antichains (take the maximal
// elements), so this must match count_ideals without sharing any code with
// the ideal enumerator.
std::uint64_t antichain_count(const rootcensus::RootPoset& poset);

// Number of points of F_q^dim avoiding every hyperplane of a full-dimension
// arrangement (coordinate length == dim). For a good prime this equals
// chi(q) by finite-field counting, giving the Moebius machinery a check that
// bypasses the intersection poset entirely.
std::uint64_t point_count_complement(const rootcensus::Arrangement& arr, std::uint64_t q);

} // namespace oracles
