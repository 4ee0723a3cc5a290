#include "test_oracles.hpp"

#include <stdexcept>

namespace oracles {

namespace {

using rootcensus::RootBits;
using rootcensus::RootPoset;

std::uint64_t antichains_from(const RootPoset& poset, int next, const RootBits& chosen) {
  if (next == poset.size()) return 1;
  std::uint64_t total = antichains_from(poset, next + 1, chosen);
  const RootBits comparable = poset.strictly_above[next] | poset.strictly_below[next];
  if ((comparable & chosen).none()) {
    RootBits with = chosen;
    with.set(next);
    total += antichains_from(poset, next + 1, with);
  }
  return total;
}

} // namespace

std::uint64_t antichain_count(const RootPoset& poset) {
  return antichains_from(poset, 0, RootBits{});
}

std::uint64_t point_count_complement(const rootcensus::Arrangement& arr, std::uint64_t q) {
  const std::size_t dim = static_cast<std::size_t>(arr.dim);
  for (const auto& normal : arr.normals)
    if (normal.size() != dim)
      throw std::invalid_argument("point count needs coordinate length == dim");

  std::vector<std::vector<std::uint64_t>> normals_mod;
  for (const auto& normal : arr.normals) {
    std::vector<std::uint64_t> row(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      auto r = static_cast<std::int64_t>(normal[j] % q);
      row[j] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
    }
    normals_mod.push_back(std::move(row));
  }

  std::vector<std::uint64_t> point(dim, 0);
  std::uint64_t good = 0;
  while (true) {
    bool avoids = true;
    for (const auto& row : normals_mod) {
      std::uint64_t dot = 0;
      for (std::size_t j = 0; j < dim; ++j) dot = (dot + row[j] * point[j]) % q;
      if (dot == 0) {
        avoids = false;
        break;
      }
    }
    if (avoids) ++good;

    std::size_t j = 0;
    while (j < dim && ++point[j] == q) point[j++] = 0;
    if (j == dim) break;
  }
  return good;
}

} // namespace oracles
