#include "rootcensus/weyl.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>

#include "rootcensus/errors.hpp"
#include "rootcensus/invariants.hpp"

namespace rootcensus {

WeylGroupElement WeylGroupElement::compose(const WeylGroupElement& other) const {
  WeylGroupElement out;
  out.image.resize(other.image.size());
  for (std::size_t k = 0; k < other.image.size(); ++k) {
    const std::int32_t t = other.image[k];
    const std::int32_t u = image[static_cast<std::size_t>(std::abs(t)) - 1];
    out.image[k] = t < 0 ? -u : u;
  }
  return out;
}

WeylGroupElement weyl_identity(const RootSystem& rs) {
  WeylGroupElement e;
  e.image.resize(static_cast<std::size_t>(rs.size()));
  for (int k = 0; k < rs.size(); ++k) e.image[static_cast<std::size_t>(k)] = k + 1;
  return e;
}

WeylGroupElement simple_reflection_element(const RootSystem& rs, int i) {
  WeylGroupElement s;
  s.image.resize(static_cast<std::size_t>(rs.size()));
  for (int k = 0; k < rs.size(); ++k) {
    std::vector<int> r = rs.reflect(rs.positive_roots[k].coeffs, i);
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) {
      auto idx = rs.index_of(r);
      if (!idx) throw ConsistencyError("simple reflection left the positive-root set");
      s.image[static_cast<std::size_t>(k)] = *idx + 1;
    } else {
      // s_i sends only alpha_i outside Phi+, to -alpha_i.
      if (k != i) throw ConsistencyError("simple reflection negated a non-simple root");
      s.image[static_cast<std::size_t>(k)] = -(i + 1);
    }
  }
  return s;
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

std::vector<WeylGroupElement> generate_weyl_group(const RootSystem& rs, std::uint64_t cap) {
  const BigInt expected = weyl_order(exponents(rs));
  if (expected > cap)
    throw CapExceededError("Weyl group of " + rs.type.name() + " has order " + expected.str() +
                               "; raise the cap to at least that",
                           static_cast<std::uint64_t>(expected));

  std::vector<WeylGroupElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection_element(rs, i));

  std::vector<WeylGroupElement> elements{weyl_identity(rs)};
  std::unordered_set<std::vector<std::int32_t>, ImageHash> seen{elements[0].image};
  std::deque<std::size_t> frontier{0};

  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    for (const WeylGroupElement& s : gens) {
      WeylGroupElement next = elements[at].compose(s);
      if (seen.insert(next.image).second) {
        elements.push_back(std::move(next));
        frontier.push_back(elements.size() - 1);
      }
    }
  }

  if (BigInt(elements.size()) != expected)
    throw ConsistencyError("generated Weyl group has order " +
                           std::to_string(elements.size()) + ", expected " + expected.str());
  return elements;
}

std::int64_t normalizer_index_direct(std::span<const WeylGroupElement> group,
                                     const RootSystem& rs, int simple_index) {
  if (group.empty() || group.front().degree() != rs.size())
    throw ConsistencyError("group does not act on this root system's index space");
  std::int64_t stabilizer = 0;
  for (const WeylGroupElement& w : group)
    if (std::abs(w.image[static_cast<std::size_t>(simple_index)]) == simple_index + 1)
      ++stabilizer;
  if (stabilizer % 2 != 0)
    throw ConsistencyError("pair stabilizer has odd order; group generation is broken");
  return stabilizer / 2;
}

} // namespace rootcensus
