#include "rootcensus/poset.hpp"

#include <string>

#include "rootcensus/errors.hpp"

namespace rootcensus {

bool leq(const Root& beta, const Root& gamma) {
  const std::size_t n = beta.coeffs.size();
  for (std::size_t k = 0; k < n; ++k)
    if (beta.coeffs[k] > gamma.coeffs[k]) return false;
  return true;
}

RootPoset build_root_poset(const RootSystem& rs) {
  const int m = rs.size();
  if (m > kMaxPositiveRoots)
    throw CapExceededError("root poset larger than the supported index space",
                           static_cast<std::uint64_t>(m));
  RootPoset p;
  p.rs = &rs;
  p.strictly_below.assign(m, {});
  p.strictly_above.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (leq(rs.positive_roots[i], rs.positive_roots[j])) {
        p.strictly_above[i].set(j);
        p.strictly_below[j].set(i);
      }
    }

  p.covers.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.strictly_above[i].test(j) && (p.strictly_above[i] & p.strictly_below[j]).none())
        p.covers[i].push_back(j);
  return p;
}

std::vector<std::pair<int, int>> cover_relations(const RootPoset& poset) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < poset.size(); ++i)
    for (int j : poset.covers[i]) out.emplace_back(i, j);
  return out;
}

OrderIdeal principal_ideal(const RootPoset& poset, int root_index) {
  OrderIdeal ideal;
  ideal.members = poset.strictly_below[root_index];
  ideal.members.set(root_index);
  return ideal;
}

std::vector<int> ideal_members_in_delta(const RootPoset& poset, const OrderIdeal& ideal) {
  std::vector<int> out;
  const int n = poset.rs->rank();
  for (int i = 0; i < n; ++i)
    if (ideal.contains(i)) out.push_back(i); // simple alpha_i sits at root index i
  return out;
}

namespace {

struct IdealEnumerator {
  const RootPoset& poset;
  const std::function<void(const OrderIdeal&)>& visit;
  std::uint64_t cap;
  std::uint64_t emitted = 0;

  // Root indices ascend a linear extension (sorted by height), so when
  // element k is decided everything below it has been decided already.
  void recurse(int k, OrderIdeal& current) {
    if (k == poset.size()) {
      if (emitted == cap)
        throw CapExceededError("order-ideal enumeration exceeded the cap of " +
                                   std::to_string(cap) + " ideals",
                               cap);
      ++emitted;
      visit(current);
      return;
    }
    recurse(k + 1, current);
    if ((poset.strictly_below[k] & ~current.members).none()) {
      current.members.set(k);
      recurse(k + 1, current);
      current.members.reset(k);
    }
  }
};

} // namespace

void enumerate_ideals(const RootPoset& poset,
                      const std::function<void(const OrderIdeal&)>& visit,
                      std::uint64_t max_ideals) {
  IdealEnumerator e{poset, visit, max_ideals};
  OrderIdeal scratch;
  e.recurse(0, scratch);
}

std::uint64_t count_ideals(const RootPoset& poset, std::uint64_t max_ideals) {
  std::uint64_t n = 0;
  enumerate_ideals(poset, [&n](const OrderIdeal&) { ++n; }, max_ideals);
  return n;
}

std::optional<int> unique_maximal_element(const RootPoset& poset, const OrderIdeal& ideal) {
  std::optional<int> found;
  for (int i = 0; i < poset.size(); ++i) {
    if (!ideal.contains(i)) continue;
    if ((poset.strictly_above[i] & ideal.members).any()) continue; // not maximal
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

} // namespace rootcensus
