#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "fixture_tables.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/invariants.hpp"
#include "rootcensus/poset.hpp"
#include "test_oracles.hpp"

using namespace rootcensus;

namespace {

RootSystem make(const char* name) { return build_root_system(CartanType::parse(name)); }

std::vector<OrderIdeal> all_ideals(const RootPoset& poset) {
  std::vector<OrderIdeal> out;
  enumerate_ideals(poset, [&](const OrderIdeal& ideal) { out.push_back(ideal); });
  return out;
}

} // namespace

TEST_CASE("leq is the componentwise order") {
  const RootSystem b2 = make("B2");
  const Root& alpha1 = b2.positive_roots[0];
  const Root& e1 = b2.positive_roots[*b2.index_of({1, 1})];
  CHECK(leq(alpha1, e1));
  CHECK_FALSE(leq(e1, alpha1));

  const RootSystem a2 = make("A2");
  CHECK_FALSE(leq(a2.positive_roots[0], a2.positive_roots[1]));
  CHECK_FALSE(leq(a2.positive_roots[1], a2.positive_roots[0]));

  const RootSystem b3 = make("B3");
  for (const Root& r : b3.positive_roots) CHECK(leq(r, r));
}

TEST_CASE("cover relations of the rank-2 posets") {
  const RootSystem a2 = make("A2");
  const RootPoset pa2 = build_root_poset(a2);
  CHECK(cover_relations(pa2) == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  // G2 is a near-chain: both simples are covered by alpha1+alpha2, then a
  // 4-step ladder. Transitive reduction gives 5 cover pairs.
  const RootSystem g2 = make("G2");
  const RootPoset pg2 = build_root_poset(g2);
  CHECK(cover_relations(pg2) ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

TEST_CASE("covers coincide with simple-root differences") {
  for (const char* name : {"B3", "D4", "F4", "E6"}) {
    const RootSystem rs = make(name);
    const RootPoset poset = build_root_poset(rs);
    CAPTURE(name);
    for (auto [lo, hi] : cover_relations(poset)) {
      int height_diff = 0;
      bool nonneg = true;
      for (int k = 0; k < rs.rank(); ++k) {
        const int d = rs.positive_roots[hi].coeffs[k] - rs.positive_roots[lo].coeffs[k];
        nonneg = nonneg && d >= 0;
        height_diff += d;
      }
      CHECK(nonneg);
      CHECK(height_diff == 1);
    }
  }
}

TEST_CASE("principal ideals") {
  const RootSystem b2 = make("B2");
  const RootPoset poset = build_root_poset(b2);

  OrderIdeal full = principal_ideal(poset, b2.highest_root_index);
  CHECK(full.count() == static_cast<std::size_t>(b2.size()));

  for (int i = 0; i < b2.rank(); ++i) {
    OrderIdeal single = principal_ideal(poset, i);
    CHECK(single.count() == 1);
    CHECK(single.contains(i));
  }

  const int e1 = *b2.index_of({1, 1});
  OrderIdeal ideal = principal_ideal(poset, e1);
  CHECK(ideal.count() == 3);
  CHECK(ideal.contains(0));
  CHECK(ideal.contains(1));
  CHECK(ideal.contains(e1));
}

TEST_CASE("ideal intersection with the simples equals support") {
  const RootSystem b3 = make("B3");
  const RootPoset poset = build_root_poset(b3);

  CHECK(ideal_members_in_delta(poset, principal_ideal(poset, b3.highest_root_index)) ==
        std::vector<int>{0, 1, 2});
  CHECK(ideal_members_in_delta(poset, principal_ideal(poset, 1)) == std::vector<int>{1});

  for (int k = 0; k < b3.size(); ++k)
    CHECK(ideal_members_in_delta(poset, principal_ideal(poset, k)) ==
          support(b3.positive_roots[k]));
}

TEST_CASE("ideal enumeration counts, against the antichain oracle") {
  for (const auto& fx : fixtures::ideal_counts()) {
    const RootSystem rs = make(fx.name);
    const RootPoset poset = build_root_poset(rs);
    CAPTURE(fx.name);
    CHECK(count_ideals(poset) == static_cast<std::uint64_t>(fx.ideals));
    CHECK(oracles::antichain_count(poset) == static_cast<std::uint64_t>(fx.ideals));

    // W-Catalan product formula, a third route to the same number.
    const ExponentVector ev = exponents(rs);
    const int h = coxeter_number(ev);
    long long num = 1, den = 1;
    for (int e : ev.e) {
      num *= e + h + 1;
      den *= e + 1;
    }
    CHECK(num % den == 0);
    CHECK(num / den == fx.ideals);
  }
}

TEST_CASE("enumerated ideals are distinct, downward closed, deterministic") {
  const RootSystem b3 = make("B3");
  const RootPoset poset = build_root_poset(b3);
  const std::vector<OrderIdeal> first = all_ideals(poset);
  const std::vector<OrderIdeal> second = all_ideals(poset);
  CHECK(first == second);

  std::set<RootBits, RootBitsLess> distinct;
  bool saw_empty = false, saw_full = false;
  for (const OrderIdeal& ideal : first) {
    CHECK(distinct.insert(ideal.members).second);
    saw_empty = saw_empty || ideal.members.none();
    saw_full = saw_full || ideal.count() == static_cast<std::size_t>(b3.size());
    for (int i = 0; i < poset.size(); ++i)
      if (ideal.contains(i))
        CHECK((poset.strictly_below[i] & ~ideal.members).none());
  }
  CHECK(saw_empty);
  CHECK(saw_full);
}

TEST_CASE("enumeration cap aborts loudly") {
  const RootSystem b3 = make("B3");
  const RootPoset poset = build_root_poset(b3);
  CHECK_THROWS_AS(count_ideals(poset, 3), CapExceededError);
}

TEST_CASE("unique maximal element") {
  const RootSystem a2 = make("A2");
  const RootPoset poset = build_root_poset(a2);

  OrderIdeal both_simples;
  both_simples.members.set(0);
  both_simples.members.set(1);
  CHECK_FALSE(unique_maximal_element(poset, both_simples).has_value());
  CHECK_FALSE(unique_maximal_element(poset, OrderIdeal{}).has_value());

  const RootSystem b3 = make("B3");
  const RootPoset pb3 = build_root_poset(b3);
  for (int k = 0; k < b3.size(); ++k) {
    const auto top = unique_maximal_element(pb3, principal_ideal(pb3, k));
    REQUIRE(top.has_value());
    CHECK(*top == k);
  }
}

TEST_CASE("an ideal has a unique maximal element iff it is principal") {
  for (const char* name : {"A3", "B3", "D4", "G2"}) {
    const RootSystem rs = make(name);
    const RootPoset poset = build_root_poset(rs);
    CAPTURE(name);

    std::set<RootBits, RootBitsLess> principal;
    for (int k = 0; k < rs.size(); ++k)
      principal.insert(principal_ideal(poset, k).members);
    CHECK(principal.size() == static_cast<std::size_t>(rs.size())); // injectivity

    enumerate_ideals(poset, [&](const OrderIdeal& ideal) {
      const auto top = unique_maximal_element(poset, ideal);
      if (top.has_value()) {
        CHECK(ideal == principal_ideal(poset, *top));
      } else {
        CHECK(principal.count(ideal.members) == 0);
      }
    });
  }
}
