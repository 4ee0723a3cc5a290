#include <doctest.h>

#include <numeric>

#include "fixture_tables.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/invariants.hpp"

using namespace rootcensus;

TEST_CASE("exponents from the height partition") {
  CHECK(exponents(build_root_system(CartanType::parse("A2"))).e == std::vector<int>{1, 2});
  CHECK(exponents(build_root_system(CartanType::parse("B3"))).e ==
        std::vector<int>{1, 3, 5});
  CHECK(exponents(build_root_system(CartanType::parse("E8"))).e ==
        std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("derived invariants match the classical table") {
  for (const auto& fx : fixtures::classical_table()) {
    const RootSystem rs = build_root_system(CartanType::parse(fx.name));
    const ExponentVector ev = exponents(rs);
    CAPTURE(fx.name);
    CHECK(ev.e == fx.exponents);

    const int h = coxeter_number(ev);
    CHECK(h == fx.h);
    CHECK(h == rs.highest_root().height + 1);
    CHECK(weyl_order(ev) == BigInt(fx.weyl_order));
    CHECK(2 * rs.size() == rs.rank() * h);
    CHECK(std::accumulate(ev.e.begin(), ev.e.end(), 0) == rs.size());
    CHECK(ev.e.front() == 1);
    for (int i = 0; i < ev.size(); ++i)
      CHECK(h - ev.e[i] == ev.e[ev.size() - 1 - i]);

    CHECK(simple_length_census(rs) == std::pair{fx.n_long_simple, fx.n_short_simple});
    const GroupInvariants gi = group_invariants(rs, ev);
    CHECK(gi.n_long + gi.n_short == rs.rank());
  }
}

TEST_CASE("coxeter numbers of the named examples") {
  CHECK(coxeter_number(exponents(build_root_system(CartanType::parse("A2")))) == 3);
  CHECK(coxeter_number(exponents(build_root_system(CartanType::parse("G2")))) == 6);
  CHECK(coxeter_number(exponents(build_root_system(CartanType::parse("E8")))) == 30);
}

TEST_CASE("weyl orders of the named examples") {
  CHECK(weyl_order(exponents(build_root_system(CartanType::parse("A2")))) == 6);
  CHECK(weyl_order(exponents(build_root_system(CartanType::parse("B3")))) == 48);
  CHECK(weyl_order(exponents(build_root_system(CartanType::parse("E8")))) == 696729600);
}

TEST_CASE("simple length census of the named examples") {
  CHECK(simple_length_census(build_root_system(CartanType::parse("D4"))) == std::pair{4, 0});
  CHECK(simple_length_census(build_root_system(CartanType::parse("B4"))) == std::pair{3, 1});
  CHECK(simple_length_census(build_root_system(CartanType::parse("F4"))) == std::pair{2, 2});
}

TEST_CASE("a corrupted root system fails the exponent cross-checks") {
  RootSystem rs = build_root_system(CartanType::parse("B3"));
  rs.positive_roots.pop_back(); // drop the highest root
  rs.highest_root_index = rs.size() - 1;
  CHECK_THROWS_AS(exponents(rs), ConsistencyError);
}
