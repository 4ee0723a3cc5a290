#include "rootcensus/invariants.hpp"

#include <algorithm>
#include <string>

#include "rootcensus/errors.hpp"

namespace rootcensus {

ExponentVector exponents(const RootSystem& rs) {
  const int n = rs.rank();
  const int top_height = rs.highest_root().height;

  // lambda_k = number of roots of height k, k = 1..top_height.
  std::vector<int> lambda(top_height + 1, 0);
  for (const Root& r : rs.positive_roots) lambda[r.height] += 1;

  if (lambda[1] != n)
    throw ConsistencyError("height partition does not start with n simple roots");
  for (int k = 1; k < top_height; ++k)
    if (lambda[k + 1] > lambda[k] || lambda[k + 1] == 0)
      throw ConsistencyError("root heights do not form a partition");

  // Conjugate partition, read off smallest-first.
  ExponentVector ev;
  ev.e.resize(n);
  for (int m = 1; m <= n; ++m) {
    int count = 0;
    for (int k = 1; k <= top_height; ++k)
      if (lambda[k] >= m) ++count;
    ev.e[n - m] = count;
  }

  if (ev.e.front() != 1)
    throw ConsistencyError("smallest exponent is not 1");
  if (ev.e.back() != top_height)
    throw ConsistencyError("largest exponent disagrees with the highest root's height");
  const int h = ev.e.back() + 1;
  for (int i = 0; i < n; ++i)
    if (h - ev.e[i] != ev.e[n - 1 - i])
      throw ConsistencyError("exponent duality h - e_i = e_{n+1-i} fails for " +
                             rs.type.name());
  int sum = 0;
  for (int e : ev.e) sum += e;
  if (sum != rs.size())
    throw ConsistencyError("sum of exponents differs from the number of positive roots");

  return ev;
}

int coxeter_number(const ExponentVector& ev) { return ev.e.back() + 1; }

BigInt weyl_order(const ExponentVector& ev) {
  BigInt w = 1;
  for (int e : ev.e) w *= (1 + e);
  return w;
}

std::pair<int, int> simple_length_census(const RootSystem& rs) {
  int n_long = 0, n_short = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.positive_roots[i].length_class == LengthClass::Long)
      ++n_long;
    else
      ++n_short;
  }
  return {n_long, n_short};
}

GroupInvariants group_invariants(const RootSystem& rs, const ExponentVector& ev) {
  GroupInvariants gi;
  gi.h = coxeter_number(ev);
  gi.weyl_order = weyl_order(ev);
  std::tie(gi.n_long, gi.n_short) = simple_length_census(rs);
  return gi;
}

} // namespace rootcensus
