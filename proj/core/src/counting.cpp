#include "rootcensus/counting.hpp"

#include <stdexcept>
#include <string>

#include "rootcensus/errors.hpp"

namespace rootcensus {

namespace {

// Exact division with an integrality gate: these formulas produce integers
// as a matter of theorem, so a remainder means the invariants are wrong.
BigInt exact_divide(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw ConsistencyError(std::string(what) + ": zero denominator");
  const BigRational q(num, den);
  if (boost::multiprecision::denominator(q) != 1)
    throw ConsistencyError(std::string(what) + ": non-integer value " + num.str() + "/" +
                           den.str());
  return boost::multiprecision::numerator(q);
}

// prod_{i=2..n} (e_i - 1); empty product (n = 1) is 1.
BigInt tail_product(const ExponentVector& ev) {
  BigInt p = 1;
  for (int i = 1; i < ev.size(); ++i) p *= (ev.e[i] - 1);
  return p;
}

BigInt scaled_count(const GroupInvariants& gi, const ExponentVector& ev, int n_class,
                    const char* what) {
  const BigInt num = BigInt(n_class) * gi.h * tail_product(ev);
  const BigInt c = exact_divide(num, gi.weyl_order, what);
  if (c < 0) throw ConsistencyError(std::string(what) + ": negative count");
  return c;
}

} // namespace

FullSupportCounts brute_full_support_census(const RootSystem& rs) {
  FullSupportCounts out;
  for (const Root& r : rs.positive_roots) {
    if (!has_full_support(r)) continue;
    ++out.total;
    if (r.length_class == LengthClass::Long)
      ++out.n_long;
    else
      ++out.n_short;
  }
  return out;
}

BigInt chapoton_count(const GroupInvariants& gi, const ExponentVector& ev) {
  return scaled_count(gi, ev, ev.size(), "chapoton_count");
}

std::pair<BigInt, BigInt> refined_counts(const GroupInvariants& gi, const ExponentVector& ev) {
  BigInt l = scaled_count(gi, ev, gi.n_long, "refined_counts(long)");
  BigInt s = scaled_count(gi, ev, gi.n_short, "refined_counts(short)");
  if (l + s != chapoton_count(gi, ev))
    throw ConsistencyError("refined counts do not sum to the total");
  return {std::move(l), std::move(s)};
}

IntPolynomial restriction_charpoly_formula(const ExponentVector& ev) {
  return IntPolynomial::from_roots(
      std::span<const int>(ev.e.data(), static_cast<std::size_t>(ev.size() - 1)));
}

BigInt normalizer_index_formula(const ExponentVector& ev, int n_class) {
  if (n_class < 1)
    throw std::invalid_argument(
        "normalizer_index_formula: the length class has no simple roots");
  const int n = ev.size();
  BigInt value = restriction_charpoly_formula(ev).eval(-1);
  if ((n - 1) % 2 != 0) value = -value;
  const BigInt idx = exact_divide(value, n_class, "normalizer_index_formula");
  if (idx < 1) throw ConsistencyError("normalizer index must be positive");
  return idx;
}

BigInt sommers_count(const ExponentVector& ev, const GroupInvariants& gi, LengthClass cls) {
  const int n_class = gi.n_class(cls);
  if (n_class < 1)
    throw std::invalid_argument("sommers_count: the length class has no simple roots");
  const BigInt idx = normalizer_index_formula(ev, n_class);
  const BigInt value = restriction_charpoly_formula(ev).eval(gi.h - 1);
  return exact_divide(value, idx, "sommers_count");
}

bool proof_chain_check(const ExponentVector& ev, const GroupInvariants& gi, LengthClass cls) {
  const int n_class = gi.n_class(cls);
  if (n_class < 1) return false;
  const int n = ev.size();
  const int h = gi.h;

  const BigRational first(sommers_count(ev, gi, cls));

  BigInt num = n_class, den = 1;
  for (int i = 0; i + 1 < n; ++i) {
    num *= (h - 1 - ev.e[i]);
    den *= (1 + ev.e[i]);
  }
  const BigRational second(num, den);

  const BigRational third(BigInt(n_class) * h * tail_product(ev), gi.weyl_order);

  return first == second && second == third;
}

CensusReport full_census(const RootSystem& rs) {
  const ExponentVector ev = exponents(rs);
  const GroupInvariants gi = group_invariants(rs, ev);

  CensusReport rep;
  const FullSupportCounts brute = brute_full_support_census(rs);
  rep.total = brute.total;
  rep.long_count = brute.n_long;
  rep.short_count = brute.n_short;

  rep.formula_total = static_cast<long long>(chapoton_count(gi, ev));
  const auto [fl, fs] = refined_counts(gi, ev);
  rep.formula_long = static_cast<long long>(fl);
  rep.formula_short = static_cast<long long>(fs);

  // An empty length class contributes no ideals at all, so its count is 0;
  // sommers_count itself rejects empty classes.
  rep.sommers_long =
      gi.n_long > 0 ? static_cast<long long>(sommers_count(ev, gi, LengthClass::Long)) : 0;
  rep.sommers_short =
      gi.n_short > 0 ? static_cast<long long>(sommers_count(ev, gi, LengthClass::Short)) : 0;

  rep.agree = rep.total == rep.long_count + rep.short_count &&
              rep.formula_total == rep.total && rep.formula_long == rep.long_count &&
              rep.formula_short == rep.short_count && rep.sommers_long == rep.long_count &&
              rep.sommers_short == rep.short_count;
  return rep;
}

} // namespace rootcensus
