#include "rootcensus/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "rootcensus/errors.hpp"

namespace rootcensus {

namespace {

using RationalRow = std::vector<BigRational>;

// Reduced row echelon basis of a rational row space, pivots normalized to 1
// and cleared above. Unique for the row space, hence usable as a canonical
// form. Rows stay sorted by pivot column.
class RowSpace {
public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the basis; returns false (and leaves the basis
  // unchanged) when v already lies in the span.
  bool insert(RationalRow v) {
    reduce(v);
    std::size_t p = pivot_of(v);
    if (p == width_) return false;
    const BigRational lead = v[p];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_)
      if (row[p] != 0) {
        const BigRational f = row[p];
        for (std::size_t j = 0; j < width_; ++j) row[j] -= f * v[j];
      }
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(),
              [](const RationalRow& a, const RationalRow& b) {
                return pivot_of(a) < pivot_of(b);
              });
    return true;
  }

  bool contains(RationalRow v) const {
    reduce(v);
    return pivot_of(v) == width_;
  }

private:
  static std::size_t pivot_of(const RationalRow& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) return j;
    return v.size();
  }

  void reduce(RationalRow& v) const {
    for (const auto& row : rows_) {
      const std::size_t p = pivot_of(row);
      if (v[p] != 0) {
        const BigRational f = v[p];
        for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
      }
    }
  }

  std::size_t width_;
  std::vector<RationalRow> rows_;
};

RationalRow to_rational(const std::vector<BigInt>& v) {
  RationalRow out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = BigRational(v[j]);
  return out;
}

// One element of the intersection poset. An element is determined by the set
// of hyperplanes containing it (`mask`), because it equals the intersection
// of exactly those.
struct LatticeElement {
  RowSpace span;       // span of the normals of all hyperplanes through it
  std::uint64_t mask = 0;
  int codim = 0;
  BigInt mu = 0;
};

} // namespace

std::vector<BigInt> canonical_normal(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return {};
  for (BigInt& x : v) x /= g;
  for (const BigInt& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (BigInt& y : v) y = -y;
    break;
  }
  return v;
}

Arrangement coxeter_arrangement(const RootSystem& rs) {
  Arrangement arr;
  arr.dim = rs.rank();
  std::set<std::vector<BigInt>> dedup;
  for (const Root& r : rs.positive_roots) {
    std::vector<BigInt> v(r.coeffs.begin(), r.coeffs.end());
    if (auto c = canonical_normal(std::move(v)); !c.empty() && dedup.insert(c).second)
      arr.normals.push_back(std::move(c));
  }
  return arr;
}

Arrangement restricted_arrangement(const RootSystem& rs, int simple_index) {
  const int n = rs.rank();
  const CartanMatrix& cm = rs.cartan;
  const std::vector<int>& alpha = rs.positive_roots[simple_index].coeffs;

  // (u, v) under the symmetrized form, exact.
  auto form = [&](const std::vector<int>& u, const std::vector<int>& v) {
    long long acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += static_cast<long long>(u[i]) * cm.gram(i, j) * v[j];
    return acc;
  };
  const long long alpha_norm = form(alpha, alpha);

  Arrangement arr;
  arr.dim = n - 1;
  std::set<std::vector<BigInt>> dedup;
  for (int k = 0; k < rs.size(); ++k) {
    if (k == simple_index) continue; // H_alpha itself is the ambient space
    const std::vector<int>& beta = rs.positive_roots[k].coeffs;
    const long long pairing = form(beta, alpha);
    // (alpha,alpha)*beta - (beta,alpha)*alpha: the projection onto
    // alpha-perp, scaled to stay integral.
    std::vector<BigInt> proj(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      proj[static_cast<std::size_t>(j)] = alpha_norm * beta[j] - pairing * alpha[j];
    if (auto c = canonical_normal(std::move(proj)); !c.empty() && dedup.insert(c).second)
      arr.normals.push_back(std::move(c));
  }
  return arr;
}

IntPolynomial characteristic_polynomial(const Arrangement& arr, int max_hyperplanes,
                                        int max_dim) {
  const int m = arr.size();
  if (m > max_hyperplanes || max_hyperplanes > 64)
    throw CapExceededError("arrangement has " + std::to_string(m) +
                               " hyperplanes, above the supported cap",
                           static_cast<std::uint64_t>(m));
  if (arr.dim > max_dim)
    throw CapExceededError("arrangement dimension " + std::to_string(arr.dim) +
                               " is above the supported cap",
                           static_cast<std::uint64_t>(arr.dim));
  if (m == 0) {
    std::vector<BigInt> c(static_cast<std::size_t>(arr.dim) + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c)); // t^dim: only the ambient space
  }

  const std::size_t width = arr.normals[0].size();
  std::vector<RationalRow> normals;
  normals.reserve(static_cast<std::size_t>(m));
  for (const auto& v : arr.normals) {
    if (v.size() != width) throw ConsistencyError("ragged normal vectors");
    normals.push_back(to_rational(v));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      RowSpace line(width);
      line.insert(normals[static_cast<std::size_t>(i)]);
      if (line.contains(normals[static_cast<std::size_t>(j)]))
        throw ConsistencyError("parallel normals survived deduplication");
    }

  // Build the intersection poset breadth-first by codimension; elements are
  // keyed by their containing-hyperplane mask.
  std::map<std::uint64_t, LatticeElement> lattice;
  {
    LatticeElement ambient{RowSpace(width), 0, 0, 0};
    lattice.emplace(0, std::move(ambient));
  }
  std::vector<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : frontier) {
      for (int j = 0; j < m; ++j) {
        const LatticeElement& x = lattice.at(key); // re-fetch: map may grow
        if (x.mask & (1ull << j)) continue;
        RowSpace extended = x.span;
        if (!extended.insert(normals[static_cast<std::size_t>(j)]))
          throw ConsistencyError("mask bookkeeping out of sync with spans");
        std::uint64_t mask = 0;
        for (int k = 0; k < m; ++k)
          if (extended.contains(normals[static_cast<std::size_t>(k)])) mask |= 1ull << k;
        if (lattice.contains(mask)) continue;
        if (extended.rank() > arr.dim)
          throw ConsistencyError("intersection codimension exceeds the ambient dimension");
        LatticeElement elem{std::move(extended), mask, 0, 0};
        elem.codim = elem.span.rank();
        lattice.emplace(mask, std::move(elem));
        next.push_back(mask);
      }
    }
    frontier = std::move(next);
  }

  // Moebius values, top down: mu(ambient) = 1 and each element balances
  // everything strictly above it (smaller mask = larger subspace).
  std::vector<LatticeElement*> by_codim;
  for (auto& [mask, elem] : lattice) by_codim.push_back(&elem);
  std::sort(by_codim.begin(), by_codim.end(),
            [](const LatticeElement* a, const LatticeElement* b) {
              if (a->codim != b->codim) return a->codim < b->codim;
              return a->mask < b->mask;
            });
  for (LatticeElement* x : by_codim) {
    if (x->codim == 0) {
      x->mu = 1;
      continue;
    }
    BigInt acc = 0;
    for (const LatticeElement* y : by_codim) {
      if (y == x) break; // sorted by codim: everything above x comes first
      if (y->mask != x->mask && (y->mask & x->mask) == y->mask) acc += y->mu;
    }
    x->mu = -acc;
  }

  std::vector<BigInt> coeffs(static_cast<std::size_t>(arr.dim) + 1, 0);
  for (const LatticeElement* x : by_codim)
    coeffs[static_cast<std::size_t>(arr.dim - x->codim)] += x->mu;
  return IntPolynomial(std::move(coeffs));
}

} // namespace rootcensus
