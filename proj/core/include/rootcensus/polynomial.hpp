#pragma once

#include <span>
#include <string>
#include <vector>

#include "rootcensus/numeric.hpp"

namespace rootcensus {

/// Dense integer polynomial, coefficients lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty coefficient
/// list).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// prod (t - r) over the given roots; the empty product is the constant 1.
  static IntPolynomial from_roots(std::span<const int> roots);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int k) const;

  BigInt eval(const BigInt& x) const;

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  std::vector<BigInt> coeffs_;
};

} // namespace rootcensus
