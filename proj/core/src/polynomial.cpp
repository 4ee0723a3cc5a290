#include "rootcensus/polynomial.hpp"

#include <sstream>

namespace rootcensus {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_roots(std::span<const int> roots) {
  std::vector<BigInt> c{1};
  for (int r : roots) {
    // multiply by (t - r)
    c.push_back(0);
    for (std::size_t k = c.size(); k-- > 1;) c[k] = c[k - 1] - r * c[k];
    c[0] *= -r;
  }
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag.str();
    if (k >= 1) {
      out << var;
      if (k >= 2) out << "^" << k;
    }
  }
  return out.str();
}

} // namespace rootcensus
