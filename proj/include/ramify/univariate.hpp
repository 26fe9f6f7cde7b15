#pragma once

#include <vector>

#include "ramify/ring.hpp"

namespace ramify {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i.
/// The zero polynomial has no coefficients.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }

  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& other) const = default;

private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder of a by nonzero b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's algorithm: factors[i] is the squarefree product of the irreducible
/// factors of multiplicity exactly i + 1 (monic, possibly constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& f);

} // namespace ramify
