#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/groebner.hpp"
#include "ramify/partitions.hpp"

namespace ramify {

/// Binary form sum_j a_j x^(k-j) y^j of degree k, up to a nonzero scalar.
/// Stored normalized so the first nonzero coefficient is 1.
class BinaryForm {
public:
  /// Throws std::invalid_argument for the zero vector.
  explicit BinaryForm(std::vector<Scalar> coeffs);

  /// Reads a homogeneous polynomial in a two-variable ring; the first
  /// variable plays the role of x. Returns nullopt for zero.
  static std::optional<BinaryForm> from_polynomial(const Polynomial& f);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Polynomial to_polynomial(const RingPtr& two_variables) const;

  bool operator==(const BinaryForm& other) const = default;
  std::string str() const;

private:
  std::vector<Scalar> coeffs_;
};

/// Ideal of the coincident root locus X_lambda in K[z_0, ..., z_k].
struct CrlIdeal {
  Partition lambda;
  Ideal ideal;
  /// omega = (0, 1, ..., k); every generator is homogeneous for it.
  std::vector<long> weights;
};

/// Vanishing ideal of X_lambda, computed by eliminating the parameters of
/// c * prod_r G_r^r, where G_r is a generic monic form whose degree is the
/// number of parts of lambda equal to r. Results are cached per lambda.
CrlIdeal coincident_root_ideal(const Partition& lambda, const GroebnerOptions& options = {});

/// Ring z0, ..., zk of coefficient space P^k.
RingPtr coefficient_ring(unsigned k);

/// Coefficients (of x^(k-j) y^j, j = 0..k) of prod_i (u_i x + v_i y)^lambda_i
/// over the ring u1, v1, ..., ue, ve.
std::vector<Polynomial> root_parametrization(const Partition& lambda);

/// Multiplicities of the distinct linear factors of F over the algebraic
/// closure, via squarefree decomposition; the power of y dividing F counts
/// as one root.
Partition multiplicity_partition(const BinaryForm& form);

/// F in X_lambda: the factor pattern of F is lambda or a coarsening of it.
bool in_X_lambda(const BinaryForm& form, const Partition& lambda);
/// F in the open stratum: the factor pattern is exactly lambda.
bool in_X_lambda_open(const BinaryForm& form, const Partition& lambda);

} // namespace ramify
