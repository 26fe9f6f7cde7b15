#pragma once

#include <span>
#include <string>
#include <vector>

#include "ramify/polynomial.hpp"

namespace ramify {

/// Point of projective space, normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
public:
  /// Throws std::invalid_argument for the zero vector.
  explicit ProjectivePoint(std::vector<Scalar> coords);

  std::size_t size() const { return coords_.size(); }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t first_nonzero() const;

  /// Unit vector e_i in P^{n}, n + 1 = size.
  static ProjectivePoint unit(std::size_t size, std::size_t i);

  bool operator==(const ProjectivePoint& other) const = default;

  /// "(a : b : c)".
  std::string str() const;

private:
  std::vector<Scalar> coords_;
};

/// Value of f at the normalized representative of q.
Scalar evaluate(const Polynomial& f, const ProjectivePoint& q);

bool vanishes_at(const Polynomial& f, const ProjectivePoint& q);

} // namespace ramify
