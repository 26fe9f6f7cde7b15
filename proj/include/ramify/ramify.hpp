#pragma once

#include <optional>
#include <vector>

#include "ramify/crl.hpp"
#include "ramify/pei.hpp"
#include "ramify/point.hpp"

namespace ramify {

using Matrix = std::vector<std::vector<Scalar>>;

/// Exact inverse; throws std::invalid_argument when singular.
Matrix invert(const Matrix& m);

/// Linear change of coordinates x = M y on P^n. The induced map
/// psi(f)(y) = f(M y) moves the center to (1 : 0 : ... : 0).
class CoordinateChange {
public:
  CoordinateChange(RingPtr ring, Matrix m);

  const RingPtr& ring() const { return ring_; }
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse() const { return inv_; }
  bool is_identity() const { return identity_; }

  /// psi.
  Polynomial apply(const Polynomial& f) const;
  /// psi^{-1}.
  Polynomial pull_back(const Polynomial& f) const;
  /// Coordinates of q in the new system: M^{-1} q.
  ProjectivePoint transform(const ProjectivePoint& q) const;

private:
  RingPtr ring_;
  Matrix m_;
  Matrix inv_;
  bool identity_;
  std::vector<Polynomial> forward_;
  std::vector<Polynomial> backward_;
};

/// M is the identity with column 0 replaced by p and column j replaced by
/// e_0, where j is the first nonzero coordinate of p.
CoordinateChange center_transform(const RingPtr& ring, const ProjectivePoint& p);

/// f = sum_i f_i x0^(k-i); returns F(f_0, ..., f_k). F must live in a ring of
/// k + 1 variables.
Polynomial substitute_coefficients(const Polynomial& F, const Polynomial& f, unsigned k);

struct Chart {
  unsigned level;
  /// Basis element and its x0-leading coefficient, in coordinates where the
  /// center is (1 : 0 : ... : 0).
  Polynomial g;
  Polynomial lc;
  /// The same pulled back to the input coordinates.
  Polynomial g_input;
  Polynomial lc_input;
};

/// Degree-k binary form sum_i f_i(q) x^(k-i) y^i of the chart element
/// g = sum_i f_i x0^(k-i), evaluated at the centered coordinates of q: the
/// restriction of g to the line through q and the center with the factor
/// vanishing at the center removed. nullopt when every f_i vanishes at q.
std::optional<BinaryForm> chart_form(const Chart& chart, const CoordinateChange& change, const ProjectivePoint& q);

struct StratumEquations {
  Partition lambda;
  /// K_{k-1} and F_i(g) generators, x0-free, in centered coordinates.
  std::vector<Polynomial> k_part;
  std::vector<Polynomial> crl_part;
  /// The union of both parts pulled back, normalized and deduplicated.
  std::vector<Polynomial> generators;
  /// Some generator is a nonzero constant: the stratum is empty.
  bool empty = false;

  bool vanishes_at(const ProjectivePoint& q) const;
};

struct OpenStratum {
  StratumEquations closure;
  /// Z_{k+1} first, then Z_mu for each strict coarsening mu.
  std::vector<StratumEquations> removed;
  /// Equations of Z_{k+1} (the first removed set), pulled back.
  std::vector<Polynomial> next_level;

  bool contains(const ProjectivePoint& q) const;
};

/// Projection of V(I) from p: the coordinate change, the transformed ideal
/// and its partial elimination chain, computed once.
class Projection {
public:
  /// Throws CenterOnScheme when p lies on V(I) and InputRejected for
  /// inhomogeneous input.
  Projection(const Ideal& ideal, const ProjectivePoint& center, const GroebnerOptions& options = {});

  const Ideal& ideal() const { return ideal_; }
  const ProjectivePoint& center() const { return center_; }
  const CoordinateChange& change() const { return change_; }
  const Ideal& centered_ideal() const { return centered_; }
  const PeiChain& chain() const { return *chain_; }
  std::size_t terminal() const { return chain_->terminal(); }

  /// Charts D_g for g in the basis with x0-degree k.
  std::vector<Chart> charts(unsigned k) const;
  /// Equations of Z_k (k >= 1), pulled back.
  std::vector<Polynomial> z_k_equations(unsigned k) const;
  StratumEquations z_lambda(const Partition& lambda) const;
  OpenStratum z_lambda_open(const Partition& lambda) const;

private:
  Ideal ideal_;
  ProjectivePoint center_;
  CoordinateChange change_;
  Ideal centered_;
  GroebnerOptions options_;
  std::optional<PeiChain> chain_;
};

std::vector<Chart> charts(const Ideal& ideal, const ProjectivePoint& p, unsigned k);
StratumEquations z_lambda_ideal(const Ideal& ideal, const ProjectivePoint& p, const Partition& lambda);
OpenStratum z_lambda_open_description(const Ideal& ideal, const ProjectivePoint& p, const Partition& lambda);

} // namespace ramify
