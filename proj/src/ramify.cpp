#include "ramify/ramify.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Scalar factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

std::vector<Polynomial> linear_images(const RingPtr& ring, const Matrix& m) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Polynomial row(ring);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != 0) row += m[i][j] * Polynomial::variable(ring, j);
    images.push_back(std::move(row));
  }
  return images;
}

} // namespace

CoordinateChange::CoordinateChange(RingPtr ring, Matrix m)
    : ring_(std::move(ring)), m_(std::move(m)), inv_(invert(m_)) {
  if (m_.size() != ring_->size()) throw std::invalid_argument("matrix size does not match the ring");
  identity_ = true;
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < m_.size(); ++j)
      if (m_[i][j] != (i == j ? 1 : 0)) identity_ = false;
  forward_ = linear_images(ring_, m_);
  backward_ = linear_images(ring_, inv_);
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
  return identity_ ? f : substitute(f, forward_);
}

Polynomial CoordinateChange::pull_back(const Polynomial& f) const {
  return identity_ ? f : substitute(f, backward_);
}

ProjectivePoint CoordinateChange::transform(const ProjectivePoint& q) const {
  std::vector<Scalar> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i] += inv_[i][j] * q[j];
  return ProjectivePoint(std::move(out));
}

CoordinateChange center_transform(const RingPtr& ring, const ProjectivePoint& p) {
  const std::size_t n = p.size();
  if (n != ring->size()) throw std::invalid_argument("center dimension does not match the ring");
  const std::size_t pivot = p.first_nonzero();
  Matrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i) m[i][0] = p[i];
  if (pivot != 0) {
    for (std::size_t i = 0; i < n; ++i) m[i][pivot] = i == 0 ? 1 : 0;
  }
  return CoordinateChange(ring, std::move(m));
}

Polynomial substitute_coefficients(const Polynomial& F, const Polynomial& f, unsigned k) {
  if (F.ring()->size() != k + 1)
    throw std::invalid_argument("F must be a polynomial in exactly k + 1 coefficient variables");
  if (!f.is_zero() && deg_in(f, std::size_t{0}) > static_cast<int>(k))
    throw std::invalid_argument("deg_x0(f) exceeds k");
  if (F.is_zero()) return Polynomial(f.ring());
  return substitute(F, coefficients_in(f, 0, static_cast<int>(k)));
}

std::optional<BinaryForm> chart_form(const Chart& chart, const CoordinateChange& change, const ProjectivePoint& q) {
  const ProjectivePoint centered = change.transform(q);
  std::vector<Scalar> coeffs;
  bool nonzero = false;
  for (const auto& f : coefficients_in(chart.g, 0, static_cast<int>(chart.level))) {
    coeffs.push_back(evaluate(f, centered));
    nonzero = nonzero || coeffs.back() != 0;
  }
  if (!nonzero) return std::nullopt;
  return BinaryForm(std::move(coeffs));
}

bool StratumEquations::vanishes_at(const ProjectivePoint& q) const {
  for (const auto& g : generators)
    if (!ramify::vanishes_at(g, q)) return false;
  return true;
}

bool OpenStratum::contains(const ProjectivePoint& q) const {
  if (!closure.vanishes_at(q)) return false;
  for (const auto& r : removed)
    if (r.vanishes_at(q)) return false;
  return true;
}

Projection::Projection(const Ideal& ideal, const ProjectivePoint& center, const GroebnerOptions& options)
    : ideal_(ideal), center_(center), change_(center_transform(ideal.ring(), center)),
      centered_(ideal.ring()), options_(options) {
  if (!ideal.is_homogeneous()) throw InputRejected("NOT_HOMOGENEOUS", "generators must be homogeneous");
  bool all_vanish = true;
  for (const auto& g : ideal.generators())
    if (!ramify::vanishes_at(g, center)) all_vanish = false;
  if (all_vanish) throw CenterOnScheme("center " + center.str() + " lies on the scheme");
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators()) moved.push_back(change_.apply(g));
  centered_ = Ideal(ideal.ring(), std::move(moved));
  chain_.emplace(partial_elimination_ideals(centered_, options_));
}

std::vector<Chart> Projection::charts(unsigned k) const {
  std::vector<Chart> out;
  if (k == 0) return out;
  for (auto& g : chain_->elements_of_degree(k)) {
    Polynomial lc = leading_coefficient_in(g, 0);
    Polynomial g_in = change_.pull_back(g);
    Polynomial lc_in = change_.pull_back(lc);
    out.push_back(Chart{k, std::move(g), std::move(lc), std::move(g_in), std::move(lc_in)});
  }
  return out;
}

std::vector<Polynomial> Projection::z_k_equations(unsigned k) const {
  std::vector<Polynomial> out;
  const Ideal level = z_k_ideal(*chain_, k);
  for (const auto& g : level.generators()) out.push_back(change_.pull_back(g));
  return normalize_generators(out);
}

StratumEquations Projection::z_lambda(const Partition& lambda) const {
  const unsigned k = lambda.k();
  StratumEquations eq{lambda, {}, {}, {}, false};
  eq.k_part = chain_->level(k - 1).generators();
  const auto top = chain_->elements_of_degree(k);
  const bool unit = std::any_of(eq.k_part.begin(), eq.k_part.end(),
                                [](const Polynomial& g) { return g.is_constant(); });
  if (!unit && !top.empty()) {
    const CrlIdeal crl = coincident_root_ideal(lambda, options_);
    std::vector<Polynomial> subs;
    for (const auto& g : top)
      for (const auto& F : crl.ideal.generators()) subs.push_back(substitute_coefficients(F, g, k));
    eq.crl_part = normalize_generators(subs);
  }
  std::vector<Polynomial> pulled;
  for (const auto& g : eq.k_part) pulled.push_back(change_.pull_back(g));
  for (const auto& g : eq.crl_part) pulled.push_back(change_.pull_back(g));
  eq.generators = normalize_generators(pulled);
  eq.empty = std::any_of(eq.generators.begin(), eq.generators.end(),
                         [](const Polynomial& g) { return g.is_constant(); });
  if (eq.empty) eq.generators = {Polynomial::constant(ideal_.ring(), 1)};
  return eq;
}

OpenStratum Projection::z_lambda_open(const Partition& lambda) const {
  OpenStratum out{z_lambda(lambda), {}, z_k_equations(lambda.k() + 1)};
  StratumEquations next{lambda, chain_->level(lambda.k()).generators(), {}, out.next_level, false};
  next.empty = std::any_of(next.generators.begin(), next.generators.end(),
                           [](const Polynomial& g) { return g.is_constant(); });
  out.removed.push_back(std::move(next));
  for (const auto& mu : strict_coarsenings(lambda)) out.removed.push_back(z_lambda(mu));
  return out;
}

std::vector<Chart> charts(const Ideal& ideal, const ProjectivePoint& p, unsigned k) {
  return Projection(ideal, p).charts(k);
}

StratumEquations z_lambda_ideal(const Ideal& ideal, const ProjectivePoint& p, const Partition& lambda) {
  return Projection(ideal, p).z_lambda(lambda);
}

OpenStratum z_lambda_open_description(const Ideal& ideal, const ProjectivePoint& p, const Partition& lambda) {
  return Projection(ideal, p).z_lambda_open(lambda);
}

} // namespace ramify
