#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramify/polynomial.hpp"

namespace ramify {

/// Generator list over a ring. Zero generators are dropped, so an empty
/// list is the zero ideal.
class Ideal {
public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_homogeneous() const;

  /// "{g1, g2}" or "{0}".
  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

struct GroebnerOptions {
  /// Maximum number of S-pairs to reduce; LimitExceeded past it. When unset,
  /// the RAMIFY_MAX_PAIRS environment variable is consulted.
  std::optional<std::size_t> max_pairs;
  /// Positive weights for the sugar degree that drives pair selection. When
  /// the ideal is homogeneous for these weights the run proceeds degree by
  /// degree. Empty means the standard grading.
  std::vector<long> sugar_weights;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

/// Reduced Groebner basis of an ideal under a fixed monomial order.
/// Elements are monic with respect to the order and listed by decreasing
/// leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis,
                GroebnerStats stats = {});

  const Ideal& ideal() const { return ideal_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const GroebnerStats& stats() const { return stats_; }

  const Monomial& leading_monomial(std::size_t i) const { return ordered_[i].front().monomial; }
  bool is_unit() const;

  /// Terms of basis element i sorted descending under order().
  const std::vector<Term>& ordered_terms(std::size_t i) const { return ordered_[i]; }

private:
  Ideal ideal_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<Term>> ordered_;
  GroebnerStats stats_;
};

/// Pair limit from RAMIFY_MAX_PAIRS, if set to a positive integer.
std::optional<std::size_t> env_pair_limit();

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Fully reduced remainder of f modulo G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f);

/// S-polynomial of f and g under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

/// I intersected with the polynomial ring in the variables not listed.
/// Generators stay in I's ring and are free of the eliminated variables.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& eliminate,
                        const GroebnerOptions& options = {});

/// Kernel of the map sending target variable j to images[j]. The images
/// share a parameter ring whose variable names must not clash with the
/// target names.
Ideal ring_map_kernel(const std::vector<Polynomial>& images, const RingPtr& target,
                      const GroebnerOptions& options = {});

/// f in the radical of I, via 1 in I + <1 - w f> for a fresh variable w.
bool radical_membership(const Polynomial& f, const Ideal& ideal,
                        const GroebnerOptions& options = {});

} // namespace ramify
