#pragma once

#include <cstddef>
#include <vector>

#include "ramify/groebner.hpp"

namespace ramify {

/// Partial elimination ideals of I with respect to the distinguished variable
/// x0 (variable 0 of the ring).
///
/// levels[k] is K_k(I): the ideal generated by the x0-leading coefficients of
/// the reduced Groebner basis elements with deg_{x0} = k, under an
/// elimination order for x0. The chain is increasing and terminal() is the
/// first k with K_k equal to the unit ideal.
class PeiChain {
public:
  PeiChain(GroebnerBasis basis, std::vector<Ideal> levels, std::size_t terminal);

  const GroebnerBasis& basis() const { return basis_; }
  const RingPtr& ring() const { return basis_.ring(); }
  const std::vector<Ideal>& levels() const { return levels_; }
  /// K_k for any k >= 0; the unit ideal past the terminal level.
  const Ideal& level(std::size_t k) const;
  std::size_t terminal() const { return terminal_; }

  /// Basis elements with x0-degree exactly k.
  std::vector<Polynomial> elements_of_degree(std::size_t k) const;

private:
  GroebnerBasis basis_;
  std::vector<Ideal> levels_;
  std::size_t terminal_;
  Ideal unit_;
};

/// Throws NonTerminating when no basis element has a constant leading
/// coefficient in x0 (the point e_0 lies on V(I)).
PeiChain partial_elimination_ideals(const Ideal& ideal, const GroebnerOptions& options = {});

/// Ideal of Z_k = {q : the fiber through e_0 and q has length > k}, which is
/// V(K_{k-1}) for k >= 1. Past the terminal level it is the unit ideal.
Ideal z_k_ideal(const PeiChain& chain, std::size_t k);

} // namespace ramify
