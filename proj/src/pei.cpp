#include "ramify/pei.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

PeiChain::PeiChain(GroebnerBasis basis, std::vector<Ideal> levels, std::size_t terminal)
    : basis_(std::move(basis)), levels_(std::move(levels)), terminal_(terminal),
      unit_(basis_.ring(), {Polynomial::constant(basis_.ring(), 1)}) {}

const Ideal& PeiChain::level(std::size_t k) const {
  return k < levels_.size() ? levels_[k] : unit_;
}

std::vector<Polynomial> PeiChain::elements_of_degree(std::size_t k) const {
  std::vector<Polynomial> out;
  for (const auto& g : basis_.basis())
    if (deg_in(g, std::size_t{0}) == static_cast<int>(k)) out.push_back(g);
  return out;
}

PeiChain partial_elimination_ideals(const Ideal& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  if (ring->size() == 0) throw std::invalid_argument("partial elimination needs at least one variable");
  GroebnerBasis G = buchberger(ideal, MonomialOrder::elimination_of(0, ring->size()), options);

  // Under the elimination order the x0-degree of the leading term equals
  // deg_{x0}, so levels can be read off element by element.
  int max_degree = 0;
  for (const auto& g : G.basis()) max_degree = std::max(max_degree, deg_in(g, std::size_t{0}));

  std::vector<std::vector<Polynomial>> lcs(static_cast<std::size_t>(max_degree) + 1);
  std::optional<std::size_t> terminal;
  for (const auto& g : G.basis()) {
    const auto d = static_cast<std::size_t>(deg_in(g, std::size_t{0}));
    Polynomial lc = leading_coefficient_in(g, 0);
    if (lc.is_constant() && (!terminal || d < *terminal)) terminal = d;
    lcs[d].push_back(std::move(lc));
  }
  if (!terminal) {
    throw NonTerminating("no Groebner basis element is monic in " + ring->name(0) +
                         "; the point e_0 lies on V(I)");
  }

  std::vector<Ideal> levels;
  std::vector<Polynomial> acc;
  for (std::size_t k = 0; k <= *terminal; ++k) {
    if (k < lcs.size()) acc.insert(acc.end(), lcs[k].begin(), lcs[k].end());
    if (k == *terminal) {
      levels.emplace_back(ring, std::vector<Polynomial>{Polynomial::constant(ring, 1)});
    } else {
      levels.emplace_back(ring, normalize_generators(acc));
    }
  }
  return PeiChain(std::move(G), std::move(levels), *terminal);
}

Ideal z_k_ideal(const PeiChain& chain, std::size_t k) {
  if (k == 0) throw std::invalid_argument("Z_k is defined for k >= 1");
  return chain.level(k - 1);
}

} // namespace ramify
