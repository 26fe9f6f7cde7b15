#pragma once

#include <random>
#include <string>
#include <vector>

#include "ramify/parser.hpp"

namespace ramify {

inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const ProjectivePoint& q, std::ostream* os) { *os << q.str(); }

} // namespace ramify

namespace ramify::testing {

inline RingPtr ring_x(std::size_t n) { return make_indexed_ring("x", n); }

inline Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

inline Ideal I(const std::vector<std::string>& gens, const RingPtr& ring) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(P(g, ring));
  return Ideal(ring, std::move(polys));
}

inline ProjectivePoint pt(const std::string& text) { return parse_point(text); }

inline Ideal conic() { return I({"x0^2 - x1*x2"}, ring_x(3)); }

inline Ideal twisted_cubic() {
  return I({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, ring_x(4));
}

inline Scalar random_scalar(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  Scalar c(num(rng), den(rng));
  c.canonicalize();
  return c;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned degree) {
  Monomial m(nvars);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (unsigned i = 0; i < degree; ++i) {
    const std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

/// Random polynomial with up to `terms` terms of total degree <= max_degree,
/// or exactly max_degree when homogeneous.
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree,
                                    std::size_t terms, bool homogeneous = false) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    Scalar c = random_scalar(rng);
    if (c == 0) continue;
    out.push_back({random_monomial(rng, ring->size(), homogeneous ? max_degree : deg(rng)), c});
  }
  return Polynomial(ring, std::move(out));
}

} // namespace ramify::testing
