#include "ramify/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("ideal without ring");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("generator ring mismatch");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string Ideal::str() const {
  if (generators_.empty()) return "{0}";
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    os << (i ? ", " : "") << generators_[i].str();
  os << "}";
  return os.str();
}

namespace {

using TermVec = std::vector<Term>;

// Integer-coefficient term used inside the engine; polynomials are kept
// primitive so no rational normalization happens in the inner loops.
struct ZTerm {
  Monomial monomial;
  mpz_class coefficient;
};
using ZPoly = std::vector<ZTerm>;

ZPoly to_zpoly(const Polynomial& f, const MonomialOrder& order, Scalar* scale = nullptr) {
  mpz_class den = 1;
  for (const auto& t : f.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  ZPoly out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    mpz_class c = t.coefficient.get_num() * (den / t.coefficient.get_den());
    out.push_back({t.monomial, std::move(c)});
  }
  std::sort(out.begin(), out.end(), [&](const ZTerm& a, const ZTerm& b) {
    return order.greater(a.monomial, b.monomial);
  });
  // f = out / den
  if (scale) *scale = Scalar(1, den);
  return out;
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the content and makes the leading coefficient positive.
// Returns the factor that was divided out (signed).
mpz_class make_primitive(ZPoly& p) {
  if (p.empty()) return 1;
  mpz_class g = content(p);
  if (p.front().coefficient < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), g.get_mpz_t());
  return g;
}

// sa * a[a_start..] - sb * m * b[b_start..]; inputs sorted descending under
// order. Coefficients of `a` are moved out.
ZPoly combine(ZPoly&& a, std::size_t a_start, const mpz_class& sa, const ZPoly& b,
              std::size_t b_start, const Monomial& m, const mpz_class& sb,
              const MonomialOrder& order) {
  ZPoly out;
  out.reserve(a.size() - a_start + b.size() - b_start);
  std::size_t i = a_start, j = b_start;
  Monomial bm;
  bool have_bm = false;
  const bool unit_a = sa == 1;
  mpz_class tmp;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].monomial * m;
      have_bm = true;
    }
    int cmp;
    if (j == b.size()) {
      cmp = 1;
    } else if (i == a.size()) {
      cmp = -1;
    } else {
      cmp = order.compare(a[i].monomial, bm);
    }
    if (cmp > 0) {
      if (!unit_a) a[i].coefficient *= sa;
      out.push_back(std::move(a[i]));
      ++i;
    } else if (cmp < 0) {
      out.push_back({bm, -(b[j].coefficient * sb)});
      ++j;
      have_bm = false;
    } else {
      mpz_class& v = a[i].coefficient;
      if (!unit_a) v *= sa;
      mpz_mul(tmp.get_mpz_t(), b[j].coefficient.get_mpz_t(), sb.get_mpz_t());
      v -= tmp;
      if (v != 0) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

// Fraction-free full reduction: returns r and multiplies `multiplier` by the
// integer mu with mu * h = r + (combination of divisors).
ZPoly reduce(ZPoly h, const std::vector<const ZPoly*>& divisors, const MonomialOrder& order,
             mpz_class* multiplier = nullptr) {
  ZPoly rem;
  std::size_t start = 0;
  unsigned steps = 0;
  while (start < h.size()) {
    const ZTerm& lead = h[start];
    const ZPoly* div = nullptr;
    for (const ZPoly* d : divisors) {
      if (lead.monomial.divisible_by(d->front().monomial)) {
        div = d;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(lead);
      ++start;
      continue;
    }
    const mpz_class& b = div->front().coefficient;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lead.coefficient.get_mpz_t(), b.get_mpz_t());
    mpz_class sa = b / g;
    mpz_class sb = lead.coefficient / g;
    Monomial q = lead.monomial / div->front().monomial;
    h = combine(std::move(h), start + 1, sa, *div, 1, q, sb, order);
    start = 0;
    if (sa != 1) {
      for (auto& t : rem) t.coefficient *= sa;
      if (multiplier) *multiplier *= sa;
    }
    if (++steps % 16 == 0 && multiplier == nullptr) {
      // keep coefficient growth in check: divide h and rem by their joint content
      mpz_class c = content(h);
      for (const auto& t : rem) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coefficient.get_mpz_t());
      }
      if (c > 1) {
        for (auto& t : h) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
        for (auto& t : rem) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  return rem;
}

ZPoly spoly(const ZPoly& a, const ZPoly& b, const MonomialOrder& order) {
  const Monomial& la = a.front().monomial;
  const Monomial& lb = b.front().monomial;
  Monomial l = lcm(la, lb);
  Monomial ma = l / la;
  ZPoly scaled;
  scaled.reserve(a.size());
  for (const auto& t : a) scaled.push_back({t.monomial * ma, t.coefficient});
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.front().coefficient.get_mpz_t(), b.front().coefficient.get_mpz_t());
  mpz_class sa = b.front().coefficient / g;
  mpz_class sb = a.front().coefficient / g;
  return combine(std::move(scaled), 1, sa, b, 1, l / lb, sb, order);
}

// Monic rational polynomial from an integer one.
Polynomial to_monic(const RingPtr& ring, const ZPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  const mpz_class& lead = p.front().coefficient;
  for (const auto& t : p) {
    Scalar c(t.coefficient, lead);
    c.canonicalize();
    terms.push_back({t.monomial, std::move(c)});
  }
  return Polynomial(ring, std::move(terms));
}

struct Entry {
  ZPoly terms;
  unsigned sugar = 0;
  bool active = false;
  const Monomial& lm() const { return terms.front().monomial; }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
public:
  Buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options)
      : ideal_(ideal), order_(order),
        limit_(options.max_pairs ? options.max_pairs : env_pair_limit()),
        weights_(options.sugar_weights) {
    if (!weights_.empty() && weights_.size() != ideal.ring()->size())
      throw std::invalid_argument("sugar weight vector length does not match ring");
  }

  GroebnerBasis run() {
    std::vector<ZPoly> inputs;
    for (const auto& g : ideal_.generators()) {
      ZPoly t = to_zpoly(g, order_);
      make_primitive(t);
      inputs.push_back(std::move(t));
    }
    // Fixed processing order makes the run independent of generator order.
    std::sort(inputs.begin(), inputs.end(), [&](const ZPoly& a, const ZPoly& b) {
      return zpoly_less(a, b);
    });
    for (auto& t : inputs) {
      ZPoly h = reduce(std::move(t), active_divisors(), order_);
      if (h.empty()) continue;
      make_primitive(h);
      if (h.front().monomial.is_one()) return unit();
      unsigned sugar = max_degree(h, weights_);
      insert(std::move(h), sugar);
    }

    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const Pair& a, const Pair& b) { return pair_less(a, b); });
      Pair p = *best;
      pairs_.erase(best);
      if (limit_ && stats_.pairs_reduced >= *limit_) {
        throw LimitExceeded("Buchberger pair limit of " + std::to_string(*limit_) + " reached");
      }
      ++stats_.pairs_reduced;
      ZPoly s = spoly(entries_[p.i].terms, entries_[p.j].terms, order_);
      ZPoly h = reduce(std::move(s), active_divisors(), order_);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_primitive(h);
      if (h.front().monomial.is_one()) return unit();
      insert(std::move(h), p.sugar);
    }
    return finish();
  }

private:
  bool zpoly_less(const ZPoly& a, const ZPoly& b) const {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      int c = order_.compare(a[k].monomial, b[k].monomial);
      if (c != 0) return c < 0;
      if (a[k].coefficient != b[k].coefficient) return a[k].coefficient < b[k].coefficient;
    }
    return a.size() < b.size();
  }

  static unsigned degree(const Monomial& m, const std::vector<long>& weights) {
    if (weights.empty()) return m.degree();
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * long(m[i]);
    return static_cast<unsigned>(d);
  }

  static unsigned max_degree(const ZPoly& t, const std::vector<long>& weights) {
    unsigned d = 0;
    for (const auto& term : t) d = std::max(d, degree(term.monomial, weights));
    return d;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::vector<const ZPoly*> active_divisors() const {
    std::vector<const ZPoly*> out;
    for (const auto& e : entries_)
      if (e.active) out.push_back(&e.terms);
    return out;
  }

  GroebnerBasis unit() {
    auto one = Polynomial::constant(ideal_.ring(), 1);
    return GroebnerBasis(ideal_, order_, {one}, stats_);
  }

  // Gebauer-Moeller update with the new element h.
  void insert(ZPoly h_terms, unsigned sugar) {
    const std::size_t h = entries_.size();
    entries_.push_back({std::move(h_terms), sugar, false});
    const Monomial lh = entries_[h].lm();

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < h; ++g)
      if (entries_[g].active) candidates.push_back(g);

    std::vector<Monomial> lcms;
    for (std::size_t g : candidates) lcms.push_back(lcm(entries_[g].lm(), lh));

    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = coprime(entries_[candidates[a]].lm(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (lcms[a].divisible_by(lcms[b])) keep = false;
        for (std::size_t b : kept) {
          if (!keep) break;
          if (lcms[a].divisible_by(lcms[b])) keep = false;
        }
      }
      if (keep) kept.push_back(a);
      else ++stats_.pairs_skipped;
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      if (p.lcm.divisible_by(lh) && !(lcm(entries_[p.i].lm(), lh) == p.lcm) &&
          !(lcm(entries_[p.j].lm(), lh) == p.lcm)) {
        ++stats_.pairs_skipped;
        continue;
      }
      next.push_back(std::move(p));
    }
    for (std::size_t a : kept) {
      std::size_t g = candidates[a];
      if (coprime(entries_[g].lm(), lh)) {
        ++stats_.pairs_skipped;
        continue;
      }
      const Monomial& l = lcms[a];
      const unsigned dl = degree(l, weights_);
      unsigned sg = entries_[g].sugar + dl - degree(entries_[g].lm(), weights_);
      unsigned sh = sugar + dl - degree(lh, weights_);
      next.push_back({g, h, l, std::max(sg, sh)});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (entries_[g].active && entries_[g].lm().divisible_by(lh)) entries_[g].active = false;
    entries_[h].active = true;
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> active;
    for (std::size_t g = 0; g < entries_.size(); ++g)
      if (entries_[g].active) active.push_back(g);

    std::vector<ZPoly> reduced;
    for (std::size_t g : active) {
      std::vector<const ZPoly*> others;
      for (std::size_t o : active)
        if (o != g) others.push_back(&entries_[o].terms);
      ZPoly r = reduce(entries_[g].terms, others, order_);
      make_primitive(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const ZPoly& a, const ZPoly& b) {
      return order_.greater(a.front().monomial, b.front().monomial);
    });
    std::vector<Polynomial> basis;
    for (const auto& t : reduced) basis.push_back(to_monic(ideal_.ring(), t));
    return GroebnerBasis(ideal_, order_, std::move(basis), stats_);
  }

  const Ideal& ideal_;
  const MonomialOrder& order_;
  std::optional<std::size_t> limit_;
  std::vector<long> weights_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

} // namespace

// GroebnerBasis

GroebnerBasis::GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis,
                             GroebnerStats stats)
    : ideal_(std::move(ideal)), order_(std::move(order)), basis_(std::move(basis)),
      stats_(stats) {
  for (const auto& b : basis_) {
    if (b.is_zero()) throw std::invalid_argument("zero polynomial in Groebner basis");
    std::vector<Term> t = b.terms();
    std::sort(t.begin(), t.end(), [&](const Term& x, const Term& y) {
      return order_.greater(x.monomial, y.monomial);
    });
    ordered_.push_back(std::move(t));
  }
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().is_constant();
}

std::optional<std::size_t> env_pair_limit() {
  const char* raw = std::getenv("RAMIFY_MAX_PAIRS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (ideal.is_zero()) return GroebnerBasis(ideal, order, {});
  Buchberger engine(ideal, order, options);
  return engine.run();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!same_ring(f.ring(), G.ring())) throw std::invalid_argument("normal form: ring mismatch");
  if (f.is_zero()) return f;
  std::vector<ZPoly> zbasis;
  zbasis.reserve(G.basis().size());
  for (const auto& g : G.basis()) zbasis.push_back(to_zpoly(g, G.order()));
  std::vector<const ZPoly*> divisors;
  for (const auto& z : zbasis) divisors.push_back(&z);
  Scalar scale;
  mpz_class mu = 1;
  ZPoly r = reduce(to_zpoly(f, G.order(), &scale), divisors, G.order(), &mu);
  // mu * (f / scale) reduces to r
  std::vector<Term> terms;
  for (auto& t : r) {
    Scalar c(t.coefficient, mu);
    c.canonicalize();
    terms.push_back({t.monomial, c * scale});
  }
  return Polynomial(f.ring(), std::move(terms));
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("S-polynomial: ring mismatch");
  const Term& lf = leading_term(f, order);
  const Term& lg = leading_term(g, order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times(l / lf.monomial, 1 / lf.coefficient) - g.times(l / lg.monomial, 1 / lg.coefficient);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const auto& b = G.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(s_polynomial(b[i], b[j], G.order()), G).is_zero()) return false;
  return true;
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& eliminate,
                        const GroebnerOptions& options) {
  if (eliminate.empty()) return ideal;
  std::vector<bool> mask(ideal.ring()->size(), false);
  for (std::size_t v : eliminate) mask.at(v) = true;
  GroebnerBasis G = buchberger(ideal, MonomialOrder::elimination(mask), options);
  std::vector<Polynomial> kept;
  for (const auto& g : G.basis()) {
    bool free = std::none_of(eliminate.begin(), eliminate.end(),
                             [&](std::size_t v) { return involves(g, v); });
    if (free) kept.push_back(g.normalized());
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal ring_map_kernel(const std::vector<Polynomial>& images, const RingPtr& target,
                      const GroebnerOptions& options) {
  if (images.size() != target->size())
    throw std::invalid_argument("ring_map_kernel needs one image per target variable");
  if (images.empty()) return Ideal(target);
  const RingPtr& params = images.front().ring();
  std::vector<std::string> names = params->names();
  for (const auto& n : target->names()) {
    if (params->contains(n))
      throw std::invalid_argument("target variable '" + n + "' clashes with a parameter");
    names.push_back(n);
  }
  auto combined = make_ring(names);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (!same_ring(images[j].ring(), params)) throw std::invalid_argument("images in different rings");
    gens.push_back(Polynomial::variable(combined, params->size() + j) - rebase(images[j], combined));
  }
  std::vector<std::size_t> eliminate(params->size());
  for (std::size_t i = 0; i < eliminate.size(); ++i) eliminate[i] = i;
  Ideal elim = elimination_ideal(Ideal(combined, std::move(gens)), eliminate, options);
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(rebase(g, target));
  return Ideal(target, std::move(out));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options) {
  if (!same_ring(f.ring(), ideal.ring())) throw std::invalid_argument("radical membership: ring mismatch");
  if (f.is_zero()) return true;
  std::vector<std::string> names = ideal.ring()->names();
  std::string fresh = "_w";
  while (ideal.ring()->contains(fresh)) fresh += "_";
  names.push_back(fresh);
  auto extended = make_ring(names);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rebase(g, extended));
  auto w = Polynomial::variable(extended, names.size() - 1);
  gens.push_back(Polynomial::constant(extended, 1) - w * rebase(f, extended));
  return buchberger(Ideal(extended, std::move(gens)), MonomialOrder::degrevlex(), options).is_unit();
}

} // namespace ramify
