#include "ramify/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ramify/point.hpp"

namespace ramify {

namespace {

const MonomialOrder& storage_order() {
  static const MonomialOrder order = MonomialOrder::deglex();
  return order;
}

bool storage_greater(const Monomial& a, const Monomial& b) {
  return storage_order().compare(a, b) > 0;
}

// Sorts descending and merges equal monomials, dropping zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return storage_greater(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  terms = std::move(out);
}

} // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
  for (auto& t : terms_) {
    if (t.monomial.size() != ring_->size())
      throw std::invalid_argument("monomial length does not match ring");
    t.coefficient.canonicalize();
  }
  canonicalize(terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  if (c != 0) p.terms_.back().coefficient.canonicalize();
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::invalid_argument("variable index out of range");
  Monomial m(ring->size());
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t idx = ring->index_of(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  if (m.size() != ring->size()) throw std::invalid_argument("monomial length does not match ring");
  Polynomial p(std::move(ring));
  if (c != 0) {
    p.terms_.push_back({m, c});
    p.terms_.back().coefficient.canonicalize();
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return kNegInfinity;
  return static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Scalar Polynomial::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return storage_greater(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_))
    throw std::invalid_argument("polynomials live in different rings");
}

std::vector<Term> Polynomial::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                    const Scalar& b_scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && storage_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || storage_greater(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, b[j].coefficient * b_scale});
      ++j;
    } else {
      Scalar c = a[i].coefficient + b[j].coefficient * b_scale;
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, Scalar(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, Scalar(-1));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  Polynomial r(a.ring_);
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Scalar& c_in) {
  Scalar c = c_in;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c_in) const {
  Scalar c = c_in;
  c.canonicalize();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // deglex is multiplicative, so the order is preserved
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Scalar scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.front().coefficient < 0) scale = -scale;
  Polynomial r(*this);
  r *= scale;
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    Scalar mag = abs(t.coefficient);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (t.monomial.is_one() || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

// Free functions

int deg_in(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->size()) throw std::invalid_argument("variable index out of range");
  if (f.is_zero()) return kNegInfinity;
  int d = 0;
  for (const auto& t : f.terms()) d = std::max(d, static_cast<int>(t.monomial[var]));
  return d;
}

int deg_in(const Polynomial& f, const std::string& var) {
  return deg_in(f, f.ring()->index_of(var));
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var, int k) {
  if (k < 0) throw std::invalid_argument("negative coefficient count");
  int d = deg_in(f, var);
  if (d > k)
    throw std::invalid_argument("degree " + std::to_string(d) + " in " + f.ring()->name(var) +
                                " exceeds " + std::to_string(k));
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(k) + 1);
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[var];
    Monomial m = t.monomial;
    m.set(var, 0);
    buckets[static_cast<std::size_t>(k) - e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(f.ring(), std::move(b));
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
  int d = deg_in(f, var);
  return coefficients_in(f, var, d).front();
}

Polynomial assemble_in(const std::vector<Polynomial>& coeffs, std::size_t var) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  const auto& ring = coeffs.front().ring();
  const std::size_t k = coeffs.size() - 1;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!same_ring(coeffs[i].ring(), ring)) throw std::invalid_argument("ring mismatch");
    for (const auto& t : coeffs[i].terms()) {
      if (t.monomial[var] != 0) throw std::invalid_argument("coefficient involves the variable");
      Monomial m = t.monomial;
      m.set(var, static_cast<unsigned>(k - i));
      terms.push_back({m, t.coefficient});
    }
  }
  return Polynomial(ring, std::move(terms));
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
  if (point.size() != f.ring()->size()) throw std::invalid_argument("point dimension mismatch");
  Scalar sum = 0;
  for (const auto& t : f.terms()) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const std::size_t n = f.ring()->size();
  if (images.size() != n) throw std::invalid_argument("substitution needs one image per variable");
  if (n == 0) throw std::invalid_argument("empty ring");
  RingPtr target = images.front().ring();
  for (const auto& img : images)
    if (!same_ring(img.ring(), target)) throw std::invalid_argument("images in different rings");

  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 0) continue;
      term *= power(i, t.monomial[i]);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images) {
  std::vector<Polynomial> list;
  for (const auto& name : f.ring()->names()) {
    auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("no image for variable '" + name + "'");
    list.push_back(it->second);
  }
  return substitute(f, list);
}

Polynomial rebase(const Polynomial& f, const RingPtr& target) {
  if (same_ring(f.ring(), target)) return Polynomial(target, f.terms());
  std::vector<std::size_t> where(f.ring()->size());
  std::vector<bool> used(f.ring()->size(), false);
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (!used[i]) continue;
    const auto& name = f.ring()->name(i);
    if (!target->contains(name))
      throw std::invalid_argument("variable '" + name + "' missing from target ring");
    where[i] = target->index_of(name);
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) m.set(where[i], t.monomial[i]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

std::optional<long> weighted_degree(const Polynomial& f, std::span<const long> weights) {
  if (weights.size() != f.ring()->size()) throw std::invalid_argument("weight length mismatch");
  std::optional<long> degree;
  for (const auto& t : f.terms()) {
    long w = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * long(t.monomial[i]);
    if (degree && *degree != w) return std::nullopt;
    degree = w;
  }
  return degree.value_or(0);
}

bool is_weighted_homogeneous(const Polynomial& f, std::span<const long> weights) {
  return weighted_degree(f, weights).has_value();
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

bool involves(const Polynomial& f, std::size_t var) {
  for (const auto& t : f.terms())
    if (t.monomial[var] != 0) return true;
  return false;
}

std::vector<Polynomial> normalize_generators(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial n = g.normalized();
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

// ProjectivePoint

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
  auto it = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& c) { return c != 0; });
  if (it == coords_.end()) throw std::invalid_argument("projective point cannot be zero");
  Scalar lead = *it;
  for (auto& c : coords_) c /= lead;
}

std::size_t ProjectivePoint::first_nonzero() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) return i;
  return coords_.size();
}

ProjectivePoint ProjectivePoint::unit(std::size_t size, std::size_t i) {
  std::vector<Scalar> c(size, Scalar(0));
  c.at(i) = 1;
  return ProjectivePoint(std::move(c));
}

std::string ProjectivePoint::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? " : " : "") << coords_[i].get_str();
  os << ")";
  return os.str();
}

Scalar evaluate(const Polynomial& f, const ProjectivePoint& q) {
  return evaluate(f, std::span<const Scalar>(q.coords()));
}

bool vanishes_at(const Polynomial& f, const ProjectivePoint& q) { return evaluate(f, q) == 0; }

} // namespace ramify
