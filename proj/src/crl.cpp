#include "ramify/crl.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ramify/univariate.hpp"

namespace ramify {

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c != 0; });
  if (it == coeffs_.end()) throw std::invalid_argument("binary form cannot be zero");
  Scalar lead = *it;
  for (auto& c : coeffs_) c /= lead;
}

std::optional<BinaryForm> BinaryForm::from_polynomial(const Polynomial& f) {
  if (f.ring()->size() != 2) throw std::invalid_argument("binary form needs a two-variable ring");
  if (f.is_zero()) return std::nullopt;
  if (!f.is_homogeneous()) throw std::invalid_argument("binary form must be homogeneous");
  const unsigned k = static_cast<unsigned>(f.total_degree());
  std::vector<Scalar> coeffs(k + 1, Scalar(0));
  for (const auto& t : f.terms()) coeffs[t.monomial[1]] = t.coefficient;
  return BinaryForm(std::move(coeffs));
}

Polynomial BinaryForm::to_polynomial(const RingPtr& two_variables) const {
  if (two_variables->size() != 2) throw std::invalid_argument("binary form needs a two-variable ring");
  const unsigned k = degree();
  std::vector<Term> terms;
  for (unsigned j = 0; j <= k; ++j)
    if (coeffs_[j] != 0) terms.push_back({Monomial{k - j, j}, coeffs_[j]});
  return Polynomial(two_variables, std::move(terms));
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].get_str();
  os << "]";
  return os.str();
}

RingPtr coefficient_ring(unsigned k) { return make_indexed_ring("z", k + 1); }

namespace {

// coefficient lists (index j = power of y) of binary forms
using Coeffs = std::vector<Polynomial>;

Coeffs multiply(const Coeffs& a, const Coeffs& b, const RingPtr& ring) {
  Coeffs out(a.size() + b.size() - 1, Polynomial(ring));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coeffs power(const Coeffs& a, unsigned e, const RingPtr& ring) {
  Coeffs out{Polynomial::constant(ring, 1)};
  for (unsigned i = 0; i < e; ++i) out = multiply(out, a, ring);
  return out;
}

CrlIdeal compute(const Partition& lambda, const GroebnerOptions& options) {
  const unsigned k = lambda.k();
  std::map<unsigned, unsigned, std::greater<>> multiplicity;
  for (unsigned p : lambda.parts()) ++multiplicity[p];

  std::vector<std::string> names{"c"};
  std::vector<long> sugar{1};
  for (auto [r, m] : multiplicity) {
    for (unsigned i = 1; i <= m; ++i) {
      names.push_back("s" + std::to_string(r) + "_" + std::to_string(i));
      sugar.push_back(i);
    }
  }
  auto params = make_ring(names);

  Coeffs form{Polynomial::variable(params, 0)};
  std::size_t next = 1;
  for (auto [r, m] : multiplicity) {
    Coeffs g{Polynomial::constant(params, 1)};
    for (unsigned i = 0; i < m; ++i) g.push_back(Polynomial::variable(params, next++));
    form = multiply(form, power(g, r, params), params);
  }

  auto z = coefficient_ring(k);
  // z_j - c * (coefficient of weight j) is homogeneous when z_j weighs j + 1
  for (unsigned j = 0; j <= k; ++j) sugar.push_back(static_cast<long>(j) + 1);
  GroebnerOptions opts = options;
  opts.sugar_weights = sugar;
  Ideal kernel = ring_map_kernel(form, z, opts);

  std::vector<long> omega;
  for (unsigned j = 0; j <= k; ++j) omega.push_back(static_cast<long>(j));
  return CrlIdeal{lambda, Ideal(z, normalize_generators(kernel.generators())), omega};
}

std::mutex cache_mutex;
std::map<std::vector<unsigned>, CrlIdeal> cache;

} // namespace

CrlIdeal coincident_root_ideal(const Partition& lambda, const GroebnerOptions& options) {
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(lambda.parts()); it != cache.end()) return it->second;
  }
  CrlIdeal result = compute(lambda, options);
  std::lock_guard lock(cache_mutex);
  cache.emplace(lambda.parts(), result);
  return result;
}

std::vector<Polynomial> root_parametrization(const Partition& lambda) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= lambda.e(); ++i) {
    names.push_back("u" + std::to_string(i));
    names.push_back("v" + std::to_string(i));
  }
  auto ring = make_ring(names);
  Coeffs form{Polynomial::constant(ring, 1)};
  for (std::size_t i = 0; i < lambda.e(); ++i) {
    Coeffs linear{Polynomial::variable(ring, 2 * i), Polynomial::variable(ring, 2 * i + 1)};
    form = multiply(form, power(linear, lambda.parts()[i], ring), ring);
  }
  return form;
}

Partition multiplicity_partition(const BinaryForm& form) {
  const auto& a = form.coeffs();
  const unsigned k = form.degree();
  if (k == 0) throw std::invalid_argument("multiplicity partition of a constant form");
  unsigned m = 0;
  while (a[m] == 0) ++m;
  std::vector<unsigned> parts;
  if (m > 0) parts.push_back(m);
  if (m < k) {
    // dehomogenize at y = 1: coefficient of x^(k-j) is a_j
    std::vector<Scalar> coeffs(k - m + 1);
    for (unsigned j = m; j <= k; ++j) coeffs[k - j] = a[j];
    auto factors = squarefree_decomposition(UPoly(std::move(coeffs)));
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (int d = 0; d < factors[i].degree(); ++d) parts.push_back(static_cast<unsigned>(i + 1));
  }
  return Partition(std::move(parts));
}

bool in_X_lambda(const BinaryForm& form, const Partition& lambda) {
  if (form.degree() != lambda.k()) throw std::invalid_argument("binary form degree does not match partition");
  return is_coarsening(multiplicity_partition(form), lambda);
}

bool in_X_lambda_open(const BinaryForm& form, const Partition& lambda) {
  if (form.degree() != lambda.k()) throw std::invalid_argument("binary form degree does not match partition");
  return multiplicity_partition(form) == lambda;
}

} // namespace ramify
