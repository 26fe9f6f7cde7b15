#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramify/ring.hpp"

namespace ramify {

struct Term {
  Monomial monomial;
  Scalar coefficient;

  bool operator==(const Term& other) const = default;
};

/// Degree of the zero polynomial in any variable.
inline constexpr int kNegInfinity = INT_MIN;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending under deglex with no zero coefficients,
/// so two polynomials are equal iff their term vectors are equal.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring);
  /// Builds from arbitrary terms; sorts and merges duplicates.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Maximum total degree; kNegInfinity for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Leading term under deglex. Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  Scalar coefficient_of(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned exponent) const;

  /// Multiplies by a monomial times a scalar.
  Polynomial times(const Monomial& m, const Scalar& c) const;

  /// Integer-content-free representative with positive leading coefficient.
  Polynomial normalized() const;

  bool operator==(const Polynomial& other) const;

  /// Human readable form, e.g. "x0^2 - x1*x2".
  std::string str() const;

private:
  void check_ring(const Polynomial& other) const;
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 const Scalar& b_scale);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Maximum exponent of variable `var`; kNegInfinity for the zero polynomial.
int deg_in(const Polynomial& f, std::size_t var);
int deg_in(const Polynomial& f, const std::string& var);

/// Coefficient of var^deg_in(f, var); a polynomial free of `var`.
Polynomial leading_coefficient_in(const Polynomial& f, std::size_t var);

/// (f_0, ..., f_k) with f = sum f_i var^(k-i).
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var, int k);

/// Inverse of coefficients_in.
Polynomial assemble_in(const std::vector<Polynomial>& coeffs, std::size_t var);

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);

/// Ring homomorphism image: variable i of f's ring goes to images[i].
/// All images must share a ring (the target).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images);

/// Same polynomial viewed in `target`, variables matched by name.
Polynomial rebase(const Polynomial& f, const RingPtr& target);

/// Weight-degree when every term has the same weight-degree.
/// Returns 0 for the zero polynomial.
std::optional<long> weighted_degree(const Polynomial& f, std::span<const long> weights);
bool is_weighted_homogeneous(const Polynomial& f, std::span<const long> weights);

/// Leading term under an arbitrary order (not the storage order).
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

bool involves(const Polynomial& f, std::size_t var);

/// Normalizes every generator and drops zeros and duplicates, keeping first
/// occurrences in order.
std::vector<Polynomial> normalize_generators(const std::vector<Polynomial>& gens);

} // namespace ramify
