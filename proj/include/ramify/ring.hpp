#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ramify {

/// Exact rational number; gmp keeps it in lowest terms with positive
/// denominator after every arithmetic operation.
using Scalar = mpq_class;

std::string to_string(const Scalar& value);

/// Maximum number of variables a ring may have.
inline constexpr std::size_t kMaxVariables = 32;

/// Ordered variable list plus the distinguished (projection) variable.
class Ring {
public:
  Ring(std::vector<std::string> names, std::size_t distinguished = 0);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t distinguished() const { return distinguished_; }

  /// Index of a variable, throwing std::invalid_argument if unknown.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool operator==(const Ring& other) const {
    return names_ == other.names_ && distinguished_ == other.distinguished_;
  }

private:
  std::vector<std::string> names_;
  std::size_t distinguished_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::size_t distinguished = 0);

/// Variables "prefix0", ..., "prefix{count-1}".
RingPtr make_indexed_ring(const std::string& prefix, std::size_t count,
                          std::size_t distinguished = 0);

/// Same context: identical pointer or identical variable list.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector with inline storage and cached total degree.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exps_ == other.exps_;
  }

  std::size_t hash() const;
  std::uint32_t support() const { return support_; }
  /// Exponents packed four per 64-bit word, lane i % 4 of word i / 4.
  std::uint64_t word(std::size_t w) const;

private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
  // bit i set iff exponent i is nonzero
  std::uint32_t support_ = 0;
};

/// Total monomial orders used by Groebner computations.
///
/// Elimination orders compare the degrevlex restriction to the eliminated
/// block first and break ties with degrevlex on the remaining variables, so
/// any monomial involving an eliminated variable exceeds every monomial in
/// the others. Weighted orders compare the weight-degree and fall back to a
/// tiebreak order (lex or degrevlex).
class MonomialOrder {
public:
  enum class Kind { Lex, DegRevLex, DegLex, Elimination, Weighted };

  static MonomialOrder lex();
  static MonomialOrder degrevlex();
  static MonomialOrder deglex();
  /// `eliminated[i]` marks variable i as part of the eliminated block.
  static MonomialOrder elimination(std::vector<bool> eliminated);
  /// Eliminate exactly one variable (the distinguished variable, typically).
  static MonomialOrder elimination_of(std::size_t var, std::size_t nvars);
  static MonomialOrder weighted(std::vector<long> weights, Kind tiebreak = Kind::DegRevLex);

  Kind kind() const { return kind_; }
  const std::vector<bool>& eliminated() const { return eliminated_; }
  const std::vector<long>& weights() const { return weights_; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Order on the remaining variables induced by an elimination order.
  MonomialOrder induced() const;

  std::string describe() const;

  bool operator==(const MonomialOrder& other) const = default;

private:
  Kind kind_ = Kind::DegRevLex;
  Kind tiebreak_ = Kind::DegRevLex;
  std::vector<bool> eliminated_;
  std::uint64_t block_mask_ = 0;
  // 0xFFFF in every 16-bit lane of an eliminated variable
  std::array<std::uint64_t, kMaxVariables / 4> block_lanes_{};
  std::vector<long> weights_;
};

} // namespace ramify
