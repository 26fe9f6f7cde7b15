#include "ramify/ring.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ramify/errors.hpp"

namespace ramify {

std::string to_string(const Scalar& value) { return value.get_str(); }

Ring::Ring(std::vector<std::string> names, std::size_t distinguished)
    : names_(std::move(names)), distinguished_(distinguished) {
  if (names_.size() > kMaxVariables) {
    throw LimitExceeded("ring has " + std::to_string(names_.size()) +
                        " variables; at most " + std::to_string(kMaxVariables) +
                        " supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  if (!names_.empty() && distinguished_ >= names_.size()) {
    throw std::invalid_argument("distinguished variable index out of range");
  }
}

std::size_t Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool Ring::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr make_ring(std::vector<std::string> names, std::size_t distinguished) {
  return std::make_shared<const Ring>(std::move(names), distinguished);
}

RingPtr make_indexed_ring(const std::string& prefix, std::size_t count,
                          std::size_t distinguished) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names), distinguished);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Monomial

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw LimitExceeded("too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFF) throw LimitExceeded("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
  if (e != 0) support_ |= std::uint32_t{1} << i;
  else support_ &= ~(std::uint32_t{1} << i);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 0xFFFF) throw LimitExceeded("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  r.support_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = exps_[i] - other.exps_[i];
    if (r.exps_[i] != 0) r.support_ |= std::uint32_t{1} << i;
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.degree_ > degree_ || (other.support_ & ~support_) != 0) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (other.exps_[i] > exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  r.support_ = a.support_ | b.support_;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) { return (a.support_ & b.support_) == 0; }

std::uint64_t Monomial::word(std::size_t w) const {
  std::uint64_t v;
  std::memcpy(&v, exps_.data() + 4 * w, sizeof v);
  return v;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

// MonomialOrder

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::deglex() {
  MonomialOrder o;
  o.kind_ = Kind::DegLex;
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<bool> eliminated) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.eliminated_ = std::move(eliminated);
  for (std::size_t i = 0; i < o.eliminated_.size(); ++i) {
    if (!o.eliminated_[i]) continue;
    o.block_mask_ |= std::uint64_t{1} << i;
    o.block_lanes_[i / 4] |= std::uint64_t{0xFFFF} << (16 * (i % 4));
  }
  return o;
}

MonomialOrder MonomialOrder::elimination_of(std::size_t var, std::size_t nvars) {
  std::vector<bool> mask(nvars, false);
  mask.at(var) = true;
  return elimination(std::move(mask));
}

MonomialOrder MonomialOrder::weighted(std::vector<long> weights, Kind tiebreak) {
  if (tiebreak != Kind::Lex && tiebreak != Kind::DegRevLex && tiebreak != Kind::DegLex)
    throw std::invalid_argument("weighted order tiebreak must be lex, deglex or degrevlex");
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.tiebreak_ = tiebreak;
  o.weights_ = std::move(weights);
  return o;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int cmp_deglex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  return cmp_lex(a, b);
}

// Reverse scan: sign of the comparison decided by the last differing
// exponent among the lanes selected by `lanes`; 0 if none differ.
int revlex_scan(const Monomial& a, const Monomial& b, const std::uint64_t* lanes) {
  const std::size_t words = (a.size() + 3) / 4;
  for (std::size_t w = words; w-- > 0;) {
    std::uint64_t x = (a.word(w) ^ b.word(w));
    if (lanes) x &= lanes[w];
    if (x == 0) continue;
    std::size_t idx = 4 * w + (63 - std::countl_zero(x)) / 16;
    return a[idx] < b[idx] ? 1 : -1;
  }
  return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  return revlex_scan(a, b, nullptr);
}

// degrevlex on the eliminated block, then degrevlex on the rest
int cmp_elimination(const Monomial& a, const Monomial& b, std::uint64_t mask,
                    const std::array<std::uint64_t, kMaxVariables / 4>& block_lanes) {
  long da = 0, db = 0;
  for (std::uint64_t m = mask & (a.support() | b.support()); m != 0; m &= m - 1) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  if (int c = revlex_scan(a, b, block_lanes.data()); c != 0) return c;
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  std::array<std::uint64_t, kMaxVariables / 4> rest;
  for (std::size_t w = 0; w < rest.size(); ++w) rest[w] = ~block_lanes[w];
  return revlex_scan(a, b, rest.data());
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
  case Kind::Lex:
    return cmp_lex(a, b);
  case Kind::DegLex:
    return cmp_deglex(a, b);
  case Kind::DegRevLex:
    return cmp_degrevlex(a, b);
  case Kind::Elimination: {
    if (eliminated_.size() != a.size())
      throw std::invalid_argument("elimination order block size does not match ring");
    return cmp_elimination(a, b, block_mask_, block_lanes_);
  }
  case Kind::Weighted: {
    if (weights_.size() != a.size())
      throw std::invalid_argument("weight vector length does not match ring");
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += weights_[i] * long(a[i]);
      wb += weights_[i] * long(b[i]);
    }
    if (wa != wb) return wa > wb ? 1 : -1;
    switch (tiebreak_) {
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::DegLex:
      return cmp_deglex(a, b);
    default:
      return cmp_degrevlex(a, b);
    }
  }
  }
  return 0;
}

MonomialOrder MonomialOrder::induced() const {
  if (kind_ == Kind::Elimination) return degrevlex();
  return *this;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
  case Kind::Lex:
    return "lex";
  case Kind::DegLex:
    return "deglex";
  case Kind::DegRevLex:
    return "degrevlex";
  case Kind::Elimination: {
    std::ostringstream os;
    os << "elimination[";
    bool first = true;
    for (std::size_t i = 0; i < eliminated_.size(); ++i) {
      if (!eliminated_[i]) continue;
      os << (first ? "" : ",") << i;
      first = false;
    }
    os << "]";
    return os.str();
  }
  case Kind::Weighted: {
    std::ostringstream os;
    os << "weighted(";
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << ")";
    return os.str();
  }
  }
  return "?";
}

} // namespace ramify
