#pragma once

#include <string>
#include <vector>

namespace ramify {

/// Weakly decreasing positive parts. The empty partition is not allowed.
class Partition {
public:
  /// Sorts the parts descending; throws on nonpositive or empty input.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  /// Sum of the parts.
  unsigned k() const { return k_; }
  /// Number of parts.
  std::size_t e() const { return parts_.size(); }

  /// "(2,1,1)".
  std::string str() const;
  /// Parses "(2,1,1)"; whitespace allowed.
  static Partition parse(const std::string& text);

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
  std::vector<unsigned> parts_;
  unsigned k_ = 0;
};

/// All partitions of k in reverse-lexicographic order: (k) first, (1,...,1) last.
std::vector<Partition> partitions_of(unsigned k);

/// True iff mu arises from lambda by merging parts (lambda refines mu).
/// Reflexive: is_coarsening(lambda, lambda) holds.
bool is_coarsening(const Partition& mu, const Partition& lambda);

/// Every mu != lambda with is_coarsening(mu, lambda), in partitions_of order.
std::vector<Partition> strict_coarsenings(const Partition& lambda);

} // namespace ramify
