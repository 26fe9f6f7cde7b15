#include "ramify/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ramify {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (unsigned p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    k_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> Partition {
    throw std::invalid_argument("malformed partition '" + text + "': " + what);
  };
  skip();
  if (pos >= text.size() || text[pos] != '(') return fail("expected '('");
  ++pos;
  std::vector<unsigned> parts;
  for (;;) {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return fail("expected a positive integer");
    unsigned long v = std::stoul(text.substr(start, pos - start));
    if (v == 0 || v > 1000) return fail("part out of range");
    parts.push_back(static_cast<unsigned>(v));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    return fail("expected ',' or ')'");
  }
  skip();
  if (pos != text.size()) return fail("trailing characters");
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(unsigned k) {
  if (k < 1) throw std::invalid_argument("partitions_of needs k >= 1");
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(k, k);
  return out;
}

namespace {

// Can the multiset `pieces` be split into groups with sums exactly `targets`?
// Targets are consumed largest-first; memoized on the remaining multisets.
class GroupingSearch {
public:
  bool solve(std::vector<unsigned> pieces, std::vector<unsigned> targets) {
    if (targets.empty()) return pieces.empty();
    std::sort(pieces.begin(), pieces.end(), std::greater<>());
    std::sort(targets.begin(), targets.end(), std::greater<>());
    auto key = std::make_pair(pieces, targets);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    unsigned target = targets.front();
    std::vector<unsigned> rest_targets(targets.begin() + 1, targets.end());
    bool ok = false;
    std::vector<bool> chosen(pieces.size(), false);
    // choose a sub-multiset of pieces summing to target, pieces in descending order
    std::function<bool(std::size_t, unsigned)> pick = [&](std::size_t from, unsigned left) -> bool {
      if (left == 0) {
        std::vector<unsigned> rest;
        for (std::size_t i = 0; i < pieces.size(); ++i)
          if (!chosen[i]) rest.push_back(pieces[i]);
        return solve(rest, rest_targets);
      }
      for (std::size_t i = from; i < pieces.size(); ++i) {
        if (pieces[i] > left) continue;
        // skip equal values already tried at this depth
        if (i > from && pieces[i] == pieces[i - 1] && !chosen[i - 1]) continue;
        chosen[i] = true;
        if (pick(i + 1, left - pieces[i])) return true;
        chosen[i] = false;
      }
      return false;
    };
    ok = pick(0, target);
    memo_[key] = ok;
    return ok;
  }

private:
  std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, bool> memo_;
};

} // namespace

bool is_coarsening(const Partition& mu, const Partition& lambda) {
  if (mu.k() != lambda.k())
    throw std::invalid_argument("is_coarsening: partitions of different integers");
  if (mu.e() > lambda.e()) return false;
  GroupingSearch search;
  return search.solve(lambda.parts(), mu.parts());
}

std::vector<Partition> strict_coarsenings(const Partition& lambda) {
  std::vector<Partition> out;
  for (auto& mu : partitions_of(lambda.k()))
    if (!(mu == lambda) && is_coarsening(mu, lambda)) out.push_back(std::move(mu));
  return out;
}

} // namespace ramify
