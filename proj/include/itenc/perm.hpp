#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace itenc {

// Thrown by generators when asked for more than their configured cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A permutation stored as ranks: entries are exactly {1, ..., n}.
class Permutation {
public:
  Permutation() = default;
  Permutation(std::initializer_list<int> ranks);
  explicit Permutation(std::vector<int> ranks);

  // Rank-normalizes any sequence of distinct values.
  template <typename T>
  static Permutation from_values(std::span<const T> values) {
    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      if (r > 0 && !(values[order[r - 1]] < values[order[r]]))
        throw std::invalid_argument("permutation values must be distinct");
      ranks[order[r]] = static_cast<int>(r + 1);
    }
    return Permutation(std::move(ranks));
  }

  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }
  auto begin() const { return ranks_.begin(); }
  auto end() const { return ranks_.end(); }

  // inverse()[v - 1] is the 0-based position of value v.
  std::vector<std::size_t> inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> ranks_;
};

// A nonempty, duplicate-free set of nonempty patterns, kept sorted.
class Basis {
public:
  Basis(std::initializer_list<Permutation> patterns);
  explicit Basis(std::vector<Permutation> patterns);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

private:
  std::vector<Permutation> patterns_;
};

bool order_isomorphic(const Permutation& p, const Permutation& q);

// Exhaustive subsequence search with prefix pruning.
bool contains_pattern(const Permutation& p, const Permutation& q);

bool avoids_basis(const Permutation& p, const Basis& basis);

inline constexpr std::size_t kDefaultPermutationCap = 10;

// Visits all n! permutations of {1..n} in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          std::size_t cap = kDefaultPermutationCap);

std::vector<Permutation> all_permutations(std::size_t n,
                                          std::size_t cap = kDefaultPermutationCap);

// Text form: decimal ranks separated by single spaces; empty line is the
// empty permutation.
std::string to_string(const Permutation& p);

// Throws std::invalid_argument naming the offending token.
Permutation parse_permutation(const std::string& text);

}  // namespace itenc
