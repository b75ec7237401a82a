#include "itenc/perm.hpp"

#include <sstream>

namespace itenc {

namespace {

void check_ranks(const std::vector<int>& ranks) {
  std::vector<bool> seen(ranks.size() + 1, false);
  for (int r : ranks) {
    if (r < 1 || static_cast<std::size_t>(r) > ranks.size())
      throw std::invalid_argument("rank " + std::to_string(r) + " out of range 1.." +
                                  std::to_string(ranks.size()));
    if (seen[r]) throw std::invalid_argument("duplicate rank " + std::to_string(r));
    seen[r] = true;
  }
}

// Does placing p[idx] as the next element of the partial match keep the
// chosen subsequence order-isomorphic to q's prefix of the same length?
bool extends(const Permutation& p, const Permutation& q, const std::vector<std::size_t>& chosen,
             std::size_t idx) {
  const std::size_t j = chosen.size();
  for (std::size_t a = 0; a < j; ++a) {
    if ((p[chosen[a]] < p[idx]) != (q[a] < q[j])) return false;
  }
  return true;
}

bool search(const Permutation& p, const Permutation& q, std::vector<std::size_t>& chosen,
            std::size_t from) {
  if (chosen.size() == q.size()) return true;
  const std::size_t still_needed = q.size() - chosen.size();
  for (std::size_t i = from; i + still_needed <= p.size(); ++i) {
    if (!extends(p, q, chosen, i)) continue;
    chosen.push_back(i);
    if (search(p, q, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> ranks) : Permutation(std::vector<int>(ranks)) {}

Permutation::Permutation(std::vector<int> ranks) : ranks_(std::move(ranks)) { check_ranks(ranks_); }

std::vector<std::size_t> Permutation::inverse() const {
  std::vector<std::size_t> inv(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) inv[ranks_[i] - 1] = i;
  return inv;
}

Basis::Basis(std::initializer_list<Permutation> patterns)
    : Basis(std::vector<Permutation>(patterns)) {}

Basis::Basis(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("basis must contain at least one pattern");
  for (const auto& q : patterns_)
    if (q.empty()) throw std::invalid_argument("basis patterns must be nonempty");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool order_isomorphic(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if ((p[i] < p[j]) != (q[i] < q[j])) return false;
  return true;
}

bool contains_pattern(const Permutation& p, const Permutation& q) {
  if (q.size() > p.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(q.size());
  return search(p, q, chosen, 0);
}

bool avoids_basis(const Permutation& p, const Basis& basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [&](const Permutation& q) { return contains_pattern(p, q); });
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          std::size_t cap) {
  if (n > cap)
    throw CapExceeded("permutation length " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<int> ranks(n);
  for (std::size_t i = 0; i < n; ++i) ranks[i] = static_cast<int>(i + 1);
  do {
    visit(Permutation(ranks));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
}

std::vector<Permutation> all_permutations(std::size_t n, std::size_t cap) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::vector<int> ranks;
  for (std::string tok; in >> tok;) {
    if (tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("bad permutation token '" + tok + "'");
    tokens.push_back(tok);
    ranks.push_back(std::stoi(tok));
  }
  std::vector<bool> seen(ranks.size() + 1, false);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const int r = ranks[i];
    if (r < 1 || static_cast<std::size_t>(r) > ranks.size())
      throw std::invalid_argument("permutation token '" + tokens[i] + "' out of range 1.." +
                                  std::to_string(ranks.size()));
    if (seen[r]) throw std::invalid_argument("duplicate permutation token '" + tokens[i] + "'");
    seen[r] = true;
  }
  return Permutation(std::move(ranks));
}

}  // namespace itenc
