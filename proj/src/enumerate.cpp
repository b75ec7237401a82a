#include "itenc/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "itenc/codec.hpp"
#include "itenc/lba.hpp"
#include "json.hpp"

namespace itenc {

namespace {

std::uint64_t count_via_codewords(std::size_t n, const Basis& basis, std::size_t cap,
                                  unsigned jobs, const TapeObserver& observer) {
  if (n > cap)
    throw CapExceeded("codeword path length " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  jobs = std::max(1u, jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  auto worker = [&](unsigned id) {
    std::uint64_t index = 0;
    for_each_codeword(
        n,
        [&](const Codeword& w) {
          if (index++ % jobs != id) return;
          auto tape = lba::load(w);
          if (lba::accepts_basis(tape, basis)) ++partial[id];
          if (observer) observer(w, tape);
        },
        cap);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::string pattern_text(const Permutation& q) {
  std::string out;
  for (int v : q) out += std::to_string(v);
  return out;
}

}  // namespace

AvoiderCount count_avoiders(std::size_t n, const Basis& basis, const EnumerationCaps& caps,
                            unsigned jobs, const TapeObserver& observer) {
  if (n > caps.bruteforce)
    throw CapExceeded("brute-force length " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.bruteforce));
  if (n > caps.codewords)
    throw CapExceeded("codeword path length " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.codewords));
  // The empty permutation has no codeword; it avoids every nonempty pattern.
  if (n == 0) return {1, 1};

  AvoiderCount out;
  for_each_permutation(
      n, [&](const Permutation& p) { out.bruteforce += avoids_basis(p, basis) ? 1 : 0; },
      caps.bruteforce);
  out.via_codewords = count_via_codewords(n, basis, caps.codewords, jobs, observer);
  return out;
}

CountTable::CountTable(Basis basis, std::vector<CountRow> rows)
    : basis_(std::move(basis)), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.bruteforce != r.via_codewords)
      throw CountMismatch("count mismatch at n=" + std::to_string(r.n) + ": brute force " +
                          std::to_string(r.bruteforce) + ", codewords " +
                          std::to_string(r.via_codewords));
}

std::vector<std::uint64_t> CountTable::counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : rows_) out.push_back(r.bruteforce);
  return out;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,brute,codeword\n";
  for (const auto& r : rows_) out << r.n << ',' << r.bruteforce << ',' << r.via_codewords << '\n';
  return out.str();
}

std::string CountTable::to_json() const {
  nlohmann::json j;
  j["basis"] = nlohmann::json::array();
  for (const auto& q : basis_) j["basis"].push_back(pattern_text(q));
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows_)
    j["rows"].push_back({{"n", r.n}, {"brute", r.bruteforce}, {"codeword", r.via_codewords}});
  return j.dump(2) + "\n";
}

CountTable sequence(const Basis& basis, std::size_t n_max, const EnumerationCaps& caps,
                    unsigned jobs, const TapeObserver& observer) {
  std::vector<CountRow> rows;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto c = count_avoiders(n, basis, caps, jobs, observer);
    rows.push_back({n, c.bruteforce, c.via_codewords});
  }
  return CountTable(basis, std::move(rows));
}

std::map<std::size_t, std::uint64_t> count_codewords_bivariate(std::size_t n_insertions,
                                                               std::size_t cap) {
  std::map<std::size_t, std::uint64_t> table;
  for_each_codeword(
      n_insertions, [&](const Codeword& w) { ++table[w.translations()]; }, cap);
  return table;
}

std::string bivariate_csv(const std::map<std::size_t, std::uint64_t>& table) {
  std::ostringstream out;
  out << "t_count,words\n";
  for (const auto& [t, words] : table) out << t << ',' << words << '\n';
  return out.str();
}

BigInt partition_count(std::size_t n) {
  if (n > 10000) throw std::invalid_argument("partition_count supports n <= 10000");
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigInt sum = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    p[m] = sum;
  }
  return p[n];
}

}  // namespace itenc
