#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "itenc/codec.hpp"
#include "itenc/perm.hpp"
#include "itenc/tape.hpp"

namespace itenc {

struct EnumerationCaps {
  std::size_t bruteforce = 8;
  std::size_t codewords = 8;
};

struct AvoiderCount {
  std::uint64_t bruteforce = 0;
  std::uint64_t via_codewords = 0;

  friend bool operator==(const AvoiderCount&, const AvoiderCount&) = default;
};

// Sees every codeword run of the counting path with its tape afterwards.
// Called from worker threads when jobs > 1.
using TapeObserver = std::function<void(const Codeword&, const BoundedTape&)>;

// Path 1 filters permutations with the direct containment oracle; path 2
// runs the tape acceptor over every codeword with n insertions. `jobs`
// splits the codeword stream round-robin across threads.
AvoiderCount count_avoiders(std::size_t n, const Basis& basis, const EnumerationCaps& caps = {},
                            unsigned jobs = 1, const TapeObserver& observer = {});

class CountMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CountRow {
  std::size_t n = 0;
  std::uint64_t bruteforce = 0;
  std::uint64_t via_codewords = 0;
};

// Rows whose two count columns agree; construction throws CountMismatch
// otherwise.
class CountTable {
public:
  CountTable(Basis basis, std::vector<CountRow> rows);

  const Basis& basis() const { return basis_; }
  const std::vector<CountRow>& rows() const { return rows_; }
  std::vector<std::uint64_t> counts() const;

  // "n,brute,codeword" header, one row per length.
  std::string to_csv() const;
  std::string to_json() const;

private:
  Basis basis_;
  std::vector<CountRow> rows_;
};

CountTable sequence(const Basis& basis, std::size_t n_max, const EnumerationCaps& caps = {},
                    unsigned jobs = 1, const TapeObserver& observer = {});

// Legal codewords with n insertions, keyed by their number of t letters.
std::map<std::size_t, std::uint64_t> count_codewords_bivariate(std::size_t n_insertions,
                                                               std::size_t cap = 10);

std::string bivariate_csv(const std::map<std::size_t, std::uint64_t>& table);

using BigInt = boost::multiprecision::cpp_int;

// p(n) by Euler's pentagonal-number recurrence; n <= 10000.
BigInt partition_count(std::size_t n);

}  // namespace itenc
