#pragma once

#include <cstddef>
#include <ostream>

#include "itenc/codec.hpp"
#include "itenc/perm.hpp"
#include "itenc/tape.hpp"

// Linear-space tape procedures over codewords. Each procedure runs as a
// head-movement program against BoundedTape primitives; positions of the
// cells under test (x, y, tuple members) are held in registers outside the
// tape, everything else is counted with marks.
namespace itenc::lba {

// Whether the entry inserted first lies left (12) or right (21) of the entry
// inserted second.
enum class PairOrder { k12, k21 };

template <typename T>
struct Run {
  T value;
  TapeMetrics metrics;
};

// Codeword on |w| cells followed by one blank.
BoundedTape load(const Codeword& w);

// Legality by pairing every m with its f and marking one t per enclosing
// pair in front of each insertion letter. Leaves the tape unmarked.
bool check_legal(BoundedTape& tape);

// Requires x < y, both insertion letters, and a legal unmarked word.
// Throws std::invalid_argument otherwise. Leaves the tape unmarked.
PairOrder compare(BoundedTape& tape, std::size_t x, std::size_t y);

// Rejects illegal words and words whose permutation contains q (q nonempty).
bool accepts_avoiding(BoundedTape& tape, const Permutation& q);

bool accepts_basis(BoundedTape& tape, const Basis& basis);

// Sieve on a tape holding n letters 'a' (plus the blank).
bool is_prime(BoundedTape& tape);

// Fresh-tape wrappers reporting the run's metrics.
Run<bool> tape_check_legal(const Codeword& w, std::ostream* trace = nullptr);
Run<PairOrder> tape_compare(const Codeword& w, std::size_t x, std::size_t y,
                            std::ostream* trace = nullptr);
Run<bool> tape_accepts_avoiding(const Codeword& w, const Permutation& q,
                                std::ostream* trace = nullptr);
Run<bool> tape_accepts_basis(const Codeword& w, const Basis& basis,
                             std::ostream* trace = nullptr);
Run<bool> tape_is_prime(std::size_t n, std::ostream* trace = nullptr);

// A legal codeword of exactly `length` letters (length >= 1) with many
// nested m..f pairs and long t-runs; used for step-count scaling.
Codeword scaling_word(std::size_t length);

}  // namespace itenc::lba
