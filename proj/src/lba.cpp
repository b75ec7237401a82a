#include "itenc/lba.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace itenc::lba {

namespace {

bool unmarked(const Cell& c, char letter) { return c.letter == letter && c.mark == Mark::kNone; }

// Head-movement helpers shared by the procedures. Every call goes through
// the tape primitives, so every movement is charged.
class Head {
public:
  explicit Head(BoundedTape& tape) : tape_(tape) {}

  Cell read() { return tape_.read(); }
  void left() { tape_.move_left(); }
  void right() { tape_.move_right(); }
  void mark(Mark m) { tape_.write_mark(m); }
  bool at_left_edge() const { return tape_.at_left_edge(); }
  std::size_t pos() const { return tape_.head(); }

  void to_left_edge() {
    while (!tape_.at_left_edge()) tape_.move_left();
  }

  void seek(std::size_t target) {
    while (tape_.head() < target) tape_.move_right();
    while (tape_.head() > target) tape_.move_left();
  }

  // Scans left from the current cell (inclusive) for a starred cell.
  bool star_at_or_left() {
    for (;;) {
      if (read().mark == Mark::kStar) return true;
      if (at_left_edge()) return false;
      left();
    }
  }

  bool star_strictly_left() {
    if (at_left_edge()) return false;
    left();
    return star_at_or_left();
  }

  void clear_all_marks() {
    to_left_edge();
    for (;;) {
      const Cell c = read();
      if (c.mark != Mark::kNone) mark(Mark::kNone);
      if (c.letter == BoundedTape::kBlank) return;
      right();
    }
  }

private:
  BoundedTape& tape_;
};

// --- legality -------------------------------------------------------------

// Head on an insertion letter z. Stars one unmarked t of the run in front
// of z, if the run still has one, and comes back to z.
void mark_one_t_before(Head& h) {
  bool moved = false;
  while (!h.at_left_edge()) {
    h.left();
    moved = true;
    const Cell c = h.read();
    if (c.letter != 't') break;
    if (c.mark == Mark::kNone) {
      h.mark(Mark::kStar);
      break;
    }
  }
  if (!moved) return;
  do h.right();
  while (h.read().letter == 't');
}

bool legal_scan(Head& h) {
  // Pair each m with its f, innermost first.
  for (;;) {
    h.to_left_edge();
    Cell c = h.read();
    while (c.letter != BoundedTape::kBlank && !unmarked(c, 'm')) {
      h.right();
      c = h.read();
    }
    if (c.letter == BoundedTape::kBlank) break;

    for (;;) {
      h.right();
      c = h.read();
      if (c.letter == BoundedTape::kBlank) return false;  // m without f
      if (unmarked(c, 'f')) break;
    }
    h.mark(Mark::kDagger);  // end of this pair's span
    do h.left();
    while (!unmarked(h.read(), 'm'));
    h.mark(Mark::kStar);

    // One t in front of every insertion letter after m, up to and
    // including the closing f.
    for (;;) {
      h.right();
      c = h.read();
      if (c.letter == 't') continue;
      mark_one_t_before(h);
      if (c.mark == Mark::kDagger) {
        h.mark(Mark::kStar);
        break;
      }
    }
  }

  // Leftovers: no m, no t, and exactly one f which is the last letter.
  h.to_left_edge();
  for (;;) {
    const Cell c = h.read();
    if (c.letter == BoundedTape::kBlank) return false;
    if (c.mark == Mark::kNone) {
      if (c.letter == 'm' || c.letter == 't') return false;
      if (c.letter == 'f') {
        h.right();
        return h.read().letter == BoundedTape::kBlank;
      }
    }
    h.right();
  }
}

// --- pair comparison ------------------------------------------------------

// Head at insertion letter z. Pairs each t of z's run with a distinct
// star (t gets a dagger, the star becomes a double star) and reports
// whether some star is left over, i.e. whether z's target slot lies left
// of the tracked entry. Restores daggers and double stars, ends at z.
bool more_stars_than_run(Head& h) {
  const std::size_t z = h.pos();
  bool left_of_entry = false;
  for (;;) {
    if (h.at_left_edge()) break;
    h.left();
    if (h.read().letter != 't') {
      left_of_entry = h.star_at_or_left();
      break;
    }
    h.mark(Mark::kDagger);
    if (!h.star_strictly_left()) break;
    h.mark(Mark::kDoubleStar);
    do h.right();
    while (h.read().mark != Mark::kDagger);
  }

  h.to_left_edge();
  for (;;) {
    const Cell c = h.read();
    if (c.mark == Mark::kDagger) h.mark(Mark::kNone);
    if (c.mark == Mark::kDoubleStar) h.mark(Mark::kStar);
    if (h.pos() == z) break;
    h.right();
  }
  return left_of_entry;
}

// The star count is the number of open slots left of the entry x inserted.
PairOrder compare_walk(Head& h, std::size_t x, std::size_t y) {
  h.seek(x);
  const char x_letter = h.read().letter;
  bool any_star = false;
  while (!h.at_left_edge()) {
    h.left();
    if (h.read().letter != 't') break;
    h.mark(Mark::kStar);
    any_star = true;
  }
  h.seek(x);
  if (x_letter == 'r' || x_letter == 'm') {
    h.mark(Mark::kStar);
    any_star = true;
  }
  if (!any_star) return PairOrder::k12;

  for (std::size_t z = x + 1; z < y; ++z) {
    h.right();
    const char letter = h.read().letter;
    if (letter != 'm' && letter != 'f') continue;
    if (!more_stars_than_run(h)) continue;
    if (letter == 'm') {
      h.mark(Mark::kStar);
      continue;
    }
    // An f filled a slot left of the entry: drop the rightmost star.
    while (h.read().mark != Mark::kStar) h.left();
    h.mark(Mark::kNone);
    if (!h.star_at_or_left()) return PairOrder::k12;
    h.seek(z);
  }
  h.right();
  return more_stars_than_run(h) ? PairOrder::k21 : PairOrder::k12;
}

void require_compare_preconditions(const BoundedTape& tape, std::size_t x, std::size_t y) {
  if (!(x < y)) throw std::invalid_argument("compare requires x < y");
  if (y + 1 >= tape.capacity()) throw std::invalid_argument("compare cell out of range");
  if (!is_insertion(tape.peek(x).letter) || !is_insertion(tape.peek(y).letter))
    throw std::invalid_argument("compare cells must hold insertion letters");
  if (tape.has_marks()) throw std::invalid_argument("compare requires an unmarked tape");
  const std::string word = tape.contents();
  for (char c : word)
    if (!is_codeword_letter(c)) throw std::invalid_argument("tape does not hold a codeword");
  if (!validate(Codeword(word)))
    throw std::invalid_argument("compare requires a legal codeword");
}

PairOrder compare_unchecked(BoundedTape& tape, std::size_t x, std::size_t y) {
  Head h(tape);
  const PairOrder order = compare_walk(h, x, y);
  h.clear_all_marks();
  return order;
}

// Depth-first over increasing tuples of insertion cells; a tuple is
// extended only while every pair agrees with q's relative order.
bool find_occurrence(BoundedTape& tape, const std::vector<std::size_t>& cells,
                     const std::vector<std::size_t>& where_in_q, std::vector<std::size_t>& chosen,
                     std::size_t from) {
  const std::size_t k = where_in_q.size();
  if (chosen.size() == k) return true;
  const std::size_t j = chosen.size();
  for (std::size_t i = from; i + (k - j) <= cells.size(); ++i) {
    bool agrees = true;
    for (std::size_t a = 0; a < j && agrees; ++a) {
      const PairOrder want = where_in_q[a] < where_in_q[j] ? PairOrder::k12 : PairOrder::k21;
      agrees = compare_unchecked(tape, cells[chosen[a]], cells[i]) == want;
    }
    if (!agrees) continue;
    chosen.push_back(i);
    if (find_occurrence(tape, cells, where_in_q, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// --- primes -----------------------------------------------------------------

// Ruler: cells left of the divisor (dagger once counted); the divisor
// itself is star, or double star once counted. Cells right of the divisor
// are dagger (passed) or star (stride ends).
bool sieve(Head& h) {
  h.to_left_edge();
  if (h.read().letter == BoundedTape::kBlank) return false;
  h.right();
  if (h.read().letter == BoundedTape::kBlank) return false;  // n = 1
  h.mark(Mark::kStar);

  for (;;) {
    // Divisor on the last a: every smaller divisor failed.
    h.right();
    if (h.read().letter == BoundedTape::kBlank) return true;
    h.left();

    bool divides = false;
    for (;;) {
      h.to_left_edge();
      Cell c = h.read();
      while (c.mark == Mark::kDagger) {
        h.right();
        c = h.read();
      }
      if (c.mark == Mark::kDoubleStar) {
        // Stride complete: its last cell becomes a stride mark.
        do {
          h.right();
          c = h.read();
        } while (c.letter != BoundedTape::kBlank && c.mark != Mark::kNone);
        h.left();
        h.mark(Mark::kStar);
        if (c.letter == BoundedTape::kBlank) {
          divides = true;
          break;
        }
        h.to_left_edge();
        for (;;) {
          c = h.read();
          if (c.mark == Mark::kDoubleStar) {
            h.mark(Mark::kStar);
            break;
          }
          h.mark(Mark::kNone);
          h.right();
        }
        continue;
      }
      h.mark(c.mark == Mark::kStar ? Mark::kDoubleStar : Mark::kDagger);
      while (c.mark != Mark::kStar && c.mark != Mark::kDoubleStar) {
        h.right();
        c = h.read();
      }
      do {
        h.right();
        c = h.read();
      } while (c.letter != BoundedTape::kBlank && c.mark != Mark::kNone);
      if (c.letter == BoundedTape::kBlank) break;  // partial stride
      h.mark(Mark::kDagger);
    }
    if (divides) return false;

    // Next divisor: clear everything, moving the divisor mark one cell right.
    h.to_left_edge();
    for (;;) {
      const Cell c = h.read();
      if (c.mark == Mark::kStar || c.mark == Mark::kDoubleStar) {
        h.mark(Mark::kNone);
        h.right();
        h.mark(Mark::kStar);
        break;
      }
      if (c.mark != Mark::kNone) h.mark(Mark::kNone);
      h.right();
    }
    const std::size_t divisor = h.pos();
    for (;;) {
      h.right();
      const Cell c = h.read();
      if (c.letter == BoundedTape::kBlank) break;
      if (c.mark != Mark::kNone) h.mark(Mark::kNone);
    }
    h.seek(divisor);
  }
}

template <typename T>
Run<T> finish(T value, const BoundedTape& tape) {
  return {value, tape.metrics()};
}

}  // namespace

BoundedTape load(const Codeword& w) { return BoundedTape(w.str()); }

bool check_legal(BoundedTape& tape) {
  Head h(tape);
  const bool legal = legal_scan(h);
  h.clear_all_marks();
  return legal;
}

PairOrder compare(BoundedTape& tape, std::size_t x, std::size_t y) {
  require_compare_preconditions(tape, x, y);
  return compare_unchecked(tape, x, y);
}

bool accepts_avoiding(BoundedTape& tape, const Permutation& q) {
  if (q.empty()) throw std::invalid_argument("pattern must be nonempty");
  if (!check_legal(tape)) return false;

  Head h(tape);
  std::vector<std::size_t> cells;
  h.to_left_edge();
  for (;;) {
    const Cell c = h.read();
    if (c.letter == BoundedTape::kBlank) break;
    if (c.letter != 't') cells.push_back(h.pos());
    h.right();
  }
  if (q.size() > cells.size()) return true;

  std::vector<std::size_t> chosen;
  chosen.reserve(q.size());
  return !find_occurrence(tape, cells, q.inverse(), chosen, 0);
}

bool accepts_basis(BoundedTape& tape, const Basis& basis) {
  for (const auto& q : basis)
    if (!accepts_avoiding(tape, q)) return false;
  return true;
}

bool is_prime(BoundedTape& tape) {
  Head h(tape);
  return sieve(h);
}

Run<bool> tape_check_legal(const Codeword& w, std::ostream* trace) {
  auto tape = load(w);
  tape.set_trace(trace);
  const bool legal = check_legal(tape);
  return finish(legal, tape);
}

Run<PairOrder> tape_compare(const Codeword& w, std::size_t x, std::size_t y,
                            std::ostream* trace) {
  auto tape = load(w);
  tape.set_trace(trace);
  const PairOrder order = compare(tape, x, y);
  return finish(order, tape);
}

Run<bool> tape_accepts_avoiding(const Codeword& w, const Permutation& q, std::ostream* trace) {
  auto tape = load(w);
  tape.set_trace(trace);
  const bool accepted = accepts_avoiding(tape, q);
  return finish(accepted, tape);
}

Run<bool> tape_accepts_basis(const Codeword& w, const Basis& basis, std::ostream* trace) {
  auto tape = load(w);
  tape.set_trace(trace);
  const bool accepted = accepts_basis(tape, basis);
  return finish(accepted, tape);
}

Run<bool> tape_is_prime(std::size_t n, std::ostream* trace) {
  if (n == 0) throw std::invalid_argument("tape_is_prime requires n >= 1");
  BoundedTape tape(std::string(n, 'a'));
  tape.set_trace(trace);
  const bool prime = is_prime(tape);
  return finish(prime, tape);
}

Codeword scaling_word(std::size_t length) {
  if (length == 0) throw std::invalid_argument("scaling_word requires length >= 1");
  const std::size_t opens = (length - 1) / 3;
  std::size_t spare = length - (2 * opens + 1);
  // The j-th f (0-based) sees opens + 1 - j slots, so at most opens - j t's.
  std::vector<std::size_t> runs(opens + 1, 0);
  for (bool placed = true; spare > 0 && placed;) {
    placed = false;
    for (std::size_t j = 0; j <= opens && spare > 0; ++j) {
      if (runs[j] < opens - j) {
        ++runs[j];
        --spare;
        placed = true;
      }
    }
  }
  std::string word(spare, 'l');
  word.append(opens, 'm');
  for (std::size_t j = 0; j <= opens; ++j) {
    word.append(runs[j], 't');
    word += 'f';
  }
  return Codeword(word);
}

}  // namespace itenc::lba
