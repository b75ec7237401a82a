#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itenc/perm.hpp"

namespace itenc {

inline bool is_codeword_letter(char c) {
  return c == 'l' || c == 'r' || c == 'm' || c == 'f' || c == 't';
}

inline bool is_insertion(char c) { return c == 'l' || c == 'r' || c == 'm' || c == 'f'; }

// A word over {l, r, m, f, t}. Construction checks the alphabet only;
// legality is the job of validate().
class Codeword {
public:
  Codeword() = default;
  explicit Codeword(std::string letters);
  Codeword(const char* letters) : Codeword(std::string(letters)) {}

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::size_t insertions() const;
  std::size_t translations() const { return size() - insertions(); }

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
  std::string letters_;
};

enum class Reason {
  kLegal,
  kEmptyWord,
  kTrailingNonF,
  kTOverflow,
  kPrematureSlotExhaustion,
  kUnfilledSlots,
};

std::string_view reason_code(Reason r);

struct Validation {
  bool legal = false;
  Reason reason = Reason::kEmptyWord;
  // Index of the letter that triggered the verdict (size() for end-of-word).
  std::size_t at = 0;

  explicit operator bool() const { return legal; }
};

// Left-to-right scan keeping slots = 1 + #m - #f.
Validation validate(const Codeword& w);

class IllegalCodeword : public std::invalid_argument {
public:
  IllegalCodeword(const Codeword& w, Reason reason);
  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

// Partially built permutation: filled entries and open slots, left to right.
class SlotConfiguration {
public:
  static constexpr int kSlot = 0;

  SlotConfiguration() : items_{kSlot} {}

  // Applies one codeword letter. Throws std::logic_error when the letter
  // targets a slot that does not exist.
  void apply(char letter);

  // Elements are entries (>= 1) or kSlot.
  const std::vector<int>& items() const { return items_; }
  int next_entry() const { return next_entry_; }
  std::size_t next_slot() const { return next_slot_; }
  std::size_t slot_count() const { return slot_count_; }

private:
  std::vector<int> items_;
  int next_entry_ = 1;
  std::size_t next_slot_ = 1;
  std::size_t slot_count_ = 1;
};

// Throws IllegalCodeword if validate(w) fails.
Permutation decode(const Codeword& w);

// Requires p nonempty.
Codeword encode(const Permutation& p);

inline constexpr std::size_t kDefaultCodewordCap = 10;

// Every legal codeword with exactly n insertion letters, by backtracking on
// the slot count. Exactly n! words for n >= 1.
void for_each_codeword(std::size_t n, const std::function<void(const Codeword&)>& visit,
                       std::size_t cap = kDefaultCodewordCap);

std::vector<Codeword> codewords_with_insertions(std::size_t n,
                                                std::size_t cap = kDefaultCodewordCap);

// Throws std::invalid_argument naming the first letter outside lrmft.
Codeword parse_codeword(const std::string& text);

}  // namespace itenc
