#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace itenc::stackauto {

enum class State { kStart, kAccept, kFail };

std::string_view to_string(State s);

enum class Token : std::uint8_t { kRoot, kOne };

// Finite control plus a stack whose bottom entry is a root token. The
// cursor may descend into the stack read-only; push and pop happen only
// with the cursor on the top entry.
class StackMachine {
public:
  StackMachine() : stack_{Token::kRoot} {}

  State state() const { return state_; }
  void set_state(State s) { state_ = s; }

  std::size_t height() const { return stack_.size() - 1; }  // excludes root
  std::size_t cursor() const { return cursor_; }             // 0 is the root
  std::size_t depth() const { return height() - cursor_; }   // below the top
  Token at_cursor() const { return stack_[cursor_]; }
  bool cursor_at_root() const { return cursor_ == 0; }
  bool cursor_at_top() const { return cursor_ + 1 == stack_.size(); }

  void cursor_down();
  void cursor_to_top() { cursor_ = stack_.size() - 1; }
  void push(Token t);
  void pop();

  std::uint64_t pushes() const { return pushes_; }
  std::uint64_t pops() const { return pops_; }

private:
  State state_ = State::kStart;
  std::vector<Token> stack_;
  std::size_t cursor_ = 0;
  std::uint64_t pushes_ = 0;
  std::uint64_t pops_ = 0;
};

// Deterministic acceptor for the language of legal codewords. The stack
// height is #m - #f; a run of t's walks the cursor down and fails at root.
// Throws std::invalid_argument for letters outside lrmft.
bool accepts_E(std::string_view w, std::ostream* trace = nullptr);

// Accepts a^{i1} b^{i2} a^{i3} ... with 1 <= i1 <= i2 <= ..., either letter
// last. Throws std::invalid_argument for letters outside ab.
bool accepts_partition_lang(std::string_view w, std::ostream* trace = nullptr);

}  // namespace itenc::stackauto
