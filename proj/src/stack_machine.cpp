#include "itenc/stack_machine.hpp"

#include <stdexcept>

namespace itenc::stackauto {

std::string_view to_string(State s) {
  switch (s) {
    case State::kStart: return "start";
    case State::kAccept: return "accept";
    case State::kFail: return "fail";
  }
  return "?";
}

void StackMachine::cursor_down() {
  if (cursor_ == 0) throw std::logic_error("cursor below root");
  --cursor_;
}

void StackMachine::push(Token t) {
  if (!cursor_at_top()) throw std::logic_error("push with cursor inside the stack");
  stack_.push_back(t);
  ++cursor_;
  ++pushes_;
}

void StackMachine::pop() {
  if (!cursor_at_top()) throw std::logic_error("pop with cursor inside the stack");
  if (stack_.size() == 1) throw std::logic_error("pop of root");
  stack_.pop_back();
  --cursor_;
  ++pops_;
}

namespace {

void trace_line(std::ostream* trace, char letter, std::string_view state, const StackMachine& m) {
  if (trace)
    *trace << letter << ' ' << state << " depth=" << m.depth() << " height=" << m.height()
           << '\n';
}

}  // namespace

bool accepts_E(std::string_view w, std::ostream* trace) {
  for (char c : w)
    if (c != 'l' && c != 'r' && c != 'm' && c != 'f' && c != 't')
      throw std::invalid_argument(std::string("invalid codeword letter '") + c + "'");

  StackMachine m;
  for (std::size_t i = 0; i < w.size() && m.state() == State::kStart; ++i) {
    switch (w[i]) {
      case 'l':
      case 'r':
        m.cursor_to_top();
        break;
      case 'm':
        m.cursor_to_top();
        m.push(Token::kOne);
        break;
      case 'f':
        // The f transitions branch on the top entry once the cursor is back up.
        m.cursor_to_top();
        if (m.at_cursor() == Token::kRoot)
          m.set_state(i + 1 == w.size() ? State::kAccept : State::kFail);
        else
          m.pop();
        break;
      case 't':
        if (m.cursor_at_root())
          m.set_state(State::kFail);
        else
          m.cursor_down();
        break;
    }
    trace_line(trace, w[i], to_string(m.state()), m);
  }
  return m.state() == State::kAccept;
}

bool accepts_partition_lang(std::string_view w, std::ostream* trace) {
  for (char c : w)
    if (c != 'a' && c != 'b')
      throw std::invalid_argument(std::string("invalid partition-language letter '") + c + "'");
  if (w.empty() || w.front() != 'a') return false;

  // The stack holds one token per letter of the previous block. A new block
  // walks the cursor down; on reaching the root it climbs back and pushes
  // one token per further letter.
  enum class Phase { kFill, kDescend, kGrow };
  Phase phase = Phase::kFill;
  char block = 'a';
  StackMachine m;  // root plays the role of the bottom marker

  for (char c : w) {
    if (c == block) {
      if (phase == Phase::kDescend) {
        if (m.cursor_at_root()) {
          m.cursor_to_top();
          m.push(Token::kOne);
          phase = Phase::kGrow;
        } else {
          m.cursor_down();
        }
      } else {
        m.push(Token::kOne);
      }
    } else {
      // Block boundary: the finished block must be at least as long as the stack.
      if (phase == Phase::kDescend && !m.cursor_at_root()) {
        m.set_state(State::kFail);
        trace_line(trace, c, to_string(m.state()), m);
        return false;
      }
      block = c;
      phase = Phase::kDescend;
      m.cursor_to_top();
      m.cursor_down();
    }
    trace_line(trace, c,
               phase == Phase::kFill ? "fill" : phase == Phase::kDescend ? "descend" : "grow", m);
  }
  const bool ok = phase != Phase::kDescend || m.cursor_at_root();
  m.set_state(ok ? State::kAccept : State::kFail);
  return ok;
}

}  // namespace itenc::stackauto
