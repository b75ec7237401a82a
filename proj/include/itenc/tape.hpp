#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace itenc {

// Mark overlay, kept apart from the base letter so that restoring the input
// is just clearing marks.
enum class Mark : std::uint8_t { kNone, kStar, kDoubleStar, kDagger };

struct Cell {
  char letter = ' ';
  Mark mark = Mark::kNone;

  friend bool operator==(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

// Raised when a primitive would leave the tape. Always a machine bug.
class TapeFault : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct TapeMetrics {
  std::uint64_t steps = 0;
  std::size_t max_cells_touched = 0;
};

// Fixed-capacity tape with a single head. Every primitive (move, read,
// write) costs exactly one step; max_cells_touched is the furthest extent
// of the head measured from cell 0. The first cell carries the left-end
// marker, so at_left_edge() is free.
class BoundedTape {
public:
  static constexpr char kBlank = '_';

  // Lays out `input` followed by one blank cell: capacity |input| + 1.
  explicit BoundedTape(std::string_view input);

  std::size_t capacity() const { return cells_.size(); }
  std::size_t head() const { return head_; }
  bool at_left_edge() const { return head_ == 0; }

  void move_left();
  void move_right();
  Cell read();
  void write_mark(Mark mark);
  void write_letter(char letter);

  TapeMetrics metrics() const { return metrics_; }
  void reset_metrics();

  // Inspection from outside the machine; charges nothing.
  const Cell& peek(std::size_t i) const { return cells_.at(i); }
  // Base letters of every cell before the trailing blank.
  std::string contents() const;
  bool has_marks() const;

  // One line per primitive: step, head, primitive, cell before -> after.
  void set_trace(std::ostream* out) { trace_ = out; }

private:
  void charge(std::string_view primitive, const Cell& before);

  std::vector<Cell> cells_;
  std::size_t head_ = 0;
  TapeMetrics metrics_;
  std::ostream* trace_ = nullptr;
};

inline void BoundedTape::charge(std::string_view primitive, const Cell& before) {
  ++metrics_.steps;
  if (head_ + 1 > metrics_.max_cells_touched) metrics_.max_cells_touched = head_ + 1;
  if (trace_)
    *trace_ << metrics_.steps << ' ' << head_ << ' ' << primitive << ' ' << to_string(before)
            << " -> " << to_string(cells_[head_]) << '\n';
}

inline void BoundedTape::move_left() {
  if (head_ == 0) throw TapeFault("move-left past cell 0");
  --head_;
  charge("move-left", cells_[head_]);
}

inline void BoundedTape::move_right() {
  if (head_ + 1 >= cells_.size())
    throw TapeFault("move-right past capacity " + std::to_string(cells_.size()));
  ++head_;
  charge("move-right", cells_[head_]);
}

inline Cell BoundedTape::read() {
  charge("read", cells_[head_]);
  return cells_[head_];
}

inline void BoundedTape::write_mark(Mark mark) {
  const Cell before = cells_[head_];
  cells_[head_].mark = mark;
  charge("write-mark", before);
}

inline void BoundedTape::write_letter(char letter) {
  const Cell before = cells_[head_];
  cells_[head_].letter = letter;
  charge("write-letter", before);
}

}  // namespace itenc
