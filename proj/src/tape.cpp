#include "itenc/tape.hpp"

#include <algorithm>

namespace itenc {

std::string to_string(const Cell& cell) {
  std::string out(1, cell.letter);
  switch (cell.mark) {
    case Mark::kNone: break;
    case Mark::kStar: out += '*'; break;
    case Mark::kDoubleStar: out += "**"; break;
    case Mark::kDagger: out += '+'; break;
  }
  return out;
}

BoundedTape::BoundedTape(std::string_view input) : cells_(input.size() + 1) {
  for (std::size_t i = 0; i < input.size(); ++i) cells_[i].letter = input[i];
  cells_.back().letter = kBlank;
  reset_metrics();
}

void BoundedTape::reset_metrics() {
  metrics_.steps = 0;
  metrics_.max_cells_touched = head_ + 1;
}

std::string BoundedTape::contents() const {
  std::string out;
  for (const auto& c : cells_) out += c.letter;
  while (!out.empty() && out.back() == kBlank) out.pop_back();
  return out;
}

bool BoundedTape::has_marks() const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return c.mark != Mark::kNone; });
}

}  // namespace itenc
