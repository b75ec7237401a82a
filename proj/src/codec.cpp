#include "itenc/codec.hpp"

#include <algorithm>

namespace itenc {

Codeword::Codeword(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (!is_codeword_letter(c))
      throw std::invalid_argument(std::string("invalid codeword letter '") + c + "'");
}

std::size_t Codeword::insertions() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), is_insertion));
}

std::string_view reason_code(Reason r) {
  switch (r) {
    case Reason::kLegal: return "legal";
    case Reason::kEmptyWord: return "empty-word";
    case Reason::kTrailingNonF: return "trailing-non-f";
    case Reason::kTOverflow: return "t-overflow";
    case Reason::kPrematureSlotExhaustion: return "premature-slot-exhaustion";
    case Reason::kUnfilledSlots: return "unfilled-slots";
  }
  return "unknown";
}

Validation validate(const Codeword& w) {
  if (w.empty()) return {false, Reason::kEmptyWord, 0};
  std::size_t slots = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const char c = w[i];
    if (slots == 0) return {false, Reason::kPrematureSlotExhaustion, i};
    if (c == 't') {
      // a run of j letters t selects slot j + 1
      if (++run + 1 > slots) return {false, Reason::kTOverflow, i};
      continue;
    }
    if (c == 'm') ++slots;
    if (c == 'f') --slots;
    run = 0;
  }
  if (w.str().back() != 'f') return {false, Reason::kTrailingNonF, w.size()};
  if (slots != 0) return {false, Reason::kUnfilledSlots, w.size()};
  return {true, Reason::kLegal, w.size()};
}

IllegalCodeword::IllegalCodeword(const Codeword& w, Reason reason)
    : std::invalid_argument("illegal codeword '" + w.str() + "': " +
                            std::string(reason_code(reason))),
      reason_(reason) {}

void SlotConfiguration::apply(char letter) {
  if (next_slot_ > slot_count_) throw std::logic_error("no open slot to translate into");
  if (letter == 't') {
    if (next_slot_ + 1 > slot_count_) throw std::logic_error("translation past the last slot");
    ++next_slot_;
    return;
  }
  std::size_t seen = 0;
  auto slot = items_.begin();
  for (; slot != items_.end(); ++slot)
    if (*slot == kSlot && ++seen == next_slot_) break;

  const int entry = next_entry_;
  switch (letter) {
    case 'l':
      slot = items_.insert(slot, entry);
      break;
    case 'r':
      items_.insert(slot + 1, entry);
      break;
    case 'm':
      slot = items_.insert(slot + 1, entry);
      items_.insert(slot + 1, kSlot);
      ++slot_count_;
      break;
    case 'f':
      *slot = entry;
      --slot_count_;
      break;
    default:
      throw std::invalid_argument(std::string("invalid codeword letter '") + letter + "'");
  }
  ++next_entry_;
  next_slot_ = 1;
}

Permutation decode(const Codeword& w) {
  if (const auto v = validate(w); !v) throw IllegalCodeword(w, v.reason);
  SlotConfiguration config;
  for (char c : w) config.apply(c);
  return Permutation(config.items());
}

Codeword encode(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("the empty permutation has no codeword");
  const std::size_t n = p.size();
  const auto where = p.inverse();
  std::vector<bool> filled(n, false);
  std::string out;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t pos = where[v];
    // Open slots are the maximal runs of unfilled positions.
    std::size_t run_index = 0;
    for (std::size_t i = 0; i < pos; ++i)
      if (!filled[i] && (i == 0 || filled[i - 1])) ++run_index;
    const bool left_end = pos == 0 || filled[pos - 1];
    const bool right_end = pos + 1 == n || filled[pos + 1];
    if (left_end) ++run_index;  // pos starts its own run
    out.append(run_index - 1, 't');
    if (left_end && right_end)
      out += 'f';
    else if (left_end)
      out += 'l';
    else if (right_end)
      out += 'r';
    else
      out += 'm';
    filled[pos] = true;
  }
  return Codeword(std::move(out));
}

namespace {

void extend(std::string& prefix, std::size_t slots, std::size_t remaining,
            const std::function<void(const Codeword&)>& visit) {
  if (remaining == 0) {
    visit(Codeword(prefix));
    return;
  }
  const std::size_t base = prefix.size();
  for (std::size_t shift = 0; shift < slots; ++shift) {
    prefix.resize(base);
    prefix.append(shift, 't');
    for (char letter : {'l', 'r', 'm', 'f'}) {
      const std::size_t after = letter == 'm' ? slots + 1 : letter == 'f' ? slots - 1 : slots;
      // The remaining insertions must close every slot, and only the last may.
      const std::size_t left = remaining - 1;
      if (left == 0 ? after != 0 : (after == 0 || after > left)) continue;
      prefix.push_back(letter);
      extend(prefix, after, left, visit);
      prefix.pop_back();
    }
  }
  prefix.resize(base);
}

}  // namespace

void for_each_codeword(std::size_t n, const std::function<void(const Codeword&)>& visit,
                       std::size_t cap) {
  if (n > cap)
    throw CapExceeded("insertion count " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (n == 0) return;
  std::string prefix;
  extend(prefix, 1, n, visit);
}

std::vector<Codeword> codewords_with_insertions(std::size_t n, std::size_t cap) {
  std::vector<Codeword> out;
  for_each_codeword(n, [&](const Codeword& w) { out.push_back(w); }, cap);
  return out;
}

Codeword parse_codeword(const std::string& text) {
  for (char c : text)
    if (!is_codeword_letter(c))
      throw std::invalid_argument(std::string("invalid codeword letter '") + c + "' in '" + text +
                                  "'");
  return Codeword(text);
}

}  // namespace itenc
