#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nvlogic/errors.hpp"

namespace nvl {

/// The refinement shape (p, r, s): p truth slots, r indeterminacy slots,
/// s falsity slots, n = p + r + s. All three counts are at least 1; the
/// plain fuzzy case is reached by zeroing indeterminacy, not by dropping
/// its slot.
class Signature {
public:
  Signature() = default;  // the simple triad (1,1,1)

  Signature(int p, int r, int s) : p_(p), r_(r), s_(s) {
    if (p < 1 || r < 1 || s < 1) {
      throw InvalidSignature("signature (" + std::to_string(p) + "," + std::to_string(r) + "," +
                             std::to_string(s) + ") needs p, r, s >= 1");
    }
  }

  int p() const { return p_; }
  int r() const { return r_; }
  int s() const { return s_; }
  int n() const { return p_ + r_ + s_; }

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  int p_ = 1;
  int r_ = 1;
  int s_ = 1;
};

enum class Block : std::uint8_t { T, I, F };

/// Names one component position: block letter plus 0-based index within the
/// block ("T2" is Slot{Block::T, 1}).
struct Slot {
  Block block = Block::T;
  int index = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

inline bool slot_in_range(const Signature& sig, Slot slot) {
  switch (slot.block) {
    case Block::T: return slot.index >= 0 && slot.index < sig.p();
    case Block::I: return slot.index >= 0 && slot.index < sig.r();
    case Block::F: return slot.index >= 0 && slot.index < sig.s();
  }
  return false;
}

/// Position in the flat component vector: T block first, then I, then F.
inline int flat_index(const Signature& sig, Slot slot) {
  switch (slot.block) {
    case Block::T: return slot.index;
    case Block::I: return sig.p() + slot.index;
    case Block::F: return sig.p() + sig.r() + slot.index;
  }
  return -1;
}

inline Slot slot_at(const Signature& sig, int flat) {
  if (flat < sig.p()) return {Block::T, flat};
  if (flat < sig.p() + sig.r()) return {Block::I, flat - sig.p()};
  return {Block::F, flat - sig.p() - sig.r()};
}

inline std::string slot_name(Slot slot) {
  char letter = slot.block == Block::T ? 'T' : slot.block == Block::I ? 'I' : 'F';
  return letter + std::to_string(slot.index + 1);
}

/// Parse "T2", "I1", "F3" (1-based index).
inline Slot parse_slot(std::string_view text) {
  if (text.empty()) throw SyntaxError(1, 1, "empty slot name");
  Block block;
  switch (text[0]) {
    case 'T': block = Block::T; break;
    case 'I': block = Block::I; break;
    case 'F': block = Block::F; break;
    default: throw SyntaxError(1, 1, "slot name must start with T, I, or F");
  }
  if (text.size() < 2) throw SyntaxError(1, 2, "slot name needs an index, e.g. T1");
  int index = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw SyntaxError(1, static_cast<int>(k) + 1, "slot index must be a positive integer");
    }
    index = index * 10 + (text[k] - '0');
    if (index > 1'000'000) throw SyntaxError(1, 2, "slot index too large");
  }
  if (index < 1) throw SyntaxError(1, 2, "slot index is 1-based");
  return {block, index - 1};
}

/// Parse a comma-separated slot list such as "T2,I3".
inline std::vector<Slot> parse_slot_list(std::string_view text) {
  std::vector<Slot> slots;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item =
        text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    // trim spaces
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    slots.push_back(parse_slot(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return slots;
}

}  // namespace nvl
