#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nvlogic/errors.hpp"
#include "nvlogic/refined.hpp"
#include "nvlogic/tnorms.hpp"

namespace nvl {

/// How the indeterminacy slots combine inside an n-norm / n-conorm. The
/// conjunction combines them with the t-conorm when pessimistic (lower
/// bound) and the t-norm when optimistic; the disjunction does the opposite.
enum class IndeterminacyMode { Pessimistic, Optimistic };

inline std::string_view mode_name(IndeterminacyMode mode) {
  return mode == IndeterminacyMode::Pessimistic ? "pessimistic" : "optimistic";
}

inline IndeterminacyMode parse_mode(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pessimistic") return IndeterminacyMode::Pessimistic;
  if (lower == "optimistic") return IndeterminacyMode::Optimistic;
  throw Error("unknown mode '" + std::string(name) + "' (expected pessimistic or optimistic)");
}

namespace detail {

inline void require_same_sig(const RefinedValue& x, const RefinedValue& y) {
  if (!(x.sig() == y.sig())) {
    throw SignatureMismatch("operands have different signatures: (" +
                            std::to_string(x.sig().p()) + "," + std::to_string(x.sig().r()) + "," +
                            std::to_string(x.sig().s()) + ") vs (" + std::to_string(y.sig().p()) +
                            "," + std::to_string(y.sig().r()) + "," + std::to_string(y.sig().s()) +
                            ")");
  }
}

}  // namespace detail

/// Neutrosophic conjunction: t-norm on each truth slot, t-conorm on each
/// falsity slot, and the mode's choice on each indeterminacy slot. No
/// normalization happens here; callers normalize explicitly if they need to.
inline RefinedValue n_norm(const RefinedValue& x, const RefinedValue& y, NormFamily fam,
                           IndeterminacyMode mode) {
  detail::require_same_sig(x, y);
  std::vector<UnitInterval> t, i, f;
  for (int j = 0; j < x.sig().p(); ++j) t.push_back(t_norm(fam, x.t()[j], y.t()[j]));
  for (int k = 0; k < x.sig().r(); ++k) {
    i.push_back(mode == IndeterminacyMode::Pessimistic ? t_conorm(fam, x.i()[k], y.i()[k])
                                                       : t_norm(fam, x.i()[k], y.i()[k]));
  }
  for (int l = 0; l < x.sig().s(); ++l) f.push_back(t_conorm(fam, x.f()[l], y.f()[l]));
  return RefinedValue(x.sig(), std::move(t), std::move(i), std::move(f));
}

/// Neutrosophic disjunction, the dual of n_norm.
inline RefinedValue n_conorm(const RefinedValue& x, const RefinedValue& y, NormFamily fam,
                             IndeterminacyMode mode) {
  detail::require_same_sig(x, y);
  std::vector<UnitInterval> t, i, f;
  for (int j = 0; j < x.sig().p(); ++j) t.push_back(t_conorm(fam, x.t()[j], y.t()[j]));
  for (int k = 0; k < x.sig().r(); ++k) {
    i.push_back(mode == IndeterminacyMode::Pessimistic ? t_norm(fam, x.i()[k], y.i()[k])
                                                       : t_conorm(fam, x.i()[k], y.i()[k]));
  }
  for (int l = 0; l < x.sig().s(); ++l) f.push_back(t_norm(fam, x.f()[l], y.f()[l]));
  return RefinedValue(x.sig(), std::move(t), std::move(i), std::move(f));
}

enum class Bound { Lower, Upper };

inline std::string_view bound_name(Bound b) { return b == Bound::Lower ? "lower" : "upper"; }

inline Bound parse_bound(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lower") return Bound::Lower;
  if (lower == "upper") return Bound::Upper;
  throw Error("unknown bound '" + std::string(name) + "' (expected lower or upper)");
}

/// A total priority order over the n component slots, lowest first. In a
/// priority product every cross-term of two slots is credited to the
/// higher-priority one.
class PriorityOrder {
public:
  PriorityOrder(const Signature& sig, std::vector<Slot> lowest_to_highest) : sig_(sig) {
    if (static_cast<int>(lowest_to_highest.size()) != sig.n()) {
      throw InvalidOrder("priority order lists " + std::to_string(lowest_to_highest.size()) +
                         " slots, signature has " + std::to_string(sig.n()));
    }
    rank_.assign(static_cast<std::size_t>(sig.n()), -1);
    for (int rank = 0; rank < sig.n(); ++rank) {
      Slot s = lowest_to_highest[static_cast<std::size_t>(rank)];
      if (!slot_in_range(sig, s)) {
        throw InvalidOrder("slot " + slot_name(s) + " is out of range for this signature");
      }
      int flat = flat_index(sig, s);
      if (rank_[static_cast<std::size_t>(flat)] != -1) {
        throw InvalidOrder("slot " + slot_name(s) + " appears twice in the priority order");
      }
      rank_[static_cast<std::size_t>(flat)] = rank;
    }
    chain_ = std::move(lowest_to_highest);
  }

  /// Conjunction chains. Lower bound: T1 < ... < Tp < I1 < ... < Ir
  /// < F1 < ... < Fs; upper bound swaps the T and I blocks.
  static PriorityOrder conjunction(const Signature& sig, Bound bound) {
    std::vector<Slot> chain;
    auto push_block = [&](Block b, int count) {
      for (int k = 0; k < count; ++k) chain.push_back({b, k});
    };
    if (bound == Bound::Lower) {
      push_block(Block::T, sig.p());
      push_block(Block::I, sig.r());
    } else {
      push_block(Block::I, sig.r());
      push_block(Block::T, sig.p());
    }
    push_block(Block::F, sig.s());
    return {sig, std::move(chain)};
  }

  /// Disjunction chains, written highest-first in the source texts:
  /// upper bound T > I > F, lower bound T > F > I, with lower slot index
  /// taking higher priority inside each block.
  static PriorityOrder disjunction(const Signature& sig, Bound bound) {
    std::vector<Slot> chain;
    auto push_block_reversed = [&](Block b, int count) {
      for (int k = count - 1; k >= 0; --k) chain.push_back({b, k});
    };
    if (bound == Bound::Upper) {
      push_block_reversed(Block::F, sig.s());
      push_block_reversed(Block::I, sig.r());
    } else {
      push_block_reversed(Block::I, sig.r());
      push_block_reversed(Block::F, sig.s());
    }
    push_block_reversed(Block::T, sig.p());
    return {sig, std::move(chain)};
  }

  /// Parse a chain such as "T1<I1<F1" (lowest priority first).
  static PriorityOrder parse(std::string_view text, const Signature& sig) {
    std::vector<Slot> chain;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t sep = text.find('<', start);
      std::string_view item =
          text.substr(start, sep == std::string_view::npos ? sep : sep - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      chain.push_back(parse_slot(item));
      if (sep == std::string_view::npos) break;
      start = sep + 1;
    }
    return {sig, std::move(chain)};
  }

  const Signature& sig() const { return sig_; }
  int rank(int flat) const { return rank_[static_cast<std::size_t>(flat)]; }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < chain_.size(); ++k) {
      if (k > 0) out += '<';
      out += slot_name(chain_[k]);
    }
    return out;
  }

private:
  Signature sig_;
  std::vector<int> rank_;   // rank_[flat slot] = priority, 0 lowest
  std::vector<Slot> chain_;
};

/// Priority product: distribute every cross-product x[a]*y[b] of the n^2
/// slot pairs to the higher-priority slot of the pair and sum. With the
/// standard conjunction chain on a triad this is
///   (TxTy, TxIy + TyIx + IxIy, TxFy + TyFx + IxFy + IyFx + FxFy)
/// and the disjunction chain gives its mirror image. Scalar components only:
/// mass accumulation of dependent interval products has no exact endpoint
/// form. Total mass is conserved, so inputs whose sums multiply beyond 1 can
/// overflow a component; that raises OutOfRange rather than clamping.
inline RefinedValue priority_combine(const RefinedValue& x, const RefinedValue& y,
                                     const PriorityOrder& ord) {
  detail::require_same_sig(x, y);
  if (!(ord.sig() == x.sig())) {
    throw InvalidOrder("priority order was built for a different signature");
  }
  if (!x.all_scalar() || !y.all_scalar()) {
    throw IntervalUnsupported("priority products are defined for scalar components only");
  }
  int n = x.sig().n();
  std::vector<double> mass(static_cast<std::size_t>(n), 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int winner = ord.rank(a) >= ord.rank(b) ? a : b;
      mass[static_cast<std::size_t>(winner)] += x.slot(a).lo() * y.slot(b).lo();
    }
  }
  std::vector<UnitInterval> t, i, f;
  for (int k = 0; k < n; ++k) {
    double m = mass[static_cast<std::size_t>(k)];
    if (!detail::snap_unit(m)) {
      throw OutOfRange("priority product mass " + std::to_string(m) + " in slot " +
                       slot_name(slot_at(x.sig(), k)) + " exceeds 1; normalize the operands");
    }
    Slot s = slot_at(x.sig(), k);
    (s.block == Block::T ? t : s.block == Block::I ? i : f).push_back(UnitInterval(m));
  }
  return RefinedValue(x.sig(), std::move(t), std::move(i), std::move(f));
}

/// Priority conjunction on simple triads; Lower uses the chain T < I < F,
/// Upper uses I < T < F.
inline RefinedValue priority_and(const RefinedValue& x, const RefinedValue& y, Bound bound) {
  if (!(x.sig() == Signature(1, 1, 1))) {
    throw SignatureMismatch("priority_and is defined for simple triads; use priority_combine "
                            "with an explicit order for refined signatures");
  }
  return priority_combine(x, y, PriorityOrder::conjunction(x.sig(), bound));
}

/// Priority disjunction on simple triads; Upper uses T > I > F, Lower
/// uses T > F > I.
inline RefinedValue priority_or(const RefinedValue& x, const RefinedValue& y, Bound bound) {
  if (!(x.sig() == Signature(1, 1, 1))) {
    throw SignatureMismatch("priority_or is defined for simple triads; use priority_combine "
                            "with an explicit order for refined signatures");
  }
  return priority_combine(x, y, PriorityOrder::disjunction(x.sig(), bound));
}

/// Negation swaps the truth and falsity blocks, reversing each so that slot
/// Tj trades places with F(s+1-j). Restricts to (T,I,F) -> (F,I,T) on the
/// triad and is an involution. Needs p == s for the blocks to line up.
inline RefinedValue negate(const RefinedValue& v) {
  if (v.sig().p() != v.sig().s()) {
    throw AsymmetricSignature("negation needs matching truth/falsity arity, got p=" +
                              std::to_string(v.sig().p()) + ", s=" + std::to_string(v.sig().s()));
  }
  std::vector<UnitInterval> t(v.f().rbegin(), v.f().rend());
  std::vector<UnitInterval> i(v.i().begin(), v.i().end());
  std::vector<UnitInterval> f(v.t().rbegin(), v.t().rend());
  return RefinedValue(v.sig(), std::move(t), std::move(i), std::move(f));
}

struct FuzzyProjection {
  RefinedValue value;
  bool lossy = false;  // true when a nonzero indeterminacy component was dropped
};

/// Force every indeterminacy slot to zero (the refined fuzzy special case).
inline FuzzyProjection project_fuzzy(const RefinedValue& v) {
  bool lossy = false;
  std::vector<UnitInterval> i;
  for (const auto& c : v.i()) {
    if (c.hi() > 0.0) lossy = true;
    i.push_back(UnitInterval(0.0));
  }
  return {RefinedValue(v.sig(), {v.t().begin(), v.t().end()}, std::move(i),
                       {v.f().begin(), v.f().end()}),
          lossy};
}

struct IntuitionisticProjection {
  RefinedValue value;  // signature (p, 1, s)
  bool clamped = false;
};

/// Collapse the indeterminacy block to a single aggregate slot by summing,
/// clamped at 1 with the clamp made visible. Scalar components only.
inline IntuitionisticProjection project_intuitionistic(const RefinedValue& v) {
  if (!v.all_scalar()) {
    throw IntervalUnsupported("intuitionistic projection is defined for scalar components only");
  }
  double sum = 0.0;
  for (const auto& c : v.i()) sum += c.lo();
  bool clamped = sum > 1.0;
  if (clamped) sum = 1.0;
  Signature sig(v.sig().p(), 1, v.sig().s());
  return {RefinedValue(sig, {v.t().begin(), v.t().end()}, {UnitInterval(sum)},
                       {v.f().begin(), v.f().end()}),
          clamped};
}

}  // namespace nvl
