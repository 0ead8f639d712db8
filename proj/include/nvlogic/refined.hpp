#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nvlogic/errors.hpp"
#include "nvlogic/interval.hpp"
#include "nvlogic/signature.hpp"

namespace nvl {

/// A refined truth tuple (T1..Tp | I1..Ir | F1..Fs) of unit intervals.
/// Immutable after construction; construction validates against the
/// signature and never clamps.
class RefinedValue {
public:
  RefinedValue(const Signature& sig, std::vector<UnitInterval> t, std::vector<UnitInterval> i,
               std::vector<UnitInterval> f)
      : sig_(sig) {
    if (static_cast<int>(t.size()) != sig.p() || static_cast<int>(i.size()) != sig.r() ||
        static_cast<int>(f.size()) != sig.s()) {
      throw LengthMismatch("component lists (" + std::to_string(t.size()) + "," +
                           std::to_string(i.size()) + "," + std::to_string(f.size()) +
                           ") do not match signature (" + std::to_string(sig.p()) + "," +
                           std::to_string(sig.r()) + "," + std::to_string(sig.s()) + ")");
    }
    comps_.reserve(static_cast<std::size_t>(sig.n()));
    comps_.insert(comps_.end(), t.begin(), t.end());
    comps_.insert(comps_.end(), i.begin(), i.end());
    comps_.insert(comps_.end(), f.begin(), f.end());
  }

  const Signature& sig() const { return sig_; }

  std::span<const UnitInterval> t() const { return {comps_.data(), static_cast<std::size_t>(sig_.p())}; }
  std::span<const UnitInterval> i() const {
    return {comps_.data() + sig_.p(), static_cast<std::size_t>(sig_.r())};
  }
  std::span<const UnitInterval> f() const {
    return {comps_.data() + sig_.p() + sig_.r(), static_cast<std::size_t>(sig_.s())};
  }

  const UnitInterval& slot(int flat) const { return comps_[static_cast<std::size_t>(flat)]; }
  const UnitInterval& slot(Slot s) const { return comps_[static_cast<std::size_t>(flat_index(sig_, s))]; }

  bool all_scalar() const {
    for (const auto& c : comps_) {
      if (!c.is_scalar()) return false;
    }
    return true;
  }

  friend bool operator==(const RefinedValue&, const RefinedValue&) = default;

private:
  Signature sig_;
  std::vector<UnitInterval> comps_;  // T block, I block, F block
};

inline RefinedValue make_refined(const Signature& sig, std::vector<UnitInterval> t,
                                 std::vector<UnitInterval> i, std::vector<UnitInterval> f) {
  return RefinedValue(sig, std::move(t), std::move(i), std::move(f));
}

/// The simple (T, I, F) value of signature (1,1,1).
inline RefinedValue triad(UnitInterval t, UnitInterval i, UnitInterval f) {
  return RefinedValue(Signature(1, 1, 1), {t}, {i}, {f});
}

/// Endpoint-wise sum of all n components; lies in [0, n] by construction.
struct SumBounds {
  double lo = 0.0;
  double hi = 0.0;
};

inline SumBounds total_sum(const RefinedValue& v) {
  SumBounds sum;
  for (int k = 0; k < v.sig().n(); ++k) {
    sum.lo += v.slot(k).lo();
    sum.hi += v.slot(k).hi();
  }
  return sum;
}

/// Sets of component slots whose information sources are not independent.
/// Each group is jointly bounded by 1; unlisted slots are independent.
struct DependencyGroups {
  std::vector<std::vector<Slot>> groups;
};

struct GroupCheck {
  std::vector<Slot> slots;
  double sum_hi = 0.0;  // upper-endpoint sum over the group
  bool pass = false;
};

struct ConstraintReport {
  SumBounds total;
  int bound = 0;            // n, the global bound
  bool global_pass = true;  // components are in [0,1], so the n bound holds by construction
  std::vector<GroupCheck> groups;
  /// True when the value has interval components. Group sums then use the
  /// upper endpoints, a conservative reading, and reports should say so.
  bool conservative_intervals = false;

  bool all_pass() const {
    if (!global_pass) return false;
    for (const auto& g : groups) {
      if (!g.pass) return false;
    }
    return true;
  }
};

/// Check the total-sum bound and each dependency group's joint bound of 1.
/// Reports rather than rejects: a failing group marks the value as
/// over-committed for dependent sources but does not invalidate it.
inline ConstraintReport check_constraint(const RefinedValue& v, const DependencyGroups& deps) {
  // validate groups: in range, non-empty, pairwise disjoint
  std::vector<bool> used(static_cast<std::size_t>(v.sig().n()), false);
  for (const auto& group : deps.groups) {
    if (group.empty()) throw InvalidGroups("dependency group is empty");
    for (Slot s : group) {
      if (!slot_in_range(v.sig(), s)) {
        throw InvalidGroups("slot " + slot_name(s) + " is out of range for this signature");
      }
      int flat = flat_index(v.sig(), s);
      if (used[static_cast<std::size_t>(flat)]) {
        throw InvalidGroups("slot " + slot_name(s) + " appears in more than one group");
      }
      used[static_cast<std::size_t>(flat)] = true;
    }
  }

  ConstraintReport report;
  report.total = total_sum(v);
  report.bound = v.sig().n();
  report.global_pass = true;
  report.conservative_intervals = !v.all_scalar();
  for (const auto& group : deps.groups) {
    GroupCheck check;
    check.slots = group;
    for (Slot s : group) check.sum_hi += v.slot(s).hi();
    check.pass = check.sum_hi <= 1.0;
    report.groups.push_back(std::move(check));
  }
  return report;
}

/// Rescale every component endpoint by one common factor so the total sum
/// midpoint lands on `target`. A single factor keeps lo <= hi and preserves
/// component proportions. Throws ZeroMass when there is nothing to scale and
/// OutOfRange when scaling would push an endpoint above 1 (never clamps).
inline RefinedValue normalize(const RefinedValue& v, double target = 1.0) {
  if (!(target > 0.0)) throw OutOfRange("normalize target must be positive");
  SumBounds sum = total_sum(v);
  if (!(sum.lo > 0.0)) {
    throw ZeroMass("total sum lower bound is " + std::to_string(sum.lo) +
                   "; normalization needs positive mass");
  }
  double scale = (0.5 * (sum.lo + sum.hi)) / target;
  std::vector<UnitInterval> t, i, f;
  t.reserve(static_cast<std::size_t>(v.sig().p()));
  i.reserve(static_cast<std::size_t>(v.sig().r()));
  f.reserve(static_cast<std::size_t>(v.sig().s()));
  auto scaled = [&](const UnitInterval& c) {
    double lo = c.lo() / scale;
    double hi = c.hi() / scale;
    if (!detail::snap_unit(lo) || !detail::snap_unit(hi)) {
      throw OutOfRange("normalizing to target " + std::to_string(target) +
                       " pushes a component above 1");
    }
    return UnitInterval(lo, hi);
  };
  for (const auto& c : v.t()) t.push_back(scaled(c));
  for (const auto& c : v.i()) i.push_back(scaled(c));
  for (const auto& c : v.f()) f.push_back(scaled(c));
  return RefinedValue(v.sig(), std::move(t), std::move(i), std::move(f));
}

}  // namespace nvl
