#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "nvlogic/errors.hpp"
#include "nvlogic/interval.hpp"

namespace nvl {

/// The three t-norm/t-conorm pairs offered by the engine. Each kind binds one
/// t-norm to its dual t-conorm; mixed pairings are deliberately not exposed
/// because they break De Morgan duality.
enum class NormFamily {
  MinMax,          // min / max
  ProductProbSum,  // x*y / x + y - x*y
  Lukasiewicz,     // max(0, x+y-1) / min(x+y, 1)
};

namespace detail {

inline double t_norm_scalar(NormFamily fam, double x, double y) {
  switch (fam) {
    case NormFamily::MinMax: return std::min(x, y);
    case NormFamily::ProductProbSum: return clamp01(x * y);
    case NormFamily::Lukasiewicz: return std::max(0.0, x + y - 1.0);
  }
  return 0.0;  // unreachable
}

inline double t_conorm_scalar(NormFamily fam, double x, double y) {
  switch (fam) {
    case NormFamily::MinMax: return std::max(x, y);
    case NormFamily::ProductProbSum: return clamp01(x + y - x * y);
    case NormFamily::Lukasiewicz: return std::min(x + y, 1.0);
  }
  return 0.0;  // unreachable
}

}  // namespace detail

// All three norms are monotone nondecreasing in each argument, so the exact
// interval image is obtained by applying the scalar op to the lo endpoints
// and to the hi endpoints independently.

inline UnitInterval t_norm(NormFamily fam, const UnitInterval& x, const UnitInterval& y) {
  return {detail::t_norm_scalar(fam, x.lo(), y.lo()), detail::t_norm_scalar(fam, x.hi(), y.hi())};
}

inline UnitInterval t_conorm(NormFamily fam, const UnitInterval& x, const UnitInterval& y) {
  return {detail::t_conorm_scalar(fam, x.lo(), y.lo()),
          detail::t_conorm_scalar(fam, x.hi(), y.hi())};
}

/// Standard involutive complement, endpoint-reflected: [1-hi, 1-lo].
inline UnitInterval complement(const UnitInterval& x) { return {1.0 - x.hi(), 1.0 - x.lo()}; }

/// Name used in config files and on the command line.
inline std::string_view family_name(NormFamily fam) {
  switch (fam) {
    case NormFamily::MinMax: return "minmax";
    case NormFamily::ProductProbSum: return "product";
    case NormFamily::Lukasiewicz: return "lukasiewicz";
  }
  return "";
}

/// Case-insensitive lookup of a family name.
inline NormFamily parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "minmax") return NormFamily::MinMax;
  if (lower == "product") return NormFamily::ProductProbSum;
  if (lower == "lukasiewicz") return NormFamily::Lukasiewicz;
  throw Error("unknown norm family '" + std::string(name) +
              "' (expected minmax, product, or lukasiewicz)");
}

}  // namespace nvl
