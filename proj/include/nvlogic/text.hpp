#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "nvlogic/errors.hpp"
#include "nvlogic/refined.hpp"

namespace nvl {

/// Up to 9 significant decimal digits, trailing zeros trimmed. Enough to
/// round-trip any value entered with 9 or fewer digits, short enough to hide
/// accumulated binary noise.
inline std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline std::string to_string(const UnitInterval& c) {
  if (c.is_scalar()) return format_number(c.lo());
  return format_number(c.lo()) + ".." + format_number(c.hi());
}

/// Canonical text form: NV(p,r,s)[t1, ..., tp | i1, ..., ir | f1, ..., fs].
inline std::string to_string(const RefinedValue& v) {
  std::string out = "NV(" + std::to_string(v.sig().p()) + "," + std::to_string(v.sig().r()) + "," +
                    std::to_string(v.sig().s()) + ")[";
  auto append_block = [&](std::span<const UnitInterval> block) {
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k > 0) out += ", ";
      out += to_string(block[k]);
    }
  };
  append_block(v.t());
  out += " | ";
  append_block(v.i());
  out += " | ";
  append_block(v.f());
  out += "]";
  return out;
}

namespace detail {

/// Character-level cursor with 1-based line/column tracking. Shared by the
/// value parser and the formula parser so positions stay consistent when one
/// embeds the other.
class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) {
      advance();
    }
  }

  bool match(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!match(c)) {
      fail(std::string("expected '") + c + "' " + what);
    }
  }

  int line() const { return line_; }
  int column() const { return col_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, col_, message + found_here());
  }

  std::string found_here() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  /// Scan a nonnegative decimal number. A '.' followed by a second '.' is
  /// left alone so interval syntax like 0.2..0.4 lexes cleanly.
  double scan_number() {
    std::size_t start = pos_;
    while (peek() >= '0' && peek() <= '9') advance();
    if (peek() == '.' && peek2() != '.') {
      advance();
      if (!(peek() >= '0' && peek() <= '9')) fail("expected digits after decimal point");
      while (peek() >= '0' && peek() <= '9') advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (!(peek() >= '0' && peek() <= '9')) fail("expected digits in exponent");
      while (peek() >= '0' && peek() <= '9') advance();
    }
    if (pos_ == start) fail("expected a number");
    std::string token(text_.substr(start, pos_ - start));
    return std::strtod(token.c_str(), nullptr);
  }

  int scan_int(const char* what) {
    if (!(peek() >= '0' && peek() <= '9')) fail(std::string("expected ") + what);
    long value = 0;
    while (peek() >= '0' && peek() <= '9') {
      value = value * 10 + (advance() - '0');
      if (value > 1'000'000) fail(std::string(what) + " is too large");
    }
    return static_cast<int>(value);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline UnitInterval parse_component(Scanner& sc) {
  int line = sc.line(), col = sc.column();
  double lo = sc.scan_number();
  double hi = lo;
  sc.skip_ws();
  if (sc.peek() == '.' && sc.peek2() == '.') {
    sc.advance();
    sc.advance();
    sc.skip_ws();
    hi = sc.scan_number();
  }
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw SyntaxError(line, col, "component " + format_number(lo) +
                                     (lo == hi ? "" : ".." + format_number(hi)) +
                                     " is outside [0,1]");
  }
  return {lo, hi};
}

inline std::vector<UnitInterval> parse_block(Scanner& sc) {
  std::vector<UnitInterval> block;
  sc.skip_ws();
  block.push_back(parse_component(sc));
  sc.skip_ws();
  while (sc.match(',')) {
    sc.skip_ws();
    // tolerate a trailing comma before the block or value terminator
    if (sc.peek() == '|' || sc.peek() == ']') break;
    block.push_back(parse_component(sc));
    sc.skip_ws();
  }
  return block;
}

/// Parse the "(p,r,s)[...]" tail of an NV value; the scanner sits just past
/// the NV keyword.
inline RefinedValue parse_nv_tail(Scanner& sc) {
  sc.skip_ws();
  sc.expect('(', "to open the signature");
  sc.skip_ws();
  int p = sc.scan_int("truth slot count");
  sc.skip_ws();
  sc.expect(',', "between signature fields");
  sc.skip_ws();
  int r = sc.scan_int("indeterminacy slot count");
  sc.skip_ws();
  sc.expect(',', "between signature fields");
  sc.skip_ws();
  int s = sc.scan_int("falsity slot count");
  sc.skip_ws();
  sc.expect(')', "to close the signature");
  sc.skip_ws();
  sc.expect('[', "to open the component list");
  std::vector<UnitInterval> t = parse_block(sc);
  sc.expect('|', "between component blocks");
  std::vector<UnitInterval> i = parse_block(sc);
  sc.expect('|', "between component blocks");
  std::vector<UnitInterval> f = parse_block(sc);
  sc.expect(']', "to close the component list");
  return RefinedValue(Signature(p, r, s), std::move(t), std::move(i), std::move(f));
}

}  // namespace detail

/// Parse a whole string as one NV value.
inline RefinedValue parse_refined(std::string_view text) {
  detail::Scanner sc(text);
  sc.skip_ws();
  if (!(sc.match('N') && sc.match('V'))) sc.fail("expected 'NV'");
  RefinedValue v = detail::parse_nv_tail(sc);
  sc.skip_ws();
  if (!sc.at_end()) sc.fail("unexpected trailing input after value");
  return v;
}

}  // namespace nvl
