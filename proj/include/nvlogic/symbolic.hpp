#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nvlogic/errors.hpp"

namespace nvl {

// --- Boolean -----------------------------------------------------------

enum class BoolVal : std::uint8_t { F = 0, T = 1 };

inline BoolVal bool_and(BoolVal x, BoolVal y) {
  return (x == BoolVal::T && y == BoolVal::T) ? BoolVal::T : BoolVal::F;
}
inline BoolVal bool_or(BoolVal x, BoolVal y) {
  return (x == BoolVal::T || y == BoolVal::T) ? BoolVal::T : BoolVal::F;
}
inline BoolVal bool_not(BoolVal x) { return x == BoolVal::T ? BoolVal::F : BoolVal::T; }

// --- Kleene three-valued ------------------------------------------------

/// Kleene's strong logic over {F, U, T} with numeric images {0, 1/2, 1};
/// conjunction is min, disjunction max, negation 1-x on the images.
enum class KleeneVal : std::uint8_t { F = 0, U = 1, T = 2 };

inline double kleene_numeric(KleeneVal x) {
  switch (x) {
    case KleeneVal::F: return 0.0;
    case KleeneVal::U: return 0.5;
    case KleeneVal::T: return 1.0;
  }
  return 0.0;  // unreachable
}

namespace detail {
inline KleeneVal kleene_from_numeric(double v) {
  if (v == 0.0) return KleeneVal::F;
  if (v == 1.0) return KleeneVal::T;
  return KleeneVal::U;
}
}  // namespace detail

inline KleeneVal kleene_and(KleeneVal x, KleeneVal y) {
  return detail::kleene_from_numeric(std::min(kleene_numeric(x), kleene_numeric(y)));
}
inline KleeneVal kleene_or(KleeneVal x, KleeneVal y) {
  return detail::kleene_from_numeric(std::max(kleene_numeric(x), kleene_numeric(y)));
}
inline KleeneVal kleene_not(KleeneVal x) {
  return detail::kleene_from_numeric(1.0 - kleene_numeric(x));
}

// --- Belnap four-valued --------------------------------------------------

/// Belnap's logic over True, False, Unknown, Contradiction. Only the
/// conjunction table is primary source material; negation (fixing U and C)
/// and the De Morgan disjunction are the standard derived choices.
enum class BelnapVal : std::uint8_t { F = 0, U = 1, C = 2, T = 3 };

inline BelnapVal belnap_and(BelnapVal x, BelnapVal y) {
  // rows/columns in the order F, U, C, T
  static constexpr BelnapVal table[4][4] = {
      {BelnapVal::F, BelnapVal::F, BelnapVal::F, BelnapVal::F},
      {BelnapVal::F, BelnapVal::U, BelnapVal::F, BelnapVal::U},
      {BelnapVal::F, BelnapVal::F, BelnapVal::C, BelnapVal::C},
      {BelnapVal::F, BelnapVal::U, BelnapVal::C, BelnapVal::T},
  };
  return table[static_cast<int>(x)][static_cast<int>(y)];
}

inline BelnapVal belnap_not(BelnapVal x) {
  switch (x) {
    case BelnapVal::T: return BelnapVal::F;
    case BelnapVal::F: return BelnapVal::T;
    default: return x;  // U and C are fixed points
  }
}

inline BelnapVal belnap_or(BelnapVal x, BelnapVal y) {
  return belnap_not(belnap_and(belnap_not(x), belnap_not(y)));
}

// symbol letters

inline std::string_view to_symbol(BoolVal x) { return x == BoolVal::T ? "T" : "F"; }
inline std::string_view to_symbol(KleeneVal x) {
  switch (x) {
    case KleeneVal::T: return "T";
    case KleeneVal::U: return "U";
    case KleeneVal::F: return "F";
  }
  return "";
}
inline std::string_view to_symbol(BelnapVal x) {
  switch (x) {
    case BelnapVal::T: return "T";
    case BelnapVal::F: return "F";
    case BelnapVal::U: return "U";
    case BelnapVal::C: return "C";
  }
  return "";
}

// --- Absolute-relative symbol alphabets -----------------------------------

/// The six absolute/relative symbols: truth, indeterminacy, or falsity
/// holding in all possible worlds (A) or in at least one but not all (R).
enum class ArSymbol : std::uint8_t { TA, TR, IA, IR, FA, FR };

inline std::string_view to_symbol(ArSymbol s) {
  static constexpr std::array<std::string_view, 6> names = {"TA", "TR", "IA", "IR", "FA", "FR"};
  return names[static_cast<int>(s)];
}

/// An ordered selection of 2 to 6 of the absolute-relative symbols. The
/// alphabet carries no built-in connectives; pair it with a user table file
/// to obtain a usable logic.
class SymbolAlphabet {
public:
  explicit SymbolAlphabet(std::vector<ArSymbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2 || symbols_.size() > 6) {
      throw BadSize("alphabet has " + std::to_string(symbols_.size()) +
                    " symbols, expected between 2 and 6");
    }
    for (std::size_t a = 0; a < symbols_.size(); ++a) {
      for (std::size_t b = a + 1; b < symbols_.size(); ++b) {
        if (symbols_[a] == symbols_[b]) {
          throw Duplicate("symbol " + std::string(to_symbol(symbols_[a])) +
                          " appears twice in the alphabet");
        }
      }
    }
  }

  const std::vector<ArSymbol>& symbols() const { return symbols_; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (ArSymbol s : symbols_) out.emplace_back(to_symbol(s));
    return out;
  }

private:
  std::vector<ArSymbol> symbols_;
};

inline SymbolAlphabet make_alphabet(const std::vector<std::string>& names) {
  std::vector<ArSymbol> symbols;
  for (const auto& name : names) {
    bool found = false;
    for (int k = 0; k < 6; ++k) {
      if (name == to_symbol(static_cast<ArSymbol>(k))) {
        symbols.push_back(static_cast<ArSymbol>(k));
        found = true;
        break;
      }
    }
    if (!found) {
      throw BadSymbol("'" + name + "' is not one of TA, TR, IA, IR, FA, FR");
    }
  }
  return SymbolAlphabet(std::move(symbols));
}

// --- User-supplied connective tables ---------------------------------------

/// Connective tables for a finite symbol logic, loaded from text:
///
///   symbols: S1 S2 ...
///   op <name> arity <1|2>
///   Si Sj -> Sk        (binary, one line per pair, all pairs required)
///   Si -> Sk           (unary)
///
/// Loading rejects tables that are incomplete, mention undeclared symbols,
/// or define an entry twice, so every loaded logic is closed by construction.
class ConnectiveTables {
public:
  static ConnectiveTables parse(std::string_view text) {
    ConnectiveTables tables;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    std::string current_op;
    int current_arity = 0;
    std::vector<int> current_entries;
    std::vector<bool> current_filled;

    auto finish_op = [&]() {
      if (current_op.empty()) return;
      for (std::size_t k = 0; k < current_filled.size(); ++k) {
        if (!current_filled[k]) {
          throw TableError("table for op '" + current_op + "' is incomplete");
        }
      }
      auto& dst = current_arity == 1 ? tables.unary_ : tables.binary_;
      dst[current_op] = current_entries;
      current_op.clear();
    };

    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;

      std::istringstream words(line);
      std::string first;
      words >> first;
      if (first.empty()) continue;

      if (first == "symbols:") {
        if (!tables.symbols_.empty()) {
          throw TableError("line " + std::to_string(lineno) + ": repeated symbols line");
        }
        std::string sym;
        while (words >> sym) {
          if (tables.id_of(sym) >= 0) {
            throw TableError("line " + std::to_string(lineno) + ": duplicate symbol '" + sym +
                             "'");
          }
          tables.symbols_.push_back(sym);
        }
        if (tables.symbols_.empty()) {
          throw TableError("line " + std::to_string(lineno) + ": symbols line is empty");
        }
        continue;
      }
      if (tables.symbols_.empty()) {
        throw TableError("line " + std::to_string(lineno) + ": expected 'symbols:' first");
      }

      if (first == "op") {
        finish_op();
        std::string arity_kw;
        int arity = 0;
        if (!(words >> current_op >> arity_kw >> arity) || arity_kw != "arity" ||
            (arity != 1 && arity != 2)) {
          throw TableError("line " + std::to_string(lineno) +
                           ": expected 'op <name> arity <1|2>'");
        }
        if (tables.unary_.count(current_op) || tables.binary_.count(current_op)) {
          throw TableError("line " + std::to_string(lineno) + ": op '" + current_op +
                           "' defined twice");
        }
        current_arity = arity;
        std::size_t size = arity == 1 ? tables.symbols_.size()
                                      : tables.symbols_.size() * tables.symbols_.size();
        current_entries.assign(size, -1);
        current_filled.assign(size, false);
        continue;
      }

      if (current_op.empty()) {
        throw TableError("line " + std::to_string(lineno) + ": entry outside any op block");
      }

      auto need_symbol = [&](const std::string& name) {
        int id = tables.id_of(name);
        if (id < 0) {
          throw TableError("line " + std::to_string(lineno) + ": '" + name +
                           "' is not a declared symbol");
        }
        return id;
      };

      std::string a = first, arrow, result, b;
      std::size_t index;
      if (current_arity == 1) {
        if (!(words >> arrow >> result) || arrow != "->") {
          throw TableError("line " + std::to_string(lineno) + ": expected '<sym> -> <sym>'");
        }
        index = static_cast<std::size_t>(need_symbol(a));
      } else {
        if (!(words >> b >> arrow >> result) || arrow != "->") {
          throw TableError("line " + std::to_string(lineno) +
                           ": expected '<sym> <sym> -> <sym>'");
        }
        index = static_cast<std::size_t>(need_symbol(a)) * tables.symbols_.size() +
                static_cast<std::size_t>(need_symbol(b));
      }
      std::string extra;
      if (words >> extra) {
        throw TableError("line " + std::to_string(lineno) + ": unexpected trailing '" + extra +
                         "'");
      }
      if (current_filled[index]) {
        throw TableError("line " + std::to_string(lineno) + ": duplicate entry");
      }
      current_entries[index] = need_symbol(result);
      current_filled[index] = true;
    }
    finish_op();
    if (tables.symbols_.empty()) throw TableError("table file declares no symbols");
    return tables;
  }

  const std::vector<std::string>& symbols() const { return symbols_; }

  int id_of(std::string_view name) const {
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (symbols_[k] == name) return static_cast<int>(k);
    }
    return -1;
  }

  bool has_unary(std::string_view op) const { return unary_.find(op) != unary_.end(); }
  bool has_binary(std::string_view op) const { return binary_.find(op) != binary_.end(); }

  int apply_unary(std::string_view op, int x) const {
    auto it = unary_.find(op);
    if (it == unary_.end()) {
      throw TableError("logic defines no unary op '" + std::string(op) + "'");
    }
    return it->second[static_cast<std::size_t>(x)];
  }

  int apply_binary(std::string_view op, int x, int y) const {
    auto it = binary_.find(op);
    if (it == binary_.end()) {
      throw TableError("logic defines no binary op '" + std::string(op) + "'");
    }
    return it->second[static_cast<std::size_t>(x) * symbols_.size() + static_cast<std::size_t>(y)];
  }

private:
  std::vector<std::string> symbols_;
  std::map<std::string, std::vector<int>, std::less<>> unary_;
  std::map<std::string, std::vector<int>, std::less<>> binary_;
};

/// Bind an absolute-relative alphabet to user tables; the table file must
/// declare exactly the alphabet's symbols.
inline ConnectiveTables bind_alphabet(const SymbolAlphabet& alphabet,
                                      const ConnectiveTables& tables) {
  auto names = alphabet.names();
  if (names.size() != tables.symbols().size()) {
    throw TableError("table file declares " + std::to_string(tables.symbols().size()) +
                     " symbols, alphabet has " + std::to_string(names.size()));
  }
  for (const auto& name : names) {
    if (tables.id_of(name) < 0) {
      throw TableError("table file does not cover alphabet symbol '" + name + "'");
    }
  }
  return tables;
}

}  // namespace nvl
