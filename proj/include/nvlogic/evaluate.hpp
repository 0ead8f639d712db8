#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nvlogic/connectives.hpp"
#include "nvlogic/errors.hpp"
#include "nvlogic/formula.hpp"
#include "nvlogic/symbolic.hpp"
#include "nvlogic/text.hpp"

namespace nvl {

// --- logic configurations ---------------------------------------------

struct BooleanLogic {};
struct KleeneLogic {};
struct BelnapLogic {};

/// A finite symbol logic defined entirely by loaded connective tables;
/// formula AND/OR/NOT dispatch to ops named "and", "or", "not".
struct CustomLogic {
  ConnectiveTables tables;
};

/// n-norm/n-conorm connectives built from one t-norm family.
struct NormEngine {
  NormFamily family = NormFamily::MinMax;
  IndeterminacyMode mode = IndeterminacyMode::Pessimistic;
};

/// Priority-product connectives with one order per connective.
struct PriorityEngine {
  PriorityOrder and_order;
  PriorityOrder or_order;
};

struct NeutroLogic {
  Signature sig;
  std::variant<NormEngine, PriorityEngine> engine;
};

inline NeutroLogic neutro_norm(const Signature& sig, NormFamily family,
                               IndeterminacyMode mode) {
  return {sig, NormEngine{family, mode}};
}

inline NeutroLogic neutro_priority(const Signature& sig, Bound bound) {
  return {sig, PriorityEngine{PriorityOrder::conjunction(sig, bound),
                              PriorityOrder::disjunction(sig, bound)}};
}

/// One connective engine per evaluation: the engine choice fixes the
/// semantics of every AND/OR/NOT in the formula.
using LogicConfig = std::variant<BooleanLogic, KleeneLogic, BelnapLogic, CustomLogic, NeutroLogic>;

/// A value of whichever logic is configured.
using Value = std::variant<BoolVal, KleeneVal, BelnapVal, Symbol, RefinedValue>;

/// Variable bindings, held as untyped literals and coerced per logic when
/// the formula is evaluated.
using Assignment = std::map<std::string, Literal, std::less<>>;

inline std::string render_value(const Value& v) {
  if (const auto* b = std::get_if<BoolVal>(&v)) return *b == BoolVal::T ? "true" : "false";
  if (const auto* k = std::get_if<KleeneVal>(&v)) return "#" + std::string(to_symbol(*k));
  if (const auto* bl = std::get_if<BelnapVal>(&v)) return "#" + std::string(to_symbol(*bl));
  if (const auto* s = std::get_if<Symbol>(&v)) return "#" + s->name;
  return to_string(std::get<RefinedValue>(v));
}

namespace detail {

[[noreturn]] inline void bad_literal(const Literal& l, const char* logic) {
  std::string text;
  if (const auto* b = std::get_if<bool>(&l)) {
    text = *b ? "true" : "false";
  } else if (const auto* s = std::get_if<Symbol>(&l)) {
    text = "#" + s->name;
  } else {
    text = to_string(std::get<RefinedValue>(l));
  }
  throw UnknownLiteral("literal " + text + " has no meaning in " + logic + " logic");
}

struct BoolPolicy {
  using value_type = BoolVal;
  BoolVal from_literal(const Literal& l) const {
    if (const auto* b = std::get_if<bool>(&l)) return *b ? BoolVal::T : BoolVal::F;
    bad_literal(l, "boolean");
  }
  BoolVal conj(BoolVal x, BoolVal y) const { return bool_and(x, y); }
  BoolVal disj(BoolVal x, BoolVal y) const { return bool_or(x, y); }
  BoolVal comp(BoolVal x) const { return bool_not(x); }
};

struct KleenePolicy {
  using value_type = KleeneVal;
  KleeneVal from_literal(const Literal& l) const {
    if (const auto* b = std::get_if<bool>(&l)) return *b ? KleeneVal::T : KleeneVal::F;
    if (const auto* s = std::get_if<Symbol>(&l)) {
      if (s->name == "T") return KleeneVal::T;
      if (s->name == "U") return KleeneVal::U;
      if (s->name == "F") return KleeneVal::F;
    }
    bad_literal(l, "Kleene");
  }
  KleeneVal conj(KleeneVal x, KleeneVal y) const { return kleene_and(x, y); }
  KleeneVal disj(KleeneVal x, KleeneVal y) const { return kleene_or(x, y); }
  KleeneVal comp(KleeneVal x) const { return kleene_not(x); }
};

struct BelnapPolicy {
  using value_type = BelnapVal;
  BelnapVal from_literal(const Literal& l) const {
    if (const auto* b = std::get_if<bool>(&l)) return *b ? BelnapVal::T : BelnapVal::F;
    if (const auto* s = std::get_if<Symbol>(&l)) {
      if (s->name == "T") return BelnapVal::T;
      if (s->name == "F") return BelnapVal::F;
      if (s->name == "U") return BelnapVal::U;
      if (s->name == "C") return BelnapVal::C;
    }
    bad_literal(l, "Belnap");
  }
  BelnapVal conj(BelnapVal x, BelnapVal y) const { return belnap_and(x, y); }
  BelnapVal disj(BelnapVal x, BelnapVal y) const { return belnap_or(x, y); }
  BelnapVal comp(BelnapVal x) const { return belnap_not(x); }
};

struct CustomPolicy {
  using value_type = int;  // symbol id
  const ConnectiveTables& tables;

  int from_literal(const Literal& l) const {
    if (const auto* s = std::get_if<Symbol>(&l)) {
      int id = tables.id_of(s->name);
      if (id >= 0) return id;
      throw UnknownLiteral("#" + s->name + " is not a symbol of this logic");
    }
    bad_literal(l, "this custom");
  }
  int conj(int x, int y) const { return tables.apply_binary("and", x, y); }
  int disj(int x, int y) const { return tables.apply_binary("or", x, y); }
  int comp(int x) const { return tables.apply_unary("not", x); }
};

struct NeutroPolicy {
  using value_type = RefinedValue;
  const NeutroLogic& logic;

  RefinedValue from_literal(const Literal& l) const {
    if (const auto* b = std::get_if<bool>(&l)) return crisp(*b);
    if (const auto* v = std::get_if<RefinedValue>(&l)) {
      if (!(v->sig() == logic.sig)) {
        throw SignatureMismatch("value " + to_string(*v) +
                                " does not match the configured signature (" +
                                std::to_string(logic.sig.p()) + "," +
                                std::to_string(logic.sig.r()) + "," +
                                std::to_string(logic.sig.s()) + ")");
      }
      return *v;
    }
    bad_literal(l, "neutrosophic");
  }

  RefinedValue crisp(bool b) const {
    std::vector<UnitInterval> t(static_cast<std::size_t>(logic.sig.p()),
                                UnitInterval(b ? 1.0 : 0.0));
    std::vector<UnitInterval> i(static_cast<std::size_t>(logic.sig.r()), UnitInterval(0.0));
    std::vector<UnitInterval> f(static_cast<std::size_t>(logic.sig.s()),
                                UnitInterval(b ? 0.0 : 1.0));
    return {logic.sig, std::move(t), std::move(i), std::move(f)};
  }

  RefinedValue conj(const RefinedValue& x, const RefinedValue& y) const {
    if (const auto* norm = std::get_if<NormEngine>(&logic.engine)) {
      return n_norm(x, y, norm->family, norm->mode);
    }
    return priority_combine(x, y, std::get<PriorityEngine>(logic.engine).and_order);
  }
  RefinedValue disj(const RefinedValue& x, const RefinedValue& y) const {
    if (const auto* norm = std::get_if<NormEngine>(&logic.engine)) {
      return n_conorm(x, y, norm->family, norm->mode);
    }
    return priority_combine(x, y, std::get<PriorityEngine>(logic.engine).or_order);
  }
  RefinedValue comp(const RefinedValue& x) const {
    if (logic.sig.p() != logic.sig.s()) {
      throw UnsupportedNot("'~' needs a signature with p == s; configured signature has p=" +
                           std::to_string(logic.sig.p()) + ", s=" +
                           std::to_string(logic.sig.s()));
    }
    return negate(x);
  }
};

template <class Policy>
typename Policy::value_type eval_rec(const Formula& f, const Assignment& env,
                                     const Policy& pol) {
  if (const auto* v = std::get_if<VarNode>(&f.node)) {
    auto it = env.find(v->name);
    if (it == env.end()) throw UnboundVariable("variable '" + v->name + "' is not bound");
    return pol.from_literal(it->second);
  }
  if (const auto* c = std::get_if<ConstNode>(&f.node)) return pol.from_literal(c->value);
  if (const auto* n = std::get_if<NotNode>(&f.node)) return pol.comp(eval_rec(*n->child, env, pol));
  if (const auto* a = std::get_if<AndNode>(&f.node)) {
    return pol.conj(eval_rec(*a->lhs, env, pol), eval_rec(*a->rhs, env, pol));
  }
  const auto& o = std::get<OrNode>(f.node);
  return pol.disj(eval_rec(*o.lhs, env, pol), eval_rec(*o.rhs, env, pol));
}

}  // namespace detail

/// Bottom-up evaluation with AND/OR/NOT dispatched to the configured logic.
inline Value evaluate(const Formula& f, const Assignment& env, const LogicConfig& cfg) {
  if (std::holds_alternative<BooleanLogic>(cfg)) {
    return detail::eval_rec(f, env, detail::BoolPolicy{});
  }
  if (std::holds_alternative<KleeneLogic>(cfg)) {
    return detail::eval_rec(f, env, detail::KleenePolicy{});
  }
  if (std::holds_alternative<BelnapLogic>(cfg)) {
    return detail::eval_rec(f, env, detail::BelnapPolicy{});
  }
  if (const auto* custom = std::get_if<CustomLogic>(&cfg)) {
    int id = detail::eval_rec(f, env, detail::CustomPolicy{custom->tables});
    return Symbol{custom->tables.symbols()[static_cast<std::size_t>(id)]};
  }
  return detail::eval_rec(f, env, detail::NeutroPolicy{std::get<NeutroLogic>(cfg)});
}

// --- truth tables ----------------------------------------------------------

/// The value domain a finite logic enumerates, as literals in declared
/// order. Throws InfiniteDomain for neutrosophic configurations.
inline std::vector<Literal> logic_alphabet(const LogicConfig& cfg) {
  if (std::holds_alternative<BooleanLogic>(cfg)) return {false, true};
  if (std::holds_alternative<KleeneLogic>(cfg)) {
    return {Symbol{"F"}, Symbol{"U"}, Symbol{"T"}};
  }
  if (std::holds_alternative<BelnapLogic>(cfg)) {
    return {Symbol{"F"}, Symbol{"U"}, Symbol{"C"}, Symbol{"T"}};
  }
  if (const auto* custom = std::get_if<CustomLogic>(&cfg)) {
    std::vector<Literal> out;
    for (const auto& name : custom->tables.symbols()) out.push_back(Symbol{name});
    return out;
  }
  throw InfiniteDomain("the neutrosophic value domain is not enumerable; truth tables need a "
                       "finite logic");
}

struct TruthTable {
  std::vector<std::string> variables;  // sorted
  std::string result_label;            // the formula, canonically printed
  struct Row {
    std::vector<std::string> inputs;
    std::string result;
  };
  std::vector<Row> rows;
};

inline std::string render_literal(const Literal& l) {
  if (const auto* b = std::get_if<bool>(&l)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<Symbol>(&l)) return "#" + s->name;
  return to_string(std::get<RefinedValue>(l));
}

/// Enumerate all assignments over the free variables in lexicographic order
/// (first variable varies slowest) and evaluate each row.
inline TruthTable truth_table(const Formula& f, const LogicConfig& cfg) {
  std::vector<Literal> alphabet = logic_alphabet(cfg);
  TruthTable table;
  table.variables = free_variables(f);
  table.result_label = to_string(f);

  std::size_t k = table.variables.size();
  std::vector<std::size_t> odometer(k, 0);
  while (true) {
    Assignment env;
    TruthTable::Row row;
    for (std::size_t v = 0; v < k; ++v) {
      env[table.variables[v]] = alphabet[odometer[v]];
      row.inputs.push_back(render_literal(alphabet[odometer[v]]));
    }
    row.result = render_value(evaluate(f, env, cfg));
    table.rows.push_back(std::move(row));

    // odometer: last variable fastest
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < alphabet.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return table;
    }
    if (k == 0) return table;  // a closed formula has exactly one row
  }
}

// --- assignment files --------------------------------------------------

/// Parse "name = value" bindings, one per line. A '#' in column one starts
/// a comment line; blank lines are skipped. Values are true/false, #SYM, or
/// an NV(...) form.
inline Assignment parse_assignments(std::string_view text) {
  Assignment env;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t') {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    detail::Scanner sc(line);
    sc.skip_ws();
    if (!detail::is_ident_start(sc.peek())) {
      throw SyntaxError(lineno, sc.column(), "expected a variable name" + sc.found_here());
    }
    std::string name;
    while (detail::is_ident_char(sc.peek())) name += sc.advance();
    sc.skip_ws();
    if (!sc.match('=')) {
      throw SyntaxError(lineno, sc.column(), "expected '=' after the name" + sc.found_here());
    }
    sc.skip_ws();

    Literal value = false;
    if (sc.match('#')) {
      if (!detail::is_ident_start(sc.peek())) {
        throw SyntaxError(lineno, sc.column(), "expected a symbol name after '#'");
      }
      std::string sym;
      while (detail::is_ident_char(sc.peek())) sym += sc.advance();
      value = Symbol{std::move(sym)};
    } else if (detail::is_ident_start(sc.peek())) {
      std::string word;
      while (detail::is_ident_char(sc.peek())) word += sc.advance();
      if (word == "true") {
        value = true;
      } else if (word == "false") {
        value = false;
      } else if (word == "NV") {
        try {
          value = detail::parse_nv_tail(sc);
        } catch (const SyntaxError& e) {
          throw SyntaxError(lineno, e.column(), e.message());
        }
      } else {
        throw SyntaxError(lineno, 1, "unknown value '" + word + "'");
      }
    } else {
      throw SyntaxError(lineno, sc.column(), "expected a value" + sc.found_here());
    }
    sc.skip_ws();
    if (!sc.at_end()) {
      throw SyntaxError(lineno, sc.column(), "unexpected trailing input" + sc.found_here());
    }
    if (env.count(name)) {
      throw SyntaxError(lineno, 1, "variable '" + name + "' is bound twice");
    }
    env[name] = std::move(value);
  }
  return env;
}

}  // namespace nvl
