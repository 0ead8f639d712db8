#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nvlogic/errors.hpp"
#include "nvlogic/text.hpp"

namespace nvl {

/// A symbolic-logic value literal, written #NAME in formulas.
struct Symbol {
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// What a constant leaf can hold before a logic gives it meaning: the
/// Boolean keywords, a #symbol, or an inline NV value.
using Literal = std::variant<bool, Symbol, RefinedValue>;

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct VarNode {
  std::string name;
};
struct ConstNode {
  Literal value;
};
struct NotNode {
  FormulaPtr child;
};
struct AndNode {
  FormulaPtr lhs, rhs;
};
struct OrNode {
  FormulaPtr lhs, rhs;
};

/// Propositional formula AST over named variables with NOT/AND/OR. Nodes are
/// immutable and shared, so subtrees can be reused freely.
struct Formula {
  std::variant<VarNode, ConstNode, NotNode, AndNode, OrNode> node;
};

inline FormulaPtr var(std::string name) {
  return std::make_shared<Formula>(Formula{VarNode{std::move(name)}});
}
inline FormulaPtr lit(Literal value) {
  return std::make_shared<Formula>(Formula{ConstNode{std::move(value)}});
}
inline FormulaPtr make_not(FormulaPtr child) {
  return std::make_shared<Formula>(Formula{NotNode{std::move(child)}});
}
inline FormulaPtr make_and(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(Formula{AndNode{std::move(lhs), std::move(rhs)}});
}
inline FormulaPtr make_or(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(Formula{OrNode{std::move(lhs), std::move(rhs)}});
}

inline bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* va = std::get_if<VarNode>(&a.node)) {
    return va->name == std::get<VarNode>(b.node).name;
  }
  if (const auto* ca = std::get_if<ConstNode>(&a.node)) {
    return ca->value == std::get<ConstNode>(b.node).value;
  }
  if (const auto* na = std::get_if<NotNode>(&a.node)) {
    return structurally_equal(*na->child, *std::get<NotNode>(b.node).child);
  }
  if (const auto* aa = std::get_if<AndNode>(&a.node)) {
    const auto& ab = std::get<AndNode>(b.node);
    return structurally_equal(*aa->lhs, *ab.lhs) && structurally_equal(*aa->rhs, *ab.rhs);
  }
  const auto& oa = std::get<OrNode>(a.node);
  const auto& ob = std::get<OrNode>(b.node);
  return structurally_equal(*oa.lhs, *ob.lhs) && structurally_equal(*oa.rhs, *ob.rhs);
}

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

/// Recursive-descent parser for
///   expr  := or
///   or    := and ('|' and)*
///   and   := unary ('&' unary)*
///   unary := '~' unary | atom
///   atom  := ident | literal | '(' expr ')'
/// Both binary operators associate left. Literals: true, false, #SYM, and
/// inline NV(p,r,s)[...] values.
class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : sc_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_or();
    sc_.skip_ws();
    if (!sc_.at_end()) sc_.fail("expected end of formula");
    return f;
  }

private:
  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    sc_.skip_ws();
    while (sc_.match('|')) {
      f = make_or(std::move(f), parse_and());
      sc_.skip_ws();
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    sc_.skip_ws();
    while (sc_.match('&')) {
      f = make_and(std::move(f), parse_unary());
      sc_.skip_ws();
    }
    return f;
  }

  FormulaPtr parse_unary() {
    sc_.skip_ws();
    if (sc_.match('~')) return make_not(parse_unary());
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    sc_.skip_ws();
    if (sc_.match('(')) {
      FormulaPtr f = parse_or();
      sc_.skip_ws();
      sc_.expect(')', "to close the group");
      return f;
    }
    if (sc_.match('#')) {
      if (!is_ident_start(sc_.peek())) sc_.fail("expected a symbol name after '#'");
      return lit(Symbol{scan_ident()});
    }
    if (is_ident_start(sc_.peek())) {
      std::string name = scan_ident();
      if (name == "true") return lit(true);
      if (name == "false") return lit(false);
      if (name == "NV") {
        // only a literal when a signature opens; otherwise NV is a variable
        Scanner probe = sc_;
        probe.skip_ws();
        if (probe.peek() == '(') return lit(parse_nv_tail(sc_));
      }
      return var(std::move(name));
    }
    sc_.fail("expected a variable, literal, '~', or '('");
  }

  std::string scan_ident() {
    std::string name;
    while (is_ident_char(sc_.peek())) name += sc_.advance();
    return name;
  }

  Scanner sc_;
};

}  // namespace detail

/// Parse a formula; throws SyntaxError with 1-based line/column on failure.
inline FormulaPtr parse(std::string_view text) { return detail::FormulaParser(text).parse(); }

namespace detail {

// precedence levels: Or = 0, And = 1, unary = 2
inline void print_formula(const Formula& f, int min_prec, std::string& out) {
  if (const auto* v = std::get_if<VarNode>(&f.node)) {
    out += v->name;
  } else if (const auto* c = std::get_if<ConstNode>(&f.node)) {
    if (const auto* b = std::get_if<bool>(&c->value)) {
      out += *b ? "true" : "false";
    } else if (const auto* s = std::get_if<Symbol>(&c->value)) {
      out += '#';
      out += s->name;
    } else {
      out += to_string(std::get<RefinedValue>(c->value));
    }
  } else if (const auto* n = std::get_if<NotNode>(&f.node)) {
    out += '~';
    print_formula(*n->child, 2, out);
  } else if (const auto* a = std::get_if<AndNode>(&f.node)) {
    bool wrap = min_prec > 1;
    if (wrap) out += '(';
    print_formula(*a->lhs, 1, out);
    out += " & ";
    print_formula(*a->rhs, 2, out);  // right operand tighter: '&' associates left
    if (wrap) out += ')';
  } else {
    const auto& o = std::get<OrNode>(f.node);
    bool wrap = min_prec > 0;
    if (wrap) out += '(';
    print_formula(*o.lhs, 0, out);
    out += " | ";
    print_formula(*o.rhs, 1, out);
    if (wrap) out += ')';
  }
}

}  // namespace detail

/// Canonical text with minimal parentheses; parsing it back reproduces the
/// same tree.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(f, 0, out);
  return out;
}

/// Free variables in sorted order.
inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> names;
  auto walk = [&](auto&& self, const Formula& node) -> void {
    if (const auto* v = std::get_if<VarNode>(&node.node)) {
      for (const auto& seen : names) {
        if (seen == v->name) return;
      }
      names.push_back(v->name);
    } else if (const auto* n = std::get_if<NotNode>(&node.node)) {
      self(self, *n->child);
    } else if (const auto* a = std::get_if<AndNode>(&node.node)) {
      self(self, *a->lhs);
      self(self, *a->rhs);
    } else if (const auto* o = std::get_if<OrNode>(&node.node)) {
      self(self, *o->lhs);
      self(self, *o->rhs);
    }
  };
  walk(walk, f);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace nvl
