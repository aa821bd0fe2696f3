#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/polynomial.hpp"

namespace grammarcalc {

/// A context-free grammar in the substitution sense: each ruled symbol maps
/// to a Laurent polynomial, and the attached derivation D satisfies
/// D(v) = rule(v) on symbols.
///
/// In lenient mode a symbol without a rule is a constant (D(v) = 0). In
/// strict mode meeting such a symbol during derivation is an error.
class Grammar {
 public:
  Grammar(std::string name, std::map<Symbol, Polynomial> rules, bool strict = false)
      : name_(std::move(name)), rules_(std::move(rules)), strict_(strict) {
    for (const auto& [s, rhs] : rules_) {
      alphabet_.insert(s);
      for (Symbol used : rhs.symbols()) alphabet_.insert(used);
    }
  }

  const std::string& name() const noexcept { return name_; }
  const std::map<Symbol, Polynomial>& rules() const noexcept { return rules_; }
  bool strict() const noexcept { return strict_; }

  /// Ruled symbols plus every symbol used on a right-hand side.
  const std::set<Symbol>& alphabet() const noexcept { return alphabet_; }

  const Polynomial* rule(Symbol s) const {
    auto it = rules_.find(s);
    return it == rules_.end() ? nullptr : &it->second;
  }

  Grammar with_strict(bool strict) const { return Grammar(name_, rules_, strict); }

  /// Canonical DSL text; rules appear in alphabetical order of their symbol.
  std::string to_string() const {
    std::vector<Symbol> keys;
    for (const auto& [s, rhs] : rules_) keys.push_back(s);
    std::sort(keys.begin(), keys.end(), AlphabeticalOrder{});
    std::string out;
    for (Symbol s : keys) {
      if (!out.empty()) out += "; ";
      out += s.name() + " -> " + rules_.at(s).to_string();
    }
    return out;
  }

 private:
  std::string name_;
  std::map<Symbol, Polynomial> rules_;
  bool strict_;
  std::set<Symbol> alphabet_;
};

/// One application of the derivation: linear over terms, Leibniz over the
/// factors of each monomial. The exponent rule is the same for negative powers.
inline Polynomial derive_once(const Grammar& g, const Polynomial& p) {
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.entries()) {
      const Polynomial* rhs = g.rule(v);
      if (rhs == nullptr) {
        if (g.strict()) throw UnruledSymbolError("symbol '" + v.name() + "' has no rule in grammar '" + g.name() + "'");
        continue;
      }
      const Monomial rest = m.with_exponent(v, checked_add(e, -1));
      const Rational scale = c * e;
      for (const auto& [rm, rc] : rhs->terms()) out.emplace_back(rest * rm, scale * rc);
    }
  }
  return Polynomial::from_terms(std::move(out));
}

/// D^0(seed), ..., D^n(seed).
inline std::vector<Polynomial> derive_sequence(const Grammar& g, const Polynomial& seed, unsigned n) {
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  out.push_back(seed);
  for (unsigned i = 0; i < n; ++i) out.push_back(derive_once(g, out.back()));
  return out;
}

inline Polynomial derive_n(const Grammar& g, const Polynomial& seed, unsigned n) {
  Polynomial p = seed;
  for (unsigned i = 0; i < n; ++i) p = derive_once(g, p);
  return p;
}

/// Parses the grammar DSL:
///
///     rules := rule ((";" | newline) rule)*
///     rule  := symbol ("->" | "|->") polynomial
///
/// `#` starts a comment that runs to the end of the line.
inline Grammar parse_grammar(std::string_view text, std::string name = "inline", bool strict = false) {
  detail::TextCursor in(text);
  std::map<Symbol, Polynomial> rules;
  for (;;) {
    in.skip_space(true);
    while (in.peek() == ';' || in.peek() == '\n') {
      in.get();
      in.skip_space(true);
    }
    if (in.at_end()) break;

    const std::size_t line = in.line(), column = in.column();
    std::string lhs;
    while (std::isalnum(static_cast<unsigned char>(in.peek())) || in.peek() == '_') lhs += in.get();
    if (!is_identifier(lhs)) in.fail("expected a symbol on the left of a rule");
    in.skip_space(true);
    if (!in.consume("->") && !in.consume("|->")) in.fail("expected '->'");
    Polynomial rhs = detail::parse_polynomial(in, true);
    in.skip_space(true);
    if (!in.at_end() && in.peek() != ';' && in.peek() != '\n')
      in.fail(std::string("unexpected character '") + in.peek() + "'");

    Symbol s(lhs);
    if (!rules.emplace(s, std::move(rhs)).second)
      throw ParseError("duplicate rule for symbol '" + lhs + "'", line, column);
  }
  if (rules.empty()) throw ParseError("grammar has no rules", 1, 1);
  return Grammar(std::move(name), std::move(rules), strict);
}

}  // namespace grammarcalc
