#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pittslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation restricted to quantifier-free, App-free input
/// receives a quantifier or an uninterpreted application.
class UnsupportedFormula : public Error {
 public:
  using Error::Error;
};

enum class Kind : std::uint8_t { Var, Bottom, And, Or, Implies, Exists, Forall, App };

/// Immutable formula handle. Copies share the underlying node.
///
/// Negation, biconditional and truth are abbreviations:
///   ~A    = A -> bot
///   A<->B = (A -> B) /\ (B -> A)
///   top   = bot -> bot
class Formula {
 public:
  Formula();  // bot

  static Formula var(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula iff(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula app(std::string symbol, std::vector<Formula> args);

  Kind kind() const;
  /// Variable name, bound variable of a quantifier, or connective symbol.
  const std::string& name() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  /// Body of a quantifier.
  const Formula& body() const;
  std::span<const Formula> args() const;

  bool isVar() const { return kind() == Kind::Var; }
  bool isBottom() const { return kind() == Kind::Bottom; }
  bool isTop() const;
  bool isNeg() const;
  bool isBinary() const;
  bool isQuantifier() const;

  /// Number of AST nodes (abbreviations counted expanded).
  std::size_t size() const;
  std::size_t hash() const;
  bool quantifierFree() const;
  bool appFree() const;

  /// Structural identity (bound names significant). See alphaEqual.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Total structural order; used for canonical multisets.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, std::vector<Formula> kids);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using VarSet = std::set<std::string>;
using Bindings = std::map<std::string, Formula>;

VarSet freeVars(const Formula& f);
VarSet boundVars(const Formula& f);
/// Free and bound variable names plus connective symbols.
VarSet allNames(const Formula& f);
bool occursFree(const Formula& f, const std::string& var);

/// Simultaneous capture-avoiding substitution of formulas for free variables.
/// A binder whose variable would capture a free variable of an inserted
/// formula is renamed by appending primes until fresh.
Formula substitute(const Formula& base, const Bindings& bindings);
Formula substitute(const Formula& base, const std::string& var, const Formula& replacement);

/// Equality up to renaming of bound variables.
bool alphaEqual(const Formula& a, const Formula& b);

/// Appends primes to `base` until it is not in `avoid`.
std::string freshName(const std::string& base, const VarSet& avoid);

/// Throws UnsupportedFormula unless f is quantifier-free and App-free.
void requirePropositional(const Formula& f, const char* where);

}  // namespace pittslab
