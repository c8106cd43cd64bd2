#include "pittslab/syntax.hpp"

#include <cctype>
#include <sstream>

namespace pittslab {

void Signature::addConnective(ConnectiveSymbol c) {
  if (connective(c.name) || definition(c.name)) throw Error("duplicate symbol '" + c.name + "'");
  connectives_.push_back(std::move(c));
}

void Signature::addDefinition(Definition d) {
  if (connective(d.name) || definition(d.name)) throw Error("duplicate symbol '" + d.name + "'");
  definitions_.push_back(std::move(d));
}

const ConnectiveSymbol* Signature::connective(std::string_view name) const {
  for (const auto& c : connectives_)
    if (c.name == name) return &c;
  return nullptr;
}

const Definition* Signature::definition(std::string_view name) const {
  for (const auto& d : definitions_)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

std::string describe(std::size_t offset, const std::set<std::string>& expected, const std::string& found) {
  std::ostringstream os;
  os << "syntax error at byte " << offset << ": found " << found << ", expected ";
  bool first = true;
  for (const auto& e : expected) {
    os << (first ? "" : ", ") << e;
    first = false;
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, std::string found)
    : Error(describe(offset, expected, found)), offset_(offset), expected_(std::move(expected)), found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Bot, Top, Exists, Forall, Not, And, Or, Imp, Iff, LParen, RParen, Comma, Dot, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string tokName(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Bot: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::Exists: return "'exists'";
    case Tok::Forall: return "'forall'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, ParseOptions opts, bool prefix = false)
      : text_(text), sig_(sig), opts_(opts), prefix_(prefix) {
    lex();
  }

  // Longest formula at the start of the text; returns the offset just after it.
  Formula formulaPrefix(std::size_t& end) {
    Formula f = formula();
    end = peek().offset;
    return f;
  }

  Formula formulaToEnd() {
    Formula f = formula();
    expect(Tok::End);
    return f;
  }

  Sequent sequent() {
    Sequent s;
    if (peek().kind != Tok::Turnstile) {
      s.hypotheses.push_back(formula());
      while (peek().kind == Tok::Comma) {
        next();
        s.hypotheses.push_back(formula());
      }
    }
    expect(Tok::Turnstile);
    if (peek().kind != Tok::End) s.conclusion = formula();
    expect(Tok::End);
    return s;
  }

 private:
  void lex() {
    std::size_t i = 0;
    auto at = [&](std::string_view s) { return text_.substr(i, s.size()) == s; };
    while (true) {
      while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
      if (i >= text_.size()) {
        toks_.push_back({Tok::End, "", i});
        return;
      }
      std::size_t start = i;
      char c = text_[i];
      if (std::isalpha(static_cast<unsigned char>(c)) || (c == '_' && opts_.allowHole)) {
        ++i;
        if (c != '_')
          while (i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_' ||
                                      text_[i] == '\''))
            ++i;
        std::string word(text_.substr(start, i - start));
        Tok k = Tok::Ident;
        if (word == "bot") k = Tok::Bot;
        else if (word == "top") k = Tok::Top;
        else if (word == "exists") k = Tok::Exists;
        else if (word == "forall") k = Tok::Forall;
        toks_.push_back({k, word, start});
        continue;
      }
      struct Sym {
        std::string_view s;
        Tok k;
      };
      static constexpr Sym syms[] = {{"<->", Tok::Iff}, {"->", Tok::Imp}, {"/\\", Tok::And}, {"\\/", Tok::Or},
                                     {"|-", Tok::Turnstile}, {"~", Tok::Not}, {"(", Tok::LParen},
                                     {")", Tok::RParen}, {",", Tok::Comma}, {".", Tok::Dot}};
      bool matched = false;
      for (const auto& s : syms) {
        if (at(s.s)) {
          toks_.push_back({s.k, std::string(s.s), start});
          i += s.s.size();
          matched = true;
          break;
        }
      }
      if (!matched && prefix_) {
        toks_.push_back({Tok::End, "", start});
        return;
      }
      if (!matched)
        throw ParseError(start, {"formula"}, "unexpected character '" + std::string(1, c) + "'");
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.offset, std::move(expected), found);
  }

  const Token& expect(Tok k) {
    if (peek().kind != k) fail({tokName(k)});
    return next();
  }

  // iff := imp ('<->' iff)?
  Formula formula() {
    Formula lhs = implication();
    if (peek().kind == Tok::Iff) {
      next();
      return Formula::iff(lhs, formula());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      next();
      return Formula::neg(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bot:
        next();
        return Formula::bottom();
      case Tok::Top:
        next();
        return Formula::top();
      case Tok::LParen: {
        next();
        Formula f = formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Exists:
      case Tok::Forall: {
        bool ex = t.kind == Tok::Exists;
        next();
        const Token& v = expect(Tok::Ident);
        std::string var = v.text;
        if (sig_.connective(var) || sig_.definition(var))
          throw ParseError(v.offset, {"variable"}, "connective symbol '" + var + "'");
        expect(Tok::Dot);
        Formula body = formula();
        return ex ? Formula::exists(var, body) : Formula::forall(var, body);
      }
      case Tok::Ident:
        return identifier();
      default:
        fail({"identifier", "'bot'", "'top'", "'~'", "'('", "'exists'", "'forall'"});
    }
  }

  Formula identifier() {
    const Token& t = next();
    const ConnectiveSymbol* c = sig_.connective(t.text);
    const Definition* d = sig_.definition(t.text);
    if (!c && !d) {
      if (peek().kind == Tok::LParen)
        throw ParseError(t.offset, {"connective symbol"}, "undeclared symbol '" + t.text + "'");
      return Formula::var(t.text);
    }
    std::vector<Formula> args;
    if (peek().kind == Tok::LParen) {
      next();
      if (peek().kind != Tok::RParen) {
        args.push_back(formula());
        while (peek().kind == Tok::Comma) {
          next();
          args.push_back(formula());
        }
      }
      expect(Tok::RParen);
    }
    std::size_t arity = c ? static_cast<std::size_t>(c->arity) : d->params.size();
    if (args.size() != arity)
      throw ParseError(t.offset, {std::to_string(arity) + " argument(s) to '" + t.text + "'"},
                       std::to_string(args.size()) + " argument(s)");
    if (c) return Formula::app(t.text, std::move(args));
    Bindings b;
    for (std::size_t i = 0; i < args.size(); ++i) b.emplace(d->params[i], args[i]);
    return substitute(d->body, b);
  }

  std::string_view text_;
  const Signature& sig_;
  ParseOptions opts_;
  bool prefix_ = false;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Precedence levels, loosest first.
enum Prec { kQuant = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kNeg = 5, kAtom = 6 };

bool isIff(const Formula& f) {
  return f.kind() == Kind::And && f.lhs().kind() == Kind::Implies && f.rhs().kind() == Kind::Implies &&
         f.lhs().lhs() == f.rhs().rhs() && f.lhs().rhs() == f.rhs().lhs();
}

int precOf(const Formula& f) {
  if (f.isTop()) return kAtom;
  if (isIff(f)) return kIff;
  if (f.isNeg()) return kNeg;
  switch (f.kind()) {
    case Kind::Implies: return kImp;
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    case Kind::Exists:
    case Kind::Forall: return kQuant;
    default: return kAtom;
  }
}

// `tail`: nothing follows this subformula inside its parenthesised group, so
// a quantifier may extend to the end without parentheses.
void render(const Formula& f, int ctx, bool tail, std::string& out) {
  int p = precOf(f);
  bool parens = p < ctx || (p == kQuant && !tail);
  if (parens) {
    out += '(';
    tail = true;
  }
  auto binary = [&](const Formula& l, const Formula& r, const char* op, int lp, int rp) {
    render(l, lp, false, out);
    out += op;
    render(r, rp, tail, out);
  };
  if (f.isTop()) {
    out += "top";
  } else if (isIff(f)) {
    binary(f.lhs().lhs(), f.lhs().rhs(), " <-> ", kIff + 1, kIff);
  } else if (f.isNeg()) {
    out += '~';
    render(f.lhs(), kNeg, tail, out);
  } else {
    switch (f.kind()) {
      case Kind::Var: out += f.name(); break;
      case Kind::Bottom: out += "bot"; break;
      case Kind::And: binary(f.lhs(), f.rhs(), " /\\ ", kAnd, kAnd + 1); break;
      case Kind::Or: binary(f.lhs(), f.rhs(), " \\/ ", kOr, kOr + 1); break;
      case Kind::Implies: binary(f.lhs(), f.rhs(), " -> ", kImp + 1, kImp); break;
      case Kind::Exists:
      case Kind::Forall:
        out += f.kind() == Kind::Exists ? "exists " : "forall ";
        out += f.name();
        out += ". ";
        render(f.body(), kQuant, true, out);
        break;
      case Kind::App: {
        out += f.name();
        out += '(';
        bool first = true;
        for (const auto& a : f.args()) {
          if (!first) out += ", ";
          render(a, kQuant, true, out);
          first = false;
        }
        out += ')';
        break;
      }
    }
  }
  if (parens) out += ')';
}

}  // namespace

Formula parseFormula(std::string_view text, const Signature& sig, ParseOptions opts) {
  return Parser(text, sig, opts).formulaToEnd();
}

Formula parseFormulaPrefix(std::string_view text, std::size_t& pos, const Signature& sig, ParseOptions opts) {
  std::size_t end = 0;
  try {
    Formula f = Parser(text.substr(pos), sig, opts, true).formulaPrefix(end);
    pos += end;
    return f;
  } catch (const ParseError& e) {
    throw ParseError(pos + e.offset(), e.expected(), e.found());
  }
}

Sequent parseSequent(std::string_view text, const Signature& sig, ParseOptions opts) {
  return Parser(text, sig, opts).sequent();
}

std::string print(const Formula& f) {
  std::string out;
  render(f, kQuant, true, out);
  return out;
}

std::string print(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
    if (i) out += ", ";
    out += print(s.hypotheses[i]);
  }
  out += out.empty() ? "|- " : " |- ";
  out += print(s.conclusion);
  return out;
}

}  // namespace pittslab
