#include "infralog/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "infralog/errors.hpp"

namespace infralog {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Colon,
  Bang,
  Amp,
  Pipe,
  Arrow,
  EqType,   // '=' with an attached type
  InType,   // 'in' with an attached type
  TypeLit,  // a bare type, emitted after ':'
  ForallKw,
  ExistsKw,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Type type;  // EqType / InType
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= src_.size()) break;
      std::size_t start = i_;
      char c = src_[i_];
      if (c == '(') { ++i_; out.push_back({Tok::LParen, "(", {}, start}); continue; }
      if (c == ')') { ++i_; out.push_back({Tok::RParen, ")", {}, start}); continue; }
      if (c == ',') { ++i_; out.push_back({Tok::Comma, ",", {}, start}); continue; }
      if (c == '.') { ++i_; out.push_back({Tok::Dot, ".", {}, start}); continue; }
      if (c == ':') {
        ++i_;
        out.push_back({Tok::Colon, ":", {}, start});
        skip_space();
        std::size_t tpos = i_;
        out.push_back({Tok::TypeLit, "", lex_type(), tpos});
        continue;
      }
      if (c == '!') { ++i_; out.push_back({Tok::Bang, "!", {}, start}); continue; }
      if (c == '&') { ++i_; out.push_back({Tok::Amp, "&", {}, start}); continue; }
      if (c == '|') { ++i_; out.push_back({Tok::Pipe, "|", {}, start}); continue; }
      if (c == '-') {
        if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
          i_ += 2;
          out.push_back({Tok::Arrow, "->", {}, start});
          continue;
        }
        throw SyntaxError("expected '->'", start);
      }
      if (c == '=') {
        ++i_;
        out.push_back({Tok::EqType, "=", lex_type(), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word = lex_word();
        if (word == "A") { out.push_back({Tok::ForallKw, word, {}, start}); continue; }
        if (word == "E") { out.push_back({Tok::ExistsKw, word, {}, start}); continue; }
        if (word == "in") {
          out.push_back({Tok::InType, word, lex_type(), start});
          continue;
        }
        out.push_back({Tok::Ident, std::move(word), {}, start});
        continue;
      }
      throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::End, "", {}, src_.size()});
    return out;
  }

 private:
  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else {
        break;
      }
    }
  }

  std::string lex_word() {
    std::size_t start = i_;
    while (i_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
      ++i_;
    return src_.substr(start, i_ - start);
  }

  // A type written directly after '=' or 'in': `0` or a bracket form.
  Type lex_type() {
    if (i_ >= src_.size()) throw SyntaxError("expected a type", i_);
    if (src_[i_] == '0') {
      ++i_;
      return Type::first_order();
    }
    if (src_[i_] == '[') {
      std::size_t start = i_;
      int depth = 0;
      while (i_ < src_.size()) {
        if (src_[i_] == '[') ++depth;
        if (src_[i_] == ']') {
          --depth;
          if (depth == 0) {
            ++i_;
            return Type::parse(src_.substr(start, i_ - start));
          }
        }
        ++i_;
      }
      throw SyntaxError("unterminated type", start);
    }
    throw SyntaxError("expected a type after '=' or 'in'", i_);
  }

  const std::string& src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const SignatureSpec& sig)
      : toks_(std::move(tokens)), sig_(sig) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    validate_variable_hygiene(f);
    validate_against_signature(f, sig_);
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& advance() { return toks_[pos_++]; }
  bool match(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) throw SyntaxError(std::string("expected ") + what, peek().pos);
    return advance();
  }

  FormulaPtr formula() {
    if (peek().kind == Tok::ForallKw || peek().kind == Tok::ExistsKw) {
      bool universal = advance().kind == Tok::ForallKw;
      const Token& name = expect(Tok::Ident, "a variable name");
      if (sig_.has_constant(name.text))
        throw TypeError("cannot bind constant name '" + name.text + "'");
      expect(Tok::Colon, "':' after the bound variable");
      Type t = parse_type_token();
      expect(Tok::Dot, "'.' after the quantifier");
      Term var = Term::variable(name.text, t);
      for (const auto& [n, ty] : scope_)
        if (n == name.text)
          throw SyntaxError("quantifier shadows variable '" + name.text + "'", name.pos);
      scope_.emplace_back(name.text, t);
      FormulaPtr body = formula();
      scope_.pop_back();
      return universal ? Formula::forall(var, body) : Formula::exists(var, body);
    }
    return implication();
  }

  Type parse_type_token() {
    const Token& t = expect(Tok::TypeLit, "a type");
    return t.type;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (match(Tok::Arrow)) return Formula::implication(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (match(Tok::Pipe)) f = Formula::disjunction(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (match(Tok::Amp)) f = Formula::conjunction(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (match(Tok::Bang)) return Formula::negation(unary());
    return primary();
  }

  bool paren_starts_term_list() const {
    // '(' ident (',' ident)* ')' followed by 'in' is a belonging atom.
    std::size_t i = 1;
    if (peek(i).kind != Tok::Ident) return false;
    ++i;
    while (peek(i).kind == Tok::Comma) {
      ++i;
      if (peek(i).kind != Tok::Ident) return false;
      ++i;
    }
    return peek(i).kind == Tok::RParen && peek(i + 1).kind == Tok::InType;
  }

  FormulaPtr primary() {
    if (peek().kind == Tok::LParen) {
      if (paren_starts_term_list()) return belonging_with_list();
      advance();
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind == Tok::ForallKw || peek().kind == Tok::ExistsKw) return formula();
    if (peek().kind == Tok::Ident) return atom_from_term();
    throw SyntaxError("expected a formula", peek().pos);
  }

  FormulaPtr belonging_with_list() {
    expect(Tok::LParen, "'('");
    std::vector<Token> names;
    names.push_back(expect(Tok::Ident, "a term"));
    while (match(Tok::Comma)) names.push_back(expect(Tok::Ident, "a term"));
    expect(Tok::RParen, "')'");
    const Token& in_tok = expect(Tok::InType, "'in'");
    const Type& bt = in_tok.type;
    if (!bt.is_bracket()) throw SyntaxError("belonging needs a bracket type", in_tok.pos);
    if (bt.parent_types().size() != names.size())
      throw SyntaxError("belonging at " + bt.to_string() + " expects " +
                            std::to_string(bt.parent_types().size()) + " arguments",
                        in_tok.pos);
    std::vector<Term> args;
    for (std::size_t i = 0; i < names.size(); ++i)
      args.push_back(resolve_term(names[i], bt.parent_types()[i]));
    const Token& rhs = expect(Tok::Ident, "a term");
    return Formula::in_atom(bt, std::move(args), resolve_term(rhs, bt));
  }

  FormulaPtr atom_from_term() {
    const Token& lhs = expect(Tok::Ident, "a term");
    if (peek().kind == Tok::EqType) {
      const Token& eq = advance();
      const Token& rhs = expect(Tok::Ident, "a term");
      return Formula::eq_atom(eq.type, resolve_term(lhs, eq.type), resolve_term(rhs, eq.type));
    }
    if (peek().kind == Tok::InType) {
      const Token& in_tok = advance();
      const Type& bt = in_tok.type;
      if (!bt.is_bracket()) throw SyntaxError("belonging needs a bracket type", in_tok.pos);
      if (bt.parent_types().size() != 1)
        throw SyntaxError("belonging at " + bt.to_string() + " needs a parenthesized term list",
                          in_tok.pos);
      const Token& rhs = expect(Tok::Ident, "a term");
      std::vector<Term> args = {resolve_term(lhs, bt.parent_types()[0])};
      return Formula::in_atom(bt, std::move(args), resolve_term(rhs, bt));
    }
    throw SyntaxError("expected '=' or 'in' after term '" + lhs.text + "'", peek().pos);
  }

  Term resolve_term(const Token& tok, const Type& expected) {
    if (auto ct = sig_.constant_type(tok.text)) {
      if (*ct != expected)
        throw TypeError("constant '" + tok.text + "' has type " + ct->to_string() +
                        " but is used at type " + expected.to_string());
      return Term::constant(tok.text, expected);
    }
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == tok.text) {
        if (it->second != expected)
          throw TypeError("variable '" + tok.text + "' is bound at type " + it->second.to_string() +
                          " but used at type " + expected.to_string());
        return Term::variable(tok.text, expected);
      }
    }
    auto [it, inserted] = free_types_.emplace(tok.text, expected);
    if (!inserted && it->second != expected)
      throw TypeError("variable '" + tok.text + "' used at both type " + it->second.to_string() +
                      " and type " + expected.to_string());
    return Term::variable(tok.text, expected);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const SignatureSpec& sig_;
  std::vector<std::pair<std::string, Type>> scope_;
  std::map<std::string, Type> free_types_;
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return 0;
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Not:
      return 4;
    default:
      return 5;
  }
}

void print_rec(const FormulaPtr& f, int min_prec, std::string& out) {
  int prec = precedence(f->kind());
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f->kind()) {
    case Formula::Kind::EqAtom:
      out += f->terms()[0].name + " =" + f->atom_type().to_string() + " " + f->terms()[1].name;
      break;
    case Formula::Kind::InAtom: {
      if (f->in_arity() == 1) {
        out += f->terms()[0].name;
      } else {
        out += "(";
        for (std::size_t i = 0; i < f->in_arity(); ++i) {
          if (i > 0) out += ", ";
          out += f->terms()[i].name;
        }
        out += ")";
      }
      out += " in" + f->atom_type().to_string() + " " + f->in_rhs().name;
      break;
    }
    case Formula::Kind::Not:
      out += "!";
      print_rec(f->body(), 4, out);
      break;
    case Formula::Kind::And:
      print_rec(f->lhs(), 3, out);
      out += " & ";
      print_rec(f->rhs(), 4, out);
      break;
    case Formula::Kind::Or:
      print_rec(f->lhs(), 2, out);
      out += " | ";
      print_rec(f->rhs(), 3, out);
      break;
    case Formula::Kind::Implies:
      print_rec(f->lhs(), 2, out);
      out += " -> ";
      print_rec(f->rhs(), 1, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += (f->kind() == Formula::Kind::Exists ? "E " : "A ");
      out += f->bound_var().name + ":" + f->bound_var().type.to_string() + " . ";
      print_rec(f->body(), 0, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

FormulaPtr parse(const std::string& text, const SignatureSpec& sig) {
  Lexer lexer(text);
  Parser parser(lexer.run(), sig);
  return parser.run();
}

std::vector<FormulaPtr> parse_lines(const std::string& text, const SignatureSpec& sig) {
  std::vector<FormulaPtr> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) out.push_back(parse(line, sig));
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  return out;
}

std::string print(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

}  // namespace infralog
