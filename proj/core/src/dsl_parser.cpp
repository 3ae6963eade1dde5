#include "dedekind/dsl/parser.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace dedekind::dsl {

using recfn::Term;

namespace {

enum class Tok { kw_def, ident, nat, sym_z, sym_s, sym_p, sym_c, sym_r, sym_m,
                 equals, semicolon, comma, lparen, rparen, lbracket, rbracket, end, bad };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourceSpan at;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::kw_def: return "'def'";
    case Tok::ident: return "identifier";
    case Tok::nat: return "number";
    case Tok::sym_z: return "'Z'";
    case Tok::sym_s: return "'S'";
    case Tok::sym_p: return "'P'";
    case Tok::sym_c: return "'C'";
    case Tok::sym_r: return "'R'";
    case Tok::sym_m: return "'M'";
    case Tok::equals: return "'='";
    case Tok::semicolon: return "';'";
    case Tok::comma: return "','";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::end: return "end of input";
    case Tok::bad: return "invalid character";
  }
  return "?";
}

const std::vector<Tok> kTermStart = {Tok::sym_z, Tok::sym_s, Tok::sym_p, Tok::sym_c,
                                     Tok::sym_r, Tok::sym_m, Tok::ident};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) { return is_lower(c) || is_digit(c) || c == '_' || (c >= 'A' && c <= 'Z'); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {
    // Errors at end of input point at the last visible character.
    SourceSpan pos{1, 1};
    for (char c : src_) {
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') end_at_ = pos;
      advance_pos(pos, c);
    }
    if (!end_at_ && !src_.empty()) end_at_ = last_char_pos();
  }

  Token next() {
    skip_trivia();
    Token tok;
    tok.at = here_;
    if (i_ >= src_.size()) {
      tok.kind = Tok::end;
      tok.at = end_at_.value_or(SourceSpan{1, 1});
      return tok;
    }
    const char c = src_[i_];
    if (is_lower(c) || (c >= 'A' && c <= 'Z')) {
      std::size_t j = i_;
      if (is_lower(c)) {
        while (j < src_.size() && (is_lower(src_[j]) || is_digit(src_[j]) || src_[j] == '_')) ++j;
      } else {
        while (j < src_.size() && is_word(src_[j])) ++j;
      }
      tok.text = std::string(src_.substr(i_, j - i_));
      take(j - i_);
      if (is_lower(c)) {
        tok.kind = tok.text == "def" ? Tok::kw_def : Tok::ident;
      } else if (tok.text.size() == 1) {
        switch (c) {
          case 'Z': tok.kind = Tok::sym_z; break;
          case 'S': tok.kind = Tok::sym_s; break;
          case 'P': tok.kind = Tok::sym_p; break;
          case 'C': tok.kind = Tok::sym_c; break;
          case 'R': tok.kind = Tok::sym_r; break;
          case 'M': tok.kind = Tok::sym_m; break;
          default: tok.kind = Tok::bad;
        }
      } else {
        tok.kind = Tok::bad;
      }
      return tok;
    }
    if (is_digit(c)) {
      std::size_t j = i_;
      while (j < src_.size() && is_digit(src_[j])) ++j;
      tok.kind = Tok::nat;
      tok.text = std::string(src_.substr(i_, j - i_));
      take(j - i_);
      return tok;
    }
    switch (c) {
      case '=': tok.kind = Tok::equals; break;
      case ';': tok.kind = Tok::semicolon; break;
      case ',': tok.kind = Tok::comma; break;
      case '(': tok.kind = Tok::lparen; break;
      case ')': tok.kind = Tok::rparen; break;
      case '[': tok.kind = Tok::lbracket; break;
      case ']': tok.kind = Tok::rbracket; break;
      default: tok.kind = Tok::bad;
    }
    tok.text = std::string(1, c);
    take(1);
    return tok;
  }

 private:
  static void advance_pos(SourceSpan& pos, char c) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }

  SourceSpan last_char_pos() const {
    SourceSpan pos{1, 1};
    for (std::size_t k = 0; k + 1 < src_.size(); ++k) advance_pos(pos, src_[k]);
    return pos;
  }

  void take(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) advance_pos(here_, src_[i_ + k]);
    i_ += n;
  }

  void skip_trivia() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take(1);
      } else if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') take(1);
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourceSpan here_{1, 1};
  std::optional<SourceSpan> end_at_;
};

struct Failure {
  ParseDiagnostic diagnostic;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { bump(); }

  Program program() {
    Program prog;
    recfn::Definitions env;
    while (tok_.kind != Tok::end) {
      Definition def = definition();
      if (env.contains(def.name)) {
        fail(ParseDiagnostic::Kind::name, "duplicate definition '" + def.name + "'", def.span, {}, "");
      }
      try {
        def.arity = recfn::arity_of(def.term, env);
      } catch (const recfn::ArityError& e) {
        fail(ParseDiagnostic::Kind::arity, std::string("in '") + def.name + "': " + e.what(),
             e.span().value_or(def.span), {}, e.path());
      } catch (const recfn::NameError& e) {
        fail(ParseDiagnostic::Kind::name, std::string("in '") + def.name + "': " + e.what(),
             e.span().value_or(def.span), {}, e.path());
      }
      env.define(def.name, def.term);
      prog.defs.push_back(std::move(def));
    }
    return prog;
  }

 private:
  [[noreturn]] void fail(ParseDiagnostic::Kind kind, std::string message, SourceSpan at,
                         const std::vector<Tok>& expected, std::string path) {
    ParseDiagnostic d;
    d.kind = kind;
    d.message = std::move(message);
    d.line = at.line;
    d.column = at.column;
    for (Tok t : expected) d.expected.push_back(describe(t));
    d.path = std::move(path);
    throw Failure{std::move(d)};
  }

  [[noreturn]] void unexpected(const std::vector<Tok>& expected) {
    std::string found = describe(tok_.kind);
    if (tok_.kind == Tok::bad || tok_.kind == Tok::ident || tok_.kind == Tok::nat) {
      found += " '" + tok_.text + "'";
    }
    fail(ParseDiagnostic::Kind::syntax, "unexpected " + found, tok_.at, expected, "");
  }

  void bump() { tok_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (tok_.kind != kind) unexpected({kind});
    Token t = tok_;
    bump();
    return t;
  }

  std::size_t number() {
    const Token t = expect(Tok::nat);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(ParseDiagnostic::Kind::syntax, "number out of range '" + t.text + "'", t.at, {}, "");
    }
    return value;
  }

  Definition definition() {
    if (tok_.kind != Tok::kw_def) unexpected({Tok::kw_def, Tok::end});
    const SourceSpan at = tok_.at;
    bump();
    std::string name = expect(Tok::ident).text;
    expect(Tok::equals);
    Term body = term();
    expect(Tok::semicolon);
    return Definition{std::move(name), std::move(body), at, 0};
  }

  Term term() {
    const SourceSpan at = tok_.at;
    switch (tok_.kind) {
      case Tok::sym_z: {
        bump();
        expect(Tok::lbracket);
        const auto n = number();
        expect(Tok::rbracket);
        return recfn::zero(n).with_span(at);
      }
      case Tok::sym_s:
        bump();
        return recfn::succ().with_span(at);
      case Tok::sym_p: {
        bump();
        expect(Tok::lbracket);
        const auto i = number();
        expect(Tok::comma);
        const auto n = number();
        expect(Tok::rbracket);
        return recfn::proj(i, n).with_span(at);
      }
      case Tok::sym_c: {
        bump();
        expect(Tok::lparen);
        Term outer = term();
        expect(Tok::semicolon);
        std::vector<Term> inners;
        inners.push_back(term());
        while (tok_.kind == Tok::comma) {
          bump();
          inners.push_back(term());
        }
        if (tok_.kind != Tok::rparen) unexpected({Tok::comma, Tok::rparen});
        bump();
        return recfn::compose(std::move(outer), std::move(inners)).with_span(at);
      }
      case Tok::sym_r: {
        bump();
        expect(Tok::lparen);
        Term base = term();
        expect(Tok::comma);
        Term step = term();
        expect(Tok::rparen);
        return recfn::primrec(std::move(base), std::move(step)).with_span(at);
      }
      case Tok::sym_m: {
        bump();
        expect(Tok::lparen);
        Term body = term();
        expect(Tok::rparen);
        return recfn::mu(std::move(body)).with_span(at);
      }
      case Tok::ident: {
        std::string name = tok_.text;
        bump();
        return recfn::ref(std::move(name)).with_span(at);
      }
      default:
        unexpected(kTermStart);
    }
  }

  Lexer lexer_;
  Token tok_;
};

void render(std::ostringstream& out, const Term& t) {
  if (const auto* z = t.as<Term::Zero>()) {
    out << "Z[" << z->arity << ']';
  } else if (t.as<Term::Succ>()) {
    out << 'S';
  } else if (const auto* p = t.as<Term::Proj>()) {
    out << "P[" << p->index << ',' << p->arity << ']';
  } else if (const auto* c = t.as<Term::Compose>()) {
    out << "C(";
    render(out, c->outer);
    out << "; ";
    for (std::size_t j = 0; j < c->inners.size(); ++j) {
      if (j) out << ", ";
      render(out, c->inners[j]);
    }
    out << ')';
  } else if (const auto* r = t.as<Term::PrimRec>()) {
    out << "R(";
    render(out, r->base);
    out << ", ";
    render(out, r->step);
    out << ')';
  } else if (const auto* m = t.as<Term::Mu>()) {
    out << "M(";
    render(out, m->body);
    out << ')';
  } else {
    out << t.as<Term::Name>()->name;
  }
}

constexpr std::string_view kPrelude = R"(# Standard definitions.
# Recursion runs on the first argument; search appends its variable last.

def add = R(P[1,1], C(S; P[2,3]));
def mul = R(Z[1], C(add; P[3,3], P[2,3]));
def pred = R(Z[0], P[1,2]);

# rmonus(y, x) = x - y, truncated at 0
def rmonus = R(P[1,1], C(pred; P[2,3]));
def monus = C(rmonus; P[2,2], P[1,2]);

# sqgap(y, x) = (x + 1) - (y + 1)^2, truncated; isqrt searches for its first zero
def sqgap = R(P[1,1], C(monus; P[2,3], C(S; C(S; C(S; C(add; P[1,3], P[1,3]))))));
def isqrt = M(C(sqgap; P[2,2], P[1,2]));

def diverge = M(C(S; Z[2]));
)";

}  // namespace

recfn::Definitions Program::definitions() const {
  recfn::Definitions env;
  for (const auto& d : defs) env.define(d.name, d.term);
  return env;
}

const Definition* Program::find(std::string_view name) const {
  for (const auto& d : defs) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

bool operator==(const Program& a, const Program& b) {
  if (a.defs.size() != b.defs.size()) return false;
  for (std::size_t i = 0; i < a.defs.size(); ++i) {
    if (a.defs[i].name != b.defs[i].name || !(a.defs[i].term == b.defs[i].term)) return false;
  }
  return true;
}

std::string ParseDiagnostic::render() const {
  std::ostringstream out;
  out << line << ':' << column << ": " << message;
  if (!path.empty()) out << " [at " << path << ']';
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out << (i + 1 == expected.size() ? " or " : ", ");
      out << expected[i];
    }
    out << ')';
  }
  return out.str();
}

ParseResult parse(std::string_view source) {
  try {
    Parser parser(source);
    return parser.program();
  } catch (Failure& f) {
    return std::move(f.diagnostic);
  }
}

std::string pretty(const Term& term) {
  std::ostringstream out;
  render(out, term);
  return out.str();
}

std::string pretty(const Program& program) {
  std::ostringstream out;
  for (const auto& d : program.defs) {
    out << "def " << d.name << " = ";
    render(out, d.term);
    out << ";\n";
  }
  return out.str();
}

std::string_view prelude_source() { return kPrelude; }

}  // namespace dedekind::dsl
