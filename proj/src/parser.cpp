#include "samop/parser.hpp"

#include <cctype>
#include <vector>

#include "samop/errors.hpp"
#include "samop/graph.hpp"

namespace samop {

namespace {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Caret,
  Equals,
  Arrow,
  OPlus,  // "(+)"
  Plus,
  Minus,
  Slash,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void parse_fail(std::size_t pos, const std::string& msg) {
  fail(ErrorKind::Parse, "at offset " + std::to_string(pos) + ": " + msg);
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '(':
        if (i + 2 < s.size() && s[i + 1] == '+' && s[i + 2] == ')') {
          out.push_back({Tok::OPlus, "(+)", pos});
          i += 3;
        } else {
          out.push_back({Tok::LParen, "(", pos});
          ++i;
        }
        continue;
      case ')':
        out.push_back({Tok::RParen, ")", pos});
        ++i;
        continue;
      case '{':
        out.push_back({Tok::LBrace, "{", pos});
        ++i;
        continue;
      case '}':
        out.push_back({Tok::RBrace, "}", pos});
        ++i;
        continue;
      case '[':
        out.push_back({Tok::LBracket, "[", pos});
        ++i;
        continue;
      case ']':
        out.push_back({Tok::RBracket, "]", pos});
        ++i;
        continue;
      case ',':
        out.push_back({Tok::Comma, ",", pos});
        ++i;
        continue;
      case ';':
        out.push_back({Tok::Semi, ";", pos});
        ++i;
        continue;
      case ':':
        out.push_back({Tok::Colon, ":", pos});
        ++i;
        continue;
      case '^':
        out.push_back({Tok::Caret, "^", pos});
        ++i;
        continue;
      case '=':
        out.push_back({Tok::Equals, "=", pos});
        ++i;
        continue;
      case '+':
        out.push_back({Tok::Plus, "+", pos});
        ++i;
        continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", pos});
          i += 2;
        } else {
          out.push_back({Tok::Minus, "-", pos});
          ++i;
        }
        continue;
      case '/':
        out.push_back({Tok::Slash, "/", pos});
        ++i;
        continue;
      default:
        parse_fail(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& name) {
  static const char* kw[] = {"shift", "bshift", "bilateral", "jordan", "diag",
                             "trimat", "inf", "adj", "tri", "i", "pair", "rays"};
  for (const char* k : kw)
    if (name == k) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  DslProgram program() {
    DslProgram p;
    while (peek().kind == Tok::Ident && !is_keyword(peek().text) &&
           toks_[pos_ + 1].kind == Tok::Equals) {
      std::string name = next().text;
      expect(Tok::Equals, "'='");
      ExprPtr e = expr(p);
      expect(Tok::Semi, "';' after binding");
      p.bindings[name] = e;
    }
    p.expr = expr(p);
    expect(Tok::End, "end of input");
    return p;
  }

  GaussianRational only_scalar() {
    GaussianRational z = scalar();
    expect(Tok::End, "end of scalar");
    return z;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) parse_fail(peek().pos, std::string("expected ") + what);
    next();
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  long long integer() {
    if (peek().kind != Tok::Int) parse_fail(peek().pos, "expected an integer");
    const std::string& t = next().text;
    if (t.size() > 18) parse_fail(peek().pos, "integer literal too large");
    return std::stoll(t);
  }

  mpq_class rational() {
    long long num = integer();
    if (accept(Tok::Slash)) {
      long long den = integer();
      if (den == 0) parse_fail(peek().pos, "zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  // scalar := [±] part where part := 'i' | num['/'num]['i'] — optionally
  // followed by ± imaginary part.
  GaussianRational scalar() {
    mpq_class re(0), im(0);
    int sign = 1;
    if (accept(Tok::Minus))
      sign = -1;
    else
      accept(Tok::Plus);
    bool have_re = false;
    if (peek().kind == Tok::Ident && peek().text == "i") {
      next();
      im = sign;
      return GaussianRational(re, im);
    }
    mpq_class first = rational();
    if (peek().kind == Tok::Ident && peek().text == "i") {
      next();
      im = sign * first;
      return GaussianRational(re, im);
    }
    re = sign * first;
    have_re = true;
    (void)have_re;
    // optional imaginary tail
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      int isign = next().kind == Tok::Minus ? -1 : 1;
      if (peek().kind == Tok::Ident && peek().text == "i") {
        next();
        im = isign;
      } else {
        mpq_class mag = rational();
        if (!(peek().kind == Tok::Ident && peek().text == "i"))
          parse_fail(peek().pos, "expected 'i' after imaginary part");
        next();
        im = isign * mag;
      }
    }
    return GaussianRational(re, im);
  }

  ExtNat extnat() {
    if (peek().kind == Tok::Ident && peek().text == "inf") {
      next();
      return ext_inf();
    }
    long long v = integer();
    if (v < 0) parse_fail(peek().pos, "multiplicity must be nonnegative");
    return ExtNat(static_cast<std::uint64_t>(v));
  }

  std::pair<GaussianRational, GaussianRational> atom_args() {
    GaussianRational c(1), mu(0);
    if (accept(Tok::LParen)) {
      c = scalar();
      if (accept(Tok::Comma)) mu = scalar();
      expect(Tok::RParen, "')'");
    }
    return {c, mu};
  }

  ExprPtr primary(DslProgram& p) {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      ExprPtr e = expr(p);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind != Tok::Ident) parse_fail(t.pos, "expected an operator expression");
    std::string name = next().text;
    if (name == "shift") {
      auto [c, mu] = atom_args();
      return shift(c, mu);
    }
    if (name == "bshift") {
      auto [c, mu] = atom_args();
      return bshift(c, mu);
    }
    if (name == "bilateral") {
      auto [c, mu] = atom_args();
      return bilateral(c, mu);
    }
    if (name == "jordan") {
      expect(Tok::LParen, "'('");
      long long n = integer();
      expect(Tok::RParen, "')'");
      return jordan(n);
    }
    if (name == "diag") {
      expect(Tok::LBrace, "'{'");
      std::vector<std::pair<GaussianRational, ExtNat>> entries;
      do {
        GaussianRational v = scalar();
        expect(Tok::Colon, "':'");
        entries.emplace_back(v, extnat());
      } while (accept(Tok::Comma));
      expect(Tok::RBrace, "'}'");
      return diag(std::move(entries));
    }
    if (name == "trimat") {
      expect(Tok::LBracket, "'['");
      std::vector<std::vector<GaussianRational>> rows;
      do {
        std::vector<GaussianRational> row;
        do {
          row.push_back(scalar());
        } while (accept(Tok::Comma));
        rows.push_back(std::move(row));
      } while (accept(Tok::Semi));
      expect(Tok::RBracket, "']'");
      long n = static_cast<long>(rows.size());
      DenseMat m = DenseMat::Zero(n, n);
      for (long r = 0; r < n; ++r) {
        if (static_cast<long>(rows[static_cast<std::size_t>(r)].size()) != n)
          parse_fail(t.pos, "trimat rows must all have the same length");
        for (long c = 0; c < n; ++c)
          m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
      return trimatrix(std::move(m));
    }
    if (name == "inf") {
      expect(Tok::LParen, "'('");
      ExprPtr e = expr(p);
      expect(Tok::RParen, "')'");
      return amplify(e);
    }
    if (name == "adj") {
      expect(Tok::LParen, "'('");
      ExprPtr e = expr(p);
      expect(Tok::RParen, "')'");
      return adjoint_node(e);
    }
    if (name == "tri") {
      expect(Tok::LParen, "'('");
      ExprPtr a = expr(p);
      expect(Tok::Comma, "','");
      bool pair_rays = false;
      std::vector<ExplicitPair> pairs;
      if (peek().kind == Tok::Ident && peek().text == "pair") {
        next();
        expect(Tok::Minus, "'-' of pair-rays");
        if (!(peek().kind == Tok::Ident && peek().text == "rays"))
          parse_fail(peek().pos, "expected 'pair-rays'");
        next();
        pair_rays = true;
      } else {
        expect(Tok::LBrace, "'{' or pair-rays");
        if (peek().kind != Tok::RBrace) {
          do {
            ExplicitPair pr;
            long long s = integer();
            expect(Tok::Arrow, "'->'");
            long long d = integer();
            if (s < 1 || d < 1) parse_fail(t.pos, "witness slots are 1-based");
            pr.src_slot = static_cast<std::uint64_t>(s);
            pr.dst_slot = static_cast<std::uint64_t>(d);
            if (accept(Tok::Colon)) pr.weight = scalar();
            pairs.push_back(pr);
          } while (accept(Tok::Comma));
        }
        expect(Tok::RBrace, "'}'");
      }
      expect(Tok::Comma, "','");
      ExprPtr b = expr(p);
      expect(Tok::RParen, "')'");
      WitnessMap w =
          resolve_witness(lower_to_graph(a), lower_to_graph(b), pairs, pair_rays);
      return assemble_block(a, w, b);
    }
    auto it = p.bindings.find(name);
    if (it != p.bindings.end()) return it->second;
    parse_fail(t.pos, "unknown operator or name '" + name + "'");
  }

  ExprPtr term(DslProgram& p) {
    ExprPtr e = primary(p);
    while (accept(Tok::Caret)) e = power(e, integer());
    return e;
  }

  ExprPtr expr(DslProgram& p) {
    std::vector<ExprPtr> parts;
    parts.push_back(term(p));
    while (accept(Tok::OPlus)) parts.push_back(term(p));
    return direct_sum(std::move(parts));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

DslProgram parse_program(const std::string& text) { return Parser(text).program(); }

ExprPtr parse_expression(const std::string& text) { return parse_program(text).expr; }

GaussianRational parse_scalar(const std::string& text) {
  return Parser(text).only_scalar();
}

}  // namespace samop
