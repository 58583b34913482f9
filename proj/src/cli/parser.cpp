#include <cctype>
#include <map>

#include "fermicalc/cli/expr.hpp"

namespace fermicalc::cli {

std::string sort_name(Sort s) {
  switch (s) {
    case Sort::scalar: return "scalar";
    case Sort::vec: return "vector";
    case Sort::ext: return "exterior";
    case Sort::cl: return "clifford";
  }
  return "?";
}

namespace {

struct Token {
  enum class Kind { number, ident, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto digit = [&](std::size_t p) { return p < in.size() && std::isdigit(static_cast<unsigned char>(in[p])); };
  while (pos < in.size()) {
    const char ch = in[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    Token tok;
    tok.begin = pos;
    if (digit(pos)) {
      tok.kind = Token::Kind::number;
      while (digit(pos)) ++pos;
      if (pos < in.size() && in[pos] == '.' && digit(pos + 1)) {
        ++pos;
        while (digit(pos)) ++pos;
      }
      if (pos < in.size() && in[pos] == 'E') {
        std::size_t p = pos + 1;
        if (p < in.size() && (in[p] == '+' || in[p] == '-')) ++p;
        if (!digit(p)) throw ParseError("malformed exponent", pos);
        pos = p;
        while (digit(pos)) ++pos;
      }
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      tok.kind = Token::Kind::ident;
      while (pos < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[pos])) || in[pos] == '_'))
        ++pos;
    } else if (std::string_view("+-^*(),/").find(ch) != std::string_view::npos) {
      tok.kind = Token::Kind::symbol;
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", pos);
    }
    tok.end = pos;
    tok.text = std::string(in.substr(tok.begin, tok.end - tok.begin));
    out.push_back(std::move(tok));
  }
  Token end;
  end.begin = end.end = in.size();
  out.push_back(end);
  return out;
}

// Exact value of a decimal numeral such as "12", "1.25" or "3.5E-2".
Rational decimal_value(const std::string& text) {
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find('E'); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = std::stol(text.substr(e + 1));
  }
  std::string digits = mantissa;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  mpz_class num(digits, 10), scale = 1;
  for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) scale *= 10;
  Rational q = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return q;
}

struct Signature {
  std::size_t arity;
};

const std::map<std::string, Signature>& builtins() {
  static const std::map<std::string, Signature> table{
      {"E", {1}},   {"EN", {1}},  {"tau", {1}}, {"nu", {1}},  {"nuN", {1}},  {"gp", {1}},
      {"gm", {1}},  {"star", {1}}, {"G", {1}},  {"ip", {2}},  {"jip", {2}},  {"grade", {2}}};
  return table;
}

bool ext_like(Sort s) { return s == Sort::scalar || s == Sort::vec || s == Sort::ext; }
bool cl_like(Sort s) { return s == Sort::scalar || s == Sort::vec || s == Sort::cl; }

class Parser {
 public:
  Parser(std::string_view input, const ParseOptions& options)
      : tokens_(tokenize(input)), options_(options) {}

  Expr parse_all() {
    Expr e = parse_sum();
    if (peek().kind != Token::Kind::end) throw ParseError("unexpected '" + peek().text + "'", peek().begin);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_symbol(char c) const {
    return peek().kind == Token::Kind::symbol && peek().text[0] == c;
  }
  void expect_symbol(char c) {
    if (!at_symbol(c))
      throw ParseError(std::string("expected '") + c + "'" +
                           (peek().kind == Token::Kind::end ? " before end of input"
                                                            : ", found '" + peek().text + "'"),
                       peek().begin);
    advance();
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Token::Kind::number || t.kind == Token::Kind::ident || (t.kind == Token::Kind::symbol && t.text == "(");
  }

  static Expr node(Expr::Kind kind, Sort sort, std::size_t offset, std::vector<Expr> args) {
    Expr e;
    e.kind = kind;
    e.sort = sort;
    e.offset = offset;
    e.args = std::move(args);
    return e;
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    while (at_symbol('+') || at_symbol('-')) {
      const Token op = advance();
      Expr rhs = parse_product();
      const Sort sort = sum_sort(lhs.sort, rhs.sort, op.begin);
      lhs = node(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, sort, op.begin,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  static Sort sum_sort(Sort a, Sort b, std::size_t offset) {
    if (a == b) return a;
    if ((a == Sort::ext && b == Sort::cl) || (a == Sort::cl && b == Sort::ext))
      throw ParseError("cannot add exterior and Clifford values", offset);
    if (a == Sort::scalar) return b == Sort::scalar ? a : b;
    if (b == Sort::scalar) return a;
    return a == Sort::vec ? b : a;  // vec with ext or cl
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    bool saw_wedge = false;
    bool saw_clifford = false;
    for (;;) {
      std::size_t offset = peek().begin;
      Expr::Kind kind;
      if (at_symbol('^') || at_symbol('*')) {
        const bool wedge = at_symbol('^');
        advance();
        (wedge ? saw_wedge : saw_clifford) = true;
        kind = wedge ? Expr::Kind::wedge : Expr::Kind::clifford;
      } else if (starts_atom()) {
        kind = Expr::Kind::scale;
      } else {
        return lhs;
      }
      if (saw_wedge && saw_clifford)
        throw ParseError("mixed '^' and '*' products need parentheses", offset);
      Expr rhs = kind == Expr::Kind::scale ? parse_atom() : parse_unary();

      if (lhs.sort == Sort::scalar || rhs.sort == Sort::scalar) {
        const Sort sort = lhs.sort == Sort::scalar ? rhs.sort : lhs.sort;
        lhs = node(Expr::Kind::scale, sort, offset, {std::move(lhs), std::move(rhs)});
        continue;
      }
      if (kind == Expr::Kind::scale) {
        kind = Expr::Kind::clifford;
        saw_clifford = true;
        if (saw_wedge) throw ParseError("mixed '^' and '*' products need parentheses", offset);
      }
      if (kind == Expr::Kind::wedge) {
        if (!ext_like(lhs.sort) || !ext_like(rhs.sort))
          throw ParseError("'^' needs exterior or vector operands, got " + sort_name(lhs.sort) +
                               " and " + sort_name(rhs.sort),
                           offset);
        lhs = node(kind, Sort::ext, offset, {std::move(lhs), std::move(rhs)});
      } else {
        if (!cl_like(lhs.sort) || !cl_like(rhs.sort))
          throw ParseError("'*' needs Clifford or vector operands, got " + sort_name(lhs.sort) +
                               " and " + sort_name(rhs.sort),
                           offset);
        lhs = node(kind, Sort::cl, offset, {std::move(lhs), std::move(rhs)});
      }
    }
  }

  Expr parse_unary() {
    if (at_symbol('-')) {
      const std::size_t offset = advance().begin;
      Expr inner = parse_unary();
      const Sort sort = inner.sort;
      return node(Expr::Kind::negate, sort, offset, {std::move(inner)});
    }
    return parse_atom();
  }

  Expr parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::number: return parse_number();
      case Token::Kind::ident: return parse_identifier();
      case Token::Kind::symbol:
        if (tok.text == "(") {
          advance();
          Expr inner = parse_sum();
          expect_symbol(')');
          return inner;
        }
        throw ParseError("unexpected '" + tok.text + "'", tok.begin);
      case Token::Kind::end: break;
    }
    throw ParseError("unexpected end of input", tok.begin);
  }

  Expr parse_number() {
    const Token num = advance();
    Rational value = decimal_value(num.text);
    std::size_t end = num.end;
    if (at_symbol('/')) {
      advance();
      const Token den = advance();
      if (den.kind != Token::Kind::number || den.text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected an integer denominator", den.begin);
      const Rational d = decimal_value(den.text);
      if (d == 0) throw ParseError("zero denominator", den.begin);
      value /= d;
      end = den.end;
    }
    Expr e;
    e.kind = Expr::Kind::literal;
    e.offset = num.begin;
    e.value = ExactScalar(value);
    if (peek().kind == Token::Kind::ident && peek().text == "i" && peek().begin == end) {
      advance();
      e.value = ExactScalar(0, value);
    }
    return e;
  }

  Expr parse_identifier() {
    const Token tok = advance();
    Expr e;
    e.offset = tok.begin;
    if (tok.text == "i" || tok.text == "sqrt2") {
      e.kind = Expr::Kind::literal;
      e.value = tok.text == "i" ? ExactScalar::imag_unit() : ExactScalar::sqrt2();
      return e;
    }
    if ((tok.text[0] == 'e' || tok.text[0] == 'v') && tok.text.size() > 1 &&
        tok.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      e.kind = Expr::Kind::generator;
      e.sort = Sort::vec;
      e.family = tok.text[0];
      e.index = std::stoul(tok.text.substr(1));
      const std::size_t limit = e.family == 'e' ? 2 * options_.half_dim : options_.half_dim;
      if (e.index < 1 || e.index > limit)
        throw ParseError("generator " + tok.text + " out of range 1.." + std::to_string(limit),
                         tok.begin);
      return e;
    }
    auto it = builtins().find(tok.text);
    if (it == builtins().end()) throw ParseError("unknown name '" + tok.text + "'", tok.begin);
    e.kind = Expr::Kind::call;
    e.callee = tok.text;
    expect_symbol('(');
    e.args.push_back(parse_sum());
    while (at_symbol(',')) {
      advance();
      e.args.push_back(parse_sum());
    }
    expect_symbol(')');
    if (e.args.size() != it->second.arity)
      throw ParseError(tok.text + " takes " + std::to_string(it->second.arity) + " argument(s)",
                       tok.begin);
    e.sort = call_sort(e);
    return e;
  }

  static Sort call_sort(const Expr& e) {
    const std::string& f = e.callee;
    const Sort a = e.args[0].sort;
    auto fail = [&](const std::string& what) -> Sort {
      throw ParseError(f + " expects " + what + ", got " + sort_name(a), e.offset);
    };
    if (f == "E" || f == "EN") return ext_like(a) ? Sort::scalar : fail("an exterior value");
    if (f == "tau")
      return cl_like(a) ? Sort::scalar : fail("a Clifford value (apply nu first)");
    if (f == "nu" || f == "nuN") return ext_like(a) ? Sort::cl : fail("an exterior value");
    if (f == "gp" || f == "gm") {
      if (!ext_like(a)) fail("an exterior value");
      return a == Sort::vec ? Sort::vec : Sort::ext;
    }
    if (f == "star" || f == "G") return cl_like(a) ? Sort::cl : fail("a Clifford value");
    const Sort b = e.args[1].sort;
    if (f == "ip") {
      if ((a == Sort::ext && b == Sort::cl) || (a == Sort::cl && b == Sort::ext))
        throw ParseError("ip operands must live in the same algebra", e.offset);
      return Sort::scalar;
    }
    if (f == "jip") {
      if (a != Sort::vec || b != Sort::vec)
        throw ParseError("jip expects two vectors", e.offset);
      return Sort::scalar;
    }
    // grade
    if (!ext_like(a)) fail("an exterior value");
    if (b != Sort::scalar) throw ParseError("grade expects an integer grade", e.offset);
    return a == Sort::vec ? Sort::vec : Sort::ext;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
};

std::string kind_name(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::negate: return "neg";
    case Expr::Kind::add: return "sum";
    case Expr::Kind::sub: return "diff";
    case Expr::Kind::wedge: return "wedge";
    case Expr::Kind::clifford: return "cl_mul";
    case Expr::Kind::scale: return "scale";
    default: return "?";
  }
}

}  // namespace

Expr parse(std::string_view input, const ParseOptions& options) {
  return Parser(input, options).parse_all();
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal: return e.value.to_string();
    case Expr::Kind::generator: return std::string(1, e.family) + std::to_string(e.index);
    case Expr::Kind::call: {
      std::string out = "call(" + e.callee;
      for (const auto& a : e.args) out += ", " + to_string(a);
      return out + ")";
    }
    default: {
      std::string out = kind_name(e.kind) + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) out += (k ? ", " : "") + to_string(e.args[k]);
      return out + ")";
    }
  }
}

}  // namespace fermicalc::cli
