#include "oigb/parse.hpp"

#include <cctype>

namespace oigb {

ParseError::ParseError(SourceLocation where, const std::string& message)
    : Error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where) {}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  SourceLocation loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (source[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
      ++i;
    }
  };
  while (i < source.size()) {
    const char c = source[i];
    if (c == '\n' || c == ';') {
      out.push_back({TokenKind::Newline, std::string(1, c), loc});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#' || (c == '-' && i + 1 < source.size() && source[i + 1] == '-')) {
      while (i < source.size() && source[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < source.size() && std::isalnum(static_cast<unsigned char>(source[j]))) ++j;
      out.push_back({TokenKind::Ident, std::string(source.substr(i, j - i)), loc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
      out.push_back({TokenKind::Integer, std::string(source.substr(i, j - i)), loc});
      advance(j - i);
    } else if (c == '"') {
      const SourceLocation start = loc;
      std::size_t j = i + 1;
      while (j < source.size() && source[j] != '"' && source[j] != '\n') ++j;
      if (j == source.size() || source[j] != '"') throw ParseError(start, "unterminated string");
      out.push_back({TokenKind::String, std::string(source.substr(i + 1, j - i - 1)), start});
      advance(j + 1 - i);
    } else if (std::string_view("()[]{},*/+-^_=>").find(c) != std::string_view::npos) {
      out.push_back({TokenKind::Symbol, std::string(1, c), loc});
      advance(1);
    } else {
      throw ParseError(loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokenKind::End, "", loc});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[k];
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::at_symbol(char c) const {
  return peek().kind == TokenKind::Symbol && peek().text[0] == c;
}

bool TokenStream::at_ident(std::string_view name) const {
  return peek().kind == TokenKind::Ident && peek().text == name;
}

bool TokenStream::accept_symbol(char c) {
  if (!at_symbol(c)) return false;
  next();
  return true;
}

namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::Newline:
      return "end of statement";
    case TokenKind::String:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

}  // namespace

Token TokenStream::expect(TokenKind kind, const char* what) {
  if (!at(kind)) fail(std::string("expected ") + what + ", found " + describe(peek()));
  return next();
}

void TokenStream::expect_symbol(char c) {
  if (!accept_symbol(c)) fail(std::string("expected '") + c + "', found " + describe(peek()));
}

long TokenStream::expect_integer(bool allow_sign) {
  bool negative = false;
  if (allow_sign && at_symbol('-')) {
    next();
    negative = true;
  }
  const Token t = expect(TokenKind::Integer, "an integer");
  if (t.text.size() > 9) throw ParseError(t.where, "integer " + t.text + " is too large");
  const long v = std::stol(t.text);
  return negative ? -v : v;
}

void TokenStream::fail(const std::string& message) const { throw ParseError(peek().where, message); }

namespace {

struct ParsedTerm {
  Rational coeff = 1;
  std::vector<VarPower> vars;
  std::optional<BasisIndex> basis;
  ModulePtr module;
  SourceLocation where;
};

Rational parse_rational(TokenStream& in) {
  const Token num = in.expect(TokenKind::Integer, "a number");
  Rational q(mpz_class(num.text), 1);
  if (in.accept_symbol('/')) {
    const Token den = in.expect(TokenKind::Integer, "a denominator");
    mpz_class d(den.text);
    if (d == 0) throw ParseError(den.where, "division by zero");
    q = Rational(mpz_class(num.text), d);
    q.canonicalize();
  }
  return q;
}

void skip_subscript(TokenStream& in) { in.accept_symbol('_'); }

VarPower parse_variable_args(TokenStream& in) {
  in.expect_symbol('(');
  const auto where = in.peek().where;
  const long row = in.expect_integer();
  in.expect_symbol(',');
  const long col = in.expect_integer();
  in.expect_symbol(')');
  if (row < 1 || col < 1) throw ParseError(where, "variable indices start at 1");
  int exp = 1;
  if (in.accept_symbol('^')) exp = static_cast<int>(in.expect_integer());
  return {static_cast<int>(row), static_cast<int>(col), exp};
}

BasisIndex parse_basis_args(TokenStream& in) {
  in.expect_symbol('(');
  const auto where = in.peek().where;
  const long width = in.expect_integer();
  in.expect_symbol(',');
  in.expect_symbol('{');
  std::vector<int> image;
  if (!in.at_symbol('}')) {
    do {
      image.push_back(static_cast<int>(in.expect_integer()));
    } while (in.accept_symbol(','));
  }
  in.expect_symbol('}');
  in.expect_symbol(',');
  const long summand = in.expect_integer();
  in.expect_symbol(')');
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k] < 1 || image[k] > width)
      throw ParseError(where, "basis index entry " + std::to_string(image[k]) +
                                  " lies outside [" + std::to_string(width) + "]");
    if (k > 0 && image[k] <= image[k - 1])
      throw ParseError(where, "basis index list must be strictly increasing");
  }
  return BasisIndex{static_cast<int>(summand), OIMorphism(static_cast<Width>(width), image)};
}

ParsedTerm parse_term(TokenStream& in, const ModuleResolver& resolve,
                      const std::string* variable_symbol) {
  ParsedTerm term;
  term.where = in.peek().where;
  do {
    if (in.at(TokenKind::Integer)) {
      term.coeff *= parse_rational(in);
      continue;
    }
    const Token name = in.expect(TokenKind::Ident, "a coefficient, variable or basis element");
    skip_subscript(in);
    if (ModulePtr m = resolve(name.text)) {
      if (term.basis) throw ParseError(name.where, "a term may contain only one basis element");
      term.basis = parse_basis_args(in);
      term.module = m;
      continue;
    }
    if (variable_symbol && name.text == *variable_symbol) {
      term.vars.push_back(parse_variable_args(in));
      continue;
    }
    throw ParseError(name.where, "unknown symbol '" + name.text + "'");
  } while (in.accept_symbol('*'));
  return term;
}

bool at_expression_end(const TokenStream& in) {
  return in.at(TokenKind::Newline) || in.at(TokenKind::End) || in.at_symbol(')') ||
         in.at_symbol(',') || in.at_symbol('}');
}

}  // namespace

ModuleElement parse_element_expression(TokenStream& in, const ModuleResolver& resolve,
                                       std::optional<Width> width, const ModulePtr& zero_module) {
  const SourceLocation start = in.peek().where;
  if (in.at(TokenKind::Integer) && in.peek().text == "0") {
    const Token& after = in.peek(1);
    const bool alone = after.kind == TokenKind::Newline || after.kind == TokenKind::End ||
                       (after.kind == TokenKind::Symbol && std::string_view(",)}").find(after.text[0]) != std::string_view::npos);
    if (alone) {
      in.next();
      if (!width || !zero_module) throw ParseError(start, "the zero element needs an explicit width");
      return ModuleElement(zero_module, *width);
    }
  }

  std::vector<std::pair<int, ParsedTerm>> signed_terms;
  std::optional<std::string> variable_symbol;
  int sign = 1;
  if (in.accept_symbol('-'))
    sign = -1;
  else
    in.accept_symbol('+');

  // The variable symbol comes from the module, so find the first basis symbol.
  ModulePtr module;
  while (true) {
    if (!module) {
      for (std::size_t k = 0;; ++k) {
        const Token& t = in.peek(k);
        if (t.kind == TokenKind::End || t.kind == TokenKind::Newline) break;
        if (t.kind == TokenKind::Ident)
          if (ModulePtr m = resolve(t.text)) {
            module = m;
            break;
          }
      }
      if (!module) throw ParseError(start, "expression contains no known basis element");
    }
    const std::string symbol = module->algebra().symbol;
    ParsedTerm term = parse_term(in, resolve, &symbol);
    if (!term.basis) throw ParseError(term.where, "term has no basis element");
    if (term.module != module)
      throw ParseError(term.where, "basis elements of different modules in one expression");
    signed_terms.emplace_back(sign, std::move(term));
    if (at_expression_end(in)) break;
    if (in.accept_symbol('+'))
      sign = 1;
    else if (in.accept_symbol('-'))
      sign = -1;
    else
      in.fail("expected '+', '-' or end of expression");
  }

  const Width w = width ? *width : signed_terms.front().second.basis->width();
  std::vector<Term> terms;
  for (auto& [s, term] : signed_terms) {
    if (term.basis->width() != w)
      throw ParseError(term.where, "term lives in width " + std::to_string(term.basis->width()) +
                                       " but the element has width " + std::to_string(w));
    for (const auto& v : term.vars) {
      if (v.row > module->algebra().rows)
        throw ParseError(term.where, "variable row " + std::to_string(v.row) + " exceeds " +
                                         std::to_string(module->algebra().rows));
      if (v.col > w)
        throw ParseError(term.where, "variable column " + std::to_string(v.col) +
                                         " exceeds width " + std::to_string(w));
    }
    try {
      terms.push_back({s * term.coeff, {PolyMonomial(w, term.vars), *term.basis}});
      module->validate(terms.back().monomial);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(term.where, e.what());
    }
  }
  return ModuleElement(module, w, std::move(terms));
}

ModuleElement parse_element(std::string_view text, const ModulePtr& module, std::optional<Width> width) {
  TokenStream in(tokenize(text));
  auto resolve = [&](const std::string& name) -> ModulePtr {
    return name == module->symbol() ? module : nullptr;
  };
  ModuleElement f = parse_element_expression(in, resolve, width, module);
  if (!in.at(TokenKind::End)) in.fail("unexpected trailing input");
  return f;
}

Polynomial parse_polynomial(std::string_view text, const AlgebraDescriptor& algebra, Width width) {
  TokenStream in(tokenize(text));
  std::vector<PolyTerm> terms;
  int sign = 1;
  if (in.accept_symbol('-'))
    sign = -1;
  else
    in.accept_symbol('+');
  while (true) {
    const SourceLocation where = in.peek().where;
    Rational coeff = sign;
    std::vector<VarPower> vars;
    do {
      if (in.at(TokenKind::Integer)) {
        coeff *= parse_rational(in);
        continue;
      }
      const Token name = in.expect(TokenKind::Ident, "a coefficient or variable");
      if (name.text != algebra.symbol) throw ParseError(name.where, "unknown symbol '" + name.text + "'");
      skip_subscript(in);
      vars.push_back(parse_variable_args(in));
    } while (in.accept_symbol('*'));
    for (const auto& v : vars)
      if (v.row > algebra.rows || v.col > width)
        throw ParseError(where, "variable x(" + std::to_string(v.row) + "," + std::to_string(v.col) +
                                    ") does not live in P_" + std::to_string(width));
    terms.push_back({coeff, PolyMonomial(width, vars)});
    if (in.at(TokenKind::End)) break;
    if (in.accept_symbol('+'))
      sign = 1;
    else if (in.accept_symbol('-'))
      sign = -1;
    else
      in.fail("expected '+', '-' or end of polynomial");
  }
  return Polynomial(width, std::move(terms));
}

}  // namespace oigb
