#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oigb/error.hpp"
#include "oigb/free_module.hpp"
#include "oigb/polynomial.hpp"

namespace oigb {

struct SourceLocation {
  int line = 1;
  int column = 1;
};

/// A syntax or name-resolution error with its position in the input.
class ParseError : public Error {
 public:
  ParseError(SourceLocation where, const std::string& message);
  SourceLocation where() const { return where_; }

 private:
  SourceLocation where_;
};

enum class TokenKind { Ident, Integer, String, Symbol, Newline, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLocation where;
};

/// Splits input into identifiers, unsigned integers, quoted strings and single
/// punctuation characters. `--` and `#` start comments; `;` and newlines are
/// reported as Newline tokens.
std::vector<Token> tokenize(std::string_view source);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_symbol(char c) const;
  bool at_ident(std::string_view name) const;
  bool accept_symbol(char c);
  Token expect(TokenKind kind, const char* what);
  void expect_symbol(char c);
  long expect_integer(bool allow_sign = false);
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Maps a basis symbol to its module; nullptr when unknown.
using ModuleResolver = std::function<ModulePtr(const std::string&)>;

/// Parses a sum of terms `[q*] {x(i,j)[^k] *} e(n,{a1,...,am},i)` up to the next
/// newline or end. Every term must carry exactly one basis factor and all
/// terms must share a width (equal to `width` when given). A bare `0` needs
/// both `width` and `zero_module`.
ModuleElement parse_element_expression(TokenStream& in, const ModuleResolver& resolve,
                                       std::optional<Width> width = std::nullopt,
                                       const ModulePtr& zero_module = nullptr);

ModuleElement parse_element(std::string_view text, const ModulePtr& module,
                            std::optional<Width> width = std::nullopt);

/// `x(1,2)*x(1,1) + 1/2*x(2,1) - 3` in P_width.
Polynomial parse_polynomial(std::string_view text, const AlgebraDescriptor& algebra, Width width);

}  // namespace oigb
