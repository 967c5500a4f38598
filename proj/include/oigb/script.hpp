#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oigb/free_module.hpp"
#include "oigb/parse.hpp"

namespace oigb::script {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NameRef {
  std::string name;
};
struct ElementLiteral {
  ModuleElement value;
};
/// makePolynomialOIAlgebra(rows, symbol, field)
struct AlgebraCall {
  AlgebraDescriptor algebra;
};
/// makeFreeOIModule(symbol, {widths}, algebra [, {twists}])
struct ModuleCall {
  std::string symbol;
  std::vector<Width> widths;
  std::vector<int> twists;
  std::string algebra;
  ModulePtr module;
};
struct GBCall {
  std::vector<std::string> inputs;
};
struct SyzCall {
  std::string basis;
  std::string symbol;
};
struct ResCall {
  std::vector<std::string> inputs;
  int degree = 0;
};
struct RanksCall {
  ExprPtr of;
};
struct DescribeCall {
  ExprPtr of;
};
struct RestrictCall {
  ExprPtr of;
  Width width = 0;
};

struct Expr {
  SourceLocation where;
  std::variant<NameRef, ElementLiteral, AlgebraCall, ModuleCall, GBCall, SyzCall, ResCall, RanksCall,
               DescribeCall, RestrictCall>
      node;
};

/// `needsPackage "..."`, accepted and ignored.
struct NeedsPackage {
  std::string package;
};
/// installGeneratorsInWidth(F, n) or installBasisElements(F, n). Basis symbols
/// are always in scope, so this only checks its arguments.
struct Install {
  std::string spelling;
  std::string module;
  Width width = 0;
};
/// `use F_n`: later element definitions must live in width n of F.
struct Use {
  std::string module;
  Width width = 0;
};
/// [name =] expr
struct Evaluate {
  std::optional<std::string> name;
  ExprPtr value;
};
struct Print {
  ExprPtr value;
};

struct Statement {
  SourceLocation where;
  std::variant<NeedsPackage, Install, Use, Evaluate, Print> body;
  /// Terminated by ';', which suppresses the echo of an evaluation.
  bool silent = false;
};

struct Script {
  std::vector<Statement> statements;
};

/// Parses and checks a script: names are defined before use, element literals
/// type-check against their module. Throws ParseError.
Script parse(std::string_view source);

/// Canonical source text; parse(print(s)) is equivalent to s.
std::string print(const Script& s);

bool equivalent(const Script& a, const Script& b);

enum class OutputFormat { Text, Json };

struct RunFlags {
  bool verbose = false;
  OutputFormat output = OutputFormat::Text;
  std::size_t pair_cap = 2'000'000;
};

/// Executes the statements in order. Results go to `out`, diagnostics and
/// verbose traces to `err`. Returns the process exit status.
int run(const Script& s, const RunFlags& flags, std::ostream& out, std::ostream& err);

/// Parses then runs; parse errors are reported like runtime errors.
int run_source(std::string_view source, const RunFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace oigb::script
