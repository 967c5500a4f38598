#include "oigb/script.hpp"

#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "oigb/groebner.hpp"
#include "oigb/resolution.hpp"
#include "oigb/syzygy.hpp"

namespace oigb::script {

namespace {

using nlohmann::json;

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};

enum class Kind { Algebra, Module, Element, GB, Syz, Res, Ranks, Describe, Restricted };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Algebra:
      return "an algebra";
    case Kind::Module:
      return "a free module";
    case Kind::Element:
      return "an element";
    case Kind::GB:
      return "a Groebner basis";
    case Kind::Syz:
      return "a syzygy basis";
    case Kind::Res:
      return "a resolution";
    case Kind::Ranks:
      return "a rank list";
    case Kind::Describe:
      return "a description";
    case Kind::Restricted:
      return "a restricted complex";
  }
  return "a value";
}

struct StaticType {
  Kind kind;
  AlgebraDescriptor algebra;
  ModulePtr module;
};

std::string join(const auto& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ", ";
    s += std::to_string(x);
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : in_(tokenize(source)) {}

  Script parse() {
    Script s;
    while (true) {
      while (in_.at(TokenKind::Newline)) in_.next();
      if (in_.at(TokenKind::End)) break;
      Statement st = statement();
      if (in_.at(TokenKind::Newline)) {
        st.silent = in_.next().text == ";";
      } else if (!in_.at(TokenKind::End)) {
        in_.fail("expected end of statement");
      }
      s.statements.push_back(std::move(st));
    }
    return s;
  }

 private:
  Statement statement() {
    Statement st;
    st.where = in_.peek().where;
    if (in_.at_ident("needsPackage")) {
      in_.next();
      st.body = NeedsPackage{in_.expect(TokenKind::String, "a package name").text};
    } else if (in_.at_ident("installGeneratorsInWidth") || in_.at_ident("installBasisElements")) {
      Install ins;
      ins.spelling = in_.next().text;
      in_.expect_symbol('(');
      ins.module = module_name();
      in_.expect_symbol(',');
      ins.width = width();
      in_.expect_symbol(')');
      st.body = ins;
    } else if (in_.at_ident("use")) {
      in_.next();
      Use u;
      u.module = module_name();
      in_.expect_symbol('_');
      u.width = width();
      use_ = std::make_pair(types_.at(u.module).module, u.width);
      st.body = u;
    } else if (in_.at_ident("print")) {
      in_.next();
      st.body = Print{expression().first};
    } else if (in_.at(TokenKind::Ident) && in_.peek(1).kind == TokenKind::Symbol && in_.peek(1).text == "=") {
      const Token name = in_.next();
      if (reserved(name.text)) throw ParseError(name.where, "'" + name.text + "' is a reserved word");
      in_.next();
      auto [value, type] = expression();
      types_[name.text] = type;
      if (type.kind == Kind::Module) modules_[type.module->symbol()] = type.module;
      st.body = Evaluate{name.text, value};
    } else {
      st.body = Evaluate{std::nullopt, expression().first};
    }
    return st;
  }

  static bool reserved(const std::string& s) {
    static const char* words[] = {"needsPackage", "installGeneratorsInWidth", "installBasisElements",
                                  "use", "print", "makePolynomialOIAlgebra", "makeFreeOIModule",
                                  "oiGB", "oiSyz", "oiRes", "ranks", "describe", "restrict"};
    for (const char* w : words)
      if (s == w) return true;
    return false;
  }

  const StaticType& lookup(const Token& name, std::optional<Kind> want = std::nullopt) {
    auto it = types_.find(name.text);
    if (it == types_.end()) throw ParseError(name.where, "unknown name '" + name.text + "'");
    if (want && it->second.kind != *want)
      throw ParseError(name.where, "'" + name.text + "' is " + kind_name(it->second.kind) + ", expected " +
                                       kind_name(*want));
    return it->second;
  }

  std::string module_name() {
    const Token t = in_.expect(TokenKind::Ident, "a module name");
    lookup(t, Kind::Module);
    return t.text;
  }

  Width width() {
    const auto where = in_.peek().where;
    const long w = in_.expect_integer();
    if (w > 64) throw ParseError(where, "width " + std::to_string(w) + " is too large");
    return static_cast<Width>(w);
  }

  std::vector<long> integer_list(bool allow_sign) {
    in_.expect_symbol('{');
    std::vector<long> out;
    if (!in_.at_symbol('}')) {
      do {
        out.push_back(in_.expect_integer(allow_sign));
      } while (in_.accept_symbol(','));
    }
    in_.expect_symbol('}');
    return out;
  }

  // Element names in braces; all must live in one module.
  std::vector<std::string> element_list() {
    in_.expect_symbol('{');
    std::vector<std::string> out;
    ModulePtr module;
    do {
      const Token t = in_.expect(TokenKind::Ident, "an element name");
      const auto& type = lookup(t, Kind::Element);
      if (module && type.module != module) throw ParseError(t.where, "elements of different modules");
      module = type.module;
      out.push_back(t.text);
    } while (in_.accept_symbol(','));
    in_.expect_symbol('}');
    return out;
  }

  bool at_element_literal() const {
    const Token& t = in_.peek();
    if (t.kind == TokenKind::Integer) return true;
    if (t.kind == TokenKind::Symbol) return t.text == "-" || t.text == "+";
    if (t.kind != TokenKind::Ident) return false;
    const Token& after = in_.peek(1);
    if (after.kind != TokenKind::Symbol || (after.text != "(" && after.text != "_")) return false;
    if (modules_.count(t.text)) return true;
    for (const auto& [symbol, m] : modules_)
      if (m->algebra().symbol == t.text) return true;
    return false;
  }

  std::pair<ExprPtr, StaticType> expression() {
    auto e = std::make_shared<Expr>();
    e->where = in_.peek().where;
    StaticType type{Kind::Element, {}, nullptr};

    if (at_element_literal()) {
      auto resolve = [&](const std::string& s) -> ModulePtr {
        auto it = modules_.find(s);
        return it == modules_.end() ? nullptr : it->second;
      };
      std::optional<Width> w;
      ModulePtr zero;
      if (use_) {
        zero = use_->first;
        w = use_->second;
      }
      ModuleElement value = parse_element_expression(in_, resolve, w, zero);
      type.module = value.module();
      e->node = ElementLiteral{std::move(value)};
    } else if (in_.at_ident("makePolynomialOIAlgebra")) {
      in_.next();
      in_.expect_symbol('(');
      const auto where = in_.peek().where;
      AlgebraCall call;
      const long rows = in_.expect_integer();
      if (rows < 1) throw ParseError(where, "an algebra needs at least one row of variables");
      call.algebra.rows = static_cast<int>(rows);
      in_.expect_symbol(',');
      call.algebra.symbol = in_.expect(TokenKind::Ident, "a variable symbol").text;
      in_.expect_symbol(',');
      const Token field = in_.expect(TokenKind::Ident, "a field");
      if (field.text != "QQ") throw ParseError(field.where, "only the field QQ is supported");
      call.algebra.field = field.text;
      in_.expect_symbol(')');
      type = {Kind::Algebra, call.algebra, nullptr};
      e->node = call;
    } else if (in_.at_ident("makeFreeOIModule")) {
      in_.next();
      in_.expect_symbol('(');
      ModuleCall call;
      call.symbol = in_.expect(TokenKind::Ident, "a basis symbol").text;
      in_.expect_symbol(',');
      for (long w : integer_list(false)) call.widths.push_back(static_cast<Width>(w));
      in_.expect_symbol(',');
      const Token alg = in_.expect(TokenKind::Ident, "an algebra name");
      const auto& algebra = lookup(alg, Kind::Algebra).algebra;
      call.algebra = alg.text;
      if (in_.accept_symbol(',')) {
        const auto where = in_.peek().where;
        for (long t : integer_list(true)) call.twists.push_back(static_cast<int>(t));
        if (call.twists.size() != call.widths.size())
          throw ParseError(where, "expected one twist per generator width");
      }
      in_.expect_symbol(')');
      if (call.symbol == algebra.symbol)
        throw ParseError(e->where, "basis symbol clashes with the variable symbol");
      call.module = FreeOIModule::make(algebra, call.symbol, call.widths, call.twists);
      type = {Kind::Module, algebra, call.module};
      e->node = call;
    } else if (in_.at_ident("oiGB")) {
      in_.next();
      const bool paren = in_.accept_symbol('(');
      GBCall call{element_list()};
      if (paren) in_.expect_symbol(')');
      type = {Kind::GB, {}, types_.at(call.inputs.front()).module};
      e->node = call;
    } else if (in_.at_ident("oiSyz")) {
      in_.next();
      in_.expect_symbol('(');
      const Token g = in_.expect(TokenKind::Ident, "a Groebner basis name");
      const auto& gt = lookup(g, Kind::GB);
      in_.expect_symbol(',');
      const Token sym = in_.expect(TokenKind::Ident, "a basis symbol");
      if (sym.text == gt.module->algebra().symbol)
        throw ParseError(sym.where, "basis symbol clashes with the variable symbol");
      in_.expect_symbol(')');
      type = {Kind::Syz, {}, gt.module};
      e->node = SyzCall{g.text, sym.text};
    } else if (in_.at_ident("oiRes")) {
      in_.next();
      in_.expect_symbol('(');
      ResCall call;
      call.inputs = element_list();
      in_.expect_symbol(',');
      const auto where = in_.peek().where;
      const long degree = in_.expect_integer();
      if (degree > 64) throw ParseError(where, "homological degree is too large");
      call.degree = static_cast<int>(degree);
      in_.expect_symbol(')');
      type = {Kind::Res, {}, types_.at(call.inputs.front()).module};
      e->node = call;
    } else if (in_.at_ident("ranks") || in_.at_ident("describe")) {
      const bool is_ranks = in_.next().text == "ranks";
      ExprPtr of = resolution_operand();
      if (is_ranks) {
        type.kind = Kind::Ranks;
        e->node = RanksCall{of};
      } else {
        type.kind = Kind::Describe;
        e->node = DescribeCall{of};
      }
    } else if (in_.at_ident("restrict")) {
      in_.next();
      in_.expect_symbol('(');
      ExprPtr of = resolution_operand();
      in_.expect_symbol(',');
      const Width w = width();
      in_.expect_symbol(')');
      type.kind = Kind::Restricted;
      e->node = RestrictCall{of, w};
    } else if (in_.at(TokenKind::Ident)) {
      const Token name = in_.next();
      type = lookup(name);
      e->node = NameRef{name.text};
    } else {
      in_.fail("expected an expression");
    }
    return {e, type};
  }

  ExprPtr resolution_operand() {
    const Token first = in_.peek();
    auto [of, type] = expression();
    if (type.kind != Kind::Res)
      throw ParseError(first.where, std::string("expected a resolution, found ") + kind_name(type.kind));
    return of;
  }

  TokenStream in_;
  std::map<std::string, StaticType> types_;
  std::map<std::string, ModulePtr> modules_;
  std::optional<std::pair<ModulePtr, Width>> use_;
};

std::string print_expr(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const NameRef& n) { return n.name; },
          [](const ElementLiteral& l) { return to_string(l.value); },
          [](const AlgebraCall& a) {
            return "makePolynomialOIAlgebra(" + std::to_string(a.algebra.rows) + ", " + a.algebra.symbol + ", " +
                   a.algebra.field + ")";
          },
          [](const ModuleCall& m) {
            std::string s = "makeFreeOIModule(" + m.symbol + ", {" + join(m.widths) + "}, " + m.algebra;
            if (!m.twists.empty()) s += ", {" + join(m.twists) + "}";
            return s + ")";
          },
          [](const GBCall& g) {
            std::string s;
            for (const auto& n : g.inputs) s += (s.empty() ? "" : ", ") + n;
            return "oiGB {" + s + "}";
          },
          [](const SyzCall& s) { return "oiSyz(" + s.basis + ", " + s.symbol + ")"; },
          [](const ResCall& r) {
            std::string s;
            for (const auto& n : r.inputs) s += (s.empty() ? "" : ", ") + n;
            return "oiRes({" + s + "}, " + std::to_string(r.degree) + ")";
          },
          [](const RanksCall& r) { return "ranks " + print_expr(*r.of); },
          [](const DescribeCall& d) { return "describe " + print_expr(*d.of); },
          [](const RestrictCall& r) { return "restrict(" + print_expr(*r.of) + ", " + std::to_string(r.width) + ")"; },
      },
      e.node);
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const NameRef& x) { return x.name == std::get<NameRef>(b.node).name; },
          [&](const ElementLiteral& x) {
            const auto& y = std::get<ElementLiteral>(b.node).value;
            return x.value.width() == y.width() && x.value.module()->symbol() == y.module()->symbol() &&
                   x.value.module()->widths() == y.module()->widths() && same_terms(x.value, y);
          },
          [&](const AlgebraCall& x) { return x.algebra == std::get<AlgebraCall>(b.node).algebra; },
          [&](const ModuleCall& x) {
            const auto& y = std::get<ModuleCall>(b.node);
            return x.symbol == y.symbol && x.widths == y.widths && x.twists == y.twists && x.algebra == y.algebra;
          },
          [&](const GBCall& x) { return x.inputs == std::get<GBCall>(b.node).inputs; },
          [&](const SyzCall& x) {
            const auto& y = std::get<SyzCall>(b.node);
            return x.basis == y.basis && x.symbol == y.symbol;
          },
          [&](const ResCall& x) {
            const auto& y = std::get<ResCall>(b.node);
            return x.inputs == y.inputs && x.degree == y.degree;
          },
          [&](const RanksCall& x) { return expr_equal(*x.of, *std::get<RanksCall>(b.node).of); },
          [&](const DescribeCall& x) { return expr_equal(*x.of, *std::get<DescribeCall>(b.node).of); },
          [&](const RestrictCall& x) {
            const auto& y = std::get<RestrictCall>(b.node);
            return x.width == y.width && expr_equal(*x.of, *y.of);
          },
      },
      a.node);
}

// Runtime values.

struct Ranks {
  std::vector<int> values;
};
struct Description {
  FreeComplex complex;
};
struct Restricted {
  RestrictedComplex complex;
  AlgebraDescriptor algebra;
};

using Value = std::variant<AlgebraDescriptor, ModulePtr, ModuleElement, GroebnerBasis, SyzygyBasis, FreeComplex,
                           Ranks, Description, Restricted>;

std::string module_text(const FreeOIModule& m) {
  return "free OI-module " + m.symbol() + " with widths {" + join(m.widths()) + "} and twists {" +
         join(m.twists()) + "}";
}

json module_json(const FreeOIModule& m) {
  return {{"symbol", m.symbol()}, {"widths", m.widths()}, {"twists", m.twists()}};
}

json elements_json(const std::vector<ModuleElement>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

std::string matrix_text(const WidthMatrix& m, const std::string& symbol) {
  std::string s;
  for (const auto& row : m.entries) {
    s += "  [";
    for (std::size_t c = 0; c < row.size(); ++c) s += (c ? ", " : "") + to_string(row[c], symbol);
    s += "]\n";
  }
  return s;
}

std::string render_text(const Value& v) {
  return std::visit(
      Overloaded{
          [](const AlgebraDescriptor& a) {
            return "polynomial OI-algebra over " + a.field + " in " + a.symbol + "(i,j), i <= " +
                   std::to_string(a.rows) + "\n";
          },
          [](const ModulePtr& m) { return module_text(*m) + "\n"; },
          [](const ModuleElement& f) { return to_string(f) + "\n"; },
          [](const GroebnerBasis& g) {
            std::string s;
            for (const auto& f : g.elements) s += to_string(f) + "\n";
            return s;
          },
          [](const SyzygyBasis& b) {
            std::string s = "-- source: " + module_text(*b.map.source) + "\n";
            for (const auto& f : b.elements) s += to_string(f) + "\n";
            return s;
          },
          [](const FreeComplex& c) { return describe_text(c); },
          [](const Ranks& r) {
            std::string s;
            for (std::size_t j = 0; j < r.values.size(); ++j)
              s += std::to_string(j) + ": rank " + std::to_string(r.values[j]) + "\n";
            return s;
          },
          [](const Description& d) { return describe_text(d.complex); },
          [](const Restricted& r) {
            std::string s = "width " + std::to_string(r.complex.width) + "\n";
            for (std::size_t j = 0; j < r.complex.maps.size(); ++j) {
              const auto& m = r.complex.maps[j];
              s += "map " + std::to_string(j) + ": " + std::to_string(m.rows.size()) + " x " +
                   std::to_string(m.cols.size()) + "\n";
              s += matrix_text(m, r.algebra.symbol);
            }
            return s;
          },
      },
      v);
}

json render_json(const Value& v) {
  return std::visit(
      Overloaded{
          [](const AlgebraDescriptor& a) -> json {
            return {{"type", "algebra"}, {"rows", a.rows}, {"symbol", a.symbol}, {"field", a.field}};
          },
          [](const ModulePtr& m) -> json {
            json j = module_json(*m);
            j["type"] = "module";
            return j;
          },
          [](const ModuleElement& f) -> json {
            return {{"type", "element"}, {"module", f.module()->symbol()}, {"width", f.width()},
                    {"element", to_string(f)}};
          },
          [](const GroebnerBasis& g) -> json {
            return {{"type", "groebner_basis"}, {"module", g.module->symbol()}, {"elements", elements_json(g.elements)}};
          },
          [](const SyzygyBasis& b) -> json {
            return {{"type", "syzygies"}, {"source", module_json(*b.map.source)}, {"elements", elements_json(b.elements)}};
          },
          [](const FreeComplex& c) -> json {
            json j = describe_json(c);
            j["type"] = "resolution";
            return j;
          },
          [](const Ranks& r) -> json { return {{"type", "ranks"}, {"ranks", r.values}}; },
          [](const Description& d) -> json {
            json j = describe_json(d.complex);
            j["type"] = "resolution";
            return j;
          },
          [](const Restricted& r) -> json {
            json j = restricted_json(r.complex, r.algebra);
            j["type"] = "restricted";
            return j;
          },
      },
      v);
}

class Interpreter {
 public:
  Interpreter(const RunFlags& flags, std::ostream& err) : flags_(flags), err_(err) {}

  Value eval(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const NameRef& n) -> Value { return env_.at(n.name); },
            [&](const ElementLiteral& l) -> Value { return l.value; },
            [&](const AlgebraCall& a) -> Value { return a.algebra; },
            [&](const ModuleCall& m) -> Value { return m.module; },
            [&](const GBCall& g) -> Value {
              GroebnerOptions opts;
              opts.log = log();
              opts.pair_cap = flags_.pair_cap;
              const auto inputs = elements(g.inputs);
              return oi_gb(inputs, opts);
            },
            [&](const SyzCall& s) -> Value {
              SyzygyOptions opts;
              opts.log = log();
              opts.pair_cap = flags_.pair_cap;
              const auto& G = std::get<GroebnerBasis>(env_.at(s.basis));
              return oi_syz(G.elements, s.symbol, opts);
            },
            [&](const ResCall& r) -> Value {
              ResolutionOptions opts;
              opts.log = log();
              opts.pair_cap = flags_.pair_cap;
              const auto inputs = elements(r.inputs);
              return oi_res(inputs, r.degree, opts);
            },
            [&](const RanksCall& r) -> Value { return Ranks{ranks(std::get<FreeComplex>(eval(*r.of)))}; },
            [&](const DescribeCall& d) -> Value { return Description{std::get<FreeComplex>(eval(*d.of))}; },
            [&](const RestrictCall& r) -> Value {
              const auto complex = std::get<FreeComplex>(eval(*r.of));
              return Restricted{restrict_to_width(complex, r.width), complex.base->algebra()};
            },
        },
        e.node);
  }

  void bind(const std::string& name, Value v) { env_.insert_or_assign(name, std::move(v)); }

 private:
  std::ostream* log() { return flags_.verbose ? &err_ : nullptr; }

  std::vector<ModuleElement> elements(const std::vector<std::string>& names) const {
    std::vector<ModuleElement> out;
    for (const auto& n : names) out.push_back(std::get<ModuleElement>(env_.at(n)));
    return out;
  }

  const RunFlags& flags_;
  std::ostream& err_;
  std::map<std::string, Value> env_;
};

void report(std::ostream& err, SourceLocation where, const std::string& message) {
  err << where.line << ":" << where.column << ": error: " << message << "\n";
}

}  // namespace

Script parse(std::string_view source) { return Parser(source).parse(); }

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    out += std::visit(Overloaded{
                          [](const NeedsPackage& n) { return "needsPackage \"" + n.package + "\""; },
                          [](const Install& i) {
                            return i.spelling + "(" + i.module + ", " + std::to_string(i.width) + ")";
                          },
                          [](const Use& u) { return "use " + u.module + "_" + std::to_string(u.width); },
                          [](const Evaluate& e) { return (e.name ? *e.name + " = " : "") + print_expr(*e.value); },
                          [](const Print& p) { return "print " + print_expr(*p.value); },
                      },
                      st.body);
    out += st.silent ? ";\n" : "\n";
  }
  return out;
}

bool equivalent(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t k = 0; k < a.statements.size(); ++k) {
    const auto& x = a.statements[k];
    const auto& y = b.statements[k];
    if (x.silent != y.silent || x.body.index() != y.body.index()) return false;
    const bool same = std::visit(
        Overloaded{
            [&](const NeedsPackage& n) { return n.package == std::get<NeedsPackage>(y.body).package; },
            [&](const Install& i) {
              const auto& j = std::get<Install>(y.body);
              return i.spelling == j.spelling && i.module == j.module && i.width == j.width;
            },
            [&](const Use& u) {
              const auto& v = std::get<Use>(y.body);
              return u.module == v.module && u.width == v.width;
            },
            [&](const Evaluate& e) {
              const auto& f = std::get<Evaluate>(y.body);
              return e.name == f.name && expr_equal(*e.value, *f.value);
            },
            [&](const Print& p) { return expr_equal(*p.value, *std::get<Print>(y.body).value); },
        },
        x.body);
    if (!same) return false;
  }
  return true;
}

int run(const Script& s, const RunFlags& flags, std::ostream& out, std::ostream& err) {
  Interpreter interp(flags, err);
  json results = json::array();
  int status = 0;
  auto emit = [&](const Statement& st, const Value& v) {
    if (flags.output == OutputFormat::Text) {
      out << render_text(v);
    } else {
      json j = render_json(v);
      j["line"] = st.where.line;
      results.push_back(std::move(j));
    }
  };
  for (const auto& st : s.statements) {
    try {
      if (const auto* e = std::get_if<Evaluate>(&st.body)) {
        Value v = interp.eval(*e->value);
        if (!st.silent) emit(st, v);
        if (e->name) interp.bind(*e->name, std::move(v));
      } else if (const auto* p = std::get_if<Print>(&st.body)) {
        emit(st, interp.eval(*p->value));
      }
    } catch (const std::exception& ex) {
      report(err, st.where, ex.what());
      status = 1;
      break;
    }
  }
  if (flags.output == OutputFormat::Json) out << results.dump(2) << "\n";
  return status;
}

int run_source(std::string_view source, const RunFlags& flags, std::ostream& out, std::ostream& err) {
  Script s;
  try {
    s = parse(source);
  } catch (const ParseError& e) {
    // The message already carries the location.
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return run(s, flags, out, err);
}

}  // namespace oigb::script
