#include "printers.hpp"

#include <random>
#include <sstream>

#include "oigb/script.hpp"

using namespace oigb;
using namespace oigb::script;

namespace {

const char* kSession = R"(needsPackage "OIGroebnerBases";
P = makePolynomialOIAlgebra(2, x, QQ);
F = makeFreeOIModule(e, {1,1,2}, P);
installGeneratorsInWidth(F, 1);
use F_1; b1 = x_(1,1)*e_(1,{1},1)+x_(2,1)*e_(1,{1},2);
use F_2; b2 = x_(1,2)*x_(1,1)*e_(2,{2},2)+x_(2,2)*x_(2,1)*e_(2,{1,2},3);
oiGB {b1, b2}
)";

struct Outcome {
  int status;
  std::string out, err;
};

Outcome exec(const std::string& source, RunFlags flags = {}) {
  std::ostringstream out, err;
  const int status = run_source(source, flags, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("session script prints the golden basis") {
  const auto r = exec(kSession);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "x(1,1)*e(1,{1},1) + x(2,1)*e(1,{1},2)\n"
        "x(1,2)*x(1,1)*e(2,{2},2) + x(2,2)*x(2,1)*e(2,{1,2},3)\n"
        "x(2,3)*x(2,2)*x(1,1)*e(3,{2,3},3) - x(2,3)*x(2,1)*x(1,2)*e(3,{1,3},3)\n");
  CHECK(exec(kSession).out == r.out);
}

TEST_CASE("ranks session") {
  const auto r = exec(R"(P = makePolynomialOIAlgebra(2, x, QQ);
F = makeFreeOIModule(e, {1, 1}, P);
installBasisElements(F, 3);
use F_3; f = x_(1,2)*x_(1,1)*e_(3,{2},1)+x_(2,2)*x_(2,1)*e_(3,{1},2);
print ranks oiRes({f}, 3)
)");
  CHECK(r.status == 0);
  CHECK(r.out == "0: rank 1\n1: rank 2\n2: rank 4\n3: rank 11\n");
}

TEST_CASE("empty script") {
  const auto r = exec("");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(exec("-- only a comment\n\n").out.empty());
}

TEST_CASE("json output") {
  RunFlags flags;
  flags.output = OutputFormat::Json;
  const auto r = exec(kSession, flags);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"groebner_basis\"") != std::string::npos);
  CHECK(r.out.find("\"line\": 7") != std::string::npos);
}

TEST_CASE("verbose traces go to the error stream") {
  RunFlags flags;
  flags.verbose = true;
  const auto r = exec(kSession, flags);
  CHECK(r.status == 0);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out == exec(kSession).out);
}

TEST_CASE("located diagnostics") {
  auto located = [](const std::string& src, const std::string& where) {
    const auto r = exec(src);
    CAPTURE(src);
    CAPTURE(r.err);
    CHECK(r.status != 0);
    CHECK(r.err.rfind(where, 0) == 0);
  };
  located("P = makePolynomialOIAlgebra(2, x, QQ)\nF = makeFreeOIModule(e, {1}, P)\nb = e(2,{2,1},1)", "3:7:");
  located("oiGB {b}", "1:7:");
  located("P = makePolynomialOIAlgebra(2, x, GF)", "1:35:");
  located("P = makePolynomialOIAlgebra(2, x, QQ)\nF = makeFreeOIModule(e, {1}, P)\nuse F_2; b = e(1,{1},1)", "3:14:");
  located("P = makePolynomialOIAlgebra(2, x, QQ)\nranks P", "2:7:");
  located("P = makePolynomialOIAlgebra(2, x, QQ) )", "1:39:");
  located("x = @", "1:5:");
  // kernel errors carry the statement location
  located("P = makePolynomialOIAlgebra(2, x, QQ)\nF = makeFreeOIModule(e, {1,1,2}, P)\n"
          "b1 = x(1,1)*e(1,{1},1)+x(2,1)*e(1,{1},2)\nb2 = x(1,2)*x(1,1)*e(2,{2},2)+x(2,2)*x(2,1)*e(2,{1,2},3)\n"
          "G = oiGB {b1, b2}\nH = oiGB {b1};\nD = oiSyz(H, d)\nK = oiSyz(H2, d)",
          "8:11:");
}

TEST_CASE("runtime precondition errors stop the run") {
  RunFlags flags;
  flags.pair_cap = 1;
  const auto r = exec(kSession, flags);
  CHECK(r.status == 1);
  CHECK(r.err.rfind("7:1: error:", 0) == 0);
}

TEST_CASE("print and parse round-trip") {
  const char* sources[] = {
      kSession,
      "P = makePolynomialOIAlgebra(1, y, QQ)\nF = makeFreeOIModule(u, {0,2}, P, {-1, 3});\n"
      "a = 1/2*y(1,2)^3*u(2,{},1) - u(2,{1,2},2)\nG = oiGB({a})\nD = oiSyz(G, w)\nR = oiRes({a}, 2);\n"
      "print describe R\nrestrict(R, 3)\nranks R",
      "P = makePolynomialOIAlgebra(2, x, QQ); F = makeFreeOIModule(e, {1}, P); use F_2; z = 0; print z",
  };
  for (const char* src : sources) {
    CAPTURE(src);
    const Script s = parse(src);
    const std::string printed = print(s);
    const Script again = parse(printed);
    CHECK(equivalent(s, again));
    CHECK(print(again) == printed);
  }
  CHECK_FALSE(equivalent(parse("P = makePolynomialOIAlgebra(2, x, QQ)"), parse("P = makePolynomialOIAlgebra(3, x, QQ)")));
}

TEST_CASE("parser never crashes on garbage") {
  const std::string alphabet = "P=mkF(){},_*+-^/x e1230;\n\"#oiGBSyzRsuw";
  std::mt19937 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string src;
    const int len = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int k = 0; k < len; ++k)
      src += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    try {
      parse(src);
    } catch (const ParseError&) {
    }
  }
  CHECK(true);
}
