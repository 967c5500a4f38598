// Command-line driver: runs session scripts, or builds one from flags for the
// gb/syz/res shortcuts.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oigb/script.hpp"

namespace {

using oigb::script::OutputFormat;

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

struct Inline {
  int rows = 2;
  std::string variable = "x";
  std::string symbol = "e";
  std::vector<int> widths;
  std::vector<int> twists;
  std::vector<std::string> elements;

  void add_to(CLI::App* app) {
    app->add_option("--rows", rows, "rows of variables in the algebra")->check(CLI::PositiveNumber);
    app->add_option("--variable", variable, "variable symbol");
    app->add_option("--symbol", symbol, "basis symbol of the free module");
    app->add_option("--widths", widths, "generator widths, comma separated")->delimiter(',')->required();
    app->add_option("--twists", twists, "generator twists, comma separated")->delimiter(',');
    app->add_option("element", elements, "element expressions such as 'x(1,1)*e(1,{1},1)'")->required();
  }

  // The input names are b1, b2, ...; the preamble is silent.
  std::string preamble(std::string& names) const {
    std::ostringstream s;
    s << "P = makePolynomialOIAlgebra(" << rows << ", " << variable << ", QQ);\n";
    s << "F = makeFreeOIModule(" << symbol << ", {" << join(widths) << "}, P";
    if (!twists.empty()) s << ", {" << join(twists) << "}";
    s << ");\n";
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const std::string name = "b" + std::to_string(k + 1);
      s << name << " = " << elements[k] << ";\n";
      names += (names.empty() ? "" : ", ") + name;
    }
    return s.str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, syzygies and free resolutions of submodules of free OI-modules"};
  app.require_subcommand(1);

  oigb::script::RunFlags flags;
  std::string output = "text";
  if (const char* env = std::getenv("OIGB_OUTPUT")) output = env;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("-v,--verbose", flags.verbose, "trace the computation on stderr");
    sub->add_option("-o,--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--pair-cap", flags.pair_cap, "abort after this many critical pairs");
  };

  std::string script_path;
  auto* run = app.add_subcommand("run", "run a session script ('-' reads stdin)");
  run->add_option("script", script_path, "script file")->required();
  add_common(run);

  Inline gb_in, syz_in, res_in;
  auto* gb = app.add_subcommand("gb", "Groebner basis of the given elements");
  gb_in.add_to(gb);
  add_common(gb);

  std::string syz_symbol = "d";
  auto* syz = app.add_subcommand("syz", "syzygies of the Groebner basis of the given elements");
  syz_in.add_to(syz);
  syz->add_option("--syz-symbol", syz_symbol, "basis symbol of the syzygy source module");
  add_common(syz);

  int degree = 1;
  bool only_ranks = false;
  std::vector<int> restrict_widths;
  auto* res = app.add_subcommand("res", "minimal free resolution of the module the elements generate");
  res_in.add_to(res);
  res->add_option("-d,--degree", degree, "homological degree")->check(CLI::NonNegativeNumber);
  res->add_flag("--ranks", only_ranks, "print only the ranks");
  res->add_option("--restrict", restrict_widths, "also print the restriction to these widths")->delimiter(',');
  add_common(res);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every usage error exits 2.
    return app.exit(e) == 0 ? 0 : 2;
  }
  flags.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (output != "text" && output != "json") {
    std::cerr << "error: unknown output format '" << output << "'\n";
    return 2;
  }

  std::string source;
  if (run->parsed()) {
    std::ostringstream buf;
    if (script_path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream file(script_path);
      if (!file) {
        std::cerr << "error: cannot read " << script_path << "\n";
        return 2;
      }
      buf << file.rdbuf();
    }
    source = buf.str();
  } else if (gb->parsed()) {
    std::string names;
    source = gb_in.preamble(names) + "oiGB {" + names + "}\n";
  } else if (syz->parsed()) {
    std::string names;
    source = syz_in.preamble(names) + "G = oiGB {" + names + "};\noiSyz(G, " + syz_symbol + ")\n";
  } else {
    std::string names;
    source = res_in.preamble(names) + "R = oiRes({" + names + "}, " + std::to_string(degree) + ");\n";
    source += only_ranks ? "ranks R\n" : "describe R\n";
    for (int w : restrict_widths) source += "restrict(R, " + std::to_string(w) + ")\n";
  }
  return oigb::script::run_source(source, flags, std::cout, std::cerr);
}
