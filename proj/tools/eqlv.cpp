// eqlv: run one verification pipeline and write its report.
//
//   eqlv zeta --q 2 --n 1 --prec 8
//   eqlv class-formula --q 2 --carlitz 1 --context trivial --prec 8
//   eqlv trace-check --q 2 --demo qpower --prec 6 --out run.json
//
// Exit status: 0 pass, 1 fail, 2 inconclusive, 3 usage or config error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "eqlv/run.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw eqlv::ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string summary_path(const std::string& json_path) {
  const auto dot = json_path.rfind('.');
  const auto slash = json_path.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return json_path.substr(0, dot) + ".txt";
  return json_path + ".txt";
}

struct Flags {
  std::map<std::string, std::string> kv;
  std::string config_file, out;
  bool json = false;
  bool dump_config = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  auto opt = [&](const std::string& names, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(names, [&f, key](const std::string& v) { f.kv[key] = v; }, help);
  };
  opt("--q", "q", "base field size (prime)");
  opt("--context", "context", "trivial | constant | cyclotomic");
  opt("--m", "m", "degree of the constant field extension");
  opt("--conductor", "conductor", "cyclotomic conductor, a monic squarefree polynomial in t");
  opt("--carlitz,--n", "carlitz", "use the Carlitz power C^(x)n");
  opt("--module", "module", "explicit A_0..A_r as JSON, e.g. [[[\"t\"]],[[\"1\"]]]");
  opt("--prec", "prec", "precision N: compare mod t^-N");
  opt("--degree-bound", "degree-bound", "prime degree bound D (default chosen from N)");
  opt("--rep", "rep", "all | trivial | regular | chi:<i>");
  opt("--variant", "variant", "lvalue: equivariant | hom | tensor | artin");
  opt("--demo", "demo", "trace-check: qpower | random | instance");
  opt("--instance", "instance", "trace-check instance as JSON");
  opt("--seed", "seed", "seed for random instances");
  opt("--count", "count", "number of random instances");
  sub->add_flag_function("--equivariant", [&f](std::int64_t) { f.kv["equivariant"] = "true"; },
                         "random instances carry G = Z/3");
  sub->add_option("--config", f.config_file, "key = value file; flags override it");
  sub->add_option("--out", f.out, "write the JSON report here and the summary next to it");
  sub->add_flag("--json", f.json, "print the JSON report instead of the summary");
  sub->add_flag("--dump-config", f.dump_config, "print the effective config as key = value text and exit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant L-value and class formula checks over F_q[t]"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"zeta", "Euler product of C^(x)n against the monic sum"},
      {"lvalue", "equivariant or representation L-values"},
      {"artin", "Artin L-values against the Carlitz products"},
      {"class-formula", "L(E,G) against lattice index times |H|"},
      {"trace-check", "trace formula for tau-sheaves on the affine line"}};
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  eqlv::RunResult res;
  try {
    std::map<std::string, std::string> kv;
    if (!flags.config_file.empty()) kv = eqlv::parse_kv_text(read_file(flags.config_file));
    if (kv.count("command") && kv["command"] != command)
      throw eqlv::ConfigError("config file is for '" + kv["command"] + "', not '" + command + "'");
    for (const auto& [k, v] : flags.kv) kv[k] = v;
    kv["command"] = command;
    const eqlv::RunConfig cfg = eqlv::RunConfig::from_kv(kv);
    cfg.validate();
    if (flags.dump_config) {
      std::cout << eqlv::render_kv_text(cfg.to_kv());
      return 0;
    }
    res = eqlv::run(cfg);
  } catch (const eqlv::ConfigError& e) {
    std::cerr << "eqlv: " << e.what() << "\n";
    return 3;
  }

  try {
    if (!flags.out.empty()) {
      write_file(flags.out, res.json);
      write_file(summary_path(flags.out), res.summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "eqlv: " << e.what() << "\n";
    return 3;
  }
  std::cout << (flags.json ? res.json : res.summary);
  return eqlv::exit_code(res.verdict);
}
