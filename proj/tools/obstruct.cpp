// obstruct <command> <file> [args] : batch front end for problem files.
//
// Exit status: 0 lift exists / class vanishes, 1 obstructed, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "obstruct/problem_file.hpp"

using namespace obstruct;

namespace {

struct Options {
  std::string file;
  std::vector<std::string> args;
  std::string ring;
  std::uint64_t seed = 1;
  bool verbose = false;
};

ProblemFile load(const Options& opt) {
  std::ifstream in(opt.file);
  if (!in) throw Error("cannot open '" + opt.file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::optional<Ring> ring;
  if (!opt.ring.empty()) ring = Ring::parse(opt.ring);
  return parse_problem(buffer.str(), ring);
}

int emit(const RunResult& result) {
  std::cout << result.report;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Obstruction theory for lifting problems between chain complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--ring", opt.ring, "Override the ring: Z, Q or Z/p");
  app.add_option("--seed", opt.seed, "Seed for the demo generator");
  app.add_flag("--verbose", opt.verbose, "Echo the parsed file before running");

  auto* run = app.add_subcommand("run", "Run every command in the file");
  auto* format = app.add_subcommand("format", "Print the file in canonical form");
  auto* demo = app.add_subcommand("demo", "Print a random problem file (see --seed, --ring)");
  run->add_option("file", opt.file)->required();
  format->add_option("file", opt.file)->required();

  // Single commands run against the objects of a file.
  const std::vector<std::pair<std::string, std::string>> single = {
      {"homology", "COMPLEX N"},          {"obstruction", "SQUARE"},
      {"lift", "SQUARE"},                 {"factor", "MAP"},
      {"suspend", "SQUARE [K]"},          {"rlp-check", "MAP sphere|simplex N"},
      {"classify", "MAP"}};
  std::vector<CLI::App*> single_apps;
  for (const auto& [name, usage] : single) {
    auto* sub = app.add_subcommand(name, name + " " + usage + " against the objects of a file");
    sub->add_option("file", opt.file)->required();
    sub->add_option("args", opt.args, usage);
    single_apps.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*demo) {
      const Ring ring = opt.ring.empty() ? Ring::integers() : Ring::parse(opt.ring);
      std::cout << serialize_problem(demo_problem(ring, opt.seed));
      return 0;
    }
    const ProblemFile file = load(opt);
    if (opt.verbose) std::cerr << serialize_problem(file);
    if (*format) {
      std::cout << serialize_problem(file);
      return 0;
    }
    if (*run) return emit(run_problem(file));
    for (std::size_t k = 0; k < single.size(); ++k) {
      if (!*single_apps[k]) continue;
      std::string text = single[k].first;
      for (const std::string& a : opt.args) text += " " + a;
      return emit(run_command(file, parse_command(file, text)));
    }
  } catch (const std::exception& e) {
    std::cerr << "obstruct: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
