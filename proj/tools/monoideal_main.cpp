// monoideal: exact invariants of monomial ideals (depth, regularity,
// Betti tables, Cohen-Macaulay and Gorenstein tests) plus the clutter
// optimization checks that govern power monotonicity.
//
// Usage:
//   monoideal <command> <input-file> <name> [args...] [flags]
//   monoideal paper [--fixtures <dir>] [flags]
//
// The input file uses the line-oriented grammar described in the README;
// pass "-" for stdin.  Exit codes: 0 success, 1 parse error,
// 2 precondition error, 3 resource error, 4 paper-suite failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoideal/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw monoideal::PreconditionError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const monoideal::Json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw monoideal::PreconditionError("cannot open output file: " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monomial-ideal invariants workbench"};
  app.require_subcommand(1);

  static const std::vector<std::string> commands = {
      "depth", "reg",      "betti",  "summary", "polarize", "dual", "radical", "colon",
      "power", "symbolic", "lower",  "classify", "scp",     "mfmc", "sequences", "cm2"};

  std::string input_file, name, extra, out_path, caps_arg, mode = "ordinary",
                                                           fixtures = "fixtures";
  unsigned characteristic = 0;
  long max_k = 3;
  bool timing = false;

  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd);
    sub->add_option("input", input_file, "input file (- for stdin)")->required();
    sub->add_option("name", name, "binding name")->required();
    if (cmd == "colon")
      sub->add_option("monomial", extra, "monomial literal")->required();
    if (cmd == "power" || cmd == "symbolic")
      sub->add_option("k", extra, "exponent")->required();
    if (cmd == "lower")
      sub->add_option("variable", extra, "variable name")->required();
    if (cmd == "sequences")
      sub->add_option("--mode", mode, "ordinary|symbolic")
          ->check(CLI::IsMember({"ordinary", "symbolic"}));
    subs.emplace_back(cmd, sub);
  }
  CLI::App* paper = app.add_subcommand("paper", "reproduce the paper examples");
  paper->add_option("--fixtures", fixtures, "fixtures directory");

  // shared flags on every subcommand
  for (auto& [cmd, sub] : subs) {
    sub->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    sub->add_option("--max-k", max_k, "largest power for bounded checks");
    sub->add_option("--caps", caps_arg, "cap overrides, e.g. lattice=200000,faces=4194304");
    sub->add_option("--out", out_path, "write the JSON document to this path");
    sub->add_flag("--timing", timing, "include wall-clock timing in the output");
  }
  paper->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  paper->add_option("--caps", caps_arg, "cap overrides");
  paper->add_option("--out", out_path, "write the JSON document to this path");
  paper->add_flag("--timing", timing, "include wall-clock timing in the output");

  CLI11_PARSE(app, argc, argv);

  try {
    monoideal::RunOptions opts;
    opts.field = monoideal::FieldSpec::of_characteristic(characteristic);
    opts.max_k = max_k;
    opts.timing = timing;
    opts.mode = mode;
    if (const char* env = std::getenv("MONOIDEAL_CAPS"))
      opts.caps = monoideal::parse_caps(env, opts.caps);
    if (!caps_arg.empty()) opts.caps = monoideal::parse_caps(caps_arg, opts.caps);

    if (paper->parsed()) {
      monoideal::Json doc = monoideal::paper_suite(fixtures, opts);
      for (const auto& item : doc["items"])
        std::cerr << (item["status"] == "pass" ? "PASS" : item["status"] == "fail" ? "FAIL" : "INCONCLUSIVE")
                  << "  " << item["item"].get<std::string>() << "\n";
      emit(doc, out_path);
      return doc["pass"].get<bool>() ? 0 : 4;
    }

    std::string command;
    for (auto& [cmd, sub] : subs)
      if (sub->parsed()) command = cmd;
    monoideal::Session session = monoideal::parse_session(slurp(input_file));
    std::vector<std::string> args{name};
    if (!extra.empty()) args.push_back(extra);
    monoideal::Json doc = monoideal::run_command(command, session, args, opts);
    emit(doc, out_path);
    return 0;
  } catch (const monoideal::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const monoideal::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const monoideal::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const monoideal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
