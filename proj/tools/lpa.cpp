// lpa: traces on semigroup rings and Leavitt path algebras.
//
//   lpa analyze <graph>
//   lpa classes <graph> --max-len N
//   lpa eval <graph> (--spec <file> | --faithful) [--mode cohn|leavitt] "<expr>"
//   lpa decompose <graph>
//   lpa sg <cayley-file> classes|minimal|normalized
//
// Reports are JSON on stdout. Exit codes: 0 success, 2 input error,
// 3 mathematical precondition failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpa/report.hpp"

namespace {

  int emit(std::pair<lpa::report::json, int> const& outcome) {
    std::cout << lpa::report::dump(outcome.first);
    if (outcome.second != 0) {
      std::cerr << "lpa: "
                << outcome.first["error"]["message"].get<std::string>()
                << "\n";
    }
    return outcome.second;
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace lpa;

  CLI::App app{"Traces on semigroup rings, Cohn and Leavitt path algebras"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string spec_path;
  std::string cayley_path;
  std::string sg_command;
  std::string mode       = "leavitt";
  std::string field      = "Qi";
  std::string involution = "conjugation";
  std::string expr;
  std::size_t max_len  = 2;
  bool        faithful = false;

  auto* analyze = app.add_subcommand("analyze", "Structural report for a graph");
  analyze->add_option("graph", graph_path, "Graph file")->required();

  auto* classes = app.add_subcommand(
      "classes", "~-classes of closed paths up to a length bound");
  classes->add_option("graph", graph_path, "Graph file")->required();
  classes->add_option("--max-len", max_len, "Maximum closed path length")
      ->check(CLI::Range(0, 16));

  auto* eval = app.add_subcommand("eval", "Evaluate a trace on an element");
  eval->add_option("graph", graph_path, "Graph file")->required();
  auto* spec_opt = eval->add_option("--spec", spec_path, "Trace spec file");
  auto* faithful_opt
      = eval->add_flag("--faithful", faithful,
                       "Use the faithful trace of a no-exit graph");
  spec_opt->excludes(faithful_opt);
  eval->add_option("--mode", mode, "cohn or leavitt")
      ->check(CLI::IsMember({"cohn", "leavitt"}));
  eval->add_option("--field", field, "Q or Qi (with --faithful)")
      ->check(CLI::IsMember({"Q", "Qi"}));
  eval->add_option("--involution", involution,
                   "identity or conjugation (with --faithful)")
      ->check(CLI::IsMember({"identity", "conjugation"}));
  eval->add_option("expr", expr, "Element expression")->required();

  auto* decompose
      = app.add_subcommand("decompose", "Matrix block decomposition");
  decompose->add_option("graph", graph_path, "Graph file")->required();

  auto* sg = app.add_subcommand("sg", "Finite semigroup given by a Cayley table");
  sg->add_option("cayley", cayley_path, "Cayley table file")->required();
  sg->add_option("command", sg_command, "classes, minimal or normalized")
      ->required()
      ->check(CLI::IsMember({"classes", "minimal", "normalized"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using report::guarded;
  using report::read_input;

  if (analyze->parsed()) {
    return emit(guarded("analyze", [&] {
      return report::analyze(read_input("graph", graph_path));
    }));
  }
  if (classes->parsed()) {
    return emit(guarded("classes", [&] {
      return report::classes(read_input("graph", graph_path), max_len);
    }));
  }
  if (eval->parsed()) {
    return emit(guarded("eval", [&] {
      report::EvalOptions opts;
      opts.mode     = parse_mode(mode);
      opts.faithful = faithful;
      opts.field    = FieldConfig{parse_field_tag(field),
                                  parse_involution(involution)};
      opts.expr     = expr;
      if (!spec_path.empty()) {
        opts.spec = read_input("spec", spec_path);
      }
      return report::eval(read_input("graph", graph_path), opts);
    }));
  }
  if (decompose->parsed()) {
    return emit(guarded("decompose", [&] {
      return report::decompose(read_input("graph", graph_path));
    }));
  }
  return emit(guarded("sg " + sg_command, [&] {
    return report::sg(read_input("cayley", cayley_path), sg_command);
  }));
}
