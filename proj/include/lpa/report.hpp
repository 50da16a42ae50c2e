#ifndef LPA_REPORT_HPP_
#define LPA_REPORT_HPP_

// JSON reports behind the `lpa` command-line tool. Every report has the
// shape
//
//   {"command": ..., "inputs": [{"name", "path", "sha256"}],
//    "result": {...}, "diagnostics": [...]}
//
// and is byte-identical for identical inputs (object keys are sorted, all
// scalars are printed in scalar syntax).

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lpa/errors.hpp"
#include "lpa/path_algebras.hpp"
#include "lpa/scalars.hpp"

namespace lpa::report {

  using json = nlohmann::json;

  // Contents of an input file along with the name used to refer to it.
  struct InputFile {
    std::string name;  // role, e.g. "graph"
    std::string path;
    std::string text;
  };

  // Throws InputError if the file cannot be read.
  InputFile read_input(std::string const& name, std::string const& path);

  std::string sha256_hex(std::string const& data);

  json analyze(InputFile const& graph);
  json classes(InputFile const& graph, std::size_t max_len);

  struct EvalOptions {
    AlgebraMode                mode = AlgebraMode::Leavitt;
    std::optional<InputFile>   spec;  // exactly one of spec / faithful
    bool                       faithful = false;
    FieldConfig                field;  // used with `faithful`
    std::string                expr;
  };
  json eval(InputFile const& graph, EvalOptions const& opts);

  json decompose(InputFile const& graph);

  // subcommand: "classes", "minimal" or "normalized".
  json sg(InputFile const& cayley, std::string const& subcommand);

  json error_report(std::string const&              command,
                    std::string const&              kind,
                    std::string const&              message,
                    std::vector<std::string> const& diagnostics = {});

  // Precondition failure carrying extra diagnostics (e.g. violating
  // vertices of a trace spec).
  class DiagnosedFailure : public PreconditionError {
   public:
    DiagnosedFailure(std::string const& msg, std::vector<std::string> diags)
        : PreconditionError(msg), diagnostics(std::move(diags)) {}
    std::vector<std::string> diagnostics;
  };

  // Dispatches one of the commands above and returns (report, exit code).
  std::pair<json, int> guarded(std::string const&         command,
                               std::function<json()> const& body);

  // Serialized form written by the CLI: pretty-printed, trailing newline.
  std::string dump(json const& report);

}  // namespace lpa::report

#endif  // LPA_REPORT_HPP_
