#include "lpa/report.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "lpa/errors.hpp"
#include "lpa/gis.hpp"
#include "lpa/graphs.hpp"
#include "lpa/semigroups.hpp"
#include "lpa/structure.hpp"
#include "lpa/traces.hpp"

namespace lpa::report {

  namespace {

    json input_entry(InputFile const& f) {
      return json{{"name", f.name}, {"path", f.path},
                  {"sha256", sha256_hex(f.text)}};
    }

    json envelope(std::string const&            command,
                  std::vector<InputFile> const& inputs,
                  json                          result,
                  std::vector<std::string> const& diagnostics = {}) {
      json in = json::array();
      for (auto const& f : inputs) {
        in.push_back(input_entry(f));
      }
      return json{{"command", command},
                  {"inputs", in},
                  {"result", std::move(result)},
                  {"diagnostics", diagnostics}};
    }

    std::vector<std::string> names(Graph const& g,
                                   std::vector<VertexId> const& vs) {
      std::vector<std::string> out;
      for (VertexId v : vs) {
        out.push_back(g.vertex_name(v));
      }
      return out;
    }

    std::vector<std::string> path_strings(Graph const&             g,
                                          std::vector<Path> const& ps) {
      std::vector<std::string> out;
      for (Path const& p : ps) {
        out.push_back(to_string(g, p));
      }
      return out;
    }

  }  // namespace

  InputFile read_input(std::string const& name, std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read " + name + " file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return InputFile{name, path, buf.str()};
  }

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                   nullptr)
        != 1) {
      throw std::runtime_error("SHA-256 digest failed");
    }
    std::ostringstream out;
    for (unsigned int k = 0; k < len; ++k) {
      out << std::hex << std::setw(2) << std::setfill('0')
          << static_cast<int>(digest[k]);
    }
    return out.str();
  }

  json analyze(InputFile const& graph) {
    Graph g    = parse_graph(graph.text);
    json  res;
    res["vertices"]         = g.vertex_count();
    res["edges"]            = g.edge_count();
    res["sinks"]            = names(g, sinks(g));
    res["regular_vertices"] = names(g, regular_vertices(g));
    res["cycles"]           = path_strings(g, cycles(g));
    res["no_exit"]          = is_no_exit(g);
    res["tame"]             = infinite_paths_tame(g);

    auto space                     = vertex_trace_space(g);
    res["vertex_trace_space_dim"]  = space.dimension();
    json basis                     = json::array();
    for (auto const& row : space.basis) {
      json assignment = json::object();
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        assignment[g.vertex_name(v)] = to_string(row[v]);
      }
      basis.push_back(assignment);
    }
    res["vertex_trace_space_basis"] = basis;

    json faithful = json::object();
    for (FieldConfig cfg : {FieldConfig{FieldTag::Q, Involution::identity},
                            FieldConfig{FieldTag::Qi, Involution::conjugation}}) {
      auto verdict = faithful_trace_exists(g, cfg);
      faithful[to_string(cfg.field) + "/" + to_string(cfg.inv)]
          = json{{"exists", verdict.exists}, {"reason", verdict.reason}};
    }
    res["faithful_trace_exists"] = faithful;
    return envelope("analyze", {graph}, res);
  }

  json classes(InputFile const& graph, std::size_t max_len) {
    Graph               g = parse_graph(graph.text);
    std::set<Path>      seen;
    std::vector<Path>   closed;
    std::vector<EdgeId> stack;
    std::function<void(VertexId, VertexId)> walk = [&](VertexId start,
                                                       VertexId at) {
      if (stack.size() == max_len) {
        return;
      }
      for (EdgeId e : g.out_edges(at)) {
        stack.push_back(e);
        VertexId next = g.edge(e).dst;
        if (next == start) {
          Path c = canonical_rotation(g, make_path(g, stack));
          if (seen.insert(c).second) {
            closed.push_back(c);
          }
        }
        walk(start, next);
        stack.pop_back();
      }
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      walk(v, v);
    }
    std::sort(closed.begin(), closed.end(), [&](Path const& a, Path const& b) {
      return deterministic_less(g, a, b);
    });
    json list = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      list.push_back(json{{"kind", "vertex"}, {"word", g.vertex_name(v)},
                          {"label", g.vertex_name(v)}});
    }
    for (Path const& c : closed) {
      EqClassId plain{EqClassId::Kind::Cycle, c};
      EqClassId star{EqClassId::Kind::CycleStar, c};
      list.push_back(json{{"kind", "cycle"}, {"word", to_string(g, c)},
                          {"label", to_string(g, plain)}});
      list.push_back(json{{"kind", "cycle_star"}, {"word", to_string(g, c)},
                          {"label", to_string(g, star)}});
    }
    json res{{"max_len", max_len}, {"classes", list},
             {"closed_path_classes", closed.size()}};
    return envelope("classes", {graph}, res);
  }

  json eval(InputFile const& graph, EvalOptions const& opts) {
    auto g = std::make_shared<Graph const>(parse_graph(graph.text));
    std::vector<InputFile> inputs{graph};
    std::optional<TraceSpec> spec;
    if (opts.faithful == opts.spec.has_value()) {
      throw InputError("eval needs exactly one of --spec and --faithful");
    }
    if (opts.spec) {
      inputs.push_back(*opts.spec);
      spec = parse_trace_spec(opts.spec->text, *g);
    } else {
      spec = faithful_trace_spec(*g, opts.field);
    }
    if (opts.mode == AlgebraMode::Leavitt) {
      auto check = validate_trace_spec(*g, *spec);
      if (!check.ok) {
        throw DiagnosedFailure(
            "trace spec violates delta(v) = sum delta(r(e)) at "
                + std::to_string(check.violating.size()) + " vertex(es)",
            check.diagnostics);
      }
    }
    auto           ctx   = make_context(g, spec->field(), opts.mode);
    AlgebraElement x     = parse_element(opts.expr, ctx);
    FieldElem      value = trace_eval(*spec, x);
    json           res{{"expression", opts.expr},
                       {"mode", to_string(opts.mode)},
                       {"field", to_string(spec->field().field)},
                       {"involution", to_string(spec->field().inv)},
                       {"element", to_string(x)},
                       {"value", to_string(value)}};
    return envelope("eval", inputs, res);
  }

  json decompose(InputFile const& graph) {
    Graph g = parse_graph(graph.text);
    if (auto w = find_exit(g)) {
      throw DiagnosedFailure(
          "graph is not no-exit; L_K(E) has no block decomposition",
          {"cycle " + to_string(g, w->cycle) + " has exit "
           + g.edge(w->exit).name});
    }
    Decomposition dec = decompose(g);
    json sink_blocks  = json::array();
    for (auto const& b : dec.sink_blocks) {
      sink_blocks.push_back(json{{"sink", g.vertex_name(b.sink)},
                                 {"size", b.paths.size()},
                                 {"paths", path_strings(g, b.paths.paths())}});
    }
    json cycle_blocks = json::array();
    for (auto const& b : dec.cycle_blocks) {
      cycle_blocks.push_back(json{{"cycle", to_string(g, b.cycle)},
                                  {"base", g.vertex_name(b.base)},
                                  {"size", b.paths.size()},
                                  {"paths", path_strings(g, b.paths.paths())}});
    }
    json res{{"sink_blocks", sink_blocks}, {"cycle_blocks", cycle_blocks}};
    return envelope("decompose", {graph}, res);
  }

  json sg(InputFile const& cayley, std::string const& subcommand) {
    FiniteSemigroup G    = parse_cayley(cayley.text);
    SimPartition    part = sim_classes(G);
    json            res;
    res["size"] = G.size();
    res["zero"] = G.label(G.zero());
    res["nonzero_class_count"] = part.nonzero_class_count();
    if (subcommand == "classes") {
      json cls = json::array();
      for (ClassId c = 0; c < part.classes.size(); ++c) {
        std::vector<std::string> members;
        for (SgIndex a : part.classes[c]) {
          members.push_back(G.label(a));
        }
        cls.push_back(json{{"id", c}, {"zero", c == part.zero_class},
                           {"members", members}});
      }
      res["classes"] = cls;
    } else if (subcommand == "minimal") {
      // Coordinates of the target free module are the nonzero classes, in
      // class-id order.
      std::vector<ClassId> coords;
      for (ClassId c = 0; c < part.classes.size(); ++c) {
        if (c != part.zero_class) {
          coords.push_back(c);
        }
      }
      auto d     = minimal_trace(G, part);
      json table = json::object();
      for (SgIndex a = 0; a < G.size(); ++a) {
        json vec = json::object();
        for (auto const& [c, x] : d.values[a]) {
          vec[std::to_string(c)] = to_string(x);
        }
        table[G.label(a)] = vec;
      }
      res["dimension"]   = coords.size();
      res["coordinates"] = coords;
      res["values"]      = table;
      res["is_minimal"]  = is_minimal_sg_trace(G, d);
    } else if (subcommand == "normalized") {
      res["admits_normalized_minimal"] = admits_normalized_minimal(G);
    } else {
      throw InputError("unknown sg subcommand '" + subcommand
                       + "' (expected classes, minimal or normalized)");
    }
    return envelope("sg " + subcommand, {cayley}, res);
  }

  json error_report(std::string const&              command,
                    std::string const&              kind,
                    std::string const&              message,
                    std::vector<std::string> const& diagnostics) {
    return json{{"command", command},
                {"error", json{{"kind", kind}, {"message", message}}},
                {"diagnostics", diagnostics}};
  }

  std::pair<json, int> guarded(std::string const&           command,
                               std::function<json()> const& body) {
    try {
      return {body(), 0};
    } catch (DiagnosedFailure const& e) {
      return {error_report(command, "precondition", e.what(), e.diagnostics),
              3};
    } catch (PreconditionError const& e) {
      return {error_report(command, "precondition", e.what()), 3};
    } catch (InputError const& e) {
      return {error_report(command, "input", e.what()), 2};
    }
  }

  std::string dump(json const& report) {
    return report.dump(2) + "\n";
  }

}  // namespace lpa::report
