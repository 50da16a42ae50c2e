#include "lpa/traces.hpp"

#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

  ////////////////////////////////////////////////////////////////////////
  // TraceSpec
  ////////////////////////////////////////////////////////////////////////

  TraceSpec::TraceSpec(Graph const& g, FieldConfig field)
      : _field(field), _vertex(g.vertex_count(), FieldElem().in_field(field.field)) {}

  FieldElem TraceSpec::value(EqClassId const& c) const {
    auto lookup = [&](std::map<Path, FieldElem> const& table) {
      auto it = table.find(c.word);
      return it == table.end() ? FieldElem().in_field(_field.field)
                               : it->second;
    };
    switch (c.kind) {
      case EqClassId::Kind::Vertex:
        return _vertex.at(c.word.src);
      case EqClassId::Kind::Cycle:
        return lookup(_cycle);
      case EqClassId::Kind::CycleStar:
        return lookup(_cycle_star);
      case EqClassId::Kind::Zero:
        break;
    }
    return FieldElem().in_field(_field.field);
  }

  void TraceSpec::set_vertex(VertexId v, FieldElem const& value) {
    _vertex.at(v) = value.in_field(_field.field);
  }

  void TraceSpec::set(Graph const& g, EqClassId const& c, FieldElem const& v) {
    FieldElem value = v.in_field(_field.field);
    if (c.kind == EqClassId::Kind::Zero) {
      throw InputError("the zero class always has value 0");
    }
    if (c.kind == EqClassId::Kind::Vertex) {
      if (!c.word.is_vertex()) {
        throw InputError("vertex class must wrap a vertex");
      }
      set_vertex(c.word.src, value);
      return;
    }
    if (c.word.is_vertex() || !(canonical_rotation(g, c.word) == c.word)) {
      throw InputError("cycle keys must be canonical nonvertex closed paths");
    }
    auto& table = c.kind == EqClassId::Kind::Cycle ? _cycle : _cycle_star;
    if (value.is_zero()) {
      table.erase(c.word);
    } else {
      table[c.word] = value;
    }
  }

  TraceSpec parse_trace_spec(std::string_view text, Graph const& g) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        lineno = 0;
    FieldConfig        field;
    bool               body_started = false;
    struct Entry {
      std::size_t              line;
      std::vector<std::string> words;
    };
    std::vector<Entry> entries;
    auto fail = [&](std::size_t at, std::string const& msg) {
      throw InputError("line " + std::to_string(at) + ": " + msg);
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> words;
      for (std::string w; ls >> w;) {
        words.push_back(w);
      }
      if (words.empty()) {
        continue;
      }
      try {
        if (words[0] == "field" || words[0] == "involution") {
          if (words.size() != 2) {
            fail(lineno, "expected '" + words[0] + " <value>'");
          }
          if (body_started) {
            fail(lineno, words[0] + " must precede vertex and cycle lines");
          }
          if (words[0] == "field") {
            field.field = parse_field_tag(words[1]);
          } else {
            field.inv = parse_involution(words[1]);
          }
        } else if (words[0] == "vertex" || words[0] == "cycle") {
          body_started = true;
          entries.push_back({lineno, words});
        } else {
          fail(lineno, "unknown directive '" + words[0] + "'");
        }
      } catch (InputError const& e) {
        std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) {
          throw;
        }
        fail(lineno, msg);
      }
    }
    TraceSpec spec(g, field);
    for (auto const& [at, words] : entries) {
      try {
        if (words[0] == "vertex") {
          if (words.size() != 3) {
            fail(at, "expected 'vertex <id> <scalar>'");
          }
          auto v = g.find_vertex(words[1]);
          if (!v) {
            fail(at, "unknown vertex '" + words[1] + "'");
          }
          spec.set_vertex(*v, parse_scalar(words[2]));
        } else {
          if (words.size() != 3 && words.size() != 4) {
            fail(at, "expected 'cycle <edge-path> <scalar> [<star-scalar>]'");
          }
          Path t = parse_path(g, words[1]);
          if (t.is_vertex() || !t.is_closed()) {
            fail(at, "'" + words[1] + "' is not a closed edge path");
          }
          Path key = canonical_rotation(g, t);
          spec.set(g, EqClassId{EqClassId::Kind::Cycle, key},
                   parse_scalar(words[2]));
          if (words.size() == 4) {
            spec.set(g, EqClassId{EqClassId::Kind::CycleStar, key},
                     parse_scalar(words[3]));
          }
        }
      } catch (InputError const& e) {
        std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) {
          throw;
        }
        fail(at, msg);
      }
    }
    return spec;
  }

  std::string format_trace_spec(Graph const& g, TraceSpec const& spec) {
    std::ostringstream out;
    out << "field " << to_string(spec.field().field) << "\n";
    out << "involution " << to_string(spec.field().inv) << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      out << "vertex " << g.vertex_name(v) << " "
          << to_string(spec.vertex_values()[v]) << "\n";
    }
    std::map<Path, std::pair<FieldElem, FieldElem>> cyc;
    for (auto const& [t, x] : spec.cycle_values()) {
      cyc[t].first = x;
    }
    for (auto const& [t, x] : spec.cycle_star_values()) {
      cyc[t].second = x;
    }
    for (auto const& [t, xy] : cyc) {
      out << "cycle " << to_string(g, t) << " " << to_string(xy.first) << " "
          << to_string(xy.second) << "\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation and the vertex system
  ////////////////////////////////////////////////////////////////////////

  SpecValidation validate_trace_spec(Graph const& g, TraceSpec const& spec) {
    SpecValidation out;
    auto const&    val = spec.vertex_values();
    for (VertexId v : regular_vertices(g)) {
      FieldElem sum;
      for (EdgeId e : g.out_edges(v)) {
        sum += val[g.edge(e).dst];
      }
      if (!(sum == val[v])) {
        out.ok = false;
        out.violating.push_back(v);
        out.diagnostics.push_back(
            "vertex " + g.vertex_name(v) + ": delta(v) = " + to_string(val[v])
            + " but the sum over outgoing edges of delta(r(e)) is "
            + to_string(sum));
      }
    }
    return out;
  }

  VertexSolutionSpace vertex_trace_space(Graph const& g) {
    std::size_t const n = g.vertex_count();
    DenseMatrix       system;
    for (VertexId v : regular_vertices(g)) {
      std::vector<FieldElem> row(n);
      row[v] += FieldElem(1);
      for (EdgeId e : g.out_edges(v)) {
        row[g.edge(e).dst] -= FieldElem(1);
      }
      system.push_back(std::move(row));
    }
    VertexSolutionSpace out;
    out.basis = nullspace(std::move(system), n);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  FieldElem trace_eval(TraceSpec const& spec, AlgebraElement const& x) {
    Graph const& g = x.graph();
    if (!(x.context()->field == spec.field())) {
      throw InputError("element and trace spec use different fields");
    }
    if (spec.vertex_values().size() != g.vertex_count()) {
      throw InputError("trace spec belongs to a different graph");
    }
    if (x.mode() == AlgebraMode::Leavitt) {
      auto check = validate_trace_spec(g, spec);
      if (!check.ok) {
        throw PreconditionError(
            "trace spec does not descend to the Leavitt algebra: "
            + check.diagnostics.front());
      }
    }
    FieldElem total = FieldElem().in_field(spec.field().field);
    for (auto const& [m, c] : x.terms()) {
      total += c * spec.value(classify_eq(g, m));
    }
    return total;
  }

  SparseVec<EqClassId> minimal_trace_cohn(AlgebraElement const& x) {
    SparseVec<EqClassId> out;
    for (auto const& [m, c] : x.terms()) {
      EqClassId cls = classify_eq(x.graph(), m);
      if (!cls.is_zero()) {
        axpy(out, c, SparseVec<EqClassId>{{cls, FieldElem(1)}});
      }
    }
    return out;
  }

  MinimalityVerdict
  is_minimal_cohn(Graph const&                                 g,
                  TraceSpec const&                             spec,
                  std::optional<std::vector<EqClassId>> const& classes) {
    std::vector<EqClassId> list;
    MinimalityVerdict      out;
    if (classes) {
      list     = *classes;
      out.note = "verdict relative to the " + std::to_string(list.size())
                 + " supplied classes";
    } else {
      if (!cycles(g).empty()) {
        throw PreconditionError(
            "graph has cycles, so infinitely many ~-classes; supply the "
            "classes to test");
      }
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        list.push_back(EqClassId{EqClassId::Kind::Vertex, Path::vertex(v)});
      }
      out.note = "acyclic graph: all nonzero classes are vertex classes";
    }
    SparseEchelon<int> span;
    out.minimal = true;
    for (auto const& c : list) {
      if (c.is_zero()) {
        continue;
      }
      SparseVec<int> v;
      FieldElem      x = spec.value(c);
      if (!x.is_zero()) {
        v.emplace(0, x);
      }
      if (!span.insert(v)) {
        out.minimal = false;
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Positivity and faithfulness
  ////////////////////////////////////////////////////////////////////////

  std::vector<ScreenViolation> positivity_screen(Graph const&     g,
                                                 TraceSpec const& spec) {
    FieldConfig const cfg = spec.field();
    if (!cfg.positive_definite()) {
      throw PreconditionError("positivity screen needs a positive definite "
                              "involution");
    }
    auto const&                  val = spec.vertex_values();
    std::vector<ScreenViolation> out;
    auto name = [&](VertexId v) { return g.vertex_name(v); };

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!is_nonnegative(val[v], cfg)) {
        out.push_back({1, "t(" + name(v) + ") = " + to_string(val[v])
                              + " is not >= 0"});
      }
    }
    auto reach = reachability(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (v == w || !reach[v][w]) {
          continue;
        }
        if (!is_nonnegative(val[v] - val[w], cfg)) {
          out.push_back({2, "path from " + name(v) + " to " + name(w)
                                + " but t(" + name(v) + ") = "
                                + to_string(val[v]) + " is not >= t("
                                + name(w) + ") = " + to_string(val[w])});
        }
      }
    }
    for (VertexId v : regular_vertices(g)) {
      // The binding subset of edges is the one whose ranges have positive
      // values; nonreal values are already reported under (1).
      FieldElem worst;
      bool      real = true;
      for (EdgeId e : g.out_edges(v)) {
        FieldElem const& x = val[g.edge(e).dst];
        real               = real && x.is_real();
        if (x.is_real() && x.re().sign() > 0) {
          worst += x;
        }
      }
      if (real && !is_nonnegative(val[v] - worst, cfg)) {
        out.push_back({3, "t(" + name(v) + ") = " + to_string(val[v])
                              + " is below the sum " + to_string(worst)
                              + " over its outgoing edges"});
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!is_positive_nonzero(val[v], cfg)) {
        out.push_back({4, "t(" + name(v) + ") = " + to_string(val[v])
                              + " is not > 0"});
      }
    }
    return out;
  }

  PositivityProbe positivity_probe(TraceSpec const&      spec,
                                   AlgebraElement const& x) {
    FieldElem value = trace_eval(spec, alg_mul(x, alg_star(x)));
    return {value, value.is_real() && value.re().sign() >= 0};
  }

  FaithfulVerdict faithful_trace_exists(Graph const& g, FieldConfig field) {
    if (!field.positive_definite()) {
      throw PreconditionError(
          "field " + to_string(field.field) + " with involution "
          + to_string(field.inv)
          + " is not positive definite; the faithful-trace criterion does "
            "not apply");
    }
    FaithfulVerdict out;
    out.witness = find_exit(g);
    out.exists  = !out.witness.has_value();
    if (out.exists) {
      out.reason = "no cycle has an exit";
    } else {
      out.reason = "cycle " + to_string(g, out.witness->cycle) + " has exit "
                   + g.edge(out.witness->exit).name;
    }
    return out;
  }

  PullBackTrace build_faithful_trace(Graph const& g, FieldConfig field) {
    auto verdict = faithful_trace_exists(g, field);
    if (!verdict.exists) {
      throw PreconditionError("no faithful trace: " + verdict.reason);
    }
    return pull_back_trace(decompose(g), field);
  }

  TraceSpec faithful_trace_spec(Graph const& g, FieldConfig field) {
    auto      trace = build_faithful_trace(g, field);
    TraceSpec spec(g, field);
    std::vector<long> count(g.vertex_count(), 0);
    auto const&       dec = trace.decomposition();
    for (auto const& b : dec.sink_blocks) {
      for (Path const& p : b.paths.paths()) {
        ++count[p.src];
      }
    }
    for (auto const& b : dec.cycle_blocks) {
      for (Path const& p : b.paths.paths()) {
        ++count[p.src];
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      spec.set_vertex(v, FieldElem(count[v]));
    }
    return spec;
  }

  ScalarCentralMap kaplansky_trace(FiniteSemigroup const& g) {
    auto e = group_identity(g);
    if (!e) {
      throw InputError("semigroup is not a group with zero adjoined");
    }
    ScalarCentralMap d;
    d.values.assign(g.size(), FieldElem());
    d.values[*e] = FieldElem(1);
    return d;
  }

  ScalarCentralMap augmentation_trace(FiniteSemigroup const& g) {
    if (!group_identity(g)) {
      throw InputError("semigroup is not a group with zero adjoined");
    }
    ScalarCentralMap d;
    d.values.assign(g.size(), FieldElem(1));
    d.values[g.zero()] = FieldElem();
    return d;
  }

}  // namespace lpa
