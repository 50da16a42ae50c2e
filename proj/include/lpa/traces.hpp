#ifndef LPA_TRACES_HPP_
#define LPA_TRACES_HPP_

// Traces on contracted semigroup rings, Cohn path algebras and Leavitt path
// algebras.
//
// A K-linear trace on L_K(E) is determined by its restriction delta to G_E.
// delta is constant on ~-classes, which are the vertex classes and the
// classes of closed paths t and t^* up to rotation; everything else maps to
// zero. A table keyed by those classes therefore describes every trace on
// C_K(E), and it descends to L_K(E) exactly when
//
//   delta(v) = sum_{s(e) = v} delta(r(e))   for every regular vertex v.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/gis.hpp"
#include "lpa/graphs.hpp"
#include "lpa/linalg.hpp"
#include "lpa/path_algebras.hpp"
#include "lpa/scalars.hpp"
#include "lpa/semigroups.hpp"
#include "lpa/structure.hpp"

namespace lpa {

  // Values of delta on the ~-classes of G_E. Unlisted classes are 0; cycle
  // keys are canonical rotations of nonvertex closed paths.
  class TraceSpec {
   public:
    TraceSpec(Graph const& g, FieldConfig field);

    FieldConfig const& field() const {
      return _field;
    }
    std::vector<FieldElem> const& vertex_values() const {
      return _vertex;
    }
    std::map<Path, FieldElem> const& cycle_values() const {
      return _cycle;
    }
    std::map<Path, FieldElem> const& cycle_star_values() const {
      return _cycle_star;
    }

    FieldElem value(EqClassId const& c) const;
    // Throws InputError for keys that are not canonical in `g`, for the zero
    // class, and for values outside the field.
    void set(Graph const& g, EqClassId const& c, FieldElem const& v);
    void set_vertex(VertexId v, FieldElem const& value);

   private:
    FieldConfig               _field;
    std::vector<FieldElem>    _vertex;
    std::map<Path, FieldElem> _cycle;
    std::map<Path, FieldElem> _cycle_star;
  };

  // Lines: "field Q|Qi", "involution identity|conjugation",
  // "vertex <id> <scalar>", "cycle <edge-path> <scalar> [<star-scalar>]".
  // Cycle paths are canonicalized on load; an omitted star value is 0.
  TraceSpec   parse_trace_spec(std::string_view text, Graph const& g);
  std::string format_trace_spec(Graph const& g, TraceSpec const& spec);

  struct SpecValidation {
    bool                     ok = true;
    std::vector<VertexId>    violating;
    std::vector<std::string> diagnostics;
  };

  SpecValidation validate_trace_spec(Graph const& g, TraceSpec const& spec);

  struct VertexSolutionSpace {
    // Each row assigns a value to every vertex.
    std::vector<std::vector<FieldElem>> basis;

    std::size_t dimension() const {
      return basis.size();
    }
  };

  VertexSolutionSpace vertex_trace_space(Graph const& g);

  // sum a_m delta(class(m)). Leavitt elements require a validated spec
  // (PreconditionError otherwise).
  FieldElem trace_eval(TraceSpec const& spec, AlgebraElement const& x);

  // x -> sum a_m unit(class(m)); zero exactly on [C_K(E), C_K(E)].
  SparseVec<EqClassId> minimal_trace_cohn(AlgebraElement const& x);

  struct MinimalityVerdict {
    bool        minimal = false;
    std::string note;
  };

  // Independence of the spec's values over the nonzero ~-classes. Acyclic
  // graphs only have vertex classes; for cyclic graphs the caller supplies
  // the classes to test (PreconditionError otherwise) and the verdict is
  // relative to that list.
  MinimalityVerdict
  is_minimal_cohn(Graph const&                                 g,
                  TraceSpec const&                             spec,
                  std::optional<std::vector<EqClassId>> const& classes = {});

  struct ScreenViolation {
    int         condition;  // 1..4
    std::string detail;
  };

  // Necessary conditions on vertex values for a positive (1-3) or faithful
  // (4) trace:
  //   (1) delta(v) >= 0,
  //   (2) delta(v) >= delta(w) when a path runs from v to w,
  //   (3) delta(v) >= sum_i delta(r(e_i)) for distinct e_i leaving v,
  //   (4) delta(v) > 0.
  // Throws PreconditionError unless the field is positive definite.
  std::vector<ScreenViolation> positivity_screen(Graph const&     g,
                                                 TraceSpec const& spec);

  struct PositivityProbe {
    FieldElem value;     // t(x x^*)
    bool      positive;  // value is a nonnegative rational
  };

  // Evaluates t(x x^*) directly; a witness that a spec passing the screen
  // can still fail to be positive.
  PositivityProbe positivity_probe(TraceSpec const& spec,
                                   AlgebraElement const& x);

  struct FaithfulVerdict {
    bool                       exists = false;
    std::string                reason;
    std::optional<ExitWitness> witness;
  };

  // A faithful K-linear trace on L_K(E) exists iff E is no-exit. Refuses
  // (PreconditionError) fields whose involution is not positive definite.
  FaithfulVerdict faithful_trace_exists(Graph const& g, FieldConfig field);

  // The pull-back of the block traces; PreconditionError if none exists.
  PullBackTrace build_faithful_trace(Graph const& g, FieldConfig field);

  // The same trace as a spec: delta(v) counts the block family paths leaving
  // v, and every cycle class has value 0.
  TraceSpec faithful_trace_spec(Graph const& g, FieldConfig field);

  // Group rings G^0: delta(e) = 1 and 0 elsewhere, resp. delta(g) = 1 for
  // every g != 0. Throw InputError unless G \ {0} is a group.
  ScalarCentralMap kaplansky_trace(FiniteSemigroup const& g);
  ScalarCentralMap augmentation_trace(FiniteSemigroup const& g);

}  // namespace lpa

#endif  // LPA_TRACES_HPP_
