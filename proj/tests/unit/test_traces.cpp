#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "lpa/errors.hpp"
#include "lpa/traces.hpp"

using namespace lpa;
using lpa::testing::find_graph;

namespace {

  FieldConfig const q_id{FieldTag::Q, Involution::identity};
  FieldConfig const qi_conj{FieldTag::Qi, Involution::conjugation};
  FieldConfig const qi_id{FieldTag::Qi, Involution::identity};

  TraceSpec one_loop_example(Graph const& g) {
    return parse_trace_spec(
        "field Qi\ninvolution conjugation\nvertex v 1\ncycle e i i\n", g);
  }

  TraceSpec vertex_spec(Graph const& g, FieldConfig field,
                        std::vector<long> const& vals) {
    TraceSpec spec(g, field);
    for (VertexId v = 0; v < vals.size(); ++v) {
      spec.set_vertex(v, FieldElem(vals[v]));
    }
    return spec;
  }

  // Regular vertices where delta(v) differs from the edge sum, by direct
  // summation.
  std::vector<VertexId> violators(Graph const& g, TraceSpec const& spec) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.out_edges(v).empty()) {
        continue;
      }
      FieldElem sum;
      for (EdgeId e : g.out_edges(v)) {
        sum += spec.vertex_values()[g.edge(e).dst];
      }
      if (!(sum == spec.vertex_values()[v])) {
        out.push_back(v);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("trace spec files") {
  auto loop = find_graph("one_loop").graph;
  auto spec = one_loop_example(*loop);
  Path e    = parse_path(*loop, "e");
  CHECK(spec.value(EqClassId{EqClassId::Kind::Cycle, e}) == FieldElem::i());
  CHECK(spec.value(EqClassId{EqClassId::Kind::CycleStar, e}) == FieldElem::i());
  CHECK(spec.value(EqClassId::zero()).is_zero());

  auto again = parse_trace_spec(format_trace_spec(*loop, spec), *loop);
  CHECK(again.vertex_values() == spec.vertex_values());
  CHECK(again.cycle_values() == spec.cycle_values());
  CHECK(again.cycle_star_values() == spec.cycle_star_values());

  auto two = find_graph("two_cycle").graph;
  auto rot = parse_trace_spec("field Q\nvertex v 1\nvertex w 1\ncycle e2/e1 3\n",
                              *two);
  CHECK(rot.value(EqClassId{EqClassId::Kind::Cycle, parse_path(*two, "e1/e2")})
        == FieldElem(3));
  CHECK(rot.value(EqClassId{EqClassId::Kind::CycleStar,
                            parse_path(*two, "e1/e2")})
            .is_zero());

  CHECK_THROWS_AS(parse_trace_spec("field Q\nvertex v i\n", *loop), InputError);
  CHECK_THROWS_AS(parse_trace_spec("field Q\nvertex x 1\n", *loop), InputError);
  CHECK_THROWS_AS(parse_trace_spec("field Q\ncycle v 1\n", *loop), InputError);
  CHECK_THROWS_AS(parse_trace_spec("bogus\n", *loop), InputError);
}

TEST_CASE("validate_trace_spec examples") {
  auto loop = find_graph("one_loop").graph;
  CHECK(validate_trace_spec(*loop, vertex_spec(*loop, q_id, {1})).ok);

  auto rose = find_graph("rose2").graph;
  auto bad  = validate_trace_spec(*rose, vertex_spec(*rose, q_id, {1}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violating == std::vector<VertexId>{0});
  CHECK(bad.diagnostics.front().find("vertex v") != std::string::npos);

  auto line = find_graph("line").graph;
  for (long c : {-3L, 0L, 7L}) {
    CHECK(validate_trace_spec(*line, vertex_spec(*line, q_id, {c, c})).ok);
  }
  CHECK_FALSE(validate_trace_spec(*line, vertex_spec(*line, q_id, {1, 2})).ok);
}

TEST_CASE("vertex_trace_space examples") {
  CHECK(vertex_trace_space(*find_graph("rose2").graph).dimension() == 0);
  CHECK(vertex_trace_space(*find_graph("one_loop").graph).dimension() == 1);
  auto line  = find_graph("line").graph;
  auto space = vertex_trace_space(*line);
  REQUIRE(space.dimension() == 1);
  CHECK(space.basis[0][0] == space.basis[0][1]);
  CHECK_FALSE(space.basis[0][0].is_zero());
  // Sinks are free, everything else is determined by them.
  CHECK(vertex_trace_space(*find_graph("tree").graph).dimension() == 2);
  CHECK(vertex_trace_space(*find_graph("line_plus_loop").graph).dimension()
        == 2);
}

TEST_CASE("trace_eval examples") {
  auto loop = find_graph("one_loop").graph;
  auto spec = one_loop_example(*loop);
  auto ctx  = make_context(loop, qi_conj, AlgebraMode::Leavitt);
  auto x    = parse_element("v + e", ctx);
  CHECK(trace_eval(spec, x * alg_star(x)) == FieldElem(2, 2));
  CHECK(to_string(trace_eval(spec, parse_element("v + e + e' + v", ctx)))
        == "2+2i");

  auto par  = find_graph("parallel").graph;
  auto pctx = make_context(par, q_id, AlgebraMode::Cohn);
  auto ps   = vertex_spec(*par, q_id, {5, 7});
  CHECK(trace_eval(ps, parse_element("f.g'", pctx)).is_zero());
  CHECK(trace_eval(ps, parse_element("f.f'", pctx)) == FieldElem(7));

  auto rose  = find_graph("rose2").graph;
  auto rctx  = make_context(rose, q_id, AlgebraMode::Leavitt);
  CHECK_THROWS_AS(trace_eval(vertex_spec(*rose, q_id, {1}),
                             parse_element("v", rctx)),
                  PreconditionError);
  CHECK_THROWS_AS(trace_eval(spec, parse_element("v", make_context(
                                                         loop, q_id,
                                                         AlgebraMode::Leavitt))),
                  InputError);
}

TEST_CASE("minimal_trace_cohn") {
  std::mt19937 rng(testing::seed(50));
  for (auto const& ng : testing::gis_corpus()) {
    auto ctx = make_context(ng.graph, qi_conj, AlgebraMode::Cohn);
    for (int k = 0; k < 40; ++k) {
      auto x = testing::random_element(ctx, rng, 3, 2);
      auto y = testing::random_element(ctx, rng, 3, 2);
      CHECK(minimal_trace_cohn(alg_commutator(x, y)).empty());
    }
  }
  auto line = find_graph("line").graph;
  auto ctx  = make_context(line, q_id, AlgebraMode::Cohn);
  EqClassId a{EqClassId::Kind::Vertex, Path::vertex(0)};
  EqClassId b{EqClassId::Kind::Vertex, Path::vertex(1)};
  CHECK(minimal_trace_cohn(parse_element("b", ctx))
        == SparseVec<EqClassId>{{b, FieldElem(1)}});
  // f f^* lies in the class of r(f) = b, so ff^* - b is a commutator...
  CHECK(minimal_trace_cohn(parse_element("f.f' - b", ctx)).empty());
  // ...while a - b is not.
  CHECK(minimal_trace_cohn(parse_element("a - b", ctx))
        == SparseVec<EqClassId>{{a, FieldElem(1)}, {b, FieldElem(-1)}});
}

TEST_CASE("is_minimal_cohn examples") {
  auto single = testing::graph_from("v v\n");
  CHECK(is_minimal_cohn(*single, vertex_spec(*single, q_id, {1})).minimal);
  auto pair = testing::graph_from("v v\nv w\n");
  CHECK_FALSE(is_minimal_cohn(*pair, vertex_spec(*pair, q_id, {1, 1})).minimal);
  auto line = find_graph("line").graph;
  CHECK_FALSE(is_minimal_cohn(*line, vertex_spec(*line, q_id, {1, 1})).minimal);

  auto loop = find_graph("one_loop").graph;
  CHECK_THROWS_AS(is_minimal_cohn(*loop, vertex_spec(*loop, q_id, {1})),
                  PreconditionError);
  std::vector<EqClassId> only_v{{EqClassId::Kind::Vertex, Path::vertex(0)}};
  CHECK(is_minimal_cohn(*loop, vertex_spec(*loop, q_id, {1}), only_v).minimal);
}

TEST_CASE("positivity screen and probe") {
  auto loop = find_graph("one_loop").graph;
  CHECK(positivity_screen(*loop, vertex_spec(*loop, q_id, {1})).empty());
  auto neg = positivity_screen(*loop, vertex_spec(*loop, q_id, {-1}));
  REQUIRE_FALSE(neg.empty());
  CHECK(neg.front().condition == 1);

  auto example = one_loop_example(*loop);
  CHECK(positivity_screen(*loop, example).empty());
  auto ctx   = make_context(loop, qi_conj, AlgebraMode::Leavitt);
  auto probe = positivity_probe(example, parse_element("v + e", ctx));
  CHECK(probe.value == FieldElem(2, 2));
  CHECK_FALSE(probe.positive);

  auto p3 = find_graph("path3").graph;
  auto v2 = positivity_screen(*p3, vertex_spec(*p3, q_id, {1, 2, 2}));
  CHECK(std::any_of(v2.begin(), v2.end(),
                    [](ScreenViolation const& s) { return s.condition == 2; }));
  auto tree = find_graph("tree").graph;
  auto v3   = positivity_screen(*tree, vertex_spec(*tree, q_id, {1, 1, 1}));
  CHECK(std::any_of(v3.begin(), v3.end(),
                    [](ScreenViolation const& s) { return s.condition == 3; }));
  auto v4 = positivity_screen(*tree, vertex_spec(*tree, q_id, {0, 0, 0}));
  CHECK(std::any_of(v4.begin(), v4.end(),
                    [](ScreenViolation const& s) { return s.condition == 4; }));

  CHECK_THROWS_AS(positivity_screen(*loop, vertex_spec(*loop, qi_id, {1})),
                  PreconditionError);
}

TEST_CASE("faithful_trace_exists examples") {
  CHECK(faithful_trace_exists(*find_graph("one_loop").graph, qi_conj).exists);
  CHECK(faithful_trace_exists(*find_graph("line").graph, q_id).exists);
  auto rose    = find_graph("rose2").graph;
  auto verdict = faithful_trace_exists(*rose, qi_conj);
  CHECK_FALSE(verdict.exists);
  REQUIRE(verdict.witness);
  CHECK(verdict.reason == "cycle e has exit f");
  CHECK_THROWS_AS(faithful_trace_exists(*rose, qi_id), PreconditionError);
  CHECK_THROWS_AS(build_faithful_trace(*rose, qi_conj), PreconditionError);
}

TEST_CASE("build_faithful_trace examples") {
  auto loop = find_graph("one_loop").graph;
  auto t    = build_faithful_trace(*loop, qi_conj);
  auto ctx  = make_context(loop, qi_conj, AlgebraMode::Leavitt);
  CHECK(t(parse_element("v", ctx)) == FieldElem(1));
  for (char const* power : {"e", "e/e", "e'", "(e/e/e)'"}) {
    CHECK(t(parse_element(power, ctx)).is_zero());
  }
  auto x = parse_element("v + e", ctx);
  CHECK(t(x * alg_star(x)) == FieldElem(2));

  auto line = find_graph("line").graph;
  auto tl   = build_faithful_trace(*line, q_id);
  auto lctx = make_context(line, q_id, AlgebraMode::Leavitt);
  CHECK(tl(parse_element("a", lctx)) == FieldElem(1));
  CHECK(tl(parse_element("f.f'", lctx)) == FieldElem(1));
  CHECK(tl(parse_element("b", lctx)) == FieldElem(1));
  CHECK(tl(parse_element("a + b", lctx)) == FieldElem(2));
  CHECK(tl(AlgebraElement::zero(lctx)).is_zero());
}

TEST_CASE("trace properties on random validated specs") {
  std::mt19937 rng(testing::seed(51));
  for (auto const& ng : testing::catalog()) {
    CAPTURE(ng.name);
    Graph const& g       = *ng.graph;
    auto         leavitt = make_context(ng.graph, qi_conj, AlgebraMode::Leavitt);
    for (int s = 0; s < 4; ++s) {
      TraceSpec spec = testing::random_valid_spec(g, qi_conj, rng);
      REQUIRE(validate_trace_spec(g, spec).ok);
      for (int k = 0; k < 20; ++k) {
        auto x = testing::random_element(leavitt, rng, 3, 2);
        auto y = testing::random_element(leavitt, rng, 3, 2);
        CHECK(trace_eval(spec, x * y) == trace_eval(spec, y * x));

        // Normalization invariance: the Cohn-style evaluation of raw terms
        // matches the evaluation of their normal form.
        auto      raw = testing::random_raw_terms(g, FieldTag::Qi, 4, 3, rng);
        FieldElem direct;
        for (auto const& [m, c] : raw) {
          direct += c * spec.value(classify_eq(g, m));
        }
        CHECK(trace_eval(spec, leavitt_normalize(leavitt, raw)) == direct);
      }

      // Round trip: evaluate on representatives, rebuild, compare.
      TraceSpec rebuilt(g, qi_conj);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        rebuilt.set_vertex(
            v, trace_eval(spec, AlgebraElement::vertex(leavitt, v)));
      }
      for (Path const& c : testing::closed_classes(g, 4)) {
        auto cyc = AlgebraElement::path(leavitt, c);
        rebuilt.set(g, EqClassId{EqClassId::Kind::Cycle, c},
                    trace_eval(spec, cyc));
        rebuilt.set(g, EqClassId{EqClassId::Kind::CycleStar, c},
                    trace_eval(spec, alg_star(cyc)));
      }
      for (int k = 0; k < 20; ++k) {
        auto x = testing::random_element(leavitt, rng, 3, 2);
        CHECK(trace_eval(rebuilt, x) == trace_eval(spec, x));
      }
    }
  }
}

TEST_CASE("invalid specs name the violating vertices") {
  std::mt19937 rng(testing::seed(52));
  for (auto const& ng : testing::catalog()) {
    Graph const& g       = *ng.graph;
    auto         regular = regular_vertices(g);
    if (regular.empty()) {
      continue;
    }
    CAPTURE(ng.name);
    for (int s = 0; s < 5; ++s) {
      TraceSpec spec = testing::random_valid_spec(g, q_id, rng);
      VertexId  v    = regular[s % regular.size()];
      spec.set_vertex(v, spec.vertex_values()[v] + FieldElem(1));
      auto check = validate_trace_spec(g, spec);
      CHECK(check.violating == violators(g, spec));
      CHECK(check.ok == check.violating.empty());
      // v's own equation moves by 1 on the left and by the number of loops
      // at v on the right.
      auto loops = std::count_if(
          g.out_edges(v).begin(), g.out_edges(v).end(),
          [&](EdgeId e) { return g.edge(e).dst == v; });
      bool named = std::find(check.violating.begin(), check.violating.end(), v)
                   != check.violating.end();
      CHECK(named == (loops != 1));
      if (named) {
        CHECK_FALSE(check.ok);
      }
    }
  }
}

TEST_CASE("faithful trace agrees with its spec form and is positive") {
  std::mt19937 rng(testing::seed(53));
  for (auto const& ng : testing::catalog()) {
    if (!ng.no_exit) {
      continue;
    }
    CAPTURE(ng.name);
    for (FieldConfig cfg : {q_id, qi_conj}) {
      auto t    = build_faithful_trace(*ng.graph, cfg);
      auto spec = faithful_trace_spec(*ng.graph, cfg);
      CHECK(validate_trace_spec(*ng.graph, spec).ok);
      CHECK(positivity_screen(*ng.graph, spec).empty());
      auto ctx = make_context(ng.graph, cfg, AlgebraMode::Leavitt);
      for (int k = 0; k < 30; ++k) {
        auto x = testing::random_nonzero_element(ctx, rng, 3, 2);
        CHECK(t(x) == trace_eval(spec, x));
        CHECK(is_positive_nonzero(t(x * alg_star(x)), cfg));
      }
    }
  }
}

TEST_CASE("Q(i) with the identity involution: a zero trace value on a positive element") {
  auto line  = find_graph("line").graph;
  auto ctx   = make_context(line, qi_id, AlgebraMode::Leavitt);
  auto x     = parse_element("a + i*b", ctx);
  auto xx    = x * alg_star(x);
  CHECK_FALSE(xx.is_zero());
  CHECK(xx == parse_element("a - b", ctx));
  for (auto const& row : vertex_trace_space(*line).basis) {
    TraceSpec spec(*line, qi_id);
    for (VertexId v = 0; v < line->vertex_count(); ++v) {
      spec.set_vertex(v, row[v]);
    }
    CHECK(trace_eval(spec, xx).is_zero());
  }
}
