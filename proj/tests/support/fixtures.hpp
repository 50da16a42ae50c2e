#ifndef LPA_TESTS_FIXTURES_HPP_
#define LPA_TESTS_FIXTURES_HPP_

// Shared graph catalog and random generators for the test suites. Sampling
// seeds come from LPA_SEED when set.

#include <cstdlib>
#include <memory>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "lpa/gis.hpp"
#include "lpa/graphs.hpp"
#include "lpa/path_algebras.hpp"
#include "lpa/scalars.hpp"
#include "lpa/traces.hpp"

namespace lpa::testing {

  inline std::uint32_t seed(std::uint32_t salt = 0) {
    std::uint32_t base = 20240611;
    if (char const* env = std::getenv("LPA_SEED")) {
      base = static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
    }
    return base ^ (salt * 0x9E3779B9u);
  }

  struct NamedGraph {
    std::string                  name;
    std::shared_ptr<Graph const> graph;
    bool                         no_exit;
  };

  inline std::shared_ptr<Graph const> graph_from(std::string const& text) {
    return std::make_shared<Graph const>(parse_graph(text));
  }

  // Ten small graphs covering acyclic, cyclic, exit and union cases.
  inline std::vector<NamedGraph> catalog() {
    return {
        {"line", graph_from("v a\nv b\ne f a b\n"), true},
        {"path3", graph_from("v a\nv b\nv c\ne f a b\ne g b c\n"), true},
        {"tree", graph_from("v a\nv b\nv c\ne f a b\ne g a c\n"), true},
        {"parallel", graph_from("v a\nv b\ne f a b\ne g a b\n"), true},
        {"one_loop", graph_from("v v\ne e v v\n"), true},
        {"two_cycle", graph_from("v v\nv w\ne e1 v w\ne e2 w v\n"), true},
        {"tail_into_loop", graph_from("v u\nv v\ne t u v\ne e v v\n"), true},
        {"loop_with_exit", graph_from("v v\nv w\ne e v v\ne f v w\n"), false},
        {"rose2", graph_from("v v\ne e v v\ne f v v\n"), false},
        {"line_plus_loop",
         graph_from("v a\nv b\nv w\ne f a b\ne l w w\n"), true},
    };
  }

  inline std::vector<NamedGraph> gis_corpus() {
    auto all = catalog();
    std::vector<NamedGraph> out;
    for (auto const& ng : all) {
      if (ng.name == "line" || ng.name == "path3" || ng.name == "one_loop"
          || ng.name == "two_cycle" || ng.name == "rose2"
          || ng.name == "loop_with_exit") {
        out.push_back(ng);
      }
    }
    return out;
  }

  inline NamedGraph find_graph(std::string const& name) {
    for (auto const& ng : catalog()) {
      if (ng.name == name) {
        return ng;
      }
    }
    throw std::runtime_error("no fixture graph " + name);
  }

  // Random path ending at `w` of length <= max_len, built backwards.
  inline Path random_path_into(Graph const&  g,
                               VertexId      w,
                               std::size_t   max_len,
                               std::mt19937& rng) {
    std::size_t         len = std::uniform_int_distribution<std::size_t>(
        0, max_len)(rng);
    std::vector<EdgeId> rev;
    VertexId            head = w;
    for (std::size_t k = 0; k < len; ++k) {
      auto const& in = g.in_edges(head);
      if (in.empty()) {
        break;
      }
      EdgeId e = in[std::uniform_int_distribution<std::size_t>(
          0, in.size() - 1)(rng)];
      rev.push_back(e);
      head = g.edge(e).src;
    }
    if (rev.empty()) {
      return Path::vertex(w);
    }
    return make_path(g, std::vector<EdgeId>(rev.rbegin(), rev.rend()));
  }

  inline Monomial random_monomial(Graph const&  g,
                                  std::size_t   max_len,
                                  std::mt19937& rng) {
    VertexId w = std::uniform_int_distribution<VertexId>(
        0, static_cast<VertexId>(g.vertex_count() - 1))(rng);
    return Monomial{random_path_into(g, w, max_len, rng),
                    random_path_into(g, w, max_len, rng)};
  }

  // Nonzero element of G_E most of the time; zero with probability 1/10.
  inline GisElement random_gis(Graph const&  g,
                               std::size_t   max_len,
                               std::mt19937& rng) {
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
      return std::nullopt;
    }
    return random_monomial(g, max_len, rng);
  }

  inline FieldElem random_scalar(FieldTag field, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Rational                            re(num(rng), den(rng));
    if (field == FieldTag::Q) {
      return FieldElem(re);
    }
    return FieldElem(re, Rational(num(rng), den(rng)));
  }

  inline FieldElem random_nonzero_scalar(FieldTag field, std::mt19937& rng) {
    FieldElem c;
    while (c.is_zero()) {
      c = random_scalar(field, rng);
    }
    return c;
  }

  // Raw terms (possibly non-canonical) with up to `terms` monomials.
  inline AlgebraElement::Terms random_raw_terms(Graph const&  g,
                                                FieldTag      field,
                                                std::size_t   terms,
                                                std::size_t   max_len,
                                                std::mt19937& rng) {
    AlgebraElement::Terms out;
    std::size_t           n = std::uniform_int_distribution<std::size_t>(
        1, terms)(rng);
    for (std::size_t k = 0; k < n; ++k) {
      FieldElem c = random_nonzero_scalar(field, rng);
      Monomial  m = random_monomial(g, max_len, rng);
      auto [it, inserted] = out.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          out.erase(it);
        }
      }
    }
    return out;
  }

  inline AlgebraElement random_element(ContextPtr const& ctx,
                                       std::mt19937&     rng,
                                       std::size_t       terms   = 3,
                                       std::size_t       max_len = 3) {
    AlgebraBuilder b(ctx);
    for (auto const& [m, c] :
         random_raw_terms(*ctx->graph, ctx->field.field, terms, max_len, rng)) {
      b.add(m, c);
    }
    return std::move(b).finish();
  }

  inline AlgebraElement random_nonzero_element(ContextPtr const& ctx,
                                               std::mt19937&     rng,
                                               std::size_t       terms = 3,
                                               std::size_t       max_len = 3) {
    while (true) {
      auto x = random_element(ctx, rng, terms, max_len);
      if (!x.is_zero()) {
        return x;
      }
    }
  }


  // Canonical nonvertex closed paths of length <= max_len.
  inline std::vector<Path> closed_classes(Graph const& g, std::size_t max_len) {
    std::set<Path>    seen;
    std::vector<Path> frontier;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      frontier.push_back(Path::vertex(v));
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Path> next;
      for (Path const& p : frontier) {
        for (EdgeId e : g.out_edges(p.rng)) {
          Path q = p;
          q.edges.push_back(e);
          q.rng = g.edge(e).dst;
          if (q.is_closed()) {
            seen.insert(canonical_rotation(g, q));
          }
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  // Vertex values from a random combination of the solution space basis,
  // random values on short cycle classes.
  inline TraceSpec random_valid_spec(Graph const&  g,
                                     FieldConfig   field,
                                     std::mt19937& rng) {
    TraceSpec              spec(g, field);
    std::vector<FieldElem> vals(g.vertex_count());
    for (auto const& row : vertex_trace_space(g).basis) {
      FieldElem c = random_scalar(field.field, rng);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        vals[v] += c * row[v];
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      spec.set_vertex(v, vals[v]);
    }
    for (Path const& c : closed_classes(g, 4)) {
      spec.set(g, EqClassId{EqClassId::Kind::Cycle, c},
               random_scalar(field.field, rng));
      spec.set(g, EqClassId{EqClassId::Kind::CycleStar, c},
               random_scalar(field.field, rng));
    }
    return spec;
  }

}  // namespace lpa::testing

#endif  // LPA_TESTS_FIXTURES_HPP_
