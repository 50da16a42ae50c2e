#ifndef LPA_PATH_ALGEBRAS_HPP_
#define LPA_PATH_ALGEBRAS_HPP_

// The Cohn path algebra C_K(E) (the contracted semigroup ring of G_E) and the
// Leavitt path algebra L_K(E) = C_K(E) / N, where N is generated by
// v - sum_{s(e)=v} e e^* for regular v.
//
// Leavitt elements are kept in a canonical basis. Each regular vertex v has a
// special outgoing edge f, and the relation is oriented as the rewrite rule
//
//   (p' f)(q' f)^*  ->  p' q'^* - sum_{s(e)=v, e != f} (p' e)(q' e)^*
//
// so a monomial is canonical unless both of its paths end in the same
// special edge. The rule strictly shrinks the redex, so normalization
// terminates, and it is linear in monomials, so the result does not depend on
// the order in which redexes are reduced.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/gis.hpp"
#include "lpa/graphs.hpp"
#include "lpa/scalars.hpp"

namespace lpa {

  enum class AlgebraMode { Cohn, Leavitt };

  std::string to_string(AlgebraMode m);
  AlgebraMode parse_mode(std::string_view text);

  class SpecialEdgeChoice {
   public:
    // The lexicographically least outgoing edge id at every regular vertex.
    static SpecialEdgeChoice least_id(Graph const& g);
    // The lexicographically greatest; a second valid choice for
    // cross-checks.
    static SpecialEdgeChoice greatest_id(Graph const& g);
    // Throws InputError unless each listed edge leaves its vertex and every
    // regular vertex is covered.
    static SpecialEdgeChoice from_edges(Graph const&               g,
                                        std::vector<EdgeId> const& edges);

    std::optional<EdgeId> at(VertexId v) const {
      return _edge_of.at(v);
    }
    bool is_special(Graph const& g, EdgeId e) const {
      return _edge_of.at(g.edge(e).src) == e;
    }
    friend bool operator==(SpecialEdgeChoice const&,
                           SpecialEdgeChoice const&) = default;

   private:
    std::vector<std::optional<EdgeId>> _edge_of;
  };

  // Everything two elements must share to be combined.
  struct AlgebraContext {
    std::shared_ptr<Graph const> graph;
    FieldConfig                  field;
    AlgebraMode                  mode = AlgebraMode::Leavitt;
    SpecialEdgeChoice            special;
    // Products producing a monomial with more edges than this fail fast.
    std::size_t degree_bound = 64;
  };

  using ContextPtr = std::shared_ptr<AlgebraContext const>;

  ContextPtr make_context(std::shared_ptr<Graph const> graph,
                          FieldConfig                  field,
                          AlgebraMode                  mode,
                          std::optional<SpecialEdgeChoice> special = {});

  class AlgebraElement {
   public:
    using Terms = std::map<Monomial, FieldElem>;

    explicit AlgebraElement(ContextPtr ctx) : _ctx(std::move(ctx)) {}

    static AlgebraElement zero(ContextPtr const& ctx) {
      return AlgebraElement(ctx);
    }
    // c * m, normalized in Leavitt mode.
    static AlgebraElement monomial(ContextPtr const& ctx,
                                   Monomial const&   m,
                                   FieldElem const&  c = FieldElem(1));
    static AlgebraElement vertex(ContextPtr const& ctx, VertexId v);
    static AlgebraElement path(ContextPtr const& ctx, Path const& p);
    // Sum of all vertices, the unit of the algebra of a finite graph.
    static AlgebraElement one(ContextPtr const& ctx);

    ContextPtr const& context() const {
      return _ctx;
    }
    Graph const& graph() const {
      return *_ctx->graph;
    }
    AlgebraMode mode() const {
      return _ctx->mode;
    }
    Terms const& terms() const {
      return _terms;
    }
    bool is_zero() const {
      return _terms.empty();
    }
    FieldElem coeff(Monomial const& m) const;

    friend bool operator==(AlgebraElement const& a, AlgebraElement const& b);

   private:
    friend class AlgebraBuilder;
    ContextPtr _ctx;
    Terms      _terms;
  };

  // Accumulates raw monomials; finish() normalizes in Leavitt mode.
  class AlgebraBuilder {
   public:
    explicit AlgebraBuilder(ContextPtr ctx) : _ctx(std::move(ctx)) {}
    void           add(Monomial const& m, FieldElem const& c);
    AlgebraElement finish(std::mt19937* rng = nullptr) &&;
    AlgebraElement::Terms const& raw() const {
      return _terms;
    }

   private:
    ContextPtr            _ctx;
    AlgebraElement::Terms _terms;
  };

  // Throws InputError when graphs, fields or modes differ.
  void require_same_algebra(AlgebraElement const& a, AlgebraElement const& b);

  AlgebraElement alg_add(AlgebraElement const& a, AlgebraElement const& b);
  AlgebraElement alg_sub(AlgebraElement const& a, AlgebraElement const& b);
  AlgebraElement alg_neg(AlgebraElement const& a);
  AlgebraElement alg_scalar_mul(FieldElem const& c, AlgebraElement const& a);
  AlgebraElement alg_mul(AlgebraElement const& a, AlgebraElement const& b);
  AlgebraElement alg_star(AlgebraElement const& a);
  AlgebraElement alg_commutator(AlgebraElement const& a,
                                AlgebraElement const& b);

  inline AlgebraElement operator+(AlgebraElement const& a,
                                  AlgebraElement const& b) {
    return alg_add(a, b);
  }
  inline AlgebraElement operator-(AlgebraElement const& a,
                                  AlgebraElement const& b) {
    return alg_sub(a, b);
  }
  inline AlgebraElement operator-(AlgebraElement const& a) {
    return alg_neg(a);
  }
  inline AlgebraElement operator*(AlgebraElement const& a,
                                  AlgebraElement const& b) {
    return alg_mul(a, b);
  }
  inline AlgebraElement operator*(FieldElem const& c, AlgebraElement const& a) {
    return alg_scalar_mul(c, a);
  }

  // Maps raw Cohn-style terms into the canonical basis of `leavitt`.
  // `rng`, when given, randomizes the order in which redexes are reduced.
  AlgebraElement leavitt_normalize(ContextPtr const&            leavitt,
                                   AlgebraElement::Terms const& raw,
                                   std::mt19937*                rng = nullptr);

  // True iff no monomial of `x` is a redex for the context's special edges.
  bool is_canonical(AlgebraElement const& x);

  // Grammar:
  //   expr   := ['+'|'-'] term (('+'|'-') term)*
  //   term   := factor (('*'|'.') factor)*
  //   factor := scalar | path ['\''] | '(' expr ')' ['\'']
  //   path   := id ('/' id)*
  // "p.q'" is p q^*; a scalar alone denotes that multiple of 1. A bare "i" is
  // the imaginary unit unless the graph has an id "i".
  AlgebraElement parse_element(std::string_view text, ContextPtr const& ctx);

  // Terms joined with " + ", coefficients in scalar syntax.
  std::string to_string(AlgebraElement const& x);

}  // namespace lpa

#endif  // LPA_PATH_ALGEBRAS_HPP_
