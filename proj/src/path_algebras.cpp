#include "lpa/path_algebras.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "lpa/errors.hpp"

namespace lpa {

  std::string to_string(AlgebraMode m) {
    return m == AlgebraMode::Cohn ? "cohn" : "leavitt";
  }

  AlgebraMode parse_mode(std::string_view text) {
    if (text == "cohn") {
      return AlgebraMode::Cohn;
    }
    if (text == "leavitt") {
      return AlgebraMode::Leavitt;
    }
    throw InputError("unknown mode '" + std::string(text) + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // SpecialEdgeChoice
  ////////////////////////////////////////////////////////////////////////

  SpecialEdgeChoice SpecialEdgeChoice::least_id(Graph const& g) {
    SpecialEdgeChoice out;
    out._edge_of.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto const& es = g.out_edges(v);
      if (!es.empty()) {
        out._edge_of[v] = *std::min_element(
            es.begin(), es.end(), [&](EdgeId a, EdgeId b) {
              return g.edge_rank(a) < g.edge_rank(b);
            });
      }
    }
    return out;
  }

  SpecialEdgeChoice SpecialEdgeChoice::greatest_id(Graph const& g) {
    SpecialEdgeChoice out;
    out._edge_of.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto const& es = g.out_edges(v);
      if (!es.empty()) {
        out._edge_of[v] = *std::max_element(
            es.begin(), es.end(), [&](EdgeId a, EdgeId b) {
              return g.edge_rank(a) < g.edge_rank(b);
            });
      }
    }
    return out;
  }

  SpecialEdgeChoice SpecialEdgeChoice::from_edges(
      Graph const&               g,
      std::vector<EdgeId> const& edges) {
    SpecialEdgeChoice out;
    out._edge_of.resize(g.vertex_count());
    for (EdgeId e : edges) {
      VertexId v = g.edge(e).src;
      if (out._edge_of[v]) {
        throw InputError("two special edges chosen at vertex '"
                         + g.vertex_name(v) + "'");
      }
      out._edge_of[v] = e;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.out_edges(v).empty() && !out._edge_of[v]) {
        throw InputError("no special edge chosen at regular vertex '"
                         + g.vertex_name(v) + "'");
      }
    }
    return out;
  }

  ContextPtr make_context(std::shared_ptr<Graph const>     graph,
                          FieldConfig                      field,
                          AlgebraMode                      mode,
                          std::optional<SpecialEdgeChoice> special) {
    auto ctx   = std::make_shared<AlgebraContext>();
    ctx->field = field;
    ctx->mode  = mode;
    ctx->special
        = special ? std::move(*special) : SpecialEdgeChoice::least_id(*graph);
    ctx->graph = std::move(graph);
    return ctx;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalization
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void add_term(AlgebraElement::Terms& terms,
                  Monomial const&        m,
                  FieldElem const&       c) {
      if (c.is_zero()) {
        return;
      }
      auto [it, inserted] = terms.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          terms.erase(it);
        }
      }
    }

    std::optional<EdgeId> redex_edge(AlgebraContext const& ctx,
                                     Monomial const&       m) {
      if (m.p.is_vertex() || m.q.is_vertex()) {
        return std::nullopt;
      }
      EdgeId f = m.p.edges.back();
      if (m.q.edges.back() != f || !ctx.special.is_special(*ctx.graph, f)) {
        return std::nullopt;
      }
      return f;
    }

    Path drop_last(Graph const& g, Path const& p) {
      Path out = p;
      out.rng  = g.edge(p.edges.back()).src;
      out.edges.pop_back();
      return out;
    }

    Path append_edge(Graph const& g, Path const& p, EdgeId e) {
      Path out = p;
      out.rng  = g.edge(e).dst;
      out.edges.push_back(e);
      return out;
    }

    void check_degree(AlgebraContext const& ctx, Monomial const& m) {
      if (m.p.length() + m.q.length() > ctx.degree_bound) {
        throw PreconditionError("monomial exceeds the degree bound of "
                                + std::to_string(ctx.degree_bound)
                                + " edges");
      }
    }

  }  // namespace

  AlgebraElement leavitt_normalize(ContextPtr const&            leavitt,
                                   AlgebraElement::Terms const& raw,
                                   std::mt19937*                rng) {
    Graph const&          g = *leavitt->graph;
    AlgebraBuilder        out(leavitt);
    AlgebraElement::Terms done;
    AlgebraElement::Terms pending = raw;
    while (!pending.empty()) {
      auto it = pending.begin();
      if (rng != nullptr) {
        std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
        std::advance(it, pick(*rng));
      }
      Monomial  m = it->first;
      FieldElem c = it->second;
      pending.erase(it);
      check_degree(*leavitt, m);
      auto f = redex_edge(*leavitt, m);
      if (!f) {
        add_term(done, m, c);
        continue;
      }
      Monomial shorter{drop_last(g, m.p), drop_last(g, m.q)};
      VertexId v = g.edge(*f).src;
      for (EdgeId e : g.out_edges(v)) {
        if (e != *f) {
          add_term(done,
                   Monomial{append_edge(g, shorter.p, e),
                            append_edge(g, shorter.q, e)},
                   -c);
        }
      }
      add_term(pending, shorter, c);
    }
    for (auto const& [m, c] : done) {
      out.add(m, c);
    }
    // `done` holds canonical monomials only, so finishing is cheap.
    return std::move(out).finish();
  }

  bool is_canonical(AlgebraElement const& x) {
    return std::none_of(x.terms().begin(), x.terms().end(), [&](auto const& t) {
      return redex_edge(*x.context(), t.first).has_value();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  void AlgebraBuilder::add(Monomial const& m, FieldElem const& c) {
    add_term(_terms, m, c.in_field(_ctx->field.field));
  }

  AlgebraElement AlgebraBuilder::finish(std::mt19937* rng) && {
    if (_ctx->mode == AlgebraMode::Leavitt) {
      bool canonical = true;
      for (auto const& [m, c] : _terms) {
        check_degree(*_ctx, m);
        canonical = canonical && !redex_edge(*_ctx, m);
      }
      if (!canonical || rng != nullptr) {
        return leavitt_normalize(_ctx, _terms, rng);
      }
    }
    AlgebraElement out(_ctx);
    out._terms = std::move(_terms);
    return out;
  }

  AlgebraElement AlgebraElement::monomial(ContextPtr const& ctx,
                                          Monomial const&   m,
                                          FieldElem const&  c) {
    AlgebraBuilder b(ctx);
    b.add(m, c);
    return std::move(b).finish();
  }

  AlgebraElement AlgebraElement::vertex(ContextPtr const& ctx, VertexId v) {
    return monomial(ctx, Monomial{Path::vertex(v), Path::vertex(v)});
  }

  AlgebraElement AlgebraElement::path(ContextPtr const& ctx, Path const& p) {
    return monomial(ctx, Monomial{p, Path::vertex(p.rng)});
  }

  AlgebraElement AlgebraElement::one(ContextPtr const& ctx) {
    AlgebraBuilder b(ctx);
    for (VertexId v = 0; v < ctx->graph->vertex_count(); ++v) {
      b.add(Monomial{Path::vertex(v), Path::vertex(v)}, FieldElem(1));
    }
    return std::move(b).finish();
  }

  FieldElem AlgebraElement::coeff(Monomial const& m) const {
    auto it = _terms.find(m);
    return it == _terms.end() ? FieldElem() : it->second;
  }

  bool operator==(AlgebraElement const& a, AlgebraElement const& b) {
    require_same_algebra(a, b);
    return a._terms == b._terms;
  }

  void require_same_algebra(AlgebraElement const& a, AlgebraElement const& b) {
    if (a.context() == b.context()) {
      return;
    }
    auto const& x = *a.context();
    auto const& y = *b.context();
    if (x.graph != y.graph) {
      throw InputError("elements belong to different graphs");
    }
    if (!(x.field == y.field)) {
      throw InputError("elements belong to different coefficient fields");
    }
    if (x.mode != y.mode) {
      throw InputError("cannot mix Cohn and Leavitt elements");
    }
    if (!(x.special == y.special)) {
      throw InputError("elements use different special-edge choices");
    }
  }

  AlgebraElement alg_add(AlgebraElement const& a, AlgebraElement const& b) {
    require_same_algebra(a, b);
    AlgebraBuilder out(a.context());
    for (auto const& [m, c] : a.terms()) {
      out.add(m, c);
    }
    for (auto const& [m, c] : b.terms()) {
      out.add(m, c);
    }
    return std::move(out).finish();
  }

  AlgebraElement alg_sub(AlgebraElement const& a, AlgebraElement const& b) {
    return alg_add(a, alg_neg(b));
  }

  AlgebraElement alg_neg(AlgebraElement const& a) {
    return alg_scalar_mul(FieldElem(-1), a);
  }

  AlgebraElement alg_scalar_mul(FieldElem const& c, AlgebraElement const& a) {
    AlgebraBuilder out(a.context());
    for (auto const& [m, x] : a.terms()) {
      out.add(m, c * x);
    }
    return std::move(out).finish();
  }

  AlgebraElement alg_mul(AlgebraElement const& a, AlgebraElement const& b) {
    require_same_algebra(a, b);
    AlgebraBuilder out(a.context());
    for (auto const& [m, x] : a.terms()) {
      for (auto const& [n, y] : b.terms()) {
        if (auto mn = gis_mul(m, n)) {
          check_degree(*a.context(), *mn);
          out.add(*mn, x * y);
        }
      }
    }
    return std::move(out).finish();
  }

  AlgebraElement alg_star(AlgebraElement const& a) {
    AlgebraBuilder out(a.context());
    Involution     inv = a.context()->field.inv;
    for (auto const& [m, x] : a.terms()) {
      out.add(Monomial{m.q, m.p}, field_star(x, inv));
    }
    return std::move(out).finish();
  }

  AlgebraElement alg_commutator(AlgebraElement const& a,
                                AlgebraElement const& b) {
    return alg_sub(alg_mul(a, b), alg_mul(b, a));
  }

  std::string to_string(AlgebraElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [m, c] : x.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      if (!(c == FieldElem(1))) {
        out += c.is_real() ? to_string(c) : "(" + to_string(c) + ")";
        out += "*";
      }
      out += to_string(x.graph(), m);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class ElementParser {
     public:
      ElementParser(std::string_view text, ContextPtr ctx)
          : _text(text), _ctx(std::move(ctx)) {}

      AlgebraElement parse() {
        AlgebraElement x = expr();
        skip_ws();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return x;
      }

     private:
      // A factor that is a bare path or starred path, kept so that "p.q'"
      // can insist on r(p) == r(q).
      struct Factor {
        AlgebraElement      value;
        std::optional<Path> plain;
        std::optional<Path> starred;
      };

      [[noreturn]] void fail(std::string const& msg) const {
        throw InputError("expression column " + std::to_string(_pos + 1)
                         + ": " + msg);
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos])) != 0) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_ws();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      AlgebraElement expr() {
        AlgebraElement total(_ctx);
        bool           first = true;
        while (true) {
          bool neg = false;
          if (accept('-')) {
            neg = true;
          } else if (!accept('+') && !first) {
            break;
          }
          AlgebraElement t = term();
          total            = neg ? alg_sub(total, t) : alg_add(total, t);
          first            = false;
          skip_ws();
          if (_pos >= _text.size()
              || (_text[_pos] != '+' && _text[_pos] != '-')) {
            break;
          }
        }
        return total;
      }

      AlgebraElement term() {
        Factor acc = factor();
        while (true) {
          skip_ws();
          if (_pos >= _text.size()
              || (_text[_pos] != '*' && _text[_pos] != '.')) {
            break;
          }
          bool dot = _text[_pos] == '.';
          ++_pos;
          Factor rhs = factor();
          if (dot && acc.plain && rhs.starred
              && acc.plain->rng != rhs.starred->rng) {
            Graph const& g = *_ctx->graph;
            fail("range mismatch in '" + to_string(g, *acc.plain) + "."
                 + to_string(g, *rhs.starred) + "'': r(p) != r(q)");
          }
          acc = Factor{alg_mul(acc.value, rhs.value), std::nullopt,
                       std::nullopt};
        }
        return acc.value;
      }

      Factor factor() {
        skip_ws();
        if (_pos >= _text.size()) {
          fail("unexpected end of expression");
        }
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          AlgebraElement inner = expr();
          if (!accept(')')) {
            fail("expected ')'");
          }
          if (accept('\'')) {
            inner = alg_star(inner);
          }
          return Factor{inner, std::nullopt, std::nullopt};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
          std::size_t end = _pos;
          while (end < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[end])) != 0
                     || _text[end] == '_' || _text[end] == '/')) {
            ++end;
          }
          std::string_view word = _text.substr(_pos, end - _pos);
          std::string_view head = word.substr(0, word.find('/'));
          Graph const&     g    = *_ctx->graph;
          if (!g.find_vertex(head) && !g.find_edge(head)) {
            if (word == "i") {
              _pos = end;
              return scalar_factor(FieldElem::i());
            }
            fail("unknown id '" + std::string(head) + "'");
          }
          Path p;
          try {
            p = parse_path(g, word);
          } catch (InputError const& e) {
            fail(e.what());
          }
          _pos = end;
          if (accept('\'')) {
            return Factor{
                AlgebraElement::monomial(_ctx,
                                         Monomial{Path::vertex(p.rng), p}),
                std::nullopt, p};
          }
          return Factor{AlgebraElement::path(_ctx, p), p, std::nullopt};
        }
        auto scanned = scan_scalar(_text.substr(_pos), false);
        if (!scanned) {
          fail("expected a path, scalar or '('");
        }
        _pos += scanned->second;
        return scalar_factor(scanned->first);
      }

      Factor scalar_factor(FieldElem const& c) {
        FieldElem value;
        try {
          value = c.in_field(_ctx->field.field);
        } catch (InputError const& e) {
          fail(e.what());
        }
        return Factor{alg_scalar_mul(value, AlgebraElement::one(_ctx)),
                      std::nullopt, std::nullopt};
      }

      std::string_view _text;
      ContextPtr       _ctx;
      std::size_t      _pos = 0;
    };

  }  // namespace

  AlgebraElement parse_element(std::string_view text, ContextPtr const& ctx) {
    return ElementParser(text, ctx).parse();
  }

}  // namespace lpa
