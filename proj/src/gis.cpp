#include "lpa/gis.hpp"

#include <utility>

#include "lpa/errors.hpp"

namespace lpa {

  namespace {
    // The suffix t of `p` after `prefix`, built without consulting the graph:
    // its endpoints are known from the prefix and p.
    Path suffix(Path const& prefix, Path const& p) {
      Path t;
      t.src = prefix.rng;
      t.rng = p.rng;
      t.edges.assign(p.edges.begin() + prefix.length(), p.edges.end());
      return t;
    }
  }  // namespace

  Monomial make_monomial(Graph const& g, Path p, Path q) {
    if (p.rng != q.rng) {
      throw InputError("range mismatch in " + to_string(g, p) + "."
                       + to_string(g, q) + "': r(p) != r(q)");
    }
    return Monomial{std::move(p), std::move(q)};
  }

  GisElement gis_mul(GisElement const& a, GisElement const& b) {
    if (!a || !b) {
      return std::nullopt;
    }
    Path const& q = a->q;
    Path const& r = b->p;
    if (is_prefix(q, r)) {
      return Monomial{concat(a->p, suffix(q, r)), b->q};
    }
    if (is_prefix(r, q)) {
      return Monomial{a->p, concat(b->q, suffix(r, q))};
    }
    return std::nullopt;
  }

  GisElement gis_star(GisElement const& a) {
    if (!a) {
      return std::nullopt;
    }
    return Monomial{a->q, a->p};
  }

  std::string to_string(Graph const& g, Monomial const& m) {
    if (m.q.is_vertex()) {
      return to_string(g, m.p);
    }
    if (m.p.is_vertex()) {
      return to_string(g, m.q) + "'";
    }
    return to_string(g, m.p) + "." + to_string(g, m.q) + "'";
  }

  std::string to_string(Graph const& g, GisElement const& a) {
    return a ? to_string(g, *a) : "0";
  }

  Path approx_canonical(Graph const& g, Path const& closed) {
    return canonical_rotation(g, closed);
  }

  std::string to_string(Graph const& g, EqClassId const& c) {
    switch (c.kind) {
      case EqClassId::Kind::Vertex:
        return to_string(g, c.word);
      case EqClassId::Kind::Cycle:
        return "(" + to_string(g, c.word) + ")";
      case EqClassId::Kind::CycleStar:
        return "(" + to_string(g, c.word) + ")'";
      case EqClassId::Kind::Zero:
        break;
    }
    return "0";
  }

  EqClassId classify_eq(Graph const& g, GisElement const& a) {
    if (!a) {
      return EqClassId::zero();
    }
    Path const& p = a->p;
    Path const& q = a->q;
    if (p == q) {
      return EqClassId{EqClassId::Kind::Vertex, Path::vertex(p.rng)};
    }
    if (is_prefix(q, p)) {
      return EqClassId{EqClassId::Kind::Cycle,
                       canonical_rotation(g, suffix(q, p))};
    }
    if (is_prefix(p, q)) {
      return EqClassId{EqClassId::Kind::CycleStar,
                       canonical_rotation(g, suffix(p, q))};
    }
    return EqClassId::zero();
  }

}  // namespace lpa
