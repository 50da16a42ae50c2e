#ifndef LPA_GIS_HPP_
#define LPA_GIS_HPP_

// The graph inverse semigroup G_E. Every nonzero element has a unique normal
// form p q^* with r(p) = r(q); products follow prefix matching:
//
//   (p q^*)(r s^*) = (p t) s^*   if r = q t,
//                    p (s t)^*   if q = r t,
//                    0           otherwise.

#include <compare>
#include <optional>
#include <string>

#include "lpa/graphs.hpp"

namespace lpa {

  // The monomial p q^*. Invariant: p.rng == q.rng.
  struct Monomial {
    Path p;
    Path q;

    friend auto operator<=>(Monomial const&, Monomial const&) = default;
    friend bool operator==(Monomial const&, Monomial const&)  = default;
  };

  // Throws InputError unless r(p) == r(q).
  Monomial make_monomial(Graph const& g, Path p, Path q);

  // nullopt is the zero of G_E.
  using GisElement = std::optional<Monomial>;

  GisElement gis_mul(GisElement const& a, GisElement const& b);
  GisElement gis_star(GisElement const& a);

  // p q^* printed as "p.q'", with "p" for q = r(p) and "q'" for p = r(q).
  std::string to_string(Graph const& g, Monomial const& m);
  std::string to_string(Graph const& g, GisElement const& a);

  // Canonical representative of the rotation class of a closed path.
  Path approx_canonical(Graph const& g, Path const& closed);

  // The ~-class of an element of G_E: VertexClass(v) for p p^* with r(p) = v,
  // CycleWord(t) for p t p^*, CycleWordStar(t) for p t^* p^*, Zero
  // otherwise. `word` holds the canonical closed path (a vertex for
  // VertexClass).
  struct EqClassId {
    enum class Kind : int { Vertex = 0, Cycle = 1, CycleStar = 2, Zero = 3 };

    Kind kind = Kind::Zero;
    Path word;

    static EqClassId zero() {
      return EqClassId{};
    }
    bool is_zero() const {
      return kind == Kind::Zero;
    }

    friend auto operator<=>(EqClassId const&, EqClassId const&) = default;
    friend bool operator==(EqClassId const&, EqClassId const&)  = default;
  };

  std::string to_string(Graph const& g, EqClassId const& c);

  EqClassId classify_eq(Graph const& g, GisElement const& a);

  inline bool sim_equivalent(Graph const&      g,
                             GisElement const& a,
                             GisElement const& b) {
    return classify_eq(g, a) == classify_eq(g, b);
  }

}  // namespace lpa

#endif  // LPA_GIS_HPP_
