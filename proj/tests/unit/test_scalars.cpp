#include <doctest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "lpa/errors.hpp"
#include "lpa/scalars.hpp"

using namespace lpa;
using lpa::testing::random_scalar;

namespace {

  FieldConfig const q_id{FieldTag::Q, Involution::identity};
  FieldConfig const qi_conj{FieldTag::Qi, Involution::conjugation};
  FieldConfig const qi_id{FieldTag::Qi, Involution::identity};

  LaurentPoly random_laurent(std::mt19937& rng) {
    LaurentPoly                         p;
    std::uniform_int_distribution<long> exp(-3, 3);
    std::uniform_int_distribution<int>  count(0, 4);
    for (int k = count(rng); k > 0; --k) {
      p.add_term(exp(rng), random_scalar(FieldTag::Qi, rng));
    }
    return p;
  }

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational(7).to_string() == "7");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
}

TEST_CASE("scalar text syntax") {
  CHECK(parse_scalar("1/2-3i") == FieldElem(Rational(1, 2), Rational(-3)));
  CHECK(parse_scalar("3/4") == FieldElem(Rational(3, 4)));
  CHECK(parse_scalar("-2") == FieldElem(-2));
  CHECK(parse_scalar("i") == FieldElem::i());
  CHECK(to_string(FieldElem(2, 2)) == "2+2i");
  CHECK(to_string(FieldElem(0, 1)) == "1i");
  CHECK(to_string(FieldElem(Rational(0), Rational(-1, 2))) == "-1/2i");
  CHECK(to_string(FieldElem(Rational(3, 4))) == "3/4");
  CHECK(to_string(FieldElem()) == "0");
  CHECK_THROWS_AS(parse_scalar("1+"), InputError);

  std::mt19937 rng(testing::seed(1));
  for (int k = 0; k < 200; ++k) {
    FieldElem a = random_scalar(FieldTag::Qi, rng);
    CHECK(parse_scalar(to_string(a)) == a);
  }
}

TEST_CASE("field_star examples") {
  CHECK(field_star(FieldElem(Rational(3, 4)), Involution::identity)
        == FieldElem(Rational(3, 4)));
  CHECK(field_star(FieldElem(1, 2), Involution::conjugation)
        == FieldElem(1, -2));
  CHECK(field_star(FieldElem(1, 2), Involution::identity) == FieldElem(1, 2));
}

TEST_CASE("field axioms and involution laws on random samples") {
  std::mt19937 rng(testing::seed(2));
  for (int k = 0; k < 300; ++k) {
    FieldElem a = random_scalar(FieldTag::Qi, rng);
    FieldElem b = random_scalar(FieldTag::Qi, rng);
    FieldElem c = random_scalar(FieldTag::Qi, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == FieldElem());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == FieldElem(1));
    }
    for (Involution inv : {Involution::identity, Involution::conjugation}) {
      CHECK(field_star(field_star(a, inv), inv) == a);
      CHECK(field_star(a * b, inv) == field_star(a, inv) * field_star(b, inv));
      CHECK(field_star(a + b, inv) == field_star(a, inv) + field_star(b, inv));
    }
  }
  CHECK_THROWS_AS(FieldElem().inverse(), std::domain_error);
}

TEST_CASE("positive definiteness") {
  std::mt19937 rng(testing::seed(3));
  for (FieldConfig cfg : {q_id, qi_conj}) {
    CHECK(cfg.positive_definite());
    for (int k = 0; k < 100; ++k) {
      std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      FieldElem   sum;
      bool        all_zero = true;
      for (std::size_t j = 0; j < n; ++j) {
        FieldElem a = random_scalar(cfg.field, rng);
        all_zero    = all_zero && a.is_zero();
        sum += a * field_star(a, cfg.inv);
      }
      CHECK(sum.is_zero() == all_zero);
    }
  }
  CHECK_FALSE(qi_id.positive_definite());
  FieldElem one(1);
  FieldElem i = FieldElem::i();
  CHECK((one * field_star(one, qi_id.inv) + i * field_star(i, qi_id.inv))
            .is_zero());
}

TEST_CASE("is_positive_nonzero") {
  CHECK(is_positive_nonzero(FieldElem(Rational(5, 3)), q_id));
  CHECK_FALSE(is_positive_nonzero(FieldElem(0), q_id));
  CHECK_FALSE(is_positive_nonzero(FieldElem(-1), q_id));
  CHECK_FALSE(is_positive_nonzero(FieldElem(2, 2), qi_conj));
  CHECK(is_nonnegative(FieldElem(0), qi_conj));
  CHECK_THROWS_AS(is_positive_nonzero(FieldElem(1), qi_id), PreconditionError);
}

TEST_CASE("in_field") {
  CHECK(FieldElem(3).in_field(FieldTag::Qi).tag() == FieldTag::Qi);
  CHECK(FieldElem(3, 0).in_field(FieldTag::Q).tag() == FieldTag::Q);
  CHECK_THROWS_AS(FieldElem(0, 1).in_field(FieldTag::Q), InputError);
}

TEST_CASE("laurent_star and laurent_a0 examples") {
  CHECK(laurent_star(LaurentPoly(), Involution::conjugation).is_zero());
  CHECK(laurent_star(LaurentPoly::monomial(1, FieldElem(1, 2)),
                     Involution::conjugation)
        == LaurentPoly::monomial(-1, FieldElem(1, -2)));
  LaurentPoly p = LaurentPoly::monomial(2) + LaurentPoly(FieldElem(3));
  CHECK(laurent_star(p, Involution::identity)
        == LaurentPoly::monomial(-2) + LaurentPoly(FieldElem(3)));

  LaurentPoly r = LaurentPoly(FieldElem(3)) + LaurentPoly::monomial(1, 2)
                  - LaurentPoly::monomial(-1);
  CHECK(laurent_a0(r) == FieldElem(3));
  CHECK(laurent_a0(LaurentPoly()) == FieldElem(0));

  // (1 + x)(1 + x^-1) = x^-1 + 2 + x
  LaurentPoly s = LaurentPoly(FieldElem(1)) + LaurentPoly::monomial(1);
  CHECK(laurent_a0(s * laurent_star(s, Involution::identity)) == FieldElem(2));
}

TEST_CASE("laurent polynomials: no stored zeros, star laws") {
  LaurentPoly p = LaurentPoly::monomial(2, 5);
  p.add_term(2, -5);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());

  std::mt19937 rng(testing::seed(4));
  for (int k = 0; k < 200; ++k) {
    LaurentPoly a = random_laurent(rng);
    LaurentPoly b = random_laurent(rng);
    for (Involution inv : {Involution::identity, Involution::conjugation}) {
      CHECK(laurent_star(laurent_star(a, inv), inv) == a);
      CHECK(laurent_star(a * b, inv)
            == laurent_star(b, inv) * laurent_star(a, inv));
    }
    LaurentPoly ab = a * b;
    for (auto const& [e, c] : ab.terms()) {
      CHECK_FALSE(c.is_zero());
    }
  }
}
