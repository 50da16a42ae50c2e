#ifndef LPA_SCALARS_HPP_
#define LPA_SCALARS_HPP_

// Exact coefficient arithmetic: rationals, the Gaussian rationals Q(i) with
// either the identity or the conjugation involution, and Laurent polynomials
// over those fields.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace lpa {

  // Arbitrary-precision rational, always in lowest terms with a positive
  // denominator.
  class Rational {
   public:
    Rational() = default;
    Rational(long n) : _v(n) {}  // NOLINT(runtime/explicit)
    Rational(long n, long d);
    explicit Rational(mpq_class v) : _v(std::move(v)) {
      _v.canonicalize();
    }

    // Accepts "a" or "a/b" with an optional leading '-'.
    static Rational parse(std::string_view text);

    mpz_class numerator() const {
      return _v.get_num();
    }
    mpz_class denominator() const {
      return _v.get_den();
    }
    bool is_zero() const {
      return sgn(_v) == 0;
    }
    int sign() const {
      return sgn(_v);
    }
    mpq_class const& raw() const {
      return _v;
    }
    std::string to_string() const;

    Rational operator-() const {
      return Rational(mpq_class(-_v));
    }
    Rational& operator+=(Rational const& o) {
      _v += o._v;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      _v -= o._v;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      _v *= o._v;
      return *this;
    }
    // Throws std::domain_error on division by zero.
    Rational& operator/=(Rational const& o);

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }
    friend bool operator==(Rational const& a, Rational const& b) {
      return a._v == b._v;
    }
    friend bool operator<(Rational const& a, Rational const& b) {
      return a._v < b._v;
    }
    friend bool operator<=(Rational const& a, Rational const& b) {
      return a._v <= b._v;
    }
    friend bool operator>(Rational const& a, Rational const& b) {
      return a._v > b._v;
    }
    friend bool operator>=(Rational const& a, Rational const& b) {
      return a._v >= b._v;
    }

   private:
    mpq_class _v;
  };

  enum class FieldTag : std::uint8_t { Q, Qi };
  enum class Involution : std::uint8_t { identity, conjugation };

  std::string to_string(FieldTag f);
  std::string to_string(Involution inv);
  FieldTag     parse_field_tag(std::string_view text);
  Involution   parse_involution(std::string_view text);

  // A coefficient field together with its involution. Conjugation on Q is
  // admitted and coincides with the identity.
  struct FieldConfig {
    FieldTag   field = FieldTag::Q;
    Involution inv   = Involution::identity;

    // (Q, *) and (Q(i), conjugation) are positive definite; (Q(i), identity)
    // is not, since 1*1 + i*i = 0.
    bool positive_definite() const {
      return field == FieldTag::Q || inv == Involution::conjugation;
    }
    friend bool operator==(FieldConfig const&, FieldConfig const&) = default;
  };

  // Element re + im*i of Q or Q(i). Elements tagged Q have im == 0; mixed
  // arithmetic promotes to Q(i).
  class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(long n) : _re(n) {}  // NOLINT(runtime/explicit)
    FieldElem(Rational re) : _re(std::move(re)) {}  // NOLINT(runtime/explicit)
    FieldElem(Rational re, Rational im)
        : _re(std::move(re)), _im(std::move(im)), _tag(FieldTag::Qi) {}

    static FieldElem i() {
      return FieldElem(Rational(0), Rational(1));
    }

    Rational const& re() const {
      return _re;
    }
    Rational const& im() const {
      return _im;
    }
    FieldTag tag() const {
      return _tag;
    }
    bool is_zero() const {
      return _re.is_zero() && _im.is_zero();
    }
    bool is_real() const {
      return _im.is_zero();
    }

    // Same value, retagged to belong to `field`; throws InputError if a
    // nonreal value is moved into Q.
    FieldElem in_field(FieldTag field) const;

    FieldElem inverse() const;
    FieldElem operator-() const;
    FieldElem& operator+=(FieldElem const& o);
    FieldElem& operator-=(FieldElem const& o);
    FieldElem& operator*=(FieldElem const& o);
    FieldElem& operator/=(FieldElem const& o) {
      return *this *= o.inverse();
    }

    friend FieldElem operator+(FieldElem a, FieldElem const& b) {
      return a += b;
    }
    friend FieldElem operator-(FieldElem a, FieldElem const& b) {
      return a -= b;
    }
    friend FieldElem operator*(FieldElem a, FieldElem const& b) {
      return a *= b;
    }
    friend FieldElem operator/(FieldElem a, FieldElem const& b) {
      return a /= b;
    }
    // Value equality; the tag does not participate.
    friend bool operator==(FieldElem const& a, FieldElem const& b) {
      return a._re == b._re && a._im == b._im;
    }

   private:
    Rational _re;
    Rational _im;
    FieldTag _tag = FieldTag::Q;
  };

  // Scalar text syntax: "a", "a/b", "a/b+c/di", "a/b-c/di", "c/di", "i",
  // each with an optional leading '-'.
  FieldElem   parse_scalar(std::string_view text);
  std::string to_string(FieldElem const& a);

  // Longest prefix of `text` that is a scalar literal, with its length.
  // A bare "i" is only accepted when `allow_bare_i` is set, so that callers
  // can give identifiers named "i" priority.
  std::optional<std::pair<FieldElem, std::size_t>>
  scan_scalar(std::string_view text, bool allow_bare_i = true);

  FieldElem field_star(FieldElem const& a, Involution inv);

  // Throws PreconditionError unless `cfg` is positive definite. In that case
  // the positive elements of the field are exactly the nonnegative rationals.
  bool is_positive_nonzero(FieldElem const& a, FieldConfig const& cfg);
  bool is_nonnegative(FieldElem const& a, FieldConfig const& cfg);

  // Finitely supported sum of a_k x^k, k in Z, with no stored zeros.
  class LaurentPoly {
   public:
    using container_type = std::map<long, FieldElem>;

    LaurentPoly() = default;
    LaurentPoly(FieldElem c) {  // NOLINT(runtime/explicit)
      add_term(0, std::move(c));
    }
    static LaurentPoly monomial(long exponent, FieldElem c = FieldElem(1)) {
      LaurentPoly p;
      p.add_term(exponent, std::move(c));
      return p;
    }

    void add_term(long exponent, FieldElem const& c);

    FieldElem coeff(long exponent) const;
    bool      is_zero() const {
      return _terms.empty();
    }
    container_type const& terms() const {
      return _terms;
    }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(LaurentPoly const& o);
    LaurentPoly& operator-=(LaurentPoly const& o);
    LaurentPoly& operator*=(FieldElem const& c);

    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
      return a -= b;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
    friend bool operator==(LaurentPoly const& a, LaurentPoly const& b) {
      return a._terms == b._terms;
    }

   private:
    container_type _terms;
  };

  std::string to_string(LaurentPoly const& p);

  // (sum a_k x^k)^* = sum a_k^* x^-k
  LaurentPoly laurent_star(LaurentPoly const& p, Involution inv);
  // Degree-zero coefficient.
  FieldElem laurent_a0(LaurentPoly const& p);

}  // namespace lpa

#endif  // LPA_SCALARS_HPP_
