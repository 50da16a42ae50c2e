#include "lpa/scalars.hpp"

#include <cctype>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa {

  namespace {
    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }

    // Unsigned "a" or "a/b"; returns the number of characters consumed or 0.
    std::size_t scan_unsigned_rational(std::string_view s, Rational& out) {
      std::size_t n = 0;
      while (n < s.size() && is_digit(s[n])) {
        ++n;
      }
      if (n == 0) {
        return 0;
      }
      mpz_class num(std::string(s.substr(0, n)));
      mpz_class den(1);
      if (n + 1 < s.size() && s[n] == '/' && is_digit(s[n + 1])) {
        std::size_t m = n + 1;
        while (m < s.size() && is_digit(s[m])) {
          ++m;
        }
        den = mpz_class(std::string(s.substr(n + 1, m - n - 1)));
        if (den == 0) {
          throw InputError("zero denominator in scalar literal");
        }
        n = m;
      }
      out = Rational(mpq_class(num, den));
      return n;
    }

    // Optional sign followed by an unsigned rational and, when `imag`, a
    // trailing 'i' (the rational may then be omitted).
    std::size_t scan_signed_part(std::string_view s,
                                 bool              imag,
                                 bool              require_sign,
                                 bool              allow_bare_i,
                                 Rational&         out) {
      std::size_t pos  = 0;
      bool        negv = false;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negv = s[pos] == '-';
        ++pos;
      } else if (require_sign) {
        return 0;
      }
      Rational    v;
      std::size_t n = scan_unsigned_rational(s.substr(pos), v);
      if (!imag) {
        if (n == 0) {
          return 0;
        }
        out = negv ? -v : v;
        return pos + n;
      }
      if (n == 0) {
        if (!allow_bare_i) {
          return 0;
        }
        v = Rational(1);
      }
      pos += n;
      if (pos >= s.size() || s[pos] != 'i') {
        return 0;
      }
      ++pos;
      if (pos < s.size() && is_ident_char(s[pos])) {
        return 0;
      }
      out = negv ? -v : v;
      return pos;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Rational
  ////////////////////////////////////////////////////////////////////////

  Rational::Rational(long n, long d) {
    if (d == 0) {
      throw std::domain_error("rational with zero denominator");
    }
    _v = mpq_class(n, d);
    _v.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    Rational    r;
    std::size_t n = scan_signed_part(text, false, false, false, r);
    if (n == 0 || n != text.size()) {
      throw InputError("invalid rational literal '" + std::string(text) + "'");
    }
    return r;
  }

  std::string Rational::to_string() const {
    return _v.get_str();
  }

  Rational& Rational::operator/=(Rational const& o) {
    if (o.is_zero()) {
      throw std::domain_error("division by zero");
    }
    _v /= o._v;
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tags
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(FieldTag f) {
    return f == FieldTag::Q ? "Q" : "Qi";
  }

  std::string to_string(Involution inv) {
    return inv == Involution::identity ? "identity" : "conjugation";
  }

  FieldTag parse_field_tag(std::string_view text) {
    if (text == "Q") {
      return FieldTag::Q;
    }
    if (text == "Qi") {
      return FieldTag::Qi;
    }
    throw InputError("unknown field '" + std::string(text) + "'");
  }

  Involution parse_involution(std::string_view text) {
    if (text == "identity") {
      return Involution::identity;
    }
    if (text == "conjugation") {
      return Involution::conjugation;
    }
    throw InputError("unknown involution '" + std::string(text) + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // FieldElem
  ////////////////////////////////////////////////////////////////////////

  FieldElem FieldElem::in_field(FieldTag field) const {
    FieldElem out = *this;
    if (field == FieldTag::Q && !_im.is_zero()) {
      throw InputError("scalar " + to_string(*this) + " does not lie in Q");
    }
    out._tag = field;
    return out;
  }

  FieldElem FieldElem::inverse() const {
    if (is_zero()) {
      throw std::domain_error("inverse of zero");
    }
    Rational  norm = _re * _re + _im * _im;
    FieldElem out  = *this;
    out._re        = _re / norm;
    out._im        = -_im / norm;
    return out;
  }

  FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    out._re       = -_re;
    out._im       = -_im;
    return out;
  }

  FieldElem& FieldElem::operator+=(FieldElem const& o) {
    _re += o._re;
    _im += o._im;
    if (o._tag == FieldTag::Qi) {
      _tag = FieldTag::Qi;
    }
    return *this;
  }

  FieldElem& FieldElem::operator-=(FieldElem const& o) {
    _re -= o._re;
    _im -= o._im;
    if (o._tag == FieldTag::Qi) {
      _tag = FieldTag::Qi;
    }
    return *this;
  }

  FieldElem& FieldElem::operator*=(FieldElem const& o) {
    if (_tag == FieldTag::Q && o._tag == FieldTag::Q) {
      _re *= o._re;
      return *this;
    }
    Rational re = _re * o._re - _im * o._im;
    Rational im = _re * o._im + _im * o._re;
    _re         = std::move(re);
    _im         = std::move(im);
    _tag        = FieldTag::Qi;
    return *this;
  }

  std::optional<std::pair<FieldElem, std::size_t>>
  scan_scalar(std::string_view text, bool allow_bare_i) {
    Rational re;
    Rational im;
    // Pure imaginary literal.
    if (std::size_t n = scan_signed_part(text, true, false, allow_bare_i, im);
        n > 0) {
      return std::make_pair(FieldElem(Rational(0), im), n);
    }
    std::size_t n = scan_signed_part(text, false, false, false, re);
    if (n == 0) {
      return std::nullopt;
    }
    // Gaussian literal: the imaginary part must follow without spaces and
    // carry explicit digits, so "2-i" stays an expression.
    if (std::size_t m = scan_signed_part(text.substr(n), true, true, false, im);
        m > 0) {
      return std::make_pair(FieldElem(re, im), n + m);
    }
    return std::make_pair(FieldElem(re), n);
  }

  FieldElem parse_scalar(std::string_view text) {
    auto scanned = scan_scalar(text);
    if (!scanned || scanned->second != text.size()) {
      throw InputError("invalid scalar literal '" + std::string(text) + "'");
    }
    return scanned->first;
  }

  std::string to_string(FieldElem const& a) {
    if (a.im().is_zero()) {
      return a.re().to_string();
    }
    std::string im = a.im().to_string() + "i";
    if (a.re().is_zero()) {
      return im;
    }
    return a.re().to_string() + (a.im().sign() > 0 ? "+" : "") + im;
  }

  FieldElem field_star(FieldElem const& a, Involution inv) {
    if (inv == Involution::identity || a.tag() == FieldTag::Q) {
      return a;
    }
    return FieldElem(a.re(), -a.im());
  }

  namespace {
    void require_positive_definite(FieldConfig const& cfg) {
      if (!cfg.positive_definite()) {
        throw PreconditionError(
            "positivity is undefined for field " + to_string(cfg.field)
            + " with involution " + to_string(cfg.inv)
            + ": the involution is not positive definite");
      }
    }
  }  // namespace

  bool is_positive_nonzero(FieldElem const& a, FieldConfig const& cfg) {
    require_positive_definite(cfg);
    return a.im().is_zero() && a.re().sign() > 0;
  }

  bool is_nonnegative(FieldElem const& a, FieldConfig const& cfg) {
    require_positive_definite(cfg);
    return a.im().is_zero() && a.re().sign() >= 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // LaurentPoly
  ////////////////////////////////////////////////////////////////////////

  void LaurentPoly::add_term(long exponent, FieldElem const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  FieldElem LaurentPoly::coeff(long exponent) const {
    auto it = _terms.find(exponent);
    return it == _terms.end() ? FieldElem() : it->second;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (auto const& [k, c] : _terms) {
      out._terms.emplace(k, -c);
    }
    return out;
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
    for (auto const& [k, c] : o._terms) {
      add_term(k, c);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o) {
    for (auto const& [k, c] : o._terms) {
      add_term(k, -c);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator*=(FieldElem const& c) {
    if (c.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [k, a] : _terms) {
      a *= c;
    }
    return *this;
  }

  LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly out;
    for (auto const& [i, x] : a._terms) {
      for (auto const& [j, y] : b._terms) {
        out.add_term(i + j, x * y);
      }
    }
    return out;
  }

  std::string to_string(LaurentPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [k, c] : p.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "(" + to_string(c) + ")";
      if (k != 0) {
        out += "x^" + std::to_string(k);
      }
    }
    return out;
  }

  LaurentPoly laurent_star(LaurentPoly const& p, Involution inv) {
    LaurentPoly out;
    for (auto const& [k, c] : p.terms()) {
      out.add_term(-k, field_star(c, inv));
    }
    return out;
  }

  FieldElem laurent_a0(LaurentPoly const& p) {
    return p.coeff(0);
  }

}  // namespace lpa
