// Exact scalars: arbitrary-precision rationals and residues modulo a prime.
//
// Two field types model the Field concept below:
//
//   Rationals   -> scalar_type Rational (GMP mpq, always in lowest terms)
//   PrimeField  -> scalar_type Residue  (value in [0, p), carries p)
//
// Scalars are canonical at all times, so equality of values is equality of
// representations.  Mixing residues modulo different primes throws
// field_mismatch; mixing Rational with Residue does not compile.

#ifndef NORMGEN_FIELD_HPP_
#define NORMGEN_FIELD_HPP_

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"

namespace normgen {

  ////////////////////////////////////////////////////////////////////////
  // FieldSpec
  ////////////////////////////////////////////////////////////////////////

  enum class FieldKind { rationals, prime };

  //! Runtime description of a field, used at I/O boundaries.
  struct FieldSpec {
    FieldKind     kind = FieldKind::rationals;
    std::uint64_t p    = 0;  // prime fields only

    [[nodiscard]] static FieldSpec rationals() {
      return {FieldKind::rationals, 0};
    }
    [[nodiscard]] static FieldSpec prime(std::uint64_t q) {
      return {FieldKind::prime, q};
    }

    [[nodiscard]] std::string to_string() const {
      return kind == FieldKind::rationals ? std::string("Q")
                                          : "Fp:" + std::to_string(p);
    }

    friend bool operator==(FieldSpec const&, FieldSpec const&) = default;
  };

  namespace detail {
    [[nodiscard]] inline std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Strict decimal integer with optional sign.
    [[nodiscard]] inline mpz_class parse_integer(std::string_view s) {
      s = trim(s);
      std::string_view digits = s;
      if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        digits.remove_prefix(1);
      }
      if (digits.empty()) {
        throw invalid_input("empty integer literal");
      }
      for (char c : digits) {
        if (c < '0' || c > '9') {
          throw invalid_input("malformed integer literal \"" + std::string(s)
                              + "\"");
        }
      }
      std::string str(s.front() == '+' ? s.substr(1) : s);
      return mpz_class(str, 10);
    }
  }  // namespace detail

  //! Deterministic primality test by trial division (moduli are < 2^32).
  [[nodiscard]] constexpr bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) {
      return false;
    }
    if (p % 2 == 0) {
      return p == 2;
    }
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rational
  ////////////////////////////////////////////////////////////////////////

  class Rational {
   public:
    Rational() = default;
    explicit Rational(long long v) : _v(static_cast<long>(v)) {}
    explicit Rational(mpq_class v) : _v(std::move(v)) {
      _v.canonicalize();
    }
    Rational(mpz_class const& num, mpz_class const& den) {
      if (den == 0) {
        throw division_by_zero();
      }
      _v = mpq_class(num, den);
      _v.canonicalize();
    }

    //! Accepts "int" and "num/den" (any sign, not necessarily reduced).
    [[nodiscard]] static Rational parse(std::string_view s) {
      s            = detail::trim(s);
      auto   slash = s.find('/');
      if (slash == std::string_view::npos) {
        return Rational(mpq_class(detail::parse_integer(s)));
      }
      return Rational(detail::parse_integer(s.substr(0, slash)),
                      detail::parse_integer(s.substr(slash + 1)));
    }

    [[nodiscard]] mpq_class const& value() const noexcept {
      return _v;
    }
    [[nodiscard]] mpz_class numerator() const {
      return _v.get_num();
    }
    [[nodiscard]] mpz_class denominator() const {
      return _v.get_den();
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return sgn(_v) == 0;
    }
    [[nodiscard]] bool is_one() const {
      return _v == 1;
    }

    //! "n" when the denominator is 1, otherwise "n/d" in lowest terms.
    [[nodiscard]] std::string to_string() const {
      return _v.get_str(10);
    }

    [[nodiscard]] Rational inverse() const {
      if (is_zero()) {
        throw division_by_zero();
      }
      return Rational(mpq_class(1 / _v));
    }

    Rational operator-() const {
      return Rational(mpq_class(-_v));
    }
    friend Rational operator+(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a._v + b._v));
    }
    friend Rational operator-(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a._v - b._v));
    }
    friend Rational operator*(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a._v * b._v));
    }
    friend Rational operator/(Rational const& a, Rational const& b) {
      if (b.is_zero()) {
        throw division_by_zero();
      }
      return Rational(mpq_class(a._v / b._v));
    }
    Rational& operator+=(Rational const& b) {
      _v += b._v;
      return *this;
    }
    Rational& operator-=(Rational const& b) {
      _v -= b._v;
      return *this;
    }
    Rational& operator*=(Rational const& b) {
      _v *= b._v;
      return *this;
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return a._v == b._v;
    }

    friend std::ostream& operator<<(std::ostream& os, Rational const& a) {
      return os << a.to_string();
    }

   private:
    mpq_class _v;
  };

  ////////////////////////////////////////////////////////////////////////
  // Residue
  ////////////////////////////////////////////////////////////////////////

  class Residue {
   public:
    Residue() = default;

    //! \p v must already be reduced modulo \p p.
    Residue(std::uint64_t v, std::uint64_t p) : _v(v), _p(p) {}

    [[nodiscard]] std::uint64_t value() const noexcept {
      return _v;
    }
    [[nodiscard]] std::uint64_t modulus() const noexcept {
      return _p;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _v == 0;
    }
    [[nodiscard]] bool is_one() const noexcept {
      return _v == 1;
    }
    [[nodiscard]] std::string to_string() const {
      return std::to_string(_v);
    }

    [[nodiscard]] Residue inverse() const {
      if (_v == 0) {
        throw division_by_zero();
      }
      // Extended Euclid; p < 2^32 keeps every intermediate in 64 bits.
      std::int64_t r0 = static_cast<std::int64_t>(_p);
      std::int64_t r1 = static_cast<std::int64_t>(_v);
      std::int64_t s0 = 0, s1 = 1;
      while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::swap(r0, r1);
        r1 -= q * r0;
        std::swap(s0, s1);
        s1 -= q * s0;
      }
      std::int64_t inv = s0 % static_cast<std::int64_t>(_p);
      if (inv < 0) {
        inv += static_cast<std::int64_t>(_p);
      }
      return Residue(static_cast<std::uint64_t>(inv), _p);
    }

    Residue operator-() const {
      return Residue(_v == 0 ? 0 : _p - _v, _p);
    }
    friend Residue operator+(Residue const& a, Residue const& b) {
      check(a, b);
      std::uint64_t s = a._v + b._v;
      return Residue(s >= a._p ? s - a._p : s, a._p);
    }
    friend Residue operator-(Residue const& a, Residue const& b) {
      check(a, b);
      return Residue(a._v >= b._v ? a._v - b._v : a._v + a._p - b._v, a._p);
    }
    friend Residue operator*(Residue const& a, Residue const& b) {
      check(a, b);
      return Residue(a._v * b._v % a._p, a._p);  // both < 2^32
    }
    friend Residue operator/(Residue const& a, Residue const& b) {
      check(a, b);
      return a * b.inverse();
    }
    Residue& operator+=(Residue const& b) {
      return *this = *this + b;
    }
    Residue& operator-=(Residue const& b) {
      return *this = *this - b;
    }
    Residue& operator*=(Residue const& b) {
      return *this = *this * b;
    }

    friend bool operator==(Residue const& a, Residue const& b) {
      check(a, b);
      return a._v == b._v;
    }

    friend std::ostream& operator<<(std::ostream& os, Residue const& a) {
      return os << a._v;
    }

   private:
    static void check(Residue const& a, Residue const& b) {
      if (a._p != b._p) {
        throw field_mismatch("residues modulo " + std::to_string(a._p)
                             + " and " + std::to_string(b._p));
      }
    }

    std::uint64_t _v = 0;
    std::uint64_t _p = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Fields
  ////////////////////////////////////////////////////////////////////////

  //! The field of rational numbers.
  struct Rationals {
    using scalar_type = Rational;

    [[nodiscard]] Rational zero() const {
      return Rational();
    }
    [[nodiscard]] Rational one() const {
      return Rational(1);
    }
    [[nodiscard]] Rational from_int(long long v) const {
      return Rational(v);
    }
    [[nodiscard]] Rational parse(std::string_view s) const {
      return Rational::parse(s);
    }
    [[nodiscard]] FieldSpec spec() const {
      return FieldSpec::rationals();
    }
    //! Infinite; reported as 0.
    [[nodiscard]] std::uint64_t order() const noexcept {
      return 0;
    }
    friend bool operator==(Rationals, Rationals) noexcept {
      return true;
    }
  };

  //! The field F_p for a prime p < 2^32.
  class PrimeField {
   public:
    using scalar_type = Residue;

    explicit PrimeField(std::uint64_t p) : _p(p) {
      if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
        throw invalid_input("not a supported prime modulus: "
                            + std::to_string(p));
      }
    }

    [[nodiscard]] std::uint64_t characteristic() const noexcept {
      return _p;
    }
    [[nodiscard]] std::uint64_t order() const noexcept {
      return _p;
    }
    [[nodiscard]] Residue zero() const {
      return Residue(0, _p);
    }
    [[nodiscard]] Residue one() const {
      return Residue(1 % _p, _p);
    }
    [[nodiscard]] Residue from_int(long long v) const {
      long long m = static_cast<long long>(_p);
      long long r = v % m;
      return Residue(static_cast<std::uint64_t>(r < 0 ? r + m : r), _p);
    }
    [[nodiscard]] Residue from_mpz(mpz_class const& v) const {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), _p);
      return Residue(r.get_ui(), _p);
    }
    //! Accepts any decimal integer (reduced mod p) or "a/b".
    [[nodiscard]] Residue parse(std::string_view s) const {
      s          = detail::trim(s);
      auto slash = s.find('/');
      if (slash == std::string_view::npos) {
        return from_mpz(detail::parse_integer(s));
      }
      return from_mpz(detail::parse_integer(s.substr(0, slash)))
             / from_mpz(detail::parse_integer(s.substr(slash + 1)));
    }
    [[nodiscard]] FieldSpec spec() const {
      return FieldSpec::prime(_p);
    }

    friend bool operator==(PrimeField const&, PrimeField const&) = default;

   private:
    std::uint64_t _p;
  };

  template <typename F>
  concept Field = requires(F const&                           f,
                           typename F::scalar_type const&     a,
                           std::string_view                   s,
                           long long                          v) {
    typename F::scalar_type;
    { f.zero() } -> std::same_as<typename F::scalar_type>;
    { f.one() } -> std::same_as<typename F::scalar_type>;
    { f.from_int(v) } -> std::same_as<typename F::scalar_type>;
    { f.parse(s) } -> std::same_as<typename F::scalar_type>;
    { f.spec() } -> std::same_as<FieldSpec>;
    { f == f } -> std::convertible_to<bool>;
    { a + a } -> std::same_as<typename F::scalar_type>;
    { a - a } -> std::same_as<typename F::scalar_type>;
    { a * a } -> std::same_as<typename F::scalar_type>;
    { a / a } -> std::same_as<typename F::scalar_type>;
    { -a } -> std::same_as<typename F::scalar_type>;
    { a.inverse() } -> std::same_as<typename F::scalar_type>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::same_as<std::string>;
  };

  template <Field F>
  using scalar_t = typename F::scalar_type;

  enum class ArithOp { add, sub, mul, div };

  //! Single entry point for the four field operations.
  template <typename S>
  [[nodiscard]] S arith(S const& a, S const& b, ArithOp op) {
    switch (op) {
      case ArithOp::add:
        return a + b;
      case ArithOp::sub:
        return a - b;
      case ArithOp::mul:
        return a * b;
      case ArithOp::div:
        return a / b;
    }
    throw precondition_failure("unknown arithmetic operation");
  }

  //! Calls fn(F{}) with the concrete field type described by \p spec.
  template <typename Fn>
  decltype(auto) visit_field(FieldSpec const& spec, Fn&& fn) {
    if (spec.kind == FieldKind::rationals) {
      return std::forward<Fn>(fn)(Rationals{});
    }
    return std::forward<Fn>(fn)(PrimeField(spec.p));
  }

}  // namespace normgen

#endif  // NORMGEN_FIELD_HPP_
