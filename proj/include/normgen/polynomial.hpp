// Univariate polynomials over an exact field, the characteristic polynomial,
// and the eigenvalue predicates built on it.

#ifndef NORMGEN_POLYNOMIAL_HPP_
#define NORMGEN_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace normgen {

  //! Dense polynomial, coefficients stored lowest degree first with no
  //! trailing zeros (the zero polynomial has no coefficients).
  template <Field F>
  class Polynomial {
   public:
    using scalar_type = scalar_t<F>;

    explicit Polynomial(F field) : _field(std::move(field)) {}
    Polynomial(F field, std::vector<scalar_type> coeffs)
        : _field(std::move(field)), _c(std::move(coeffs)) {
      trim();
    }

    [[nodiscard]] static Polynomial monomial(F field, std::size_t deg) {
      std::vector<scalar_type> c(deg + 1, field.zero());
      c[deg] = field.one();
      return Polynomial(std::move(field), std::move(c));
    }

    [[nodiscard]] F const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _c.empty();
    }
    //! -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }
    [[nodiscard]] std::vector<scalar_type> const& coefficients() const noexcept {
      return _c;
    }
    [[nodiscard]] scalar_type const& leading() const {
      return _c.back();
    }

    [[nodiscard]] scalar_type operator()(scalar_type const& x) const {
      scalar_type acc = _field.zero();
      for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }

    [[nodiscard]] Polynomial derivative() const {
      std::vector<scalar_type> d;
      for (std::size_t i = 1; i < _c.size(); ++i) {
        d.push_back(_field.from_int(static_cast<long long>(i)) * _c[i]);
      }
      return Polynomial(_field, std::move(d));
    }

    [[nodiscard]] Polynomial monic() const {
      if (is_zero()) {
        return *this;
      }
      auto const               inv = leading().inverse();
      std::vector<scalar_type> c;
      for (auto const& a : _c) {
        c.push_back(a * inv);
      }
      return Polynomial(_field, std::move(c));
    }

    friend Polynomial operator+(Polynomial const& a, Polynomial const& b) {
      std::vector<scalar_type> c(std::max(a._c.size(), b._c.size()),
                                 a._field.zero());
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        c[i] += a._c[i];
      }
      for (std::size_t i = 0; i < b._c.size(); ++i) {
        c[i] += b._c[i];
      }
      return Polynomial(a._field, std::move(c));
    }

    friend Polynomial operator-(Polynomial const& a, Polynomial const& b) {
      std::vector<scalar_type> c(std::max(a._c.size(), b._c.size()),
                                 a._field.zero());
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        c[i] += a._c[i];
      }
      for (std::size_t i = 0; i < b._c.size(); ++i) {
        c[i] -= b._c[i];
      }
      return Polynomial(a._field, std::move(c));
    }

    friend Polynomial operator*(Polynomial const& a, Polynomial const& b) {
      if (a.is_zero() || b.is_zero()) {
        return Polynomial(a._field);
      }
      std::vector<scalar_type> c(a._c.size() + b._c.size() - 1,
                                 a._field.zero());
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        for (std::size_t j = 0; j < b._c.size(); ++j) {
          c[i + j] += a._c[i] * b._c[j];
        }
      }
      return Polynomial(a._field, std::move(c));
    }

    //! Euclidean division: returns (quotient, remainder).
    [[nodiscard]] std::pair<Polynomial, Polynomial>
    divmod(Polynomial const& d) const {
      if (d.is_zero()) {
        throw division_by_zero();
      }
      std::vector<scalar_type> r = _c;
      long const               dd = d.degree();
      if (degree() < dd) {
        return {Polynomial(_field), *this};
      }
      std::vector<scalar_type> q(static_cast<std::size_t>(degree() - dd + 1),
                                 _field.zero());
      auto const inv = d.leading().inverse();
      for (long k = degree() - dd; k >= 0; --k) {
        auto const coef = r[static_cast<std::size_t>(k + dd)] * inv;
        q[static_cast<std::size_t>(k)] = coef;
        if (coef.is_zero()) {
          continue;
        }
        for (long j = 0; j <= dd; ++j) {
          r[static_cast<std::size_t>(k + j)]
              -= coef * d._c[static_cast<std::size_t>(j)];
        }
      }
      return {Polynomial(_field, std::move(q)), Polynomial(_field, std::move(r))};
    }

    [[nodiscard]] Polynomial operator%(Polynomial const& d) const {
      return divmod(d).second;
    }

    friend bool operator==(Polynomial const& a, Polynomial const& b) {
      return a._c == b._c;
    }

    [[nodiscard]] std::string to_string() const {
      if (is_zero()) {
        return "0";
      }
      std::string s;
      for (long i = degree(); i >= 0; --i) {
        auto const& a = _c[static_cast<std::size_t>(i)];
        if (a.is_zero()) {
          continue;
        }
        if (!s.empty()) {
          s += " + ";
        }
        s += "(" + a.to_string() + ")";
        if (i > 0) {
          s += "x^" + std::to_string(i);
        }
      }
      return s;
    }

   private:
    void trim() {
      while (!_c.empty() && _c.back().is_zero()) {
        _c.pop_back();
      }
    }

    F                        _field;
    std::vector<scalar_type> _c;
  };

  //! Monic gcd.
  template <Field F>
  [[nodiscard]] Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
      auto r = a % b;
      a      = std::move(b);
      b      = std::move(r);
    }
    return a.monic();
  }

  //! base^e mod m by square-and-multiply.
  template <Field F>
  [[nodiscard]] Polynomial<F> powmod(Polynomial<F> base,
                                     std::uint64_t e,
                                     Polynomial<F> const& m) {
    Polynomial<F> result = Polynomial<F>::monomial(m.field(), 0) % m;
    base                 = base % m;
    while (e > 0) {
      if (e & 1U) {
        result = (result * base) % m;
      }
      base = (base * base) % m;
      e >>= 1U;
    }
    return result;
  }

  //! Characteristic polynomial det(x*I - A), monic of degree n.
  //!
  //! Reduces to upper Hessenberg form by similarity and then expands along
  //! the subdiagonal, which works over any field.
  template <Field F>
  [[nodiscard]] Polynomial<F> char_poly(Matrix<F> a) {
    using S                = scalar_t<F>;
    std::size_t const n    = a.size();
    F const&          fld  = a.field();
    for (std::size_t j = 0; j + 2 < n; ++j) {
      std::size_t piv = j + 1;
      while (piv < n && a.at(piv, j).is_zero()) {
        ++piv;
      }
      if (piv == n) {
        continue;
      }
      if (piv != j + 1) {
        a.swap_rows(piv, j + 1);
        for (std::size_t r = 0; r < n; ++r) {
          std::swap(a.at(r, piv), a.at(r, j + 1));
        }
      }
      S const inv = a.at(j + 1, j).inverse();
      for (std::size_t k = j + 2; k < n; ++k) {
        if (a.at(k, j).is_zero()) {
          continue;
        }
        S const m = a.at(k, j) * inv;
        for (std::size_t c = 0; c < n; ++c) {
          a.at(k, c) -= m * a.at(j + 1, c);
        }
        for (std::size_t r = 0; r < n; ++r) {
          a.at(r, j + 1) += m * a.at(r, k);
        }
      }
    }
    // p[m] = characteristic polynomial of the leading m x m block.
    std::vector<Polynomial<F>> p;
    p.push_back(Polynomial<F>::monomial(fld, 0));
    Polynomial<F> const x = Polynomial<F>::monomial(fld, 1);
    for (std::size_t m = 1; m <= n; ++m) {
      auto const    h   = [&](std::size_t i, std::size_t j) -> S const& {
        return a.at(i - 1, j - 1);
      };
      Polynomial<F> next = (x - Polynomial<F>(fld, {h(m, m)})) * p[m - 1];
      S             prod = fld.one();
      for (std::size_t i = m - 1; i >= 1; --i) {
        prod = prod * h(i + 1, i);
        next = next - Polynomial<F>(fld, {h(i, m) * prod}) * p[i - 1];
      }
      p.push_back(std::move(next));
    }
    return p[n];
  }

  template <Field F>
  [[nodiscard]] Polynomial<F> char_poly(GroupMatrix<F> const& g) {
    return char_poly(g.matrix());
  }

  //! Squarefree characteristic polynomial: n distinct eigenvalues over the
  //! algebraic closure.
  template <Field F>
  [[nodiscard]] bool is_regular_semisimple(GroupMatrix<F> const& g) {
    auto const f = char_poly(g);
    return gcd(f, f.derivative()).degree() == 0;
  }

  namespace detail {
    // Prime factorisation of |v| > 0: trial division, then Pollard rho on
    // whatever composite cofactor remains.
    inline void factor_into(mpz_class v, std::vector<mpz_class>& primes) {
      if (v < 0) {
        v = -v;
      }
      for (unsigned long d = 2; d < 100000 && v > 1; ++d) {
        if (mpz_divisible_ui_p(v.get_mpz_t(), d) != 0) {
          primes.emplace_back(d);
          while (mpz_divisible_ui_p(v.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), d);
          }
        }
      }
      if (v == 1) {
        return;
      }
      if (mpz_probab_prime_p(v.get_mpz_t(), 40) != 0) {
        primes.push_back(v);
        return;
      }
      for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto      step = [&](mpz_class const& z) {
          mpz_class r = (z * z + c) % v;
          return r;
        };
        while (d == 1) {
          x = step(x);
          y = step(step(y));
          mpz_class diff = x - y;
          mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
        }
        if (d != v) {
          factor_into(d, primes);
          mpz_class rest = v / d;
          while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t()) != 0) {
            rest /= d;
          }
          factor_into(rest, primes);
          return;
        }
      }
    }

    inline std::vector<mpz_class> positive_divisors(mpz_class const& v) {
      std::vector<mpz_class> primes;
      factor_into(v, primes);
      std::sort(primes.begin(), primes.end());
      primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
      mpz_class              rest = v < 0 ? mpz_class(-v) : v;
      std::vector<mpz_class> divs{1};
      for (auto const& q : primes) {
        std::size_t const base = divs.size();
        mpz_class         pk   = 1;
        while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t()) != 0) {
          rest /= q;
          pk *= q;
          for (std::size_t i = 0; i < base; ++i) {
            divs.push_back(divs[i] * pk);
          }
        }
      }
      return divs;
    }

    // Number of distinct rational roots of f (f(0) != 0 assumed).
    inline std::size_t count_rational_roots(Polynomial<Rationals> const& f) {
      mpz_class lcm = 1;
      for (auto const& c : f.coefficients()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
      }
      auto const lead = (f.leading() * Rational(mpq_class(lcm))).numerator();
      auto const cons
          = (f.coefficients().front() * Rational(mpq_class(lcm))).numerator();
      std::size_t count = 0;
      for (auto const& a : positive_divisors(cons)) {
        for (auto const& b : positive_divisors(lead)) {
          mpz_class g;
          mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          if (g != 1) {
            continue;
          }
          for (int sign : {1, -1}) {
            if (f(Rational(sign * a, b)).is_zero()) {
              ++count;
            }
          }
        }
      }
      return count;
    }
  }  // namespace detail

  //! True iff the characteristic polynomial splits over the base field with
  //! n pairwise distinct roots.
  inline bool has_distinct_eigenvalues_in_k(GroupMatrix<Rationals> const& g) {
    if (g.is_upper_triangular()) {
      auto d = g.diagonal_entries();
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          if (d[i] == d[j]) {
            return false;
          }
        }
      }
      return true;
    }
    auto const f = char_poly(g);
    if (gcd(f, f.derivative()).degree() != 0) {
      return false;
    }
    return detail::count_rational_roots(f) == g.size();
  }

  inline bool has_distinct_eigenvalues_in_k(GroupMatrix<PrimeField> const& g) {
    std::uint64_t const p = g.field().characteristic();
    if (p <= g.size()) {
      throw precondition_failure(
          "F_" + std::to_string(p) + " has too few elements for "
          + std::to_string(g.size()) + " distinct nonzero eigenvalues");
    }
    auto const f = char_poly(g);
    if (gcd(f, f.derivative()).degree() != 0) {
      return false;
    }
    // Roots in F_p are the common roots with x^p - x.
    auto const x  = Polynomial<PrimeField>::monomial(g.field(), 1);
    auto const xp = powmod(x, p, f);
    return static_cast<std::size_t>(gcd(f, xp - x).degree()) == g.size();
  }

}  // namespace normgen

#endif  // NORMGEN_POLYNOMIAL_HPP_
