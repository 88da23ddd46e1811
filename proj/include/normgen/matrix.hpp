// Square matrices over an exact field, and the group SL_n of matrices with
// determinant one.
//
// Matrix<F> is a plain n x n matrix used for intermediate linear algebra.
// GroupMatrix<F> is an element of SL_n(F): every public constructor checks
// det == 1, and all group operations are closed, so the invariant holds for
// every value in existence.

#ifndef NORMGEN_MATRIX_HPP_
#define NORMGEN_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace normgen {

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  template <Field F>
  class Matrix {
   public:
    using field_type  = F;
    using scalar_type = scalar_t<F>;

    Matrix(F field, std::size_t n)
        : _field(std::move(field)), _n(n), _a(n * n, _field.zero()) {}

    Matrix(F field, std::vector<std::vector<scalar_type>> const& rows)
        : Matrix(std::move(field), rows.size()) {
      for (std::size_t i = 0; i < _n; ++i) {
        if (rows[i].size() != _n) {
          throw invalid_input("matrix rows must all have length "
                              + std::to_string(_n));
        }
        for (std::size_t j = 0; j < _n; ++j) {
          at(i, j) = rows[i][j];
        }
      }
    }

    //! Integer literal convenience, e.g. Matrix(f, {{1, 1}, {0, 1}}).
    Matrix(F field, std::initializer_list<std::initializer_list<long long>> rows)
        : Matrix(std::move(field), rows.size()) {
      std::size_t i = 0;
      for (auto const& row : rows) {
        if (row.size() != _n) {
          throw invalid_input("matrix rows must all have length "
                              + std::to_string(_n));
        }
        std::size_t j = 0;
        for (long long v : row) {
          at(i, j++) = _field.from_int(v);
        }
        ++i;
      }
    }

    [[nodiscard]] static Matrix identity(F field, std::size_t n) {
      Matrix m(std::move(field), n);
      for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = m._field.one();
      }
      return m;
    }

    [[nodiscard]] F const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] scalar_type& at(std::size_t i, std::size_t j) {
      return _a[i * _n + j];
    }
    [[nodiscard]] scalar_type const& at(std::size_t i, std::size_t j) const {
      return _a[i * _n + j];
    }
    [[nodiscard]] scalar_type const& operator()(std::size_t i,
                                                std::size_t j) const {
      return at(i, j);
    }

    [[nodiscard]] Matrix transpose() const {
      Matrix t(_field, _n);
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          t.at(j, i) = at(i, j);
        }
      }
      return t;
    }

    //! Exact determinant by Gaussian elimination with row pivoting.
    [[nodiscard]] scalar_type determinant() const {
      Matrix      m   = *this;
      scalar_type det = _field.one();
      for (std::size_t c = 0; c < _n; ++c) {
        std::size_t piv = c;
        while (piv < _n && m.at(piv, c).is_zero()) {
          ++piv;
        }
        if (piv == _n) {
          return _field.zero();
        }
        if (piv != c) {
          m.swap_rows(piv, c);
          det = -det;
        }
        det                  = det * m.at(c, c);
        scalar_type const inv = m.at(c, c).inverse();
        for (std::size_t r = c + 1; r < _n; ++r) {
          if (m.at(r, c).is_zero()) {
            continue;
          }
          scalar_type const f = m.at(r, c) * inv;
          for (std::size_t k = c; k < _n; ++k) {
            m.at(r, k) -= f * m.at(c, k);
          }
        }
      }
      return det;
    }

    //! Gauss-Jordan inverse, or nullopt if singular.
    [[nodiscard]] std::optional<Matrix> inverse() const {
      Matrix m   = *this;
      Matrix inv = identity(_field, _n);
      for (std::size_t c = 0; c < _n; ++c) {
        std::size_t piv = c;
        while (piv < _n && m.at(piv, c).is_zero()) {
          ++piv;
        }
        if (piv == _n) {
          return std::nullopt;
        }
        m.swap_rows(piv, c);
        inv.swap_rows(piv, c);
        scalar_type const s = m.at(c, c).inverse();
        for (std::size_t k = 0; k < _n; ++k) {
          m.at(c, k)   = m.at(c, k) * s;
          inv.at(c, k) = inv.at(c, k) * s;
        }
        for (std::size_t r = 0; r < _n; ++r) {
          if (r == c || m.at(r, c).is_zero()) {
            continue;
          }
          scalar_type const f = m.at(r, c);
          for (std::size_t k = 0; k < _n; ++k) {
            m.at(r, k) -= f * m.at(c, k);
            inv.at(r, k) -= f * inv.at(c, k);
          }
        }
      }
      return inv;
    }

    void swap_rows(std::size_t i, std::size_t j) {
      if (i == j) {
        return;
      }
      for (std::size_t k = 0; k < _n; ++k) {
        std::swap(at(i, k), at(j, k));
      }
    }

    // Shape predicates.

    [[nodiscard]] bool is_identity() const {
      return *this == identity(_field, _n);
    }
    [[nodiscard]] bool is_upper_triangular() const {
      for (std::size_t i = 1; i < _n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (!at(i, j).is_zero()) {
            return false;
          }
        }
      }
      return true;
    }
    [[nodiscard]] bool is_lower_triangular() const {
      return transpose().is_upper_triangular();
    }
    [[nodiscard]] bool is_diagonal() const {
      return is_upper_triangular() && is_lower_triangular();
    }
    [[nodiscard]] bool has_unit_diagonal() const {
      auto const one = _field.one();
      for (std::size_t i = 0; i < _n; ++i) {
        if (!(at(i, i) == one)) {
          return false;
        }
      }
      return true;
    }
    //! Upper unitriangular, i.e. an element of U.
    [[nodiscard]] bool is_upper_unitriangular() const {
      return is_upper_triangular() && has_unit_diagonal();
    }
    //! Lower unitriangular, i.e. an element of U^-.
    [[nodiscard]] bool is_lower_unitriangular() const {
      return is_lower_triangular() && has_unit_diagonal();
    }
    //! lambda * I for some lambda.
    [[nodiscard]] bool is_scalar() const {
      if (!is_diagonal()) {
        return false;
      }
      for (std::size_t i = 1; i < _n; ++i) {
        if (!(at(i, i) == at(0, 0))) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] std::vector<scalar_type> diagonal() const {
      std::vector<scalar_type> d;
      d.reserve(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        d.push_back(at(i, i));
      }
      return d;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      check_compatible(a, b);
      std::size_t const n = a._n;
      Matrix            c(a._field, n);
      if constexpr (std::is_same_v<F, Rationals>) {
        // Scale rows of a and columns of b to integers so the inner loop
        // is gcd free; each entry is reduced once at the end.
        std::vector<mpz_class> row_den(n, 1), col_den(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t k = 0; k < n; ++k) {
            mpz_lcm(row_den[i].get_mpz_t(), row_den[i].get_mpz_t(),
                    a.at(i, k).value().get_den_mpz_t());
            mpz_lcm(col_den[i].get_mpz_t(), col_den[i].get_mpz_t(),
                    b.at(k, i).value().get_den_mpz_t());
          }
        }
        std::vector<mpz_class> ai(n * n), bi(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t k = 0; k < n; ++k) {
            auto const& x = a.at(i, k).value();
            mpz_divexact(ai[i * n + k].get_mpz_t(), row_den[i].get_mpz_t(),
                         x.get_den_mpz_t());
            ai[i * n + k] *= x.get_num();
            auto const& y = b.at(i, k).value();
            mpz_divexact(bi[i * n + k].get_mpz_t(), col_den[k].get_mpz_t(),
                         y.get_den_mpz_t());
            bi[i * n + k] *= y.get_num();
          }
        }
        mpz_class sum;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            sum = 0;
            for (std::size_t k = 0; k < n; ++k) {
              mpz_addmul(sum.get_mpz_t(), ai[i * n + k].get_mpz_t(),
                         bi[k * n + j].get_mpz_t());
            }
            c.at(i, j) = Rational(sum, row_den[i] * col_den[j]);
          }
        }
        return c;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          scalar_type const& aik = a.at(i, k);
          if (aik.is_zero()) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (!b.at(k, j).is_zero()) {
              c.at(i, j) += aik * b.at(k, j);
            }
          }
        }
      }
      return c;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._n == b._n && a._field == b._field && a._a == b._a;
    }

    //! Row-major "a,b,c;d,e,f" in canonical scalar form; a unique key.
    [[nodiscard]] std::string to_string() const {
      std::string s;
      for (std::size_t i = 0; i < _n; ++i) {
        if (i > 0) {
          s += ';';
        }
        for (std::size_t j = 0; j < _n; ++j) {
          if (j > 0) {
            s += ',';
          }
          s += at(i, j).to_string();
        }
      }
      return s;
    }

    friend std::ostream& operator<<(std::ostream& os, Matrix const& m) {
      os << '[';
      for (std::size_t i = 0; i < m._n; ++i) {
        os << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < m._n; ++j) {
          os << (j == 0 ? "" : ", ") << m.at(i, j);
        }
        os << ']';
      }
      return os << ']';
    }

    static void check_compatible(Matrix const& a, Matrix const& b) {
      if (!(a._field == b._field)) {
        throw field_mismatch("matrices over " + a._field.spec().to_string()
                             + " and " + b._field.spec().to_string());
      }
      if (a._n != b._n) {
        throw invalid_input("dimension mismatch: " + std::to_string(a._n)
                            + " vs " + std::to_string(b._n));
      }
    }

   private:
    F                        _field;
    std::size_t              _n;
    std::vector<scalar_type> _a;
  };

  ////////////////////////////////////////////////////////////////////////
  // GroupMatrix
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Passkey for constructing a GroupMatrix whose determinant is known to
    // be 1 by construction (products, inverses, conjugates).
    struct trusted_det_t {
      explicit trusted_det_t() = default;
    };
    inline constexpr trusted_det_t trusted_det{};
  }  // namespace detail

  template <Field F>
  class GroupMatrix {
   public:
    using field_type  = F;
    using scalar_type = scalar_t<F>;

    //! Throws invalid_input unless n >= 2 and det(m) == 1.
    explicit GroupMatrix(Matrix<F> m) : _m(std::move(m)) {
      if (_m.size() < 2) {
        throw invalid_input("SL_n requires n >= 2");
      }
      if (!(_m.determinant() == _m.field().one())) {
        throw invalid_input("determinant is "
                            + _m.determinant().to_string() + ", not 1");
      }
    }

    GroupMatrix(F field, std::initializer_list<std::initializer_list<long long>> rows)
        : GroupMatrix(Matrix<F>(std::move(field), rows)) {}

    GroupMatrix(detail::trusted_det_t, Matrix<F> m) : _m(std::move(m)) {}

    [[nodiscard]] static GroupMatrix identity(F field, std::size_t n) {
      if (n < 2) {
        throw invalid_input("SL_n requires n >= 2");
      }
      return GroupMatrix(detail::trusted_det,
                         Matrix<F>::identity(std::move(field), n));
    }

    //! diag(d_0, ..., d_{n-1}); throws unless the product is 1.
    [[nodiscard]] static GroupMatrix diagonal(F                               field,
                                              std::vector<scalar_type> const& d) {
      Matrix<F> m(std::move(field), d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        m.at(i, i) = d[i];
      }
      return GroupMatrix(std::move(m));
    }

    [[nodiscard]] Matrix<F> const& matrix() const noexcept {
      return _m;
    }
    [[nodiscard]] F const& field() const noexcept {
      return _m.field();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _m.size();
    }
    [[nodiscard]] scalar_type const& operator()(std::size_t i,
                                                std::size_t j) const {
      return _m(i, j);
    }

    [[nodiscard]] GroupMatrix inverse() const {
      auto inv = _m.inverse();
      // det == 1, so the matrix is never singular.
      return GroupMatrix(detail::trusted_det, std::move(*inv));
    }

    friend GroupMatrix operator*(GroupMatrix const& a, GroupMatrix const& b) {
      return GroupMatrix(detail::trusted_det, a._m * b._m);
    }
    GroupMatrix& operator*=(GroupMatrix const& b) {
      return *this = *this * b;
    }

    friend bool operator==(GroupMatrix const& a, GroupMatrix const& b) {
      return a._m == b._m;
    }

    [[nodiscard]] bool is_identity() const {
      return _m.is_identity();
    }
    //! Central elements of SL_n are the scalar matrices.
    [[nodiscard]] bool is_central() const {
      return _m.is_scalar();
    }
    [[nodiscard]] bool is_upper_unitriangular() const {
      return _m.is_upper_unitriangular();
    }
    [[nodiscard]] bool is_lower_unitriangular() const {
      return _m.is_lower_unitriangular();
    }
    [[nodiscard]] bool is_upper_triangular() const {
      return _m.is_upper_triangular();
    }
    [[nodiscard]] bool is_diagonal() const {
      return _m.is_diagonal();
    }
    [[nodiscard]] std::vector<scalar_type> diagonal_entries() const {
      return _m.diagonal();
    }
    [[nodiscard]] std::string to_string() const {
      return _m.to_string();
    }

    friend std::ostream& operator<<(std::ostream& os, GroupMatrix const& g) {
      return os << g._m;
    }

   private:
    Matrix<F> _m;
  };

  //! c * g * c^-1
  template <Field F>
  [[nodiscard]] GroupMatrix<F> conjugate(GroupMatrix<F> const& g,
                                         GroupMatrix<F> const& c) {
    return c * g * c.inverse();
  }

  //! g * h * g^-1 * h^-1
  template <Field F>
  [[nodiscard]] GroupMatrix<F> commutator(GroupMatrix<F> const& g,
                                          GroupMatrix<F> const& h) {
    return g * h * g.inverse() * h.inverse();
  }

}  // namespace normgen

#endif  // NORMGEN_MATRIX_HPP_
