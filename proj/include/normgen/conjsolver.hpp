// Writing unipotent elements as a product of two conjugates of a regular
// element t of B and its inverse.
//
// For diagonal d = diag(t_0, ..., t_{n-1}) with pairwise distinct entries
// the map f(v) = v d v^-1 d^-1 is a bijection of U.  Comparing entries of
// v d = u d v gives, for i < j,
//
//   v_ij (t_j - t_i) = u_ij t_j + sum_{i<k<j} u_ik t_k v_kj,
//
// which determines v one superdiagonal at a time.

#ifndef NORMGEN_CONJSOLVER_HPP_
#define NORMGEN_CONJSOLVER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace normgen {

  //! Upper triangular element of SL_n with pairwise distinct diagonal, i.e.
  //! regular semisimple with all eigenvalues in the base field.
  template <Field F>
  class RegularBorelElement {
   public:
    explicit RegularBorelElement(GroupMatrix<F> t) : _t(std::move(t)) {
      if (!_t.is_upper_triangular()) {
        throw precondition_failure("regular element must be upper triangular");
      }
      auto const d = _t.diagonal_entries();
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          if (d[i] == d[j]) {
            throw precondition_failure(
                "regular element has a repeated diagonal entry");
          }
        }
      }
    }

    [[nodiscard]] GroupMatrix<F> const& matrix() const noexcept {
      return _t;
    }
    [[nodiscard]] std::vector<scalar_t<F>> diagonal() const {
      return _t.diagonal_entries();
    }

   private:
    GroupMatrix<F> _t;
  };

  template <Field F>
  struct BorelDiagonalization {
    GroupMatrix<F> conjugator;  // v, upper unitriangular
    GroupMatrix<F> diagonal;    // d = v t v^-1
  };

  //! v in U with v t v^-1 = diag(t).
  template <Field F>
  [[nodiscard]] BorelDiagonalization<F>
  diagonalize_in_borel(RegularBorelElement<F> const& re) {
    auto const&       t = re.matrix();
    std::size_t const n = t.size();
    auto              v = Matrix<F>::identity(t.field(), n);
    // v_ij (t_ii - t_jj) = t_ij + sum_{i<k<j} v_ik t_kj
    for (std::size_t gap = 1; gap < n; ++gap) {
      for (std::size_t i = 0; i + gap < n; ++i) {
        std::size_t const j   = i + gap;
        auto              rhs = t(i, j);
        for (std::size_t k = i + 1; k < j; ++k) {
          rhs += v.at(i, k) * t(k, j);
        }
        v.at(i, j) = rhs / (t(i, i) - t(j, j));
      }
    }
    GroupMatrix<F> vg(detail::trusted_det, std::move(v));
    auto           d = GroupMatrix<F>::diagonal(t.field(), t.diagonal_entries());
    return {std::move(vg), std::move(d)};
  }

  //! v in U with v d v^-1 d^-1 = u.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> solve_twisted_conjugation(GroupMatrix<F> const& d,
                                                         GroupMatrix<F> const& u) {
    if (!d.is_diagonal()) {
      throw precondition_failure("twisted conjugation needs a diagonal d");
    }
    if (!u.is_upper_unitriangular()) {
      throw precondition_failure("twisted conjugation needs u in U");
    }
    RegularBorelElement<F> const check(d);  // rejects repeated entries
    std::size_t const            n = d.size();
    auto                         v = Matrix<F>::identity(d.field(), n);
    for (std::size_t gap = 1; gap < n; ++gap) {
      for (std::size_t i = 0; i + gap < n; ++i) {
        std::size_t const j   = i + gap;
        auto              rhs = u(i, j) * d(j, j);
        for (std::size_t k = i + 1; k < j; ++k) {
          rhs += u(i, k) * d(k, k) * v.at(k, j);
        }
        v.at(i, j) = rhs / (d(j, j) - d(i, i));
      }
    }
    return GroupMatrix<F>(detail::trusted_det, std::move(v));
  }

  //! Certificate u = (c1 t c1^-1)(c2 t^-1 c2^-1) over the base {t}.
  //!
  //! With v1 t v1^-1 = d and v d v^-1 d^-1 = v1 u v1^-1 one gets
  //! c1 = v1^-1 v v1 and c2 = I.
  template <Field F>
  [[nodiscard]] Certificate<F>
  unipotent_as_two_conjugates(RegularBorelElement<F> const& t,
                              GroupMatrix<F> const&         u) {
    if (!u.is_upper_unitriangular()) {
      throw precondition_failure("target must be upper unitriangular");
    }
    auto const [v1, d] = diagonalize_in_borel(t);
    auto const v1_inv  = v1.inverse();
    auto const v       = solve_twisted_conjugation(d, v1 * u * v1_inv);
    auto const id      = GroupMatrix<F>::identity(u.field(), u.size());
    Certificate<F> c{u, {t.matrix()}, {}, {}};
    c.word.push_back({v1_inv * v * v1, 0, 1});
    c.word.push_back({id, 0, -1});
    c.meta.bound_claimed = 2;
    return c;
  }

}  // namespace normgen

#endif  // NORMGEN_CONJSOLVER_HPP_
