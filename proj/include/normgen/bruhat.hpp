// Bruhat and big-cell decompositions in SL_n, and splitting an arbitrary
// element as a product of two elements whose inverses/selves lie in the big
// cell U^- T U.

#ifndef NORMGEN_BRUHAT_HPP_
#define NORMGEN_BRUHAT_HPP_

#include <cstddef>
#include <optional>
#include <utility>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "rootdata.hpp"

namespace normgen {

  //! g = lower * torus * upper with lower in U^-, torus in T, upper in U.
  template <Field F>
  struct BigCellForm {
    GroupMatrix<F> lower;
    GroupMatrix<F> torus;
    GroupMatrix<F> upper;

    [[nodiscard]] GroupMatrix<F> product() const {
      return lower * torus * upper;
    }
  };

  //! g = u * weyl_rep(w) * b with u in U, b in B, and u canonical: u(i, j)
  //! vanishes whenever i < j and w^-1(i) < w^-1(j).
  template <Field F>
  struct BruhatForm {
    GroupMatrix<F> u;
    Permutation    w;
    GroupMatrix<F> b;

    [[nodiscard]] GroupMatrix<F> product() const {
      return u * weyl_rep(u.field(), w) * b;
    }
  };

  //! LDU factorisation without pivoting.  Returns nullopt exactly when some
  //! leading principal minor of g vanishes, i.e. g is not in U^- T U.
  template <Field F>
  [[nodiscard]] std::optional<BigCellForm<F>>
  big_cell_decompose(GroupMatrix<F> const& g) {
    std::size_t const n = g.size();
    F const&          f = g.field();
    Matrix<F>         m = g.matrix();
    auto              l = Matrix<F>::identity(f, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (m.at(k, k).is_zero()) {
        return std::nullopt;
      }
      auto const inv = m.at(k, k).inverse();
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m.at(i, k).is_zero()) {
          continue;
        }
        auto const c = m.at(i, k) * inv;
        l.at(i, k)   = c;
        for (std::size_t j = k; j < n; ++j) {
          m.at(i, j) -= c * m.at(k, j);
        }
      }
    }
    auto t = Matrix<F>(f, n);
    auto u = Matrix<F>::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      t.at(i, i)     = m.at(i, i);
      auto const inv = m.at(i, i).inverse();
      for (std::size_t j = i + 1; j < n; ++j) {
        u.at(i, j) = m.at(i, j) * inv;
      }
    }
    // det(t) = det(g) = 1 since l and u are unitriangular.
    return BigCellForm<F>{GroupMatrix<F>(detail::trusted_det, std::move(l)),
                          GroupMatrix<F>(detail::trusted_det, std::move(t)),
                          GroupMatrix<F>(detail::trusted_det, std::move(u))};
  }

  template <Field F>
  [[nodiscard]] bool in_big_cell(GroupMatrix<F> const& g) {
    return big_cell_decompose(g).has_value();
  }

  //! Bruhat decomposition by left U row operations and right B column
  //! operations.  Columns are processed left to right; the pivot of column j
  //! is its lowest nonzero entry, which determines w(j).  Every row operation
  //! adds a pivot row to a row above it that pivots later, so the
  //! accumulated left factor lies in U intersect w U^- w^-1 (canonical u).
  template <Field F>
  [[nodiscard]] BruhatForm<F> bruhat_decompose(GroupMatrix<F> const& g) {
    std::size_t const n = g.size();
    F const&          f = g.field();
    Matrix<F>         m = g.matrix();
    auto              l = Matrix<F>::identity(f, n);
    Permutation       w(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t piv = n;
      for (std::size_t i = n; i-- > 0;) {
        if (!m.at(i, j).is_zero()) {
          piv = i;
          break;
        }
      }
      // Unreachable for invertible g.
      if (piv == n) {
        throw invalid_input("singular matrix in bruhat_decompose");
      }
      auto const inv = m.at(piv, j).inverse();
      for (std::size_t k = 0; k < piv; ++k) {
        if (m.at(k, j).is_zero()) {
          continue;
        }
        auto const c = m.at(k, j) * inv;
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          m.at(k, c2) -= c * m.at(piv, c2);
          l.at(k, c2) -= c * l.at(piv, c2);
        }
      }
      // Column operations against column j only touch row piv now.
      for (std::size_t c2 = j + 1; c2 < n; ++c2) {
        m.at(piv, c2) = f.zero();
      }
      w[j] = piv;
    }
    GroupMatrix<F> lg(detail::trusted_det, std::move(l));
    auto           u = lg.inverse();
    auto           b = weyl_rep(f, w).inverse() * lg * g;
    return BruhatForm<F>{std::move(u), std::move(w), std::move(b)};
  }

  //! g = h * h_prime with h^-1 and h_prime in the big cell U^- T U.
  template <Field F>
  struct BigCellSplit {
    GroupMatrix<F>  h;
    GroupMatrix<F>  h_prime;
    BigCellForm<F>  h_inverse_form;
    BigCellForm<F>  h_prime_form;
    std::size_t     attempts;
  };

  inline constexpr std::size_t default_search_budget = 10'000;

  //! Finds g = h * h' with h^-1, h' in U^- T U.
  //!
  //! The first candidate is h' = I.  After that h' = lower * torus * upper
  //! is sampled, with integer entries from a range that widens as attempts
  //! accumulate over Q and uniformly over F_p.  Once half the budget is
  //! spent the candidates follow the deterministic line where every
  //! off-diagonal entry of lower and upper equals m = 1, 2, 3, ...
  //! Throws search_exhausted after \p budget candidates.
  template <Field F>
  [[nodiscard]] BigCellSplit<F>
  split_over_big_cell(GroupMatrix<F> const& g,
                      Randomness&           rng,
                      std::size_t           budget = default_search_budget) {
    std::size_t const n     = g.size();
    F const&          f     = g.field();
    auto const        g_inv = g.inverse();
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
      std::optional<GroupMatrix<F>> hp;
      if (attempt == 0) {
        hp = GroupMatrix<F>::identity(f, n);
      } else if (attempt < budget / 2) {
        long long const bound = 1 + static_cast<long long>(attempt / 32);
        hp = random_unitriangular(f, n, false, rng, bound)
             * random_torus(f, n, rng, bound)
             * random_unitriangular(f, n, true, rng, bound);
      } else {
        auto lo = Matrix<F>::identity(f, n);
        auto up = Matrix<F>::identity(f, n);
        auto s  = f.from_int(static_cast<long long>(attempt - budget / 2 + 1));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            lo.at(j, i) = s;
            up.at(i, j) = s;
          }
        }
        hp = GroupMatrix<F>(detail::trusted_det, lo * up);
      }
      auto const h_inv = *hp * g_inv;
      auto       hif   = big_cell_decompose(h_inv);
      if (!hif) {
        continue;
      }
      auto hpf = big_cell_decompose(*hp);
      if (!hpf) {
        continue;
      }
      auto h = h_inv.inverse();
      return BigCellSplit<F>{std::move(h), std::move(*hp), std::move(*hif),
                             std::move(*hpf), attempt + 1};
    }
    throw search_exhausted("split_over_big_cell", budget);
  }

}  // namespace normgen

#endif  // NORMGEN_BRUHAT_HPP_
