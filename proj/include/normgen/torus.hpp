// Factorisation of diagonal elements of SL_n into 4r simple root elements,
// r = n - 1.
//
// For SL_2 the identity
//
//   E12(-x) E21(x^-1 - 1) E12(1) E21(x - 1) = diag(x, x^-1)
//
// writes a coroot element as upper * lower * upper * lower.  For general n
// write t = t_0 ... t_{r-1} with t_k = coroot(k, a_k) and proceed by
// induction on k: with s = t_0 ... t_{k-1} and the SL_2 factors
// (x', u', v', w') of t_k embedded at rows k, k+1, set
//
//   x_k = s x' s^-1,  u_k = s u' s^-1,  v_k = v',  w_k = w'.
//
// The result is t = x_{r-1}..x_0 * u_{r-1}..u_0 * v_0..v_{r-1} * w_0..w_{r-1}
// with x_k, v_k in U_{alpha_k} and u_k, w_k in U_{-alpha_k}.  The induction
// step only moves u_k left past x_j (j < k) and v_k right past w_j (j < k),
// and U_{alpha_i} commutes with U_{-alpha_j} for i != j.

#ifndef NORMGEN_TORUS_HPP_
#define NORMGEN_TORUS_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "rootdata.hpp"

namespace normgen {

  //! (a, b, c, d) = (-x, x^-1 - 1, 1, x - 1), so that
  //! E12(a) E21(b) E12(c) E21(d) = diag(x, x^-1).
  template <typename S>
  [[nodiscard]] std::array<S, 4> sl2_coroot_factor(S const& x) {
    if (x.is_zero()) {
      throw precondition_failure("sl2_coroot_factor: x must be nonzero");
    }
    auto const one = x / x;
    return {-x, x.inverse() - one, one, x - one};
  }

  //! (a_0, ..., a_{r-1}) with t = coroot(0, a_0) ... coroot(r-1, a_{r-1});
  //! a_i = d_0 d_1 ... d_i.
  template <Field F>
  [[nodiscard]] std::vector<scalar_t<F>>
  coroot_coordinates(GroupMatrix<F> const& t) {
    if (!t.is_diagonal()) {
      throw precondition_failure("coroot_coordinates: matrix is not diagonal");
    }
    std::vector<scalar_t<F>> a;
    auto                     acc = t.field().one();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      acc = acc * t(i, i);
      a.push_back(acc);
    }
    return a;
  }

  //! One factor of a torus factorisation.
  template <Field F>
  struct RootFactor {
    RootIndex      root;
    scalar_t<F>    value;
    GroupMatrix<F> matrix;  // elementary(root, value)
  };

  template <Field F>
  struct TorusFactorization {
    //! 4r factors whose ordered product is the torus element.
    std::vector<RootFactor<F>> factors;

    //! The four slot products x_{r-1}..x_0, u_{r-1}..u_0, v_0..v_{r-1},
    //! w_0..w_{r-1}; in U, U^-, U, U^- respectively.
    [[nodiscard]] std::array<GroupMatrix<F>, 4> blocks() const {
      std::size_t const r = factors.size() / 4;
      auto              id
          = GroupMatrix<F>::identity(factors.front().matrix.field(),
                                     factors.front().matrix.size());
      std::array<GroupMatrix<F>, 4> out{id, id, id, id};
      for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t k = 0; k < r; ++k) {
          out[s] = out[s] * factors[s * r + k].matrix;
        }
      }
      return out;
    }

    [[nodiscard]] GroupMatrix<F> product() const {
      auto p = GroupMatrix<F>::identity(factors.front().matrix.field(),
                                        factors.front().matrix.size());
      for (auto const& fa : factors) {
        p = p * fa.matrix;
      }
      return p;
    }
  };

  template <Field F>
  [[nodiscard]] TorusFactorization<F> torus_factor(GroupMatrix<F> const& t) {
    auto const        a = coroot_coordinates(t);
    std::size_t const n = t.size();
    std::size_t const r = n - 1;
    F const&          f = t.field();

    std::vector<RootFactor<F>> xs, us, vs, ws;
    auto                       s = GroupMatrix<F>::identity(f, n);
    auto const                 s_conj
        = [&](RootIndex root, scalar_t<F> const& v) -> RootFactor<F> {
      // s is diagonal, so s E_ij(v) s^-1 = E_ij(v s_i / s_j).
      auto const w = v * s(root.i, root.i) / s(root.j, root.j);
      return {root, w, elementary(f, n, root, w)};
    };
    for (std::size_t k = 0; k < r; ++k) {
      RootIndex const pos{k, k + 1};
      RootIndex const neg{k + 1, k};
      if (a[k].is_one()) {
        // coroot(k, 1) = I: four trivial factors.
        auto const z = f.zero();
        xs.push_back({pos, z, elementary(f, n, pos, z)});
        us.push_back({neg, z, elementary(f, n, neg, z)});
        vs.push_back({pos, z, elementary(f, n, pos, z)});
        ws.push_back({neg, z, elementary(f, n, neg, z)});
      } else {
        auto const abcd = sl2_coroot_factor(a[k]);
        xs.push_back(s_conj(pos, abcd[0]));
        us.push_back(s_conj(neg, abcd[1]));
        vs.push_back({pos, abcd[2], elementary(f, n, pos, abcd[2])});
        ws.push_back({neg, abcd[3], elementary(f, n, neg, abcd[3])});
      }
      s = s * coroot(f, n, k, a[k]);
    }
    TorusFactorization<F> out;
    out.factors.reserve(4 * r);
    out.factors.insert(out.factors.end(), xs.rbegin(), xs.rend());
    out.factors.insert(out.factors.end(), us.rbegin(), us.rend());
    out.factors.insert(out.factors.end(), vs.begin(), vs.end());
    out.factors.insert(out.factors.end(), ws.begin(), ws.end());
    return out;
  }

}  // namespace normgen

#endif  // NORMGEN_TORUS_HPP_
