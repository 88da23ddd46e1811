// Root data of type A_{n-1}, realised concretely inside SL_n.
//
// Indices are 0-based throughout: the simple root alpha_i (0 <= i < n - 1)
// has root group {E_{i,i+1}(x)} and its negative {E_{i+1,i}(x)}.  Weyl
// group elements are permutations w of {0, ..., n-1}; the representative
// w-dot sends e_j to +-e_{w(j)} and is the product of the simple reflection
// representatives along the lexicographically smallest reduced word of w.

#ifndef NORMGEN_ROOTDATA_HPP_
#define NORMGEN_ROOTDATA_HPP_

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace normgen {

  //! The root e_i - e_j, i != j; its root group is {E_{ij}(x)}.
  struct RootIndex {
    std::size_t i;
    std::size_t j;

    [[nodiscard]] bool is_positive() const noexcept {
      return i < j;
    }
    [[nodiscard]] bool is_simple() const noexcept {
      return i + 1 == j || j + 1 == i;
    }
    //! alpha_k for a simple root, for either sign.
    [[nodiscard]] std::size_t simple_index() const noexcept {
      return i < j ? i : j;
    }
    friend bool operator==(RootIndex const&, RootIndex const&) = default;
  };

  using Permutation = std::vector<std::size_t>;
  //! Simple reflection indices, applied left to right.
  using WeylWord = std::vector<std::size_t>;

  //! Identity plus x at (i, j).
  template <Field F>
  [[nodiscard]] GroupMatrix<F> elementary(F const&           f,
                                          std::size_t        n,
                                          std::size_t        i,
                                          std::size_t        j,
                                          scalar_t<F> const& x) {
    if (i == j || i >= n || j >= n) {
      throw precondition_failure("elementary matrix needs distinct indices < n");
    }
    auto m     = Matrix<F>::identity(f, n);
    m.at(i, j) = x;
    return GroupMatrix<F>(detail::trusted_det, std::move(m));
  }

  template <Field F>
  [[nodiscard]] GroupMatrix<F> elementary(F const& f, std::size_t n,
                                          RootIndex root, scalar_t<F> const& x) {
    return elementary(f, n, root.i, root.j, x);
  }

  //! alpha_i^vee(a) = diag(1, ..., a, a^-1, ..., 1) with a at position i.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> coroot(F const&           f,
                                      std::size_t        n,
                                      std::size_t        i,
                                      scalar_t<F> const& a) {
    if (i + 1 >= n) {
      throw precondition_failure("coroot index out of range");
    }
    if (a.is_zero()) {
      throw precondition_failure("coroot parameter must be nonzero");
    }
    auto m             = Matrix<F>::identity(f, n);
    m.at(i, i)         = a;
    m.at(i + 1, i + 1) = a.inverse();
    return GroupMatrix<F>(detail::trusted_det, std::move(m));
  }

  //! Identity with the block [[0, 1], [-1, 0]] on rows/columns i, i+1.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> simple_reflection_rep(F const&    f,
                                                     std::size_t n,
                                                     std::size_t i) {
    if (i + 1 >= n) {
      throw precondition_failure("simple reflection index out of range");
    }
    auto m             = Matrix<F>::identity(f, n);
    m.at(i, i)         = f.zero();
    m.at(i + 1, i + 1) = f.zero();
    m.at(i, i + 1)     = f.one();
    m.at(i + 1, i)     = -f.one();
    return GroupMatrix<F>(detail::trusted_det, std::move(m));
  }

  [[nodiscard]] inline Permutation identity_permutation(std::size_t n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), std::size_t(0));
    return w;
  }

  //! w0(j) = n - 1 - j.
  [[nodiscard]] inline Permutation longest_element(std::size_t n) {
    Permutation w(n);
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = n - 1 - j;
    }
    return w;
  }

  [[nodiscard]] inline Permutation inverse(Permutation const& w) {
    Permutation inv(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      inv[w[j]] = j;
    }
    return inv;
  }

  //! Coxeter length = number of inversions.
  [[nodiscard]] inline std::size_t length(Permutation const& w) {
    std::size_t l = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t b = a + 1; b < w.size(); ++b) {
        l += w[a] > w[b] ? 1 : 0;
      }
    }
    return l;
  }

  //! Lexicographically smallest reduced word i_1 ... i_k with
  //! w = s_{i_1} ... s_{i_k}: repeatedly strip the smallest left descent.
  [[nodiscard]] inline WeylWord reduced_word(Permutation w) {
    WeylWord word;
    while (true) {
      auto const  winv = inverse(w);
      std::size_t i    = 0;
      while (i + 1 < w.size() && winv[i] < winv[i + 1]) {
        ++i;
      }
      if (i + 1 >= w.size()) {
        return word;
      }
      word.push_back(i);
      // w <- s_i w
      for (auto& v : w) {
        if (v == i) {
          v = i + 1;
        } else if (v == i + 1) {
          v = i;
        }
      }
    }
  }

  //! The fixed representative w-dot in N(T).
  template <Field F>
  [[nodiscard]] GroupMatrix<F> weyl_rep(F const& f, Permutation const& w) {
    auto rep = GroupMatrix<F>::identity(f, w.size());
    for (std::size_t i : reduced_word(w)) {
      rep = rep * simple_reflection_rep(f, w.size(), i);
    }
    return rep;
  }

  //! n0, the representative of the longest Weyl element.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> longest_element_rep(F const& f, std::size_t n) {
    return weyl_rep(f, longest_element(n));
  }

  //! True iff g lies in the root group U_root (identity included).
  template <Field F>
  [[nodiscard]] bool in_root_group(GroupMatrix<F> const& g, RootIndex root) {
    std::size_t const n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) {
          if (!g(a, b).is_one()) {
            return false;
          }
        } else if (!(a == root.i && b == root.j) && !g(a, b).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  //! The single root group containing g, if g != I is a root element.
  template <Field F>
  [[nodiscard]] std::optional<RootIndex> root_group_of(GroupMatrix<F> const& g) {
    std::optional<RootIndex> found;
    std::size_t const        n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && !g(a, b).is_zero()) {
          if (found) {
            return std::nullopt;
          }
          found = RootIndex{a, b};
        }
      }
    }
    if (found && in_root_group(g, *found)) {
      return found;
    }
    return std::nullopt;
  }

}  // namespace normgen

#endif  // NORMGEN_ROOTDATA_HPP_
