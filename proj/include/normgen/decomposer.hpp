// End-to-end factorisation of elements of SL_n(k) into conjugates of a
// generating set.
//
// Three stages, each emitting exact data that is re-verified:
//
//   decompose_via_unipotents   g = product of 7 conjugates of elements of U
//   decompose_as_conjugates_of g as <= 14 conjugates of t^{+-1}, for a
//                              regular upper triangular t
//   find_regular_in_ball       such a t as a word of <= 4r conjugates of X
//   decompose_full             g as <= 56r conjugates of elements of X

#ifndef NORMGEN_DECOMPOSER_HPP_
#define NORMGEN_DECOMPOSER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "bruhat.hpp"
#include "certificate.hpp"
#include "conjsolver.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "rootdata.hpp"
#include "torus.hpp"

namespace normgen {

  //! A finite subset of SL_n that contains a noncentral element.
  template <Field F>
  class GeneratingSet {
   public:
    explicit GeneratingSet(std::vector<GroupMatrix<F>> elements)
        : _elements(std::move(elements)) {
      if (_elements.empty()) {
        throw precondition_failure("generating set is empty");
      }
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        if (!(_elements[i].field() == _elements[0].field())
            || _elements[i].size() != _elements[0].size()) {
          throw invalid_input("generating set mixes fields or dimensions");
        }
        if (!_elements[i].is_central()) {
          _noncentral.push_back(i);
        }
      }
      if (_noncentral.empty()) {
        throw precondition_failure(
            "generating set is central and cannot normally generate SL_n");
      }
    }

    [[nodiscard]] std::vector<GroupMatrix<F>> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::vector<std::size_t> const& noncentral() const noexcept {
      return _noncentral;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.front().size();
    }
    [[nodiscard]] F const& field() const noexcept {
      return _elements.front().field();
    }

   private:
    std::vector<GroupMatrix<F>> _elements;
    std::vector<std::size_t>    _noncentral;
  };

  //! conjugator * unipotent * conjugator^-1, with unipotent in U.
  template <Field F>
  struct UnipotentBlock {
    GroupMatrix<F> conjugator;
    GroupMatrix<F> unipotent;

    [[nodiscard]] GroupMatrix<F> value() const {
      return conjugate(unipotent, conjugator);
    }
  };

  namespace detail {
    template <Field F>
    void ensure_verified(Certificate<F> const& c, char const* stage) {
      if (!verify_certificate(c)) {
        throw error(std::string("internal error: ") + stage
                    + " produced a certificate that does not verify");
      }
    }
  }  // namespace detail

  //! g = product of exactly seven blocks c_i u_i c_i^-1 with u_i in U.
  //!
  //! Split g = h h' with h^-1 = l1 t1 u1 and h' = l2 t2 u2 in the big cell,
  //! so g = u1^-1 l3 t3 u2 with l3 = t1^-1 l1^-1 l2 t1 in U^- and
  //! t3 = t1^-1 t2.  Emit u1^-1; l3 conjugated out of U by n0; the four
  //! slot blocks of torus_factor(t3), the lower ones conjugated by n0; u2.
  template <Field F>
  [[nodiscard]] std::vector<UnipotentBlock<F>>
  decompose_via_unipotents(GroupMatrix<F> const& g,
                           Randomness&           rng,
                           std::size_t           budget = default_search_budget) {
    F const&          f      = g.field();
    std::size_t const n      = g.size();
    auto const        split  = split_over_big_cell(g, rng, budget);
    auto const&       hi     = split.h_inverse_form;
    auto const&       hp     = split.h_prime_form;
    auto const        t1_inv = hi.torus.inverse();
    auto const        l3 = t1_inv * hi.lower.inverse() * hp.lower * hi.torus;
    auto const        t3 = t1_inv * hp.torus;
    auto const        n0 = longest_element_rep(f, n);
    auto const        n0_inv = n0.inverse();
    auto const        id     = GroupMatrix<F>::identity(f, n);

    // n0 U n0^-1 = U^-, so a lower unitriangular x equals n0 (n0^-1 x n0) n0^-1.
    auto const lower_block = [&](GroupMatrix<F> const& x) {
      return x.is_identity() ? UnipotentBlock<F>{id, x}
                             : UnipotentBlock<F>{n0, n0_inv * x * n0};
    };

    auto const                     torus = torus_factor(t3).blocks();
    std::vector<UnipotentBlock<F>> out;
    out.reserve(7);
    out.push_back({id, hi.upper.inverse()});
    out.push_back(lower_block(l3));
    out.push_back({id, torus[0]});
    out.push_back(lower_block(torus[1]));
    out.push_back({id, torus[2]});
    out.push_back(lower_block(torus[3]));
    out.push_back({id, hp.upper});

    auto check = id;
    for (auto const& b : out) {
      if (!b.unipotent.is_upper_unitriangular()) {
        throw error("internal error: block is not in U");
      }
      check = check * b.value();
    }
    if (!(check == g)) {
      throw error("internal error: unipotent blocks do not multiply to g");
    }
    return out;
  }

  //! Certificate for g over the base {t} of length at most 14.
  template <Field F>
  [[nodiscard]] Certificate<F>
  decompose_as_conjugates_of(GroupMatrix<F> const&         g,
                             RegularBorelElement<F> const& t,
                             Randomness&                   rng,
                             std::size_t budget = default_search_budget) {
    F const&          f = g.field();
    std::size_t const n = g.size();
    Certificate<F>    cert{g, {t.matrix()}, {}, {rng.seed(), 14}};

    std::vector<UnipotentBlock<F>> blocks;
    auto const                     id = GroupMatrix<F>::identity(f, n);
    if (g.is_identity()) {
      // empty word
    } else if (g.is_upper_unitriangular()) {
      blocks.push_back({id, g});
    } else if (g.is_lower_unitriangular()) {
      auto const n0 = longest_element_rep(f, n);
      blocks.push_back({n0, n0.inverse() * g * n0});
    } else {
      blocks = decompose_via_unipotents(g, rng, budget);
    }
    for (auto const& b : blocks) {
      if (b.unipotent.is_identity()) {
        continue;
      }
      auto const two = unipotent_as_two_conjugates(t, b.unipotent);
      for (auto const& l : two.word) {
        cert.word.push_back({b.conjugator * l.conjugator, 0, l.exponent});
      }
    }
    detail::ensure_verified(cert, "decompose_as_conjugates_of");
    return cert;
  }

  //! A regular upper triangular t and a certificate for it over X.
  template <Field F>
  struct RegularWitness {
    RegularBorelElement<F> t;
    Certificate<F>         certificate;  // target t, base X, length <= 4r
    std::size_t            samples;
  };

  namespace detail {
    // prod_{i<r} (h_i x_i h_i^-1)(g_i x_i^-1 g_i^-1) with random h_i, g_i
    // and x_i drawn from the noncentral elements of X.
    template <Field F>
    std::pair<GroupMatrix<F>, std::vector<Letter<F>>>
    sample_commutator_word(GeneratingSet<F> const& x, Randomness& rng) {
      F const&          f     = x.field();
      std::size_t const n     = x.size();
      std::size_t const r     = n - 1;
      auto              value = GroupMatrix<F>::identity(f, n);
      std::vector<Letter<F>> letters;
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t const idx
            = x.noncentral()[rng.below(x.noncentral().size())];
        auto h = random_group_element(f, n, rng, 2);
        auto k = random_group_element(f, n, rng, 2);
        auto const& xi = x.elements()[idx];
        value = value * conjugate(xi, h) * conjugate(xi.inverse(), k);
        letters.push_back({std::move(h), idx, 1});
        letters.push_back({std::move(k), idx, -1});
      }
      return {std::move(value), std::move(letters)};
    }

    template <Field F>
    bool has_distinct_diagonal(GroupMatrix<F> const& t) {
      auto const d = t.diagonal_entries();
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          if (d[i] == d[j]) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  //! Finds t = x n0^2 x1 in B with distinct diagonal, written as 4r
  //! conjugates of elements of X.
  //!
  //! Samples words g1 of 2r letters until g1 = u n0 b is in the big Bruhat
  //! cell and replaces it by b g1 b^-1 = (b u) n0.  Then samples g2 the same
  //! way and replaces it by u^-1 g2 u = n0 (b u).  The product of the two is
  //! upper triangular; retry until its diagonal entries are distinct.
  //! Over F_p this needs p >= n + 2.
  template <Field F>
  [[nodiscard]] RegularWitness<F>
  find_regular_in_ball(GeneratingSet<F> const& x,
                       Randomness&             rng,
                       std::size_t             budget = default_search_budget) {
    F const&          f  = x.field();
    std::size_t const n  = x.size();
    auto const        w0 = longest_element(n);
    // n distinct units with product 1 exist iff n <= p - 2: the product of
    // all p - 1 units is -1.
    if (f.order() != 0 && f.order() < n + 2) {
      throw precondition_failure("F_" + std::to_string(f.order())
                                 + " has no regular diagonal element of SL_"
                                 + std::to_string(n));
    }

    std::size_t samples  = 0;
    auto const  big_cell = [&]() -> std::pair<GroupMatrix<F>, std::vector<Letter<F>>> {
      while (samples < budget) {
        ++samples;
        auto [value, letters] = detail::sample_commutator_word(x, rng);
        auto bf               = bruhat_decompose(value);
        if (bf.w == w0) {
          return {std::move(value), std::move(letters)};
        }
      }
      throw search_exhausted("find_regular_in_ball", samples);
    };

    while (true) {
      auto [g1, l1] = big_cell();
      auto bf1      = bruhat_decompose(g1);
      for (auto& l : l1) {
        l.conjugator = bf1.b * l.conjugator;
      }
      g1 = conjugate(g1, bf1.b);  // = (b u) n0

      auto [g2, l2] = big_cell();
      auto       bf2   = bruhat_decompose(g2);
      auto const u_inv = bf2.u.inverse();
      for (auto& l : l2) {
        l.conjugator = u_inv * l.conjugator;
      }
      g2 = conjugate(g2, u_inv);  // = n0 (b u)

      auto t = g1 * g2;
      if (!t.is_upper_triangular()) {
        throw error("internal error: x n0^2 x1 is not in B");
      }
      if (!detail::has_distinct_diagonal(t)) {
        continue;
      }
      Certificate<F> cert{t, x.elements(), std::move(l1), {rng.seed(), 4 * (n - 1)}};
      cert.word.insert(cert.word.end(), l2.begin(), l2.end());
      detail::ensure_verified(cert, "find_regular_in_ball");
      return RegularWitness<F>{RegularBorelElement<F>(std::move(t)),
                               std::move(cert), samples};
    }
  }

  //! Certificate for g over X, substituting the witness certificate for t
  //! into a certificate over {t}.  Length <= 14 * 4r = 56r.
  template <Field F>
  [[nodiscard]] Certificate<F>
  decompose_full(GroupMatrix<F> const&   g,
                 RegularWitness<F> const& witness,
                 Randomness&             rng,
                 std::size_t             budget = default_search_budget) {
    auto const&       tc = witness.certificate;
    std::size_t const r  = g.size() - 1;
    auto const over_t    = decompose_as_conjugates_of(g, witness.t, rng, budget);
    Certificate<F> cert{g, tc.base, {}, {rng.seed(), 56 * r}};
    for (auto const& l : over_t.word) {
      if (l.exponent == 1) {
        for (auto const& m : tc.word) {
          cert.word.push_back({l.conjugator * m.conjugator, m.base_index,
                               m.exponent});
        }
      } else {
        for (auto it = tc.word.rbegin(); it != tc.word.rend(); ++it) {
          cert.word.push_back({l.conjugator * it->conjugator, it->base_index,
                               -it->exponent});
        }
      }
    }
    detail::ensure_verified(cert, "decompose_full");
    return cert;
  }

  template <Field F>
  [[nodiscard]] Certificate<F>
  decompose_full(GroupMatrix<F> const&   g,
                 GeneratingSet<F> const& x,
                 Randomness&             rng,
                 std::size_t             budget = default_search_budget) {
    auto const witness = find_regular_in_ball(x, rng, budget);
    return decompose_full(g, witness, rng, budget);
  }

}  // namespace normgen

#endif  // NORMGEN_DECOMPOSER_HPP_
