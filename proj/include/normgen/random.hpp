// Seedable randomness and random samplers for scalars and group elements.
//
// All sampling goes through Randomness, which wraps std::mt19937_64 and
// draws integers by rejection sampling on its raw output.  The engine's
// output sequence is fixed by the standard, so a given seed produces the
// same samples on every platform.

#ifndef NORMGEN_RANDOM_HPP_
#define NORMGEN_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace normgen {

  class Randomness {
   public:
    explicit Randomness(std::uint64_t seed) : _seed(seed), _engine(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept {
      return _seed;
    }

    //! Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
      std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
      std::uint64_t       v;
      do {
        v = _engine();
      } while (v >= limit);
      return v % bound;
    }

    //! Uniform in [lo, hi].
    long long between(long long lo, long long hi) {
      return lo
             + static_cast<long long>(
                 below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

   private:
    std::uint64_t   _seed;
    std::mt19937_64 _engine;
  };

  //! Integer in [-bound, bound] for Q.
  inline Rational random_scalar(Rationals const& f, Randomness& rng,
                                long long bound) {
    return f.from_int(rng.between(-bound, bound));
  }

  //! Uniform residue for F_p; \p bound is ignored.
  inline Residue random_scalar(PrimeField const& f, Randomness& rng,
                               long long /* bound */) {
    return Residue(rng.below(f.characteristic()), f.characteristic());
  }

  template <Field F>
  [[nodiscard]] scalar_t<F> random_nonzero_scalar(F const&   f,
                                                  Randomness& rng,
                                                  long long   bound) {
    while (true) {
      auto s = random_scalar(f, rng, bound);
      if (!s.is_zero()) {
        return s;
      }
    }
  }

  //! Random element of U (upper = true) or U^-.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> random_unitriangular(F const&    f,
                                                    std::size_t n,
                                                    bool        upper,
                                                    Randomness& rng,
                                                    long long   bound) {
    auto m = Matrix<F>::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto s = random_scalar(f, rng, bound);
        if (upper) {
          m.at(i, j) = s;
        } else {
          m.at(j, i) = s;
        }
      }
    }
    return GroupMatrix<F>(detail::trusted_det, std::move(m));
  }

  //! Random diagonal element of SL_n with nonzero entries.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> random_torus(F const&    f,
                                            std::size_t n,
                                            Randomness& rng,
                                            long long   bound) {
    auto        m    = Matrix<F>::identity(f, n);
    scalar_t<F> prod = f.one();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      m.at(i, i) = random_nonzero_scalar(f, rng, bound);
      prod       = prod * m.at(i, i);
    }
    m.at(n - 1, n - 1) = prod.inverse();
    return GroupMatrix<F>(detail::trusted_det, std::move(m));
  }

  //! Random element of SL_n of the form lower * diagonal * upper, optionally
  //! followed by a random signed permutation.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> random_group_element(F const&    f,
                                                    std::size_t n,
                                                    Randomness& rng,
                                                    long long   bound) {
    auto g = random_unitriangular(f, n, false, rng, bound)
             * random_torus(f, n, rng, bound)
             * random_unitriangular(f, n, true, rng, bound);
    if (rng.below(2) == 1) {
      // Swap two rows, negating one to stay in SL_n.
      std::size_t i = rng.below(n);
      std::size_t j = (i + 1 + rng.below(n - 1)) % n;
      auto        m = g.matrix();
      m.swap_rows(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        m.at(i, k) = -m.at(i, k);
      }
      g = GroupMatrix<F>(detail::trusted_det, std::move(m));
    }
    return g;
  }

}  // namespace normgen

#endif  // NORMGEN_RANDOM_HPP_
