// Certificates: explicit words in conjugates of base elements and their
// inverses.  A certificate of length L for target g over base X proves
// ||g||_X <= L, and checking it needs nothing but exact multiplication.

#ifndef NORMGEN_CERTIFICATE_HPP_
#define NORMGEN_CERTIFICATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace normgen {

  //! conjugator * base[base_index]^exponent * conjugator^-1
  template <Field F>
  struct Letter {
    GroupMatrix<F> conjugator;
    std::size_t    base_index;
    int            exponent;  // +1 or -1
  };

  struct CertificateMeta {
    std::uint64_t seed          = 0;
    std::size_t   bound_claimed = 0;
  };

  template <Field F>
  struct Certificate {
    GroupMatrix<F>              target;
    std::vector<GroupMatrix<F>> base;
    std::vector<Letter<F>>      word;
    CertificateMeta             meta;

    [[nodiscard]] F const& field() const noexcept {
      return target.field();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return target.size();
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return word.size();
    }
  };

  //! The product of the word, in order.  Throws on malformed letters.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> evaluate(Certificate<F> const& c) {
    auto acc = GroupMatrix<F>::identity(c.field(), c.size());
    for (auto const& l : c.word) {
      if (l.base_index >= c.base.size()) {
        throw invalid_input("letter refers to base element "
                            + std::to_string(l.base_index) + " of "
                            + std::to_string(c.base.size()));
      }
      if (l.exponent != 1 && l.exponent != -1) {
        throw invalid_input("letter exponent must be +1 or -1");
      }
      auto const& x = c.base[l.base_index];
      acc = acc * l.conjugator * (l.exponent == 1 ? x : x.inverse())
            * l.conjugator.inverse();
    }
    return acc;
  }

  //! True iff every letter is well formed and the word evaluates to the
  //! target exactly.
  template <Field F>
  [[nodiscard]] bool verify_certificate(Certificate<F> const& c) {
    for (auto const& x : c.base) {
      if (!(x.field() == c.field()) || x.size() != c.size()) {
        return false;
      }
    }
    for (auto const& l : c.word) {
      if (l.base_index >= c.base.size()
          || (l.exponent != 1 && l.exponent != -1)
          || !(l.conjugator.field() == c.field())
          || l.conjugator.size() != c.size()) {
        return false;
      }
    }
    return evaluate(c) == c.target;
  }

  //! The certificate for c g c^-1 over the same base obtained by
  //! left-multiplying every conjugator by c.
  template <Field F>
  [[nodiscard]] Certificate<F> conjugate_certificate(Certificate<F> cert,
                                                     GroupMatrix<F> const& c) {
    cert.target = conjugate(cert.target, c);
    for (auto& l : cert.word) {
      l.conjugator = c * l.conjugator;
    }
    return cert;
  }

}  // namespace normgen

#endif  // NORMGEN_CERTIFICATE_HPP_
