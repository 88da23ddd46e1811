// Exception types thrown by normgen.

#ifndef NORMGEN_ERROR_HPP_
#define NORMGEN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normgen {

  //! Base class of every exception thrown by the library.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Operands live over different fields (e.g. F_5 and F_7).
  class field_mismatch : public error {
   public:
    using error::error;
  };

  class division_by_zero : public error {
   public:
    division_by_zero() : error("division by zero") {}
  };

  //! A matrix or scalar violates a construction invariant (det != 1, shape,
  //! malformed literal, ...).
  class invalid_input : public error {
   public:
    using error::error;
  };

  //! An operation was called outside its mathematical domain.
  class precondition_failure : public error {
   public:
    using error::error;
  };

  //! A randomized search used up its sample budget without success.
  class search_exhausted : public error {
   public:
    search_exhausted(std::string const& what, std::size_t attempts)
        : error(what + " (gave up after " + std::to_string(attempts)
                + " attempts)"),
          _attempts(attempts) {}

    [[nodiscard]] std::size_t attempts() const noexcept {
      return _attempts;
    }

   private:
    std::size_t _attempts;
  };

  //! A brute-force computation would exceed its configured size cap.
  class cap_exceeded : public error {
   public:
    using error::error;
  };

}  // namespace normgen

#endif  // NORMGEN_ERROR_HPP_
