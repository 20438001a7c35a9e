// Exception types shared by every ksds module.

#ifndef KSDS_ERRORS_HPP_
#define KSDS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ksds {

  //! Base class of all errors thrown by ksds.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed word, graph or system text.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! A precondition on an argument does not hold (empty word passed to
  //! head, letter outside the alphabet, cyclic graph, invalid step site ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A configured resource bound (state-space size, monoid size, alphabet
  //! size ...) would be exceeded.
  class GuardExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace ksds

#endif  // KSDS_ERRORS_HPP_
