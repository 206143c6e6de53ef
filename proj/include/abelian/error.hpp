#ifndef ABELIAN_ERROR_HPP_
#define ABELIAN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace abelian {

  // A continued-fraction stream ran out before an exact decision was reached.
  class PrecisionError : public std::runtime_error {
   public:
    explicit PrecisionError(std::string const& what)
        : std::runtime_error(what) {}
  };

  // A prefix or search would exceed the configured memory budget.
  class BudgetError : public std::runtime_error {
   public:
    explicit BudgetError(std::string const& what)
        : std::runtime_error(what) {}
  };

  // Caller violated a documented precondition.
  class PreconditionError : public std::invalid_argument {
   public:
    explicit PreconditionError(std::string const& what)
        : std::invalid_argument(what) {}
  };

  // A construction that is guaranteed to succeed produced an object that
  // failed verification. Always a bug or a violated hypothesis.
  class InconsistencyError : public std::logic_error {
   public:
    explicit InconsistencyError(std::string const& what)
        : std::logic_error(what) {}
  };

}  // namespace abelian

#endif  // ABELIAN_ERROR_HPP_
