#ifndef WDR_ERROR_HPP
#define WDR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wdr {

/* Invalid input or violated precondition. */
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* A computed object failed an identity that must hold; always a bug
   or a counterexample worth reporting. */
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/* A configured work bound (enumeration size, factoring size) was hit. */
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Floating point roots could not be separated at the working precision. */
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wdr

#endif
