#ifndef SADIC_ERRORS_HPP
#define SADIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sadic {

// Thrown when a configured budget (depth, symbols, materialization cap) is
// exceeded or a growth stall makes a computation impossible at the configured
// scale. Distinct from invalid_argument: the request is well-formed, just too
// large for the budget.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a checked mathematical hypothesis does not hold for the given
// input (e.g. a factor admitting no periodic match). Carries the offending
// witness in the message.
class hypothesis_error : public std::invalid_argument {
 public:
  explicit hypothesis_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown when a property that an operation promises to verify does not hold
// on the instance at hand.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sadic

#endif
