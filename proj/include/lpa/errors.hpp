#ifndef LPA_ERRORS_HPP_
#define LPA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lpa {

  // Malformed input: bad syntax, unknown ids, non-composable paths,
  // mismatched operands.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A mathematical precondition of an operation does not hold (for example
  // decomposing a graph with a cycle that has an exit).
  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace lpa

#endif  // LPA_ERRORS_HPP_
