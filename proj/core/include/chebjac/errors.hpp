#ifndef CHEBJAC_ERRORS_HPP
#define CHEBJAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chebjac {

/// Raised when Jacobi parameters fall outside the range an operation supports,
/// e.g. a transform plan requested outside (-1/2, 1/2]^2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace chebjac

#endif  // CHEBJAC_ERRORS_HPP
