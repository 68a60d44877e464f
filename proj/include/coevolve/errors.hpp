#ifndef COEVOLVE_ERRORS_HPP
#define COEVOLVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coevolve {

// Invalid parameters, configuration or input data.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An event log that cannot be a realization of the model (non-monotone
// times, duplicate links, self-links...). Carries the offending index.
class HistoryError : public ValidationError {
 public:
  HistoryError(std::size_t index, const std::string& what)
      : ValidationError("event " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Divergent or otherwise numerically unusable computation.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coevolve

#endif  // COEVOLVE_ERRORS_HPP
