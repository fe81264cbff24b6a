#ifndef MZQ_ERROR_HPP
#define MZQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mzq {

// Library-wide exception. `code` is a stable machine-readable tag
// (e.g. "DegenerateTriangle", "BadDegree"); `what()` carries detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace mzq

#endif
