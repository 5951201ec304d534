#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

// Error kinds follow the operation contracts ("degree-error", "point-error",
// "stage-error", ...). Tests and the CLI dispatch on kind().
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace ringlab
