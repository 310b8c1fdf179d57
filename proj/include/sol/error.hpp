#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sol {

// Library-wide error with a stable machine-readable code ("zero_polynomial",
// "arity_mismatch", ...) and a human-readable message. The CLI maps the code
// into JSON error output; tests match on codes, not message text.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string &code() const { return code_; }

  private:
    std::string code_;
};

} // namespace sol
