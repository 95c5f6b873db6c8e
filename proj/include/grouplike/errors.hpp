#pragma once

#include <stdexcept>
#include <string>

namespace grouplike {

/* All recoverable failures carry a short machine-readable kind ("NotPrincipal",
 * "WindowTooSmall", ...) next to the human message, so callers and the CLI can
 * branch on the kind without parsing text. */
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace grouplike
