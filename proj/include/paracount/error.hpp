#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paracount {

/// Domain error carrying a stable, machine-readable name such as
/// "duplicate-edge" or "limit-exceeded". The CLI prints the name verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string_view name, const std::string& detail) {
  throw Error(std::string(name), detail);
}

}  // namespace paracount
