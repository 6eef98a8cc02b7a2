#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace teleseq {

// Domain error carrying a stable machine-readable name ("HeadZero",
// "NotTelescopic", ...) next to the human-readable message. The CLI
// reports the name verbatim and maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace teleseq
