#pragma once

#include <stdexcept>
#include <string>

namespace phinkit {

// Exit-code classes used by the CLI: input errors map to 1, named precondition
// violations to 2, failed internal cross-checks to 3.

class InvalidInput : public std::runtime_error {
public:
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

class PreconditionError : public std::runtime_error {
public:
  PreconditionError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class CrossCheckError : public std::runtime_error {
public:
  explicit CrossCheckError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace phinkit
