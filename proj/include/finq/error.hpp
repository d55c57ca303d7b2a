#pragma once

#include <stdexcept>
#include <string>

namespace finq {

// Bad caller input: wrong shape, violated precondition, malformed flag.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested object exceeds a configured size cap.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A computed quantity failed a structural guarantee (closure, tolerance).
class StructuralError : public std::runtime_error {
public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical diagnostic could not be completed (e.g. defective matrix).
class DiagnosticError : public std::runtime_error {
public:
  explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace finq
