#pragma once

#include <stdexcept>
#include <string>

namespace yhdn {

// Error conditions raised by the engine. Each names the condition, not the caller.

struct DivideByZero : std::domain_error {
  explicit DivideByZero(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtSpecialization : std::domain_error {
  explicit PoleAtSpecialization(const std::string& what) : std::domain_error(what) {}
};

struct NodeOutsideShape : std::domain_error {
  explicit NodeOutsideShape(const std::string& what) : std::domain_error(what) {}
};

struct NotStandard : std::domain_error {
  explicit NotStandard(const std::string& what) : std::domain_error(what) {}
};

struct NotContentArray : std::domain_error {
  explicit NotContentArray(const std::string& what) : std::domain_error(what) {}
};

struct BadIndex : std::out_of_range {
  explicit BadIndex(const std::string& what) : std::out_of_range(what) {}
};

struct AmbientMismatch : std::invalid_argument {
  explicit AmbientMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyShape : std::invalid_argument {
  explicit EmptyShape(const std::string& what) : std::invalid_argument(what) {}
};

struct BadParameters : std::invalid_argument {
  explicit BadParameters(const std::string& what) : std::invalid_argument(what) {}
};

struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace yhdn
