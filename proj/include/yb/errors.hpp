#ifndef YB_ERRORS_HPP
#define YB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch final : Error {
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

struct WrongFieldKind final : Error {
  explicit WrongFieldKind(const std::string& what) : Error("wrong field kind: " + what) {}
};

struct DivisionByZero final : Error {
  DivisionByZero() : Error("division by zero") {}
};

/// Raised by scalar and file parsers; carries the offending byte offset.
struct ParseError final : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

struct BadDimension final : Error {
  explicit BadDimension(const std::string& what) : Error("bad dimension: " + what) {}
};

struct DimMismatch final : Error {
  explicit DimMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct DimTooSmall final : Error {
  explicit DimTooSmall(const std::string& what) : Error("dimension too small: " + what) {}
};

struct BadParameter final : Error {
  explicit BadParameter(const std::string& what) : Error("bad parameter: " + what) {}
};

struct InvalidCase final : Error {
  explicit InvalidCase(const std::string& what) : Error("invalid case: " + what) {}
};

struct NotInvertibleParams final : Error {
  explicit NotInvertibleParams(const std::string& what)
      : Error("parameters outside invertible range: " + what) {}
};

struct HypothesisViolated final : Error {
  explicit HypothesisViolated(const std::string& what) : Error("hypothesis violated: " + what) {}
};

struct NotCentral final : Error {
  explicit NotCentral(const std::string& what) : Error("vector not central: " + what) {}
};

struct NotEvenCentral final : Error {
  explicit NotEvenCentral(const std::string& what)
      : Error("vector not even central: " + what) {}
};

struct InhomogeneousZ final : Error {
  explicit InhomogeneousZ(const std::string& what)
      : Error("vector not homogeneous: " + what) {}
};

struct UnknownColor final : Error {
  explicit UnknownColor(const std::string& what) : Error("unknown color: " + what) {}
};

struct UnknownName final : Error {
  explicit UnknownName(const std::string& what) : Error("unknown name: " + what) {}
};

struct UnsupportedField final : Error {
  explicit UnsupportedField(const std::string& what) : Error("unsupported field: " + what) {}
};

struct StructureInvalid final : Error {
  explicit StructureInvalid(const std::string& what) : Error("invalid structure: " + what) {}
};

struct InputError final : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

} // namespace yb

#endif
